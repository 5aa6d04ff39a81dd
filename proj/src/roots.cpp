#include "roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace twk {

std::vector<std::complex<double>> float_roots(const CPoly& p) {
  if (p.is_zero()) throw invalid_input("zero polynomial has every point as a root");
  int d = *p.degree();
  if (d == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  std::complex<double> lead = p.coeffs().back();
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeffs()[std::size_t(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(std::size_t(d));
  for (int i = 0; i < d; ++i) roots[std::size_t(i)] = solver.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw invalid_input("cannot rationalize a non-finite value");
  bool neg = x < 0;
  double v = neg ? -x : x;
  // Continued-fraction convergents p/q; stop once the denominator budget is
  // spent or the approximation is beyond double resolution.
  long p_prev = 1, q_prev = 0;
  long p_cur = long(std::floor(v)), q_cur = 1;
  double frac = v - std::floor(v);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    v = 1.0 / frac;
    double fl = std::floor(v);
    if (fl > double(std::numeric_limits<long>::max() / 4)) break;
    long a = long(fl);
    long p_next = a * p_cur + p_prev;
    long q_next = a * q_cur + q_prev;
    if (q_next > max_den || p_next < 0 || q_next < 0) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    frac = v - fl;
  }
  return rational_from_parts(neg ? -p_cur : p_cur, q_cur);
}

namespace {

// Divide out (t - r); caller guarantees r is a root.
QPoly deflate(const QPoly& p, const GaussianRational& r) {
  QPoly linear(std::vector<GaussianRational>{-r, GaussianRational::from_int(1)});
  return exact_div(p, linear);
}

bool try_root(QPoly& p, std::vector<GaussianRational>& found, const GaussianRational& cand) {
  if (!p.eval(cand).is_zero()) return false;
  found.push_back(cand);
  p = deflate(p, cand);
  return true;
}

}  // namespace

RootSplit extract_rational_roots(const QPoly& squarefree_monic) {
  if (squarefree_monic.is_zero()) throw invalid_input("cannot extract roots of the zero polynomial");
  RootSplit out;
  QPoly p = squarefree_monic;

  while (!p.is_zero() && *p.degree() == 1) {
    // Monic linear factor: the root is minus the constant term.
    GaussianRational r = -p.coeff(0);
    out.roots.push_back(r);
    p = QPoly::one();
  }

  if (!p.is_zero() && *p.degree() >= 2) {
    // Float roots propose candidates; exact evaluation is the only judge.
    constexpr long kMaxDen = 1000000;
    for (const auto& z : float_roots(to_float(p))) {
      if (p.is_zero() || *p.degree() == 0) break;
      GaussianRational cand(rationalize(z.real(), kMaxDen), rationalize(z.imag(), kMaxDen));
      try_root(p, out.roots, cand);
    }
    // Low-height sweep catches rational roots the float pass may have missed.
    constexpr long kHeight = 6;
    for (long den = 1; den <= kHeight && !p.is_zero() && *p.degree() >= 1; ++den) {
      for (long re = -kHeight; re <= kHeight; ++re) {
        for (long im = -kHeight; im <= kHeight; ++im) {
          if (std::gcd(std::gcd(std::abs(re), std::abs(im)), den) != 1) continue;
          if (p.is_zero() || *p.degree() == 0) break;
          try_root(p, out.roots, GaussianRational::from_parts(re, den, im, den));
        }
      }
    }
    while (!p.is_zero() && *p.degree() == 1) {
      out.roots.push_back(-p.coeff(0));
      p = QPoly::one();
    }
  }

  out.residual = p;
  std::sort(out.roots.begin(), out.roots.end(),
            [](const GaussianRational& a, const GaussianRational& b) { return gr_compare(a, b) < 0; });
  return out;
}

std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    std::vector<std::complex<double>> roots, double tol) {
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<std::pair<std::complex<double>, int>> clusters;
  for (const auto& z : roots) {
    bool merged = false;
    for (auto& [rep, count] : clusters) {
      if (std::abs(z - rep) <= tol) {
        rep = (rep * double(count) + z) / double(count + 1);
        ++count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.emplace_back(z, 1);
  }
  return clusters;
}

}  // namespace twk

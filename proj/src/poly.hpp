#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "gaussian.hpp"

namespace twk {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<GaussianRational> {
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational::from_int(1); }
  static GaussianRational from_int(long n) { return GaussianRational::from_int(n); }
  static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
};

template <>
struct ScalarOps<std::complex<double>> {
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> from_int(long n) { return {double(n), 0.0}; }
  static bool is_zero(const std::complex<double>& x) { return x.real() == 0.0 && x.imag() == 0.0; }
};

// Univariate polynomial, coefficients by ascending power. The coefficient
// vector never has a zero in the last slot; the zero polynomial is the empty
// vector and its degree is nullopt rather than any sentinel integer.
template <class S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const S& v) { return Poly(std::vector<S>{v}); }
  static Poly one() { return constant(ScalarOps<S>::one()); }
  // c * t^k
  static Poly monomial(int k, const S& c) {
    std::vector<S> v(std::size_t(k) + 1, ScalarOps<S>::zero());
    v.back() = c;
    return Poly(std::move(v));
  }

  const std::vector<S>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return int(c_.size()) - 1;
  }

  S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ScalarOps<S>::zero(); }

  const S& leading() const {
    if (c_.empty()) throw invalid_input("zero polynomial has no leading coefficient");
    return c_.back();
  }

  S eval(const S& x) const {
    S acc = ScalarOps<S>::zero();
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<S> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * ScalarOps<S>::from_int(long(k));
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarOps<S>::zero());
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] + b.c_[k];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), ScalarOps<S>::zero());
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] - b.c_[k];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<S> r(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = -a.c_[k];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, ScalarOps<S>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const S& s, const Poly& a) {
    std::vector<S> r(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = s * a.c_[k];
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && ScalarOps<S>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

using QPoly = Poly<GaussianRational>;
using CPoly = Poly<std::complex<double>>;

inline CPoly to_float(const QPoly& p) {
  std::vector<std::complex<double>> c(p.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeffs()[k].to_complex();
  return CPoly(std::move(c));
}

// Formal antiderivative with zero constant term; exact only, since the
// coefficient divisions must not round.
inline QPoly integrate_from_zero(const QPoly& p) {
  if (p.is_zero()) return QPoly();
  std::vector<GaussianRational> r(p.coeffs().size() + 1);
  r[0] = GaussianRational{};
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    r[k + 1] = p.coeffs()[k] / GaussianRational::from_int(long(k) + 1);
  return QPoly(std::move(r));
}

// Euclidean division over Q(i): p = q*d + r with deg r < deg d.
inline std::pair<QPoly, QPoly> divmod(const QPoly& p, const QPoly& d) {
  if (d.is_zero()) throw invalid_input("polynomial division by zero");
  std::vector<GaussianRational> rem(p.coeffs());
  int dd = *d.degree();
  std::vector<GaussianRational> quot;
  if (int(rem.size()) - 1 >= dd) quot.assign(rem.size() - std::size_t(dd), GaussianRational{});
  GaussianRational lead_inv = d.leading().inverse();
  for (int k = int(rem.size()) - 1; k >= dd; --k) {
    if (rem[std::size_t(k)].is_zero()) continue;
    GaussianRational f = rem[std::size_t(k)] * lead_inv;
    quot[std::size_t(k - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      rem[std::size_t(k - dd + j)] -= f * d.coeff(std::size_t(j));
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

// Quotient when the division is known to be exact; nonzero remainder is an
// internal fault, not user error.
inline QPoly exact_div(const QPoly& p, const QPoly& d) {
  auto [q, r] = divmod(p, d);
  if (!r.is_zero()) throw internal_error("exact_div found nonzero remainder");
  return q;
}

inline QPoly monic(const QPoly& p) {
  if (p.is_zero()) throw invalid_input("cannot normalize the zero polynomial");
  return p.leading().inverse() * p;
}

// Monic gcd via the Euclidean algorithm over Q(i).
inline QPoly gcd_monic(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw invalid_input("gcd of two zero polynomials");
  QPoly u = a, v = b;
  while (!v.is_zero()) {
    QPoly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return monic(u);
}

struct SquarefreeFactor {
  QPoly factor;  // monic, squarefree
  int multiplicity;
};

struct SquarefreeDecomposition {
  GaussianRational leading;  // p = leading * prod factor^multiplicity
  std::vector<SquarefreeFactor> factors;

  QPoly expand() const {
    QPoly p = QPoly::constant(leading);
    for (const auto& f : factors)
      for (int i = 0; i < f.multiplicity; ++i) p = p * f.factor;
    return p;
  }
};

// Yun's algorithm; valid in characteristic zero. Multiplicities come out
// strictly increasing and the factors pairwise coprime.
inline SquarefreeDecomposition squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw invalid_input("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  out.leading = p.leading();
  QPoly f = monic(p);
  if (*f.degree() == 0) return out;
  QPoly fp = f.derivative();
  QPoly g = gcd_monic(f, fp);
  QPoly c = exact_div(f, g);
  QPoly d = exact_div(fp, g) - c.derivative();
  for (int mult = 1; *c.degree() > 0; ++mult) {
    QPoly s = gcd_monic(c, d);
    if (*s.degree() > 0) out.factors.push_back({s, mult});
    c = exact_div(c, s);
    d = exact_div(d, s) - c.derivative();
  }
  return out;
}

// Resultant of univariate polynomials (by their actual degrees), via the
// remainder sequence.
inline GaussianRational resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return GaussianRational{};
  QPoly u = a, v = b;
  GaussianRational acc = GaussianRational::from_int(1);
  bool flip = false;
  while (true) {
    int m = *u.degree(), n = *v.degree();
    if (n == 0) {
      GaussianRational lead = v.leading(), pw = GaussianRational::from_int(1);
      for (int i = 0; i < m; ++i) pw *= lead;
      return flip ? -(acc * pw) : acc * pw;
    }
    QPoly r = divmod(u, v).second;
    if (r.is_zero()) return GaussianRational{};
    if ((m % 2) == 1 && (n % 2) == 1) flip = !flip;
    GaussianRational lead = v.leading(), pw = GaussianRational::from_int(1);
    for (int i = 0; i < m - *r.degree(); ++i) pw *= lead;
    acc *= pw;
    u = std::move(v);
    v = std::move(r);
  }
}

// Homogeneous binary form of formal degree d: coeffs[j] multiplies
// z1^j z2^(d-j). The degree is formal, so leading coefficients may vanish;
// that is how roots at [1:0] are encoded.
template <class S>
class HomogeneousForm {
 public:
  HomogeneousForm(int degree, std::vector<S> coeffs) : d_(degree), c_(std::move(coeffs)) {
    if (d_ < 0 || c_.size() != std::size_t(d_) + 1)
      throw invalid_input("homogeneous form needs degree+1 coefficients");
  }

  static HomogeneousForm zero(int degree) {
    return HomogeneousForm(degree, std::vector<S>(std::size_t(degree) + 1, ScalarOps<S>::zero()));
  }
  // z2^d
  static HomogeneousForm z2_power(int degree) {
    auto f = zero(degree);
    f.c_[0] = ScalarOps<S>::one();
    return f;
  }

  int degree() const { return d_; }
  const std::vector<S>& coeffs() const { return c_; }
  const S& coeff(int j) const { return c_[std::size_t(j)]; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!ScalarOps<S>::is_zero(v)) return false;
    return true;
  }

  S eval(const S& z1, const S& z2) const {
    S acc = ScalarOps<S>::zero();
    std::vector<S> z2pow(std::size_t(d_) + 1);
    z2pow[0] = ScalarOps<S>::one();
    for (int j = 1; j <= d_; ++j) z2pow[std::size_t(j)] = z2pow[std::size_t(j) - 1] * z2;
    S z1pow = ScalarOps<S>::one();
    for (int j = 0; j <= d_; ++j) {
      acc = acc + c_[std::size_t(j)] * z1pow * z2pow[std::size_t(d_ - j)];
      z1pow = z1pow * z1;
    }
    return acc;
  }

  // d/dz1, degree drops to d-1.
  HomogeneousForm d1() const {
    if (d_ == 0) throw invalid_input("cannot differentiate a degree-0 form");
    std::vector<S> r(std::size_t(d_), ScalarOps<S>::zero());
    for (int j = 1; j <= d_; ++j)
      r[std::size_t(j - 1)] = c_[std::size_t(j)] * ScalarOps<S>::from_int(j);
    return HomogeneousForm(d_ - 1, std::move(r));
  }

  // d/dz2, degree drops to d-1.
  HomogeneousForm d2() const {
    if (d_ == 0) throw invalid_input("cannot differentiate a degree-0 form");
    std::vector<S> r(std::size_t(d_), ScalarOps<S>::zero());
    for (int j = 0; j < d_; ++j)
      r[std::size_t(j)] = c_[std::size_t(j)] * ScalarOps<S>::from_int(d_ - j);
    return HomogeneousForm(d_ - 1, std::move(r));
  }

  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    std::vector<S> r(std::size_t(a.d_ + b.d_) + 1, ScalarOps<S>::zero());
    for (int i = 0; i <= a.d_; ++i)
      for (int j = 0; j <= b.d_; ++j)
        r[std::size_t(i + j)] = r[std::size_t(i + j)] + a.c_[std::size_t(i)] * b.c_[std::size_t(j)];
    return HomogeneousForm(a.d_ + b.d_, std::move(r));
  }
  friend HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.d_ != b.d_) throw invalid_input("form subtraction needs equal degrees");
    std::vector<S> r(a.c_.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = a.c_[j] - b.c_[j];
    return HomogeneousForm(a.d_, std::move(r));
  }
  friend HomogeneousForm operator*(const S& s, const HomogeneousForm& a) {
    std::vector<S> r(a.c_.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = s * a.c_[j];
    return HomogeneousForm(a.d_, std::move(r));
  }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.d_ == b.d_ && a.c_ == b.c_;
  }

  // Restriction to z2 = 1.
  Poly<S> dehomogenize() const { return Poly<S>(c_); }

  // Vanishing order at [1:0]; the whole formal degree for the zero form.
  int infinity_order() const {
    for (int j = d_; j >= 0; --j)
      if (!ScalarOps<S>::is_zero(c_[std::size_t(j)])) return d_ - j;
    return d_;
  }

  // F(a z1 + b z2, c z1 + d z2): composition with a linear substitution.
  HomogeneousForm substitute(const S& a, const S& b, const S& c, const S& d) const {
    Poly<S> l1(std::vector<S>{b, a});  // in the variable z1, with z2 folded to the constant slot
    Poly<S> l2(std::vector<S>{d, c});
    // Track full coefficient lists of (a z1 + b z2)^j (c z1 + d z2)^(d-j) as
    // degree-d forms; polynomials in one variable of formal degree d suffice
    // because the substitution preserves homogeneity.
    std::vector<S> acc(std::size_t(d_) + 1, ScalarOps<S>::zero());
    std::vector<Poly<S>> l1pow(std::size_t(d_) + 1), l2pow(std::size_t(d_) + 1);
    l1pow[0] = Poly<S>::one();
    l2pow[0] = Poly<S>::one();
    for (int j = 1; j <= d_; ++j) {
      l1pow[std::size_t(j)] = l1pow[std::size_t(j - 1)] * l1;
      l2pow[std::size_t(j)] = l2pow[std::size_t(j - 1)] * l2;
    }
    for (int j = 0; j <= d_; ++j) {
      if (ScalarOps<S>::is_zero(c_[std::size_t(j)])) continue;
      Poly<S> term = l1pow[std::size_t(j)] * l2pow[std::size_t(d_ - j)];
      for (std::size_t k = 0; k < term.coeffs().size(); ++k)
        acc[k] = acc[k] + c_[std::size_t(j)] * term.coeffs()[k];
    }
    return HomogeneousForm(d_, std::move(acc));
  }

 private:
  int d_;
  std::vector<S> c_;
};

using QForm = HomogeneousForm<GaussianRational>;
using CForm = HomogeneousForm<std::complex<double>>;

inline CForm to_float(const QForm& f) {
  std::vector<std::complex<double>> c(f.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.coeffs()[k].to_complex();
  return CForm(f.degree(), std::move(c));
}

// F(z1, z2) = z2^d p(z1/z2). Needs d >= deg p so no negative powers appear.
template <class S>
HomogeneousForm<S> homogenize(const Poly<S>& p, int d) {
  auto deg = p.degree();
  if (deg && *deg > d) throw invalid_input("homogenize: requested degree below polynomial degree");
  std::vector<S> c(std::size_t(d) + 1, ScalarOps<S>::zero());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[k] = p.coeffs()[k];
  return HomogeneousForm<S>(d, std::move(c));
}

// Resultant of two binary forms taken at their formal degrees (Sylvester
// determinant). Nonzero exactly when the forms share no projective root,
// the point [1:0] included.
inline GaussianRational form_resultant(const QForm& f, const QForm& g) {
  int m = f.degree(), n = g.degree();
  if (m == 0 || n == 0) {
    // Degenerate by convention: a nonzero constant form has no roots.
    GaussianRational fv = f.coeff(0), gv = g.coeff(0);
    if (m == 0 && n == 0) return fv * gv;  // nonzero iff both nonzero
    const QForm& other = (m == 0) ? g : f;
    GaussianRational cst = (m == 0) ? fv : gv;
    if (cst.is_zero()) return GaussianRational{};
    GaussianRational pw = GaussianRational::from_int(1);
    for (int i = 0; i < other.degree(); ++i) pw *= cst;
    return pw;
  }
  int size = m + n;
  std::vector<GaussianRational> mat(std::size_t(size) * std::size_t(size));
  auto at = [&](int r, int c) -> GaussianRational& { return mat[std::size_t(r) * std::size_t(size) + std::size_t(c)]; };
  // Rows of f-coefficients (descending powers of z1), then rows of g.
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) at(r, r + j) = f.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) at(n + r, r + j) = g.coeff(n - j);
  // Exact Gaussian elimination.
  GaussianRational det = GaussianRational::from_int(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r)
      if (!at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return GaussianRational{};
    if (pivot != col) {
      for (int c = col; c < size; ++c) std::swap(at(pivot, c), at(col, c));
      det = -det;
    }
    det *= at(col, col);
    GaussianRational inv = at(col, col).inverse();
    for (int r = col + 1; r < size; ++r) {
      if (at(r, col).is_zero()) continue;
      GaussianRational fac = at(r, col) * inv;
      for (int c = col; c < size; ++c) at(r, c) -= fac * at(col, c);
    }
  }
  return det;
}

}  // namespace twk

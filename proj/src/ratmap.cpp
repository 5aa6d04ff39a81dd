#include "ratmap.hpp"

#include "roots.hpp"

namespace twk {

RationalMap::RationalMap(QForm numerator, QForm denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.degree() != den_.degree())
    throw invalid_input("rational map needs numerator and denominator of equal degree");
  if (num_.degree() < 1) throw invalid_input("rational map must have degree at least 1");
  if (num_.is_zero() || den_.is_zero())
    throw invalid_input("rational map with identically zero numerator or denominator");
  if (form_resultant(num_, den_).is_zero())
    throw invalid_input("numerator and denominator share a projective root (non-reduced map)");
}

ProjPoint RationalMap::apply(const ProjPoint& p) const {
  return ProjPoint(num_.eval(p.z1(), p.z2()), den_.eval(p.z1(), p.z2()));
}

QForm RationalMap::wronskian() const {
  QForm w = num_.d1() * den_.d2() - num_.d2() * den_.d1();
  if (w.is_zero()) throw internal_error("identically zero Wronskian on a validated map");
  return w;
}

namespace {

WeightedConfig divisor_of_wronskian(const QForm& w, int expected_weight) {
  WeightedConfig out;
  int inf_mult = w.infinity_order();
  if (inf_mult > 0) out.add(ProjPoint::infinity(), inf_mult);
  QPoly affine = w.dehomogenize();
  if (!affine.is_zero() && *affine.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(affine).factors) {
      RootSplit split = extract_rational_roots(factor);
      for (const auto& r : split.roots) out.add(ProjPoint::affine(r), mult);
      if (!split.residual.is_zero() && *split.residual.degree() > 0)
        for (const auto& z : float_roots(to_float(split.residual))) out.add_approx(z, mult);
    }
  }
  if (out.total_weight() != expected_weight)
    throw internal_error("critical divisor weight disagrees with the Wronskian degree");
  return out;
}

}  // namespace

WeightedConfig critical_divisor(const RationalMap& f) {
  return divisor_of_wronskian(f.wronskian(), 2 * f.degree() - 2);
}

WeightedConfig critical_divisor(const RationalMap& f, const WronskianFactorization& hint) {
  QForm w = f.wronskian();
  int d = w.degree();
  // Re-expand the claimed factorization and compare coefficient-wise.
  int total = hint.infinity_mult;
  for (const auto& [root, mult] : hint.affine_roots) total += mult;
  if (total != d) throw invalid_input("factorization hint has the wrong total degree");
  QForm prod(0, {hint.leading});
  for (const auto& [root, mult] : hint.affine_roots) {
    QForm linear(1, {-root, GaussianRational::from_int(1)});  // z1 - root*z2
    for (int i = 0; i < mult; ++i) prod = prod * linear;
  }
  for (int i = 0; i < hint.infinity_mult; ++i) prod = prod * QForm::z2_power(1);
  if (!(prod == w)) throw invalid_input("factorization hint does not expand to the Wronskian");
  WeightedConfig out;
  if (hint.infinity_mult > 0) out.add(ProjPoint::infinity(), hint.infinity_mult);
  for (const auto& [root, mult] : hint.affine_roots) out.add(ProjPoint::affine(root), mult);
  if (out.distinct_count() != hint.affine_roots.size() + (hint.infinity_mult > 0 ? 1 : 0))
    throw invalid_input("factorization hint lists a root twice");
  return out;
}

WeightedConfig critical_divisor_float(const RationalMap& f, double cluster_tol) {
  CForm w = to_float(f.wronskian());
  WeightedConfig out;
  int inf_mult = w.infinity_order();
  if (inf_mult > 0) out.add(ProjPoint::infinity(), inf_mult);
  CPoly affine = w.dehomogenize();
  if (!affine.is_zero() && *affine.degree() > 0)
    for (const auto& [z, count] : cluster_roots(float_roots(affine), cluster_tol))
      out.add_approx(z, count);
  return out;
}

bool hurwitz_check(const RationalMap& f) {
  return critical_divisor(f).total_weight() == 2 * f.degree() - 2;
}

RationalMap precompose(const RationalMap& f, const MobiusMap& m) {
  const auto& e = m.entries();
  return RationalMap(f.numerator().substitute(e[0], e[1], e[2], e[3]),
                     f.denominator().substitute(e[0], e[1], e[2], e[3]));
}

RationalMap postcompose(const MobiusMap& m, const RationalMap& f) {
  const auto& e = m.entries();
  auto combine = [&](const GaussianRational& x, const GaussianRational& y) {
    std::vector<GaussianRational> c(f.numerator().coeffs().size());
    for (std::size_t j = 0; j < c.size(); ++j)
      c[j] = x * f.numerator().coeffs()[j] + y * f.denominator().coeffs()[j];
    return QForm(f.degree(), std::move(c));
  };
  return RationalMap(combine(e[0], e[1]), combine(e[2], e[3]));
}

}  // namespace twk

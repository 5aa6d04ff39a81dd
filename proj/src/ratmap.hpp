#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "poly.hpp"
#include "wconfig.hpp"

namespace twk {

// Holomorphic self-map of the projective line of degree l >= 1, stored as a
// coprime pair of degree-l forms [P : Q]. Coprimality (nonzero resultant) is
// enforced on construction; a common factor is user error, not something to
// reduce away silently.
class RationalMap {
 public:
  RationalMap(QForm numerator, QForm denominator);

  int degree() const { return num_.degree(); }
  const QForm& numerator() const { return num_; }
  const QForm& denominator() const { return den_; }

  ProjPoint apply(const ProjPoint& p) const;

  // W = d1(P) d2(Q) - d2(P) d1(Q), homogeneous of degree 2l-2. Its projective
  // vanishing divisor is the critical divisor of the map.
  QForm wronskian() const;

 private:
  QForm num_, den_;
};

// A claimed full factorization of a Wronskian: leading scalar, affine roots
// with multiplicities, and the vanishing order at infinity.
struct WronskianFactorization {
  GaussianRational leading;
  std::vector<std::pair<GaussianRational, int>> affine_roots;
  int infinity_mult = 0;
};

// Critical points with multiplicities (vanishing orders of the Wronskian).
// Multiplicity strata are always exact; points of a stratum whose exact roots
// cannot be certified are reported as float approximations and the
// configuration is flagged non-certified.
WeightedConfig critical_divisor(const RationalMap& f);

// Same, but takes a caller-supplied factorization, verifies it against the
// Wronskian by exact re-expansion, and rejects it on mismatch.
WeightedConfig critical_divisor(const RationalMap& f, const WronskianFactorization& hint);

// Float-backend divisor: companion-matrix roots of the Wronskian clustered
// into multiplicities. Never certified.
WeightedConfig critical_divisor_float(const RationalMap& f, double cluster_tol = 1e-7);

// Sum of critical multiplicities equals 2l-2 (the Riemann-Hurwitz count for
// genus-zero covers).
bool hurwitz_check(const RationalMap& f);

// f after m, i.e. the map p -> f(m(p)). Critical divisor transports by the
// inverse of m.
RationalMap precompose(const RationalMap& f, const MobiusMap& m);

// m after f. Leaves the critical divisor untouched (only branch values move).
RationalMap postcompose(const MobiusMap& m, const RationalMap& f);

}  // namespace twk

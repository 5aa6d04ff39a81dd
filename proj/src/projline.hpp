#pragma once

#include <array>
#include <optional>

#include "gaussian.hpp"

namespace twk {

// Point of the projective line over Q(i) in homogeneous coordinates [z1:z2].
// Kept in canonical form: (z, 1) for affine points, (1, 0) for infinity, so
// component-wise comparison is projective comparison.
class ProjPoint {
 public:
  ProjPoint(GaussianRational z1, GaussianRational z2) {
    if (z1.is_zero() && z2.is_zero()) throw invalid_input("[0:0] is not a projective point");
    if (z2.is_zero()) {
      z1_ = GaussianRational::from_int(1);
      z2_ = GaussianRational{};
    } else {
      z1_ = z1 / z2;
      z2_ = GaussianRational::from_int(1);
    }
  }

  static ProjPoint affine(GaussianRational z) { return ProjPoint(std::move(z), GaussianRational::from_int(1)); }
  static ProjPoint from_int(long n) { return affine(GaussianRational::from_int(n)); }
  static ProjPoint infinity() { return ProjPoint(GaussianRational::from_int(1), GaussianRational{}); }

  bool is_infinity() const { return z2_.is_zero(); }

  // Affine value; only for finite points.
  const GaussianRational& value() const {
    if (is_infinity()) throw invalid_input("the point at infinity has no affine value");
    return z1_;
  }

  const GaussianRational& z1() const { return z1_; }
  const GaussianRational& z2() const { return z2_; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    // Canonical representatives make cross-multiplication redundant, but the
    // defining test is z1*w2 == z2*w1.
    return a.z1_ * b.z2_ == a.z2_ * b.z1_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

 private:
  GaussianRational z1_, z2_;
};

// Canonical sort for configurations and serialization: infinity last, affine
// points by exact (re, im).
inline int projpoint_compare(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() && b.is_infinity()) return 0;
  if (a.is_infinity()) return 1;
  if (b.is_infinity()) return -1;
  return gr_compare(a.value(), b.value());
}

// Invertible fractional-linear self-map of the projective line, stored as a
// 2x2 matrix up to scale. Comparison and serialization use the scaling that
// makes the first nonzero entry (row-major) equal to 1.
class MobiusMap {
 public:
  MobiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d)
      : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (det().is_zero()) throw invalid_input("Mobius matrix must have nonzero determinant");
  }

  static MobiusMap identity() {
    return MobiusMap(GaussianRational::from_int(1), {}, {}, GaussianRational::from_int(1));
  }

  GaussianRational det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  const std::array<GaussianRational, 4>& entries() const { return m_; }

  ProjPoint apply(const ProjPoint& p) const {
    return ProjPoint(m_[0] * p.z1() + m_[1] * p.z2(), m_[2] * p.z1() + m_[3] * p.z2());
  }

  MobiusMap compose(const MobiusMap& o) const {  // (*this) after o
    return MobiusMap(m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                     m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]);
  }

  MobiusMap inverse() const { return MobiusMap(m_[3], -m_[1], -m_[2], m_[0]); }

  MobiusMap canonical() const {
    for (const auto& e : m_) {
      if (!e.is_zero()) {
        GaussianRational s = e.inverse();
        return MobiusMap(s * m_[0], s * m_[1], s * m_[2], s * m_[3]);
      }
    }
    throw internal_error("Mobius matrix with all entries zero");
  }

  // Projective equality.
  friend bool operator==(const MobiusMap& x, const MobiusMap& y) {
    auto cx = x.canonical(), cy = y.canonical();
    return cx.m_ == cy.m_;
  }
  friend bool operator!=(const MobiusMap& x, const MobiusMap& y) { return !(x == y); }

 private:
  std::array<GaussianRational, 4> m_;
};

namespace detail {
// Matrix sending the ordered triple (p, q, r) of pairwise distinct points to
// (0, 1, infinity). Rows are fixed by the incidence conditions; the relative
// scale by the middle point.
inline MobiusMap triple_to_standard(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (p == q || q == r || p == r) throw invalid_input("triple with repeated points");
  // Row 1 kills p, row 2 kills r.
  GaussianRational a = p.z2(), b = -p.z1();
  GaussianRational c = r.z2(), d = -r.z1();
  // Scale so q lands on [1:1].
  GaussianRational top = a * q.z1() + b * q.z2();
  GaussianRational bot = c * q.z1() + d * q.z2();
  if (top.is_zero() || bot.is_zero()) throw internal_error("triple normalization degenerated");
  return MobiusMap(bot * a, bot * b, top * c, top * d);
}
}  // namespace detail

// The unique (up to scale) Mobius map with p_i -> q_i for the two ordered
// triples of pairwise distinct points.
inline MobiusMap mobius_from_triples(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                                     const ProjPoint& q1, const ProjPoint& q2, const ProjPoint& q3) {
  MobiusMap s = detail::triple_to_standard(p1, p2, p3);
  MobiusMap t = detail::triple_to_standard(q1, q2, q3);
  return t.inverse().compose(s);
}

// Image of z under the map sending (p, q, r) to (0, 1, infinity); this is the
// cross-ratio convention used throughout. Returned as a projective point so
// the value infinity needs no special casing.
inline ProjPoint cross_ratio(const ProjPoint& z, const ProjPoint& p, const ProjPoint& q,
                             const ProjPoint& r) {
  return detail::triple_to_standard(p, q, r).apply(z);
}

}  // namespace twk

#pragma once

#include <algorithm>
#include <complex>
#include <vector>

#include "projline.hpp"

namespace twk {

struct WeightedPoint {
  ProjPoint point;
  int mult;
};

// Float-approximated point; present only when exact root extraction gave up
// on some factor, in which case the whole configuration is non-certified.
struct ApproxPoint {
  std::complex<double> z;
  int mult;
};

// Finite multiset of projective points with positive multiplicities and
// pairwise distinct support. Canonical order: affine points by
// (multiplicity, re, im) with exact comparison, approximated points next,
// infinity always last.
class WeightedConfig {
 public:
  WeightedConfig() = default;

  void add(const ProjPoint& p, int mult) {
    if (mult < 1) throw invalid_input("multiplicity must be positive");
    for (auto& wp : exact_) {
      if (wp.point == p) {
        wp.mult += mult;
        sort_();
        return;
      }
    }
    exact_.push_back({p, mult});
    sort_();
  }

  void add_approx(std::complex<double> z, int mult) {
    if (mult < 1) throw invalid_input("multiplicity must be positive");
    approx_.push_back({z, mult});
    sort_();
  }

  const std::vector<WeightedPoint>& points() const { return exact_; }
  const std::vector<ApproxPoint>& approx_points() const { return approx_; }

  bool certified() const { return approx_.empty(); }
  bool empty() const { return exact_.empty() && approx_.empty(); }

  std::size_t distinct_count() const { return exact_.size() + approx_.size(); }

  int total_weight() const {
    int w = 0;
    for (const auto& wp : exact_) w += wp.mult;
    for (const auto& ap : approx_) w += ap.mult;
    return w;
  }

  // Sorted multiplicity multiset over all points, exact and approximated.
  std::vector<int> multiplicity_multiset() const {
    std::vector<int> m;
    m.reserve(distinct_count());
    for (const auto& wp : exact_) m.push_back(wp.mult);
    for (const auto& ap : approx_) m.push_back(ap.mult);
    std::sort(m.begin(), m.end());
    return m;
  }

  // Multiplicity of an exact point, 0 if absent.
  int multiplicity_of(const ProjPoint& p) const {
    for (const auto& wp : exact_)
      if (wp.point == p) return wp.mult;
    return 0;
  }

  // Pointwise transport by a Mobius map; exact configurations only.
  WeightedConfig transported(const MobiusMap& m) const {
    if (!certified()) throw invalid_input("cannot transport a non-certified configuration exactly");
    WeightedConfig out;
    for (const auto& wp : exact_) out.add(m.apply(wp.point), wp.mult);
    return out;
  }

  friend bool operator==(const WeightedConfig& a, const WeightedConfig& b) {
    if (a.exact_.size() != b.exact_.size() || a.approx_.size() != b.approx_.size()) return false;
    for (std::size_t i = 0; i < a.exact_.size(); ++i) {
      if (a.exact_[i].mult != b.exact_[i].mult) return false;
      if (a.exact_[i].point != b.exact_[i].point) return false;
    }
    for (std::size_t i = 0; i < a.approx_.size(); ++i) {
      if (a.approx_[i].mult != b.approx_[i].mult) return false;
      if (a.approx_[i].z != b.approx_[i].z) return false;
    }
    return true;
  }
  friend bool operator!=(const WeightedConfig& a, const WeightedConfig& b) { return !(a == b); }

 private:
  static bool less_(const WeightedPoint& a, const WeightedPoint& b) {
    // Infinity sorts last regardless of multiplicity.
    if (a.point.is_infinity() != b.point.is_infinity()) return b.point.is_infinity();
    if (a.point.is_infinity()) return false;
    if (a.mult != b.mult) return a.mult < b.mult;
    return gr_compare(a.point.value(), b.point.value()) < 0;
  }
  static bool approx_less_(const ApproxPoint& a, const ApproxPoint& b) {
    if (a.mult != b.mult) return a.mult < b.mult;
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  }
  void sort_() {
    std::sort(exact_.begin(), exact_.end(), less_);
    std::sort(approx_.begin(), approx_.end(), approx_less_);
  }

  std::vector<WeightedPoint> exact_;
  std::vector<ApproxPoint> approx_;
};

}  // namespace twk

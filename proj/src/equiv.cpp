#include "equiv.hpp"

#include <algorithm>
#include <sstream>

#include "json_io.hpp"

namespace twk {

namespace {

void require_certified(const WeightedConfig& c, const char* side) {
  if (!c.certified())
    throw invalid_input(std::string("exact equivalence requires a certified configuration (") +
                        side + " side is float-flagged)");
}

bool transports_onto(const MobiusMap& m, const WeightedConfig& c, const WeightedConfig& d) {
  for (const auto& wp : c.points())
    if (d.multiplicity_of(m.apply(wp.point)) != wp.mult) return false;
  return true;
}

// A point pool for completing degenerate (< 3 point) configurations to
// triples: small integers are plentiful enough to avoid any finite set.
ProjPoint fresh_point(const std::vector<ProjPoint>& avoid) {
  for (long n = 0;; ++n) {
    ProjPoint cand = ProjPoint::from_int(n);
    bool used = false;
    for (const auto& p : avoid)
      if (p == cand) used = true;
    if (!used) return cand;
  }
}

MobiusMap degenerate_witness(const WeightedConfig& c, const WeightedConfig& d) {
  // Multiplicity multisets agree and there are at most two points on each
  // side; canonical order pairs points of equal multiplicity.
  std::vector<ProjPoint> src, dst;
  for (const auto& wp : c.points()) src.push_back(wp.point);
  for (const auto& wp : d.points()) dst.push_back(wp.point);
  while (src.size() < 3) {
    src.push_back(fresh_point(src));
    dst.push_back(fresh_point(dst));
  }
  return mobius_from_triples(src[0], src[1], src[2], dst[0], dst[1], dst[2]);
}

}  // namespace

EquivResult are_equivalent(const WeightedConfig& c, const WeightedConfig& d) {
  require_certified(c, "left");
  require_certified(d, "right");
  EquivResult res;
  if (c.multiplicity_multiset() != d.multiplicity_multiset()) return res;

  if (c.distinct_count() <= 2) {
    res.equivalent = true;
    MobiusMap w = degenerate_witness(c, d);
    if (!transports_onto(w, c, d)) throw internal_error("degenerate witness failed verification");
    res.witness = w.canonical();
    return res;
  }

  // Fixed ordered triple on the left: the first three points in canonical
  // order. Candidate triples on the right must match its multiplicities.
  const auto& cp = c.points();
  const auto& dp = d.points();
  for (std::size_t i = 0; i < dp.size(); ++i) {
    if (dp[i].mult != cp[0].mult) continue;
    for (std::size_t j = 0; j < dp.size(); ++j) {
      if (j == i || dp[j].mult != cp[1].mult) continue;
      for (std::size_t k = 0; k < dp.size(); ++k) {
        if (k == i || k == j || dp[k].mult != cp[2].mult) continue;
        ++res.triples_tested;
        MobiusMap m = mobius_from_triples(cp[0].point, cp[1].point, cp[2].point, dp[i].point,
                                          dp[j].point, dp[k].point);
        if (transports_onto(m, c, d)) {
          res.equivalent = true;
          res.witness = m.canonical();
          return res;
        }
      }
    }
  }
  return res;
}

std::string canonical_fingerprint(const WeightedConfig& c) {
  if (!c.certified()) throw invalid_input("fingerprints are defined for certified configurations");
  if (c.distinct_count() < 3) {
    std::ostringstream os;
    os << "mults[";
    auto m = c.multiplicity_multiset();
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << "]";
    return os.str();
  }

  const auto& pts = c.points();
  std::size_t n = pts.size();
  // Admissible triples: those whose multiplicity vector is lexicographically
  // minimal over all ordered triples of distinct points. The rule depends
  // only on multiplicities, so it is Mobius-invariant.
  std::array<int, 3> best{0, 0, 0};
  bool have_best = false;
  auto consider = [&](std::size_t i, std::size_t j, std::size_t k) {
    std::array<int, 3> v{pts[i].mult, pts[j].mult, pts[k].mult};
    if (!have_best || v < best) {
      best = v;
      have_best = true;
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i != j && j != k && i != k) consider(i, j, k);

  std::optional<std::string> minimal;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (std::array<int, 3>{pts[i].mult, pts[j].mult, pts[k].mult} != best) continue;
        MobiusMap norm = detail::triple_to_standard(pts[i].point, pts[j].point, pts[k].point);
        std::string ser = config_to_json(c.transported(norm)).dump();
        if (!minimal || ser < *minimal) minimal = ser;
      }
  return *minimal;
}

namespace {

// Float-side projective point: affine complex value or infinity.
struct FPoint {
  std::complex<double> z{};
  bool inf = false;
  int mult = 0;
};

std::vector<FPoint> flatten(const WeightedConfig& c) {
  std::vector<FPoint> out;
  for (const auto& wp : c.points()) {
    FPoint f;
    f.mult = wp.mult;
    if (wp.point.is_infinity())
      f.inf = true;
    else
      f.z = wp.point.value().to_complex();
    out.push_back(f);
  }
  for (const auto& ap : c.approx_points()) out.push_back({ap.z, false, ap.mult});
  std::sort(out.begin(), out.end(), [](const FPoint& a, const FPoint& b) {
    if (a.inf != b.inf) return b.inf;
    if (a.mult != b.mult) return a.mult < b.mult;
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return out;
}

using CMobius = std::array<std::complex<double>, 4>;

// Homogeneous coordinates of p, then m applied.
std::pair<std::complex<double>, std::complex<double>> apply_f(const CMobius& m, const FPoint& p) {
  std::complex<double> z1 = p.inf ? 1.0 : p.z;
  std::complex<double> z2 = p.inf ? 0.0 : 1.0;
  return {m[0] * z1 + m[1] * z2, m[2] * z1 + m[3] * z2};
}

bool match_target(const std::vector<FPoint>& dst, std::vector<bool>& used,
                  std::complex<double> w1, std::complex<double> w2, int mult, double eps) {
  bool is_inf = std::abs(w2) <= eps * std::abs(w1);
  std::complex<double> v = is_inf ? std::complex<double>{} : w1 / w2;
  for (std::size_t t = 0; t < dst.size(); ++t) {
    if (used[t] || dst[t].mult != mult) continue;
    if (dst[t].inf != is_inf) continue;
    if (!is_inf && std::abs(dst[t].z - v) > eps) continue;
    used[t] = true;
    return true;
  }
  return false;
}

bool verify_f(const CMobius& m, const std::vector<FPoint>& src, const std::vector<FPoint>& dst,
              double eps) {
  std::vector<bool> used(dst.size(), false);
  for (const auto& p : src) {
    auto [w1, w2] = apply_f(m, p);
    if (!match_target(dst, used, w1, w2, p.mult, eps)) return false;
  }
  return true;
}

std::optional<CMobius> triple_map_f(const FPoint& p, const FPoint& q, const FPoint& r,
                                    const FPoint& tp, const FPoint& tq, const FPoint& tr) {
  auto standard = [](const FPoint& a, const FPoint& b,
                     const FPoint& c) -> std::optional<CMobius> {
    std::complex<double> a1 = a.inf ? 1.0 : a.z, a2 = a.inf ? 0.0 : 1.0;
    std::complex<double> c1 = c.inf ? 1.0 : c.z, c2 = c.inf ? 0.0 : 1.0;
    std::complex<double> b1 = b.inf ? 1.0 : b.z, b2 = b.inf ? 0.0 : 1.0;
    std::complex<double> ra = a2, rb = -a1;
    std::complex<double> rc = c2, rd = -c1;
    std::complex<double> top = ra * b1 + rb * b2;
    std::complex<double> bot = rc * b1 + rd * b2;
    if (std::abs(top) < 1e-300 || std::abs(bot) < 1e-300) return std::nullopt;
    return CMobius{bot * ra, bot * rb, top * rc, top * rd};
  };
  auto s = standard(p, q, r);
  auto t = standard(tp, tq, tr);
  if (!s || !t) return std::nullopt;
  // t^{-1} compose s
  CMobius ti{(*t)[3], -(*t)[1], -(*t)[2], (*t)[0]};
  return CMobius{ti[0] * (*s)[0] + ti[1] * (*s)[2], ti[0] * (*s)[1] + ti[1] * (*s)[3],
                 ti[2] * (*s)[0] + ti[3] * (*s)[2], ti[2] * (*s)[1] + ti[3] * (*s)[3]};
}

}  // namespace

FloatEquivResult are_equivalent_float(const WeightedConfig& c, const WeightedConfig& d,
                                      double eps) {
  FloatEquivResult res;
  auto src = flatten(c), dst = flatten(d);
  {
    std::vector<int> mc, md;
    for (const auto& p : src) mc.push_back(p.mult);
    for (const auto& p : dst) md.push_back(p.mult);
    std::sort(mc.begin(), mc.end());
    std::sort(md.begin(), md.end());
    if (mc != md) return res;
  }
  if (src.size() <= 2) {
    // Multiset agreement settles it; produce a witness for completeness.
    std::vector<FPoint> s = src, t = dst;
    int fill = 2;
    while (s.size() < 3) {
      s.push_back({std::complex<double>(fill, 0), false, 0});
      t.push_back({std::complex<double>(fill, 0), false, 0});
      ++fill;
    }
    res.equivalent = true;
    res.witness = triple_map_f(s[0], s[1], s[2], t[0], t[1], t[2]);
    return res;
  }
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (dst[i].mult != src[0].mult) continue;
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (j == i || dst[j].mult != src[1].mult) continue;
      for (std::size_t k = 0; k < dst.size(); ++k) {
        if (k == i || k == j || dst[k].mult != src[2].mult) continue;
        ++res.triples_tested;
        auto m = triple_map_f(src[0], src[1], src[2], dst[i], dst[j], dst[k]);
        if (m && verify_f(*m, src, dst, eps)) {
          res.equivalent = true;
          res.witness = m;
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace twk

#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "wconfig.hpp"

namespace twk {

struct EquivResult {
  bool equivalent = false;
  std::optional<MobiusMap> witness;
  long triples_tested = 0;
};

// Decides Mobius equivalence of two certified configurations and produces a
// verified witness when one exists. Configurations with at most two distinct
// points are equivalent exactly when their multiplicity multisets agree
// (sharp 3-transitivity); otherwise one ordered triple of the left
// configuration is fixed and every multiplicity-compatible ordered triple of
// the right one is tried, each candidate map verified on the full
// configuration with exact arithmetic.
EquivResult are_equivalent(const WeightedConfig& c, const WeightedConfig& d);

// Mobius-invariant serialization: equal strings exactly when the
// configurations are equivalent. Configurations with fewer than three
// distinct points degenerate to their multiplicity multiset.
std::string canonical_fingerprint(const WeightedConfig& c);

struct FloatEquivResult {
  bool equivalent = false;
  std::optional<std::array<std::complex<double>, 4>> witness;
  long triples_tested = 0;
};

// Heuristic float-backend comparison with tolerance eps on canonical affine
// representatives; infinity only ever matches infinity. Accepts non-certified
// configurations.
FloatEquivResult are_equivalent_float(const WeightedConfig& c, const WeightedConfig& d,
                                      double eps = 1e-9);

}  // namespace twk

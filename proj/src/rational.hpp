#pragma once

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace twk {

// Exact rational scalar. mpq_class keeps results in lowest terms with a
// positive denominator, which is exactly the canonical form the JSON layer
// serializes.
using Rational = mpq_class;

inline Rational rational_from_long(long n) { return Rational(n); }

inline Rational rational_from_parts(long num, long den) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n" or "n/d" with optional leading '-'. Anything else is rejected,
// including zero denominators.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw invalid_input("empty rational string");
  std::size_t i = 0;
  if (s[i] == '-') ++i;
  bool digits = false, slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits = true;
    } else if (c == '/' && digits && !slash) {
      slash = true;
      digits = false;
    } else {
      throw invalid_input("malformed rational '" + s + "'");
    }
  }
  if (!digits) throw invalid_input("malformed rational '" + s + "'");
  Rational q(s);
  if (q.get_den() == 0) throw invalid_input("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline double rational_to_double(const Rational& q) { return q.get_d(); }

}  // namespace twk

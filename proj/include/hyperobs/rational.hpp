#pragma once

#include <gmpxx.h>

#include <string>

namespace hyperobs {

/// Exact rational scalar used for every coefficient outside the prime-field rank test.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& text) {
  Rational q(text);
  q.canonicalize();
  return q;
}

}  // namespace hyperobs

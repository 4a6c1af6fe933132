#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace crnbinom {

/// Exact rational scalar backed by GMP. mpq_class keeps every value
/// canonical across arithmetic: fully reduced, positive denominator,
/// zero stored as 0/1.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws on a zero denominator.
inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

/// Renders as "n" or "n/d".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace crnbinom

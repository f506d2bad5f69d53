#pragma once

#include <gmpxx.h>

#include <string>

#include "hfq/errors.hpp"

namespace hfq {

// Exact arithmetic everywhere: arbitrary-precision integers and reduced
// rationals.  No floating point appears anywhere in the library.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw Error(Errc::invalid_parameters, "rational with zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline Rational rational_of(Int n) { return Rational(std::move(n)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "0" for zero, "3" or "-3" for integers, "a/b" in lowest terms otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace hfq

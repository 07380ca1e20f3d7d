#pragma once

#include <gmpxx.h>

#include <string>

namespace braidlie {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

}  // namespace braidlie

#pragma once

#include <optional>
#include <vector>

#include "braidlie/errors.hpp"
#include "braidlie/rational.hpp"

namespace braidlie {

long euler_phi(long n);

/// Coefficients of the N-th cyclotomic polynomial, ascending degree, monic.
std::vector<Int> cyclotomic_polynomial(long n);

/// An element of the cyclotomic field Q(zeta_M), stored as the reduced
/// residue modulo Phi_M in the power basis 1, z, ..., z^(phi(M)-1).
///
/// Values are immutable after construction. Scalars of different levels
/// combine by embedding into the lcm level; equality compares there too,
/// so 1 @ 1 == zeta_3^0 @ 3.
class CycScalar {
 public:
  CycScalar();  // zero at level 1

  /// Canonicalizes: coefficients of any length are reduced mod Phi_M.
  CycScalar(long level, std::vector<Rational> coeffs);

  static CycScalar zero() { return CycScalar(); }
  static CycScalar one();
  static CycScalar from_rational(const Rational& r);
  static CycScalar from_int(long v);

  long level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  /// Image in Q(zeta_target); requires level() | target.
  CycScalar embedded(long target) const;

  /// Preimage under the embedding of Q(zeta_target), when it exists;
  /// requires target | level().
  std::optional<CycScalar> restricted(long target) const;

  /// Same value at the smallest divisor level that can represent it.
  CycScalar minimized() const;

  CycScalar operator-() const;
  CycScalar inverse() const;  // throws DivisionByZero
  CycScalar pow(long e) const;

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b);
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
  CycScalar& operator-=(const CycScalar& b) { return *this = *this - b; }
  CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }

 private:
  long level_;
  std::vector<Rational> coeffs_;  // length phi(level_)
};

/// zeta_M^k in canonical form.
CycScalar root_of_unity(long level, long k);

/// Least n >= 1 with u^n = 1, or nullopt if u is not a root of unity.
/// Requires u != 0.
std::optional<long> multiplicative_order(const CycScalar& u);

bool is_primitive_nth_root(const CycScalar& u, long n);

/// Deterministic total order (by minimized level, then coefficients).
/// Not compatible with field structure; used for stable output ordering.
int scalar_compare(const CycScalar& a, const CycScalar& b);

}  // namespace braidlie

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxsol/rational.hpp"

namespace coxsol {

/// Euler's totient.
unsigned totient(unsigned n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

/// An exact element of the cyclotomic field Q(zeta_n).
///
/// The value is stored as a polynomial in zeta_n of degree < phi(n), i.e. in
/// the power basis reduced modulo the n-th cyclotomic polynomial. The
/// conductor is whatever the value was created with (or the lcm of the
/// operands); it is never minimised. Values with different conductors are
/// compared after lifting both to the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(const Rational& q) : conductor_(1), coeffs_{q} {}  // NOLINT
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}   // NOLINT
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}       // NOLINT

  /// zeta_n^j, reduced.
  static Cyclotomic zeta(unsigned n, long j);

  /// Builds a value from power-basis coefficients; `coeffs` may have any
  /// length and is reduced modulo Phi_n.
  static Cyclotomic from_coefficients(unsigned n, std::span<const Rational> coeffs);

  unsigned conductor() const { return conductor_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  /// The same value written over Q(zeta_N); requires conductor() | N.
  Cyclotomic lift(unsigned N) const;

  /// Image under zeta_n -> zeta_n^k. Throws NotCoprime if gcd(k, n) != 1.
  Cyclotomic galois_conjugate(long k) const;
  Cyclotomic complex_conjugate() const;

  /// Multiplicative inverse; throws SingularMatrix on zero.
  Cyclotomic inverse() const;

  /// If the value is a root of unity zeta_N^e (for the current conductor N
  /// or 2N), returns (order, exponent) with the order minimal.
  std::optional<std::pair<unsigned, unsigned>> root_of_unity() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order on values of the same conductor (lexicographic on
  /// coefficients); values of different conductors are lifted first.
  /// Only meant for use as a map key.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  /// Human readable form, e.g. "-1/2 + 3*z5^2".
  std::string to_string() const;

 private:
  Cyclotomic(unsigned n, std::vector<Rational> coeffs)
      : conductor_(n), coeffs_(std::move(coeffs)) {}

  static void align(Cyclotomic& a, Cyclotomic& b);

  unsigned conductor_;
  std::vector<Rational> coeffs_;  // size phi(conductor_)
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

}  // namespace coxsol

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "gj/scalars/big_rational.hpp"

namespace gj {

/// Exact element of Q(zeta_{p^m}, i).
///
/// Stored in the power basis zeta^j, 0 <= j < phi(p^m), zeta = exp(2 pi i / p^m),
/// reduced by the p-power cyclotomic relation. For odd p the value is
/// re + i * im with re, im in Q(zeta_{p^m}); for p = 2 the unit i is zeta_4 and
/// lives inside the power basis. The level is always minimal, and elements of
/// Q(i) carry prime 0 so they combine with any prime. Combining two elements
/// with different nonzero primes throws.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const BigRational& value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long value);                // NOLINT(google-explicit-constructor)

  static Cyclotomic gaussian(const BigRational& re, const BigRational& im);
  static Cyclotomic imaginary_unit();
  /// zeta_{p^level}^a.
  static Cyclotomic root(int p, int level, long long a);
  /// Sum of coeffs[e] * zeta_{p^level}^e over a full residue system e < p^level,
  /// with an optional i-component (ignored when p = 2).
  static Cyclotomic from_group_ring(int p, int level, std::vector<BigRational> re,
                                    std::vector<BigRational> im = {});

  int prime() const noexcept { return p_; }
  int level() const noexcept { return m_; }
  const std::vector<BigRational>& coefficients() const noexcept { return re_; }
  const std::vector<BigRational>& i_coefficients() const noexcept { return im_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Value as a rational; throws if not rational.
  BigRational rational() const;

  Cyclotomic conjugate() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long long exponent) const;

  std::complex<double> embed(int digits = 15) const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  int p_ = 0;
  int m_ = 0;
  std::vector<BigRational> re_;
  std::vector<BigRational> im_;

  friend struct CyclotomicWork;
};

Cyclotomic root_of_unity(int p, int level, long long a);
Cyclotomic cyc_conjugate(const Cyclotomic& z);
/// Numeric value under zeta_{p^m} -> exp(2 pi i / p^m). digits in [1, 15].
std::complex<double> embed_complex(const Cyclotomic& z, int digits);
/// Positive square root of the prime p.
Cyclotomic sqrt_prime(int p);

/// Euler phi of p^m.
long long phi_prime_power(int p, int m);
long long int_pow(long long base, int exponent);

}  // namespace gj

#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>
#include <string_view>

namespace gj {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Sentinel valuation of zero.
inline constexpr int kInfiniteValuation = INT_MAX;

/// Parses "a", "-a" or "a/b" into a reduced rational. Throws EngineError(InvalidInput).
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& value);

/// v_p of a nonzero integer; kInfiniteValuation for zero.
int valuation(const BigInt& value, int p);

/// v_p of a rational; kInfiniteValuation for zero.
int valuation(const BigRational& value, int p);

BigInt ipow(const BigInt& base, unsigned exponent);

/// p^e as an exact rational, e may be negative.
BigRational prime_power(int p, int exponent);

/// Residue of a p-integral rational modulo p^k, in [0, p^k).
BigInt residue_mod_prime_power(const BigRational& value, int p, int k);

}  // namespace gj

#include "gj/scalars/big_rational.hpp"

#include <cctype>

#include "gj/error.hpp"

namespace gj {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Zero: return "Zero";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NoRecurrence: return "NoRecurrence";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::LevelUncertified: return "LevelUncertified";
    case ErrorKind::NoStabilization: return "NoStabilization";
    case ErrorKind::InfiniteLowerSupport: return "InfiniteLowerSupport";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::AllDegenerate: return "AllDegenerate";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::NearZeroDenominator: return "NearZeroDenominator";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string out(s.substr(b, e - b));
  if (!out.empty() && out[0] == '+') out.erase(0, 1);
  return out;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num = strip(text.substr(0, slash));
  const std::string den = slash == std::string_view::npos ? "1" : strip(text.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den)) {
    throw EngineError(ErrorKind::InvalidInput, "not a rational: '" + std::string(text) + "'");
  }
  BigInt n(num), d(den);
  if (d == 0) throw EngineError(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& value) { return value.get_str(); }

int valuation(const BigInt& value, int p) {
  if (value == 0) return kInfiniteValuation;
  BigInt v = abs(value);
  int count = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
    ++count;
  }
  return count;
}

int valuation(const BigRational& value, int p) {
  if (value == 0) return kInfiniteValuation;
  return valuation(BigInt(value.get_num()), p) - valuation(BigInt(value.get_den()), p);
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigRational prime_power(int p, int exponent) {
  const BigInt pp = ipow(BigInt(p), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return BigRational(pp);
  BigRational r(BigInt(1), pp);
  r.canonicalize();
  return r;
}

BigInt residue_mod_prime_power(const BigRational& value, int p, int k) {
  if (k <= 0) return 0;
  const BigInt mod = ipow(BigInt(p), static_cast<unsigned>(k));
  BigInt den = value.get_den();
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw EngineError(ErrorKind::InvalidInput, "residue of a non-integral rational");
  }
  BigInt r = BigInt(value.get_num()) * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  return r;
}

}  // namespace gj

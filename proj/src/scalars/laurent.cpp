#include "gj/scalars/laurent.hpp"

#include <sstream>

#include "gj/error.hpp"

namespace gj {

LaurentPoly::LaurentPoly(const Cyclotomic& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Cyclotomic& c, int exponent) {
  LaurentPoly r(c);
  if (!r.is_zero()) r.low_ = exponent;
  return r;
}

LaurentPoly LaurentPoly::from_coefficients(int low, std::vector<Cyclotomic> coeffs) {
  LaurentPoly r;
  r.low_ = low;
  r.coeffs_ = std::move(coeffs);
  r.trim();
  return r;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Cyclotomic LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return {};
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += by;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return {};
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::substitute(const Cyclotomic& c, int sign) const {
  LaurentPoly r;
  for (int e = low_; !is_zero() && e <= high(); ++e) {
    const Cyclotomic& a = coeffs_[static_cast<std::size_t>(e - low_)];
    if (a.is_zero()) continue;
    r += monomial(a * c.pow(e), sign * e);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<Cyclotomic> c(static_cast<std::size_t>(hi - lo + 1));
  for (int e = low_; e <= high(); ++e) c[static_cast<std::size_t>(e - lo)] += coeffs_[static_cast<std::size_t>(e - low_)];
  for (int e = o.low_; e <= o.high(); ++e) c[static_cast<std::size_t>(e - lo)] += o.coeffs_[static_cast<std::size_t>(e - o.low_)];
  low_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += o.scaled(Cyclotomic(-1L)); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Cyclotomic> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentPoly::from_coefficients(a.low_ + b.low_, std::move(c));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = low_; e <= high(); ++e) {
    const Cyclotomic& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) os << "*T^" << e;
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw EngineError(ErrorKind::Zero, "polynomial division by zero");
  if ((!a.is_zero() && a.low() < 0) || b.low() < 0) {
    throw EngineError(ErrorKind::InvalidInput, "poly_divmod expects ordinary polynomials");
  }
  std::vector<Cyclotomic> rem(static_cast<std::size_t>(a.is_zero() ? 0 : a.high() + 1));
  for (int e = a.low(); !a.is_zero() && e <= a.high(); ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
  const int db = b.high();
  const Cyclotomic lead_inv = b.coeff(db).inverse();
  std::vector<Cyclotomic> quot;
  const int da = static_cast<int>(rem.size()) - 1;
  if (da >= db) {
    quot.resize(static_cast<std::size_t>(da - db + 1));
    for (int k = da - db; k >= 0; --k) {
      const Cyclotomic c = rem[static_cast<std::size_t>(k + db)] * lead_inv;
      quot[static_cast<std::size_t>(k)] = c;
      if (c.is_zero()) continue;
      for (int j = b.low(); j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
    }
  }
  return {LaurentPoly::from_coefficients(0, std::move(quot)), LaurentPoly::from_coefficients(0, std::move(rem))};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.coeff(a.high()).inverse());
}

}  // namespace gj

#include "gj/scalars/rational_function.hpp"

#include <sstream>

#include "gj/error.hpp"

namespace gj {

RationalFunction::RationalFunction(const Cyclotomic& c, int q) : num_(c), q_(q) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den, int q)
    : num_(std::move(num)), den_(std::move(den)), q_(q) {
  if (den_.is_zero()) throw EngineError(ErrorKind::ZeroDenominator, "rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::monomial(const Cyclotomic& c, int exponent, int q) {
  return RationalFunction(LaurentPoly::monomial(c, exponent), LaurentPoly(Cyclotomic(1L)), q);
}

int RationalFunction::merge_base(int other) const {
  if (q_ == 0) return other;
  if (other == 0 || other == q_) return q_;
  throw EngineError(ErrorKind::InvalidInput, "rational functions over different bases");
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Cyclotomic(1L));
    return;
  }
  const int shift = num_.low() - den_.low();
  LaurentPoly n = num_.shifted(-num_.low());
  LaurentPoly d = den_.shifted(-den_.low());
  const LaurentPoly g = poly_gcd(n, d);
  if (g.high() > 0) {
    n = poly_divmod(n, g).first;
    d = poly_divmod(d, g).first;
  }
  const Cyclotomic c0 = d.coeff(0).inverse();
  num_ = n.scaled(c0).shifted(shift);
  den_ = d.scaled(c0);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw EngineError(ErrorKind::Zero, "inverse of zero rational function");
  return RationalFunction(den_, num_, q_);
}

RationalFunction RationalFunction::substitute(const Cyclotomic& c, int sign) const {
  return RationalFunction(num_.substitute(c, sign), den_.substitute(c, sign), q_);
}

std::vector<Cyclotomic> RationalFunction::expand(int lo, int hi) const {
  std::vector<Cyclotomic> out(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
  if (is_zero() || hi < lo) return out;
  // 1/D as a power series (D(0) = 1), then shift by the numerator.
  const int start = num_.low();
  const int len = hi - start + 1;
  if (len <= 0) return out;
  std::vector<Cyclotomic> inv(static_cast<std::size_t>(len));
  inv[0] = Cyclotomic(1L);
  for (int k = 1; k < len; ++k) {
    Cyclotomic acc;
    for (int j = 1; j <= std::min(k, den_.high()); ++j) {
      const Cyclotomic dj = den_.coeff(j);
      if (!dj.is_zero()) acc -= dj * inv[static_cast<std::size_t>(k - j)];
    }
    inv[static_cast<std::size_t>(k)] = acc;
  }
  for (int k = std::max(lo, start); k <= hi; ++k) {
    Cyclotomic acc;
    for (int e = start; e <= std::min(num_.high(), k); ++e) {
      const Cyclotomic ne = num_.coeff(e);
      if (!ne.is_zero()) acc += ne * inv[static_cast<std::size_t>(k - e)];
    }
    out[static_cast<std::size_t>(k - lo)] = acc;
  }
  return out;
}

namespace {
std::complex<double> eval_laurent(const LaurentPoly& p, std::complex<double> t) {
  std::complex<double> acc = 0.0;
  for (int e = p.high(); !p.is_zero() && e >= p.low(); --e) acc = acc * t + p.coeff(e).embed();
  if (!p.is_zero()) acc *= std::pow(t, p.low());
  return acc;
}
}  // namespace

std::complex<double> RationalFunction::evaluate(std::complex<double> t) const {
  return eval_laurent(num_, t) / eval_laurent(den_, t);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  q_ = merge_base(o.q_);
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += o * RationalFunction(Cyclotomic(-1L));
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  q_ = merge_base(o.q_);
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPoly(Cyclotomic(1L))) return num_.to_string();
  return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
}

bool ratfun_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (int e = p.low(); !p.is_zero() && e <= p.high(); ++e) {
    const Cyclotomic c = p.coeff(e);
    if (!c.is_zero()) out[std::to_string(e)] = c.to_string();
  }
  return out;
}

nlohmann::json to_json(const RationalFunction& r) {
  return {{"num", to_json(r.numerator())},
          {"den", to_json(r.denominator())},
          {"base_q", r.base()},
          {"variable", "T=q^(-s/2)"},
          {"text", r.to_string()}};
}

}  // namespace gj

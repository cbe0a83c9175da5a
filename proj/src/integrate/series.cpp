#include "gj/integrate/series.hpp"

#include "gj/error.hpp"
#include "gj/scalars/recurrence.hpp"

namespace gj {

Cyclotomic ShellSeries::at(int k) const {
  if (k < k_lo || k > k_hi()) return Cyclotomic();
  return entries[static_cast<std::size_t>(k - k_lo)];
}

int ShellSeries::first_nonzero() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].is_zero()) return k_lo + static_cast<int>(i);
  return k_hi() + 1;
}

int rationalize_window(const RationalizeOptions& opt) {
  return opt.head_max + 2 * opt.r_max + opt.confirm + opt.k_extra;
}

namespace {

// X^e -> T^{w e}
LaurentPoly spread(const LaurentPoly& p, int w) {
  LaurentPoly out;
  for (int e = p.low(); !p.is_zero() && e <= p.high(); ++e) {
    Cyclotomic c = p.coeff(e);
    if (!c.is_zero()) out += LaurentPoly::monomial(c, w * e);
  }
  return out;
}

}  // namespace

RationalFunction rationalize(const ShellSeries& s, const RationalizeOptions& opt) {
  if (s.weight == 0) throw EngineError(ErrorKind::InvalidInput, "rationalize: weight 0");
  int k_first = s.first_nonzero();
  if (k_first > s.k_hi()) return RationalFunction(Cyclotomic(), s.q);

  int fit_confirm = opt.confirm + opt.k_extra;
  int need = 2 * opt.r_max + fit_confirm;
  for (int k0 = k_first; k0 <= k_first + opt.head_max; ++k0) {
    int len = s.k_hi() - k0 + 1;
    if (len < need) break;
    std::vector<Cyclotomic> tail(s.entries.begin() + (k0 - s.k_lo), s.entries.end());
    auto rec = find_recurrence(tail, opt.r_max, fit_confirm);
    if (!rec) continue;

    auto [P, C] = generating_function(*rec, tail);
    LaurentPoly head;
    for (int k = k_first; k < k0; ++k) {
      Cyclotomic c = s.at(k);
      if (!c.is_zero()) head += LaurentPoly::monomial(c, s.weight * k);
    }
    LaurentPoly Ct = spread(C, s.weight);
    LaurentPoly num = head * Ct + spread(P, s.weight).shifted(s.weight * k0);
    return RationalFunction(num, Ct, s.q);
  }
  throw EngineError(ErrorKind::NoRecurrence,
                    "no recurrence of order <= " + std::to_string(opt.r_max) + " on shells [" +
                        std::to_string(k_first) + ", " + std::to_string(s.k_hi()) + "]");
}

}  // namespace gj

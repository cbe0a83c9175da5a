#include <cmath>

#include "gj/error.hpp"
#include "gj/integrate/shell.hpp"

namespace gj {

namespace {

struct ReferenceWalk {
  const SchwartzBruhatFn& f;
  const MultiplicativeCharacter& chi;
  int n, p, ms, k_hi;
  long long budget;
  ShellValues& out;
  BigRational scale;  // p^{-ms}

  void refine(PAdicMatrix& C, int N, const Cyclotomic& value) {
    if (++out.cells > budget) throw EngineError(ErrorKind::BudgetExceeded, "reference refinement exceeded the budget");
    const BigRational det = C.det();
    const int v = det == 0 ? kInfiniteValuation : valuation(det, p);
    if (v < N) {
      const int k = v - n * ms;
      if (k > k_hi) return;
      if (N - v >= chi.conductor()) {
        const BigRational vol = prime_power(p, -n * n * (N - ms));
        const Cyclotomic chi_det = char_eval(chi, det * prime_power(p, -n * ms));
        out.values[static_cast<std::size_t>(k - out.k_lo)] += value * chi_det * Cyclotomic(vol);
        return;
      }
    } else if (N - n * ms > k_hi) {
      return;
    }
    const int nn = n * n;
    const long long count = int_pow(p, nn);
    const BigRational step = prime_power(p, N);
    for (long long idx = 0; idx < count; ++idx) {
      PAdicMatrix D = C;
      long long r = idx;
      for (int e = 0; e < nn; ++e) {
        D(e / n, e % n) += step * static_cast<long>(r % p);
        r /= p;
      }
      refine(D, N + 1, value);
    }
  }
};

}  // namespace

ShellValues shell_values_reference(const SchwartzBruhatFn& f, const MultiplicativeCharacter& chi, int k_hi,
                                   const KernelOptions& opt) {
  const int n = f.n(), p = f.prime(), nn = n * n;
  ShellValues out;
  if (f.empty()) {
    out.k_lo = k_hi + 1;
    return out;
  }
  const int ms = f.support_exponent();
  if (ms > 1'000'000) throw EngineError(ErrorKind::InvalidInput, "shell integrand is not compactly supported");
  out.k_lo = -n * ms;
  if (k_hi < out.k_lo) return out;
  out.values.assign(static_cast<std::size_t>(k_hi - out.k_lo + 1), Cyclotomic());
  const int ell = std::max(f.constancy_level(), -ms);
  const int N = ell + ms;
  if (std::pow(static_cast<double>(p), static_cast<double>(nn) * N) > static_cast<double>(opt.hard_budget)) {
    throw EngineError(ErrorKind::BudgetExceeded, "reference enumeration exceeds the budget");
  }
  ReferenceWalk walk{f, chi, n, p, ms, k_hi, opt.hard_budget, out, prime_power(p, -ms)};
  const long long per = int_pow(p, N);
  const long long count = int_pow(per, nn);
  for (long long idx = 0; idx < count; ++idx) {
    PAdicMatrix C(n);
    long long r = idx;
    for (int e = 0; e < nn; ++e) {
      C(e / n, e % n) = static_cast<long>(r % per);
      r /= per;
    }
    const Cyclotomic value = evaluate(f, C.scaled(walk.scale));
    if (value.is_zero()) continue;
    walk.refine(C, N, value);
  }
  return out;
}

}  // namespace gj

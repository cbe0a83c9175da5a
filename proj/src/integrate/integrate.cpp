#include "gj/integrate/integrate.hpp"

#include <climits>
#include <cmath>
#include <string>

#include "gj/error.hpp"

namespace gj {

void IntegrationConfig::validate() const {
  if (m_start > m_max) throw EngineError(ErrorKind::InvalidInput, "m_start > m_max");
  if (m_confirm < 1 || confirm < 1 || k_extra < 0 || r_max < 0 || zero_window < 0 || extensions < 0)
    throw EngineError(ErrorKind::InvalidInput, "integration windows must be >= 1");
  if (hard_budget < 1) throw EngineError(ErrorKind::InvalidInput, "hard_budget must be positive");
}

int IntegrationConfig::zero_window_for(int n, int conductor) const {
  return zero_window > 0 ? zero_window : n * (conductor + 1) + 2;
}

RationalizeOptions IntegrationConfig::rationalize_options(int n, int conductor) const {
  RationalizeOptions o;
  o.r_max = r_max > 0 ? r_max : n;
  o.confirm = confirm;
  o.k_extra = k_extra;
  o.head_max = zero_window_for(n, conductor);
  return o;
}

void Windows::merge(const Windows& o) {
  if (cells == 0 && k_lo == 0 && k_hi == 0) {
    *this = o;
    return;
  }
  k_lo = std::min(k_lo, o.k_lo);
  k_hi = std::max(k_hi, o.k_hi);
  m_lo = std::min(m_lo, o.m_lo);
  m_hi = std::max(m_hi, o.m_hi);
  cells += o.cells;
}

Cyclotomic integrate_region(const Integrand& f, int n, int p, const std::vector<CosetRegion>& region,
                            std::optional<int> level_hint, long long budget) {
  if (!level_hint) throw EngineError(ErrorKind::LevelUncertified, "integrand carries no level bound");
  const int nn = n * n;
  double total = 0;
  for (const auto& r : region) {
    int depth = std::max(*level_hint, r.level) - r.level;
    total += std::pow(static_cast<double>(p), static_cast<double>(nn) * depth);
  }
  if (total > static_cast<double>(budget))
    throw EngineError(ErrorKind::BudgetExceeded, "integrate_region needs " + std::to_string(total) + " cells");

  Cyclotomic sum;
  for (const auto& r : region) {
    const int L = std::max(*level_hint, r.level);
    const int depth = L - r.level;
    long long side = 1;
    for (int i = 0; i < depth; ++i) side *= p;
    const BigRational step = prime_power(p, r.level);
    std::vector<long long> digits(static_cast<std::size_t>(nn), 0);
    Cyclotomic part;
    while (true) {
      PAdicMatrix x = r.center;
      for (int e = 0; e < nn; ++e) x(e / n, e % n) += step * BigRational(static_cast<long>(digits[static_cast<std::size_t>(e)]));
      part += f(x);
      int e = 0;
      while (e < nn && ++digits[static_cast<std::size_t>(e)] == side) digits[static_cast<std::size_t>(e++)] = 0;
      if (e == nn) break;
    }
    sum += part * Cyclotomic(prime_power(p, -L * nn));
  }
  return sum;
}

Cyclotomic integrate_region(const SchwartzBruhatFn& f, const std::vector<CosetRegion>& region, long long budget) {
  auto eval = [&f](const PAdicMatrix& x) { return evaluate(f, x); };
  int level = f.empty() ? INT_MIN / 2 : f.constancy_level();
  return integrate_region(eval, f.n(), f.prime(), region, level, budget);
}

FunctionFamily fixed_family(const SchwartzBruhatFn& f) {
  return [f](int) { return f; };
}

FunctionFamily whole_space(const PAdicMatrix& modulation, int p, const Cyclotomic& coeff) {
  return [modulation, p, coeff](int m) {
    const int n = modulation.size();
    return SchwartzBruhatFn(n, p, {SchwartzTerm{coeff, PAdicMatrix(n), -m, modulation}});
  };
}

ShellValues compute_shells(const SchwartzBruhatFn& f, const MultiplicativeCharacter& chi, int k_hi,
                           const IntegrationConfig& cfg) {
  return cfg.reference ? shell_values_reference(f, chi, k_hi, cfg.kernel())
                       : shell_values(f, chi, k_hi, cfg.kernel());
}

namespace {

Cyclotomic to_multiplicative(const Cyclotomic& additive, int p, int n, int k) {
  return additive * Cyclotomic(prime_power(p, k * n));
}

bool agree(const ShellValues& a, const ShellValues& b, int k_hi) {
  const int lo = std::min(a.k_lo, b.k_lo);
  for (int k = lo; k <= k_hi; ++k)
    if (a.at(k) != b.at(k)) return false;
  return true;
}

std::string window_text(int k_lo, int k_hi, int m_lo, int m_hi) {
  return "k in [" + std::to_string(k_lo) + ", " + std::to_string(k_hi) + "], m in [" + std::to_string(m_lo) +
         ", " + std::to_string(m_hi) + "]";
}

}  // namespace

Cyclotomic shell_integral(const FunctionFamily& f, const MultiplicativeCharacter& chi, int k, int m,
                          const IntegrationConfig& cfg) {
  SchwartzBruhatFn g = f(m).truncated(m);
  ShellValues sv = compute_shells(g, chi, k, cfg);
  return to_multiplicative(sv.at(k), g.prime(), g.n(), k);
}

Cyclotomic stabilized_shell_integral(const FunctionFamily& f, const MultiplicativeCharacter& chi, int k,
                                     const IntegrationConfig& cfg, Windows* windows) {
  cfg.validate();
  std::optional<Cyclotomic> prev;
  int same = 0;
  long long cells = 0;
  for (int m = cfg.m_start; m <= cfg.m_max; ++m) {
    SchwartzBruhatFn g = f(m).truncated(m);
    ShellValues sv = compute_shells(g, chi, k, cfg);
    cells += sv.cells;
    Cyclotomic v = sv.at(k);
    same = (prev && *prev == v) ? same + 1 : 0;
    prev = v;
    if (same >= cfg.m_confirm) {
      if (windows) windows->merge({k, k, cfg.m_start, m, cells});
      return to_multiplicative(v, g.prime(), g.n(), k);
    }
  }
  throw EngineError(ErrorKind::NoStabilization, "shell integral did not stabilize, " +
                                                    window_text(k, k, cfg.m_start, cfg.m_max));
}

ShellValues stabilized_shells(const FunctionFamily& f, const MultiplicativeCharacter& chi, int k_hi,
                              int zero_window, const IntegrationConfig& cfg, Windows* windows) {
  cfg.validate();
  std::optional<ShellValues> prev;
  int same = 0;
  long long cells = 0;
  bool window_missing = false;
  int k_lo_last = 0;
  for (int m = cfg.m_start; m <= cfg.m_max; ++m) {
    SchwartzBruhatFn raw = f(m);
    SchwartzBruhatFn g = raw.truncated(m);
    ShellValues sv = compute_shells(g, chi, k_hi, cfg);
    cells += sv.cells;
    same = (prev && agree(sv, *prev, k_hi)) ? same + 1 : 0;
    prev = sv;
    k_lo_last = sv.k_lo;

    int k_first = sv.k_lo;
    while (k_first <= k_hi && sv.at(k_first).is_zero()) ++k_first;
    // Support strictly inside the truncation ball certifies the zeros below k_lo.
    const bool certified = raw.empty() || raw.support_exponent() < m;
    // An all-zero range proves nothing without a certified support.
    const bool window_ok = certified || (k_first <= k_hi && k_first - sv.k_lo >= zero_window);
    window_missing = !window_ok;
    if (same >= cfg.m_confirm && window_ok) {
      if (windows) windows->merge({sv.k_lo, k_hi, cfg.m_start, m, cells});
      sv.cells = cells;
      return sv;
    }
  }
  const std::string where = window_text(k_lo_last, k_hi, cfg.m_start, cfg.m_max);
  if (same >= cfg.m_confirm && window_missing)
    throw EngineError(ErrorKind::InfiniteLowerSupport, "no zero window below the first shell, " + where);
  throw EngineError(ErrorKind::NoStabilization, "shells did not stabilize, " + where);
}

RationalFunction rationalize_growing(const std::function<ShellSeries(int k_hi)>& build, int k_hi0,
                                     const RationalizeOptions& opt, int extensions) {
  int k_hi = k_hi0;
  for (int attempt = 0;; ++attempt) {
    ShellSeries s = build(k_hi);
    try {
      return rationalize(s, opt);
    } catch (const EngineError& e) {
      if (e.kind() != ErrorKind::NoRecurrence || attempt >= extensions) throw;
    }
    k_hi += rationalize_window(opt);
  }
}

}  // namespace gj

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gj/integrate/series.hpp"
#include "gj/integrate/shell.hpp"

namespace gj {

struct IntegrationConfig {
  int m_start = 0;
  int m_max = 10;
  int m_confirm = 2;
  int r_max = 0;        // 0: use n
  int confirm = 3;
  int k_extra = 2;
  int zero_window = 0;  // 0: n * (conductor + 1) + 2
  int extensions = 2;   // how often the shell window may grow on NoRecurrence
  long long hard_budget = 10'000'000;
  int threads = 0;
  bool reference = false;  // serial reference kernel

  void validate() const;
  KernelOptions kernel() const { return {hard_budget, threads}; }
  RationalizeOptions rationalize_options(int n, int conductor) const;
  int zero_window_for(int n, int conductor) const;
};

/// Which (k, m) windows an answer rests on.
struct Windows {
  int k_lo = 0, k_hi = 0;
  int m_lo = 0, m_hi = 0;
  long long cells = 0;

  void merge(const Windows& o);
};

struct CosetRegion {
  PAdicMatrix center;
  int level = 0;
};

using Integrand = std::function<Cyclotomic(const PAdicMatrix&)>;

/// Sum over residue cells at the given level of f(cell) * q^{-level n^2}.
/// Throws LevelUncertified without a level and BudgetExceeded past budget.
Cyclotomic integrate_region(const Integrand& f, int n, int p, const std::vector<CosetRegion>& region,
                            std::optional<int> level_hint, long long budget = 10'000'000);
Cyclotomic integrate_region(const SchwartzBruhatFn& f, const std::vector<CosetRegion>& region,
                            long long budget = 10'000'000);

/// Truncations m -> function supported in p^{-m} M_n(Z_p).
using FunctionFamily = std::function<SchwartzBruhatFn(int m)>;

FunctionFamily fixed_family(const SchwartzBruhatFn& f);
/// x -> coeff * psi(tr(b x)) on all of M_n(Q_p), truncated to p^{-m} M_n(Z_p).
FunctionFamily whole_space(const PAdicMatrix& modulation, int p, const Cyclotomic& coeff = Cyclotomic(1L));

ShellValues compute_shells(const SchwartzBruhatFn& f, const MultiplicativeCharacter& chi, int k_hi,
                           const IntegrationConfig& cfg);

/// int f chi(det) d^x g over {v(det g) = k} inside p^{-m} M_n(Z_p).
Cyclotomic shell_integral(const FunctionFamily& f, const MultiplicativeCharacter& chi, int k, int m,
                          const IntegrationConfig& cfg = {});

/// Raises m until m_confirm consecutive truncations agree.
Cyclotomic stabilized_shell_integral(const FunctionFamily& f, const MultiplicativeCharacter& chi, int k,
                                     const IntegrationConfig& cfg = {}, Windows* windows = nullptr);

/// Additive shell integrals for all k <= k_hi, stabilized in m: agreement over
/// m_confirm increments plus an all-zero window of zero_window shells
/// directly below the first nonzero shell. Values below k_lo are zero.
ShellValues stabilized_shells(const FunctionFamily& f, const MultiplicativeCharacter& chi, int k_hi,
                              int zero_window, const IntegrationConfig& cfg, Windows* windows = nullptr);

/// Repeatedly builds a series on [.., k_hi] and rationalizes it, widening
/// k_hi when the recurrence fit runs out of shells.
RationalFunction rationalize_growing(const std::function<ShellSeries(int k_hi)>& build, int k_hi0,
                                     const RationalizeOptions& opt, int extensions);

}  // namespace gj

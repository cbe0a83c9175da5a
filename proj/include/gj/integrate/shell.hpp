#pragma once

#include <vector>

#include "gj/schwartz/schwartz.hpp"
#include "gj/zeta/character.hpp"

namespace gj {

/// Additive shell integrals I_k = int_{v(det g) = k} f(g) chi(det g) dg for
/// k_lo <= k <= k_hi, where k_lo = -n * (support exponent of f).
struct ShellValues {
  int k_lo = 0;
  std::vector<Cyclotomic> values;
  long long cells = 0;

  int k_hi() const { return k_lo + static_cast<int>(values.size()) - 1; }
  Cyclotomic at(int k) const;
};

struct KernelOptions {
  long long hard_budget = 10'000'000;
  int threads = 0;  // 0 keeps the OpenMP default
};

/// Smith-class bucketed kernel, OpenMP-parallel over cells.
ShellValues shell_values(const SchwartzBruhatFn& f, const MultiplicativeCharacter& chi, int k_hi,
                         const KernelOptions& opt = {});

/// Serial reference: pointwise evaluation on cells and exact determinants
/// under recursive refinement. Slow; kept for cross-checking.
ShellValues shell_values_reference(const SchwartzBruhatFn& f, const MultiplicativeCharacter& chi, int k_hi,
                                   const KernelOptions& opt = {});

}  // namespace gj

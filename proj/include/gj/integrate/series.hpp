#pragma once

#include <vector>

#include "gj/scalars/rational_function.hpp"

namespace gj {

/// Exact shell coefficients c_k for k_lo <= k <= k_hi, standing for
/// sum_k c_k T^{weight * k}. Shells outside the range are zero (below) or
/// unknown (above).
struct ShellSeries {
  int k_lo = 0;
  std::vector<Cyclotomic> entries;
  int weight = 2;
  int q = 0;

  int k_hi() const { return k_lo + static_cast<int>(entries.size()) - 1; }
  Cyclotomic at(int k) const;
  /// First nonzero shell, or k_hi() + 1 if all vanish.
  int first_nonzero() const;
};

struct RationalizeOptions {
  int r_max = 1;
  int confirm = 3;
  int k_extra = 2;
  int head_max = 4;  // shells summed literally before the recurrence takes over
};

/// Head summed literally, tail closed by the minimal recurrence of order
/// <= r_max. Throws NoRecurrence when no tail start within head_max fits.
RationalFunction rationalize(const ShellSeries& s, const RationalizeOptions& opt);

/// Number of shells past the first nonzero one that rationalize wants.
int rationalize_window(const RationalizeOptions& opt);

}  // namespace gj

#pragma once

#include <optional>
#include <vector>

#include "gj/scalars/laurent.hpp"

namespace gj {

/// s[i] = sum_{j=1..order} c[j-1] * s[i-j].
struct Recurrence {
  std::vector<Cyclotomic> coefficients;
  int order() const { return static_cast<int>(coefficients.size()); }
};

/// Minimal linear recurrence of order <= r_max over the field, fitted on the
/// first size-confirm terms and checked on the last confirm. nullopt if none.
std::optional<Recurrence> find_recurrence(const std::vector<Cyclotomic>& seq, int r_max, int confirm);

/// Throwing variant: EngineError(NoRecurrence).
Recurrence detect_recurrence(const std::vector<Cyclotomic>& seq, int r_max, int confirm);

/// Generating function sum_i seq[i] X^i = P(X) / C(X) with C = 1 - sum c_j X^j,
/// using the first order terms of seq. Returns {P, C}.
std::pair<LaurentPoly, LaurentPoly> generating_function(const Recurrence& rec, const std::vector<Cyclotomic>& seq);

}  // namespace gj

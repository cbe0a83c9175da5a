#pragma once

#include <array>
#include <cstdint>

namespace gj {

inline constexpr int kMaxN = 4;

/// Smith form of an integer matrix modulo p^N: A = U diag(p^{e_i}) V with
/// U, V invertible over Z/p^N. Exponents ascend; e_i = N marks a zero
/// diagonal entry. det(U) det(V) is returned modulo p^c.
struct SmithClass {
  std::array<int, kMaxN> exps{};
  long long lambda = 0;
};

/// a holds n*n entries in [0, p^N), row major; it is destroyed.
SmithClass smith_mod(long long* a, int n, int p, int N, long long pN, long long pc);

long long inverse_mod(long long a, long long m);

}  // namespace gj

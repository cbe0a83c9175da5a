#include "gj/integrate/smith.hpp"

#include <tuple>
#include <utility>

namespace gj {

namespace {

inline long long mulm(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

}  // namespace

long long inverse_mod(long long a, long long m) {
  if (m == 1) return 0;
  long long g = m, x = 0, x1 = 1, r = a % m;
  if (r < 0) r += m;
  while (r != 0) {
    const long long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return ((x % m) + m) % m;
}

SmithClass smith_mod(long long* a, int n, int p, int N, long long pN, long long pc) {
  SmithClass out;
  long long delta = 1 % pc;  // det of the applied row and column operations
  auto at = [&](int i, int j) -> long long& { return a[i * n + j]; };
  for (int s = 0; s < n; ++s) {
    int best = N, bi = -1, bj = -1;
    for (int i = s; i < n; ++i)
      for (int j = s; j < n; ++j) {
        long long x = at(i, j);
        if (x == 0) continue;
        int v = 0;
        while (x % p == 0) {
          x /= p;
          ++v;
        }
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) {
      for (int t = s; t < n; ++t) out.exps[static_cast<std::size_t>(t)] = N;
      break;
    }
    out.exps[static_cast<std::size_t>(s)] = best;
    if (bi != s) {
      for (int j = 0; j < n; ++j) std::swap(at(bi, j), at(s, j));
      delta = (pc - delta) % pc;
    }
    if (bj != s) {
      for (int i = 0; i < n; ++i) std::swap(at(i, bj), at(i, s));
      delta = (pc - delta) % pc;
    }
    long long pe = 1;
    for (int t = 0; t < best; ++t) pe *= p;
    // pivot = p^e u; scale row s by u^{-1} modulo p^{N-e} (enough for all entries of the row)
    const long long mod_u = pN / pe;
    const long long u = (at(s, s) / pe) % mod_u;
    const long long uinv = inverse_mod(u, mod_u);
    for (int j = s; j < n; ++j) at(s, j) = mulm(at(s, j), uinv, pN);
    if (pc > 1) delta = mulm(delta, uinv % pc, pc);
    // clear column s below and row s to the right
    for (int i = s + 1; i < n; ++i) {
      const long long f = at(i, s) / pe;
      if (f == 0) continue;
      for (int j = s; j < n; ++j) at(i, j) = ((at(i, j) - mulm(f, at(s, j), pN)) % pN + pN) % pN;
    }
    for (int j = s + 1; j < n; ++j) {
      const long long f = at(s, j) / pe;
      if (f == 0) continue;
      for (int i = s; i < n; ++i) at(i, j) = ((at(i, j) - mulm(f, at(i, s), pN)) % pN + pN) % pN;
    }
  }
  out.lambda = pc > 1 ? inverse_mod(delta, pc) : 0;
  return out;
}

}  // namespace gj

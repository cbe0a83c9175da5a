#include <omp.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <unordered_map>

#include "gj/error.hpp"
#include "gj/integrate/det_profile.hpp"
#include "gj/integrate/shell.hpp"
#include "gj/integrate/smith.hpp"

namespace gj {

Cyclotomic ShellValues::at(int k) const {
  if (k < k_lo || k > k_hi()) return {};
  return values[static_cast<std::size_t>(k - k_lo)];
}

namespace {

struct Bucket {
  DetProfile::Exps exps{};
  long long lambda = 0;
  long long phase = 0;
  bool operator==(const Bucket& o) const { return exps == o.exps && lambda == o.lambda && phase == o.phase; }
  bool operator<(const Bucket& o) const {
    if (exps != o.exps) return exps < o.exps;
    if (lambda != o.lambda) return lambda < o.lambda;
    return phase < o.phase;
  }
};

struct BucketHash {
  std::size_t operator()(const Bucket& b) const {
    std::size_t h = static_cast<std::size_t>(b.lambda) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::size_t>(b.phase);
    for (int e : b.exps) h = h * 1000003u + static_cast<std::size_t>(e);
    return h;
  }
};

}  // namespace

/// Per-term layout shared by the kernel: cells c = a + p^k Y, Y mod p^{ell-k},
/// scaled to integers C = p^ms c mod p^N.
struct TermLayout {
  int ms = 0, ell = 0, N = 0, depth = 0, D = 0;
  long long pN = 1, pD = 1, per = 1, count = 1, stride = 1;
  std::vector<long long> base, w;
  Cyclotomic c0;
};

TermLayout layout_term(const SchwartzTerm& t, int n, int p) {
  TermLayout L;
  const int va = t.center.valuation(p);
  L.ms = -t.level;
  if (va != kInfiniteValuation) L.ms = std::max(L.ms, -va);
  const int vb = t.modulation.valuation(p);
  L.ell = t.level;
  if (vb != kInfiniteValuation) L.ell = std::max(L.ell, -vb);
  L.N = L.ell + L.ms;
  L.depth = L.ell - t.level;
  const double bits = std::log2(static_cast<double>(p));
  if (static_cast<double>(L.N) * bits > 60.0 || static_cast<double>(L.depth) * n * n * bits > 60.0) {
    throw EngineError(ErrorKind::BudgetExceeded, "cell resolution exceeds 64-bit residues");
  }
  L.pN = int_pow(p, L.N);
  L.per = int_pow(p, L.depth);
  L.count = int_pow(L.per, n * n);
  L.stride = int_pow(p, L.ms + t.level) % L.pN;
  L.D = vb == kInfiniteValuation ? 0 : std::max(0, -(vb + t.level));
  L.pD = int_pow(p, L.D);
  const int nn = n * n;
  L.base.resize(static_cast<std::size_t>(nn));
  L.w.resize(static_cast<std::size_t>(nn));
  for (int e = 0; e < nn; ++e) {
    const BigRational scaled = t.center(e / n, e % n) * prime_power(p, L.ms);
    L.base[static_cast<std::size_t>(e)] = L.N == 0 ? 0 : residue_mod_prime_power(scaled, p, L.N).get_si();
    const BigRational bji = t.modulation(e % n, e / n) * prime_power(p, t.level + L.D);
    L.w[static_cast<std::size_t>(e)] = L.D == 0 ? 0 : residue_mod_prime_power(bji, p, L.D).get_si();
  }
  L.c0 = t.coeff * psi_value(trace_product(t.modulation, t.center), p);
  return L;
}

ShellValues shell_values(const SchwartzBruhatFn& f, const MultiplicativeCharacter& chi, int k_hi,
                         const KernelOptions& opt) {
  const int n = f.n(), p = f.prime(), nn = n * n;
  if (chi.prime() != p) throw EngineError(ErrorKind::InvalidInput, "character and function over different primes");
  ShellValues out;
  if (f.empty()) {
    out.k_lo = k_hi + 1;
    return out;
  }
  const int ms_all = f.support_exponent();
  if (ms_all > 1'000'000) throw EngineError(ErrorKind::InvalidInput, "shell integrand is not compactly supported");
  out.k_lo = -n * ms_all;
  if (k_hi < out.k_lo) return out;
  out.values.assign(static_cast<std::size_t>(k_hi - out.k_lo + 1), Cyclotomic());

  std::vector<TermLayout> layouts;
  double total = 0;
  for (const auto& t : f.terms()) {
    layouts.push_back(layout_term(t, n, p));
    total += std::pow(static_cast<double>(p), static_cast<double>(nn) * layouts.back().depth);
  }
  if (total > static_cast<double>(opt.hard_budget)) {
    throw EngineError(ErrorKind::BudgetExceeded, "shell enumeration needs " + std::to_string(static_cast<long long>(total)) +
                                                     " cells, budget " + std::to_string(opt.hard_budget));
  }
  int ms_max = INT_MIN;
  for (const auto& L : layouts) ms_max = std::max(ms_max, L.ms);
  const int vmax = k_hi + n * ms_max;
  if (vmax < 0) return out;
  const int c = chi.conductor();
  const long long pc = chi.modulus();
  DetProfile profile(p, n, c, vmax);

  std::vector<Cyclotomic> chi_p(out.values.size());
  for (int k = out.k_lo; k <= k_hi; ++k) chi_p[static_cast<std::size_t>(k - out.k_lo)] = chi.value_at_p().pow(k);

  if (opt.threads > 0) omp_set_num_threads(opt.threads);

  for (std::size_t ti = 0; ti < layouts.size(); ++ti) {
    const TermLayout& L = layouts[ti];
    std::map<Bucket, long long> merged;
#pragma omp parallel
    {
      std::unordered_map<Bucket, long long, BucketHash> local;
      std::vector<long long> a(static_cast<std::size_t>(nn));
#pragma omp for schedule(static)
      for (long long idx = 0; idx < L.count; ++idx) {
        long long r = idx, phase = 0;
        for (int e = 0; e < nn; ++e) {
          const long long y = r % L.per;
          r /= L.per;
          a[static_cast<std::size_t>(e)] = static_cast<long long>(
              (static_cast<__int128>(L.base[static_cast<std::size_t>(e)]) + static_cast<__int128>(L.stride) * y) % L.pN);
          if (L.D > 0) phase = (phase + static_cast<long long>(static_cast<__int128>(L.w[static_cast<std::size_t>(e)]) * y % L.pD)) % L.pD;
        }
        const SmithClass sc = smith_mod(a.data(), n, p, L.N, L.pN, pc);
        Bucket b;
        for (int i = 0; i < n; ++i) b.exps[static_cast<std::size_t>(i)] = sc.exps[static_cast<std::size_t>(i)];
        b.lambda = sc.lambda;
        b.phase = phase;
        ++local[b];
      }
#pragma omp critical
      for (const auto& [b, cnt] : local) merged[b] += cnt;
    }
    out.cells += L.count;

    // Fold phases: per (exps, lambda) a group-ring vector of counts.
    std::map<std::pair<DetProfile::Exps, long long>, std::vector<BigRational>> classes;
    for (const auto& [b, cnt] : merged) {
      auto& g = classes[{b.exps, b.lambda}];
      if (g.empty()) g.assign(static_cast<std::size_t>(L.pD), BigRational(0));
      g[static_cast<std::size_t>(b.phase)] += static_cast<long>(cnt);
    }
    const Cyclotomic scale = L.c0 * Cyclotomic(prime_power(p, -L.ell * nn));
    for (auto& [key, g] : classes) {
      const DetProfile::Hist& h = profile.get(key.first, L.N);
      const Cyclotomic s = scale * Cyclotomic::from_group_ring(p, L.D, std::move(g)) * chi.unit_value(key.second);
      for (int k = out.k_lo; k <= k_hi; ++k) {
        const int v = k + n * L.ms;
        if (v < 0 || v > vmax) continue;
        Cyclotomic x;
        for (long long u = 0; u < pc; ++u) {
          const BigRational& m = h[static_cast<std::size_t>(v * pc + u)];
          if (m != 0) x += Cyclotomic(m) * chi.unit_value(u);
        }
        if (x.is_zero()) continue;
        out.values[static_cast<std::size_t>(k - out.k_lo)] += s * x * chi_p[static_cast<std::size_t>(k - out.k_lo)];
      }
    }
  }
  return out;
}

}  // namespace gj

#include "gj/integrate/det_profile.hpp"

#include <algorithm>

#include "gj/error.hpp"
#include "gj/scalars/cyclotomic.hpp"

namespace gj {

DetProfile::DetProfile(int p, int n, int c, int vmax)
    : p_(p), n_(n), c_(c), vmax_(vmax), pc_(int_pow(p, c)), cell_mass_(prime_power(p, -n * n)) {
  if (n < 1 || n > kMaxN) throw EngineError(ErrorKind::InvalidInput, "matrix size out of range");
}

const DetProfile::Hist& DetProfile::get(Exps exps, int L) {
  for (int i = 0; i < n_; ++i) exps[static_cast<std::size_t>(i)] = std::min(exps[static_cast<std::size_t>(i)], L);
  for (int i = n_; i < kMaxN; ++i) exps[static_cast<std::size_t>(i)] = 0;
  std::sort(exps.begin(), exps.begin() + n_);
  const auto key = std::make_pair(exps, L);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  Hist h = compute(exps, L);
  return memo_.emplace(key, std::move(h)).first->second;
}

DetProfile::Hist DetProfile::compute(const Exps& exps, int L) {
  const auto slots = static_cast<std::size_t>((vmax_ + 1) * pc_);
  if (L == 0) return root();
  const int sigma = exps[0];
  if (sigma >= 1) {
    // D + p^L Y = p^sigma (D / p^sigma + p^{L - sigma} Y)
    Exps reduced = exps;
    for (int i = 0; i < n_; ++i) reduced[static_cast<std::size_t>(i)] -= sigma;
    const Hist& inner = get(reduced, L - sigma);
    Hist out(slots, BigRational(0));
    const int shift = n_ * sigma;
    for (int v = 0; v + shift <= vmax_; ++v)
      for (long long u = 0; u < pc_; ++u)
        out[static_cast<std::size_t>((v + shift) * pc_ + u)] = inner[static_cast<std::size_t>(v * pc_ + u)];
    return out;
  }
  int sum = 0;
  for (int i = 0; i < n_; ++i) sum += exps[static_cast<std::size_t>(i)];
  Hist out(slots, BigRational(0));
  if (sum > vmax_) return out;
  const int top = exps[static_cast<std::size_t>(n_ - 1)];
  if (top < L && L - top >= std::max(c_, 1)) {
    out[static_cast<std::size_t>(sum * pc_ + 1 % pc_)] = 1;
    return out;
  }
  add_children(exps, L, false, out);
  return out;
}

void DetProfile::add_children(const Exps& exps, int L, bool skip_zero, Hist& out) {
  const int nn = n_ * n_;
  const long long pL = int_pow(p_, L);
  const long long pN = pL * p_;
  const long long count = int_pow(p_, nn);
  std::vector<long long> a(static_cast<std::size_t>(nn));
  for (long long idx = skip_zero ? 1 : 0; idx < count; ++idx) {
    long long r = idx;
    for (int e = 0; e < nn; ++e) {
      const long long y = r % p_;
      r /= p_;
      const int i = e / n_, j = e % n_;
      long long d = 0;
      if (i == j && exps[static_cast<std::size_t>(i)] < L) d = int_pow(p_, exps[static_cast<std::size_t>(i)]);
      a[static_cast<std::size_t>(e)] = (d + y * pL) % pN;
    }
    const SmithClass sc = smith_mod(a.data(), n_, p_, L + 1, pN, pc_);
    Exps ce{};
    for (int i = 0; i < n_; ++i) ce[static_cast<std::size_t>(i)] = sc.exps[static_cast<std::size_t>(i)];
    const Hist& child = get(ce, L + 1);
    for (int v = 0; v <= vmax_; ++v)
      for (long long u = 0; u < pc_; ++u) {
        const BigRational& m = child[static_cast<std::size_t>(v * pc_ + u)];
        if (m == 0) continue;
        const long long w = pc_ == 1 ? 0 : static_cast<long long>(static_cast<__int128>(sc.lambda) * u % pc_);
        out[static_cast<std::size_t>(v * pc_ + w)] += m * cell_mass_;
      }
  }
}

DetProfile::Hist DetProfile::root() {
  // H = R + p^{-n^2} shift_n(H), R from the nonzero residues mod p.
  const auto slots = static_cast<std::size_t>((vmax_ + 1) * pc_);
  Hist r(slots, BigRational(0));
  add_children(Exps{}, 0, true, r);
  Hist h(slots, BigRational(0));
  for (int v = 0; v <= vmax_; ++v)
    for (long long u = 0; u < pc_; ++u) {
      BigRational x = r[static_cast<std::size_t>(v * pc_ + u)];
      if (v >= n_) x += cell_mass_ * h[static_cast<std::size_t>((v - n_) * pc_ + u)];
      h[static_cast<std::size_t>(v * pc_ + u)] = x;
    }
  return h;
}

}  // namespace gj

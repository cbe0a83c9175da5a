#include "gj/schwartz/schwartz.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>

#include "gj/error.hpp"

namespace gj {

namespace {

bool in_coset(const PAdicMatrix& x, const PAdicMatrix& center, int level, int p) {
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    const BigRational d = x.entries()[i] - center.entries()[i];
    if (d != 0 && valuation(d, p) < level) return false;
  }
  return true;
}

int matrix_val(const PAdicMatrix& m, int p) { return m.valuation(p); }

}  // namespace

SchwartzBruhatFn::SchwartzBruhatFn(int n, int p, std::vector<SchwartzTerm> terms)
    : n_(n), p_(p), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.center.size() != n || t.modulation.size() != n) {
      throw EngineError(ErrorKind::InvalidInput, "term matrix size does not match n");
    }
  }
  std::erase_if(terms_, [](const SchwartzTerm& t) { return t.coeff.is_zero(); });
}

SchwartzBruhatFn SchwartzBruhatFn::ball(int n, int p, int level) {
  return coset(PAdicMatrix(n), p, level);
}

SchwartzBruhatFn SchwartzBruhatFn::coset(const PAdicMatrix& center, int p, int level, const Cyclotomic& coeff) {
  const int n = center.size();
  return SchwartzBruhatFn(n, p, {SchwartzTerm{coeff, center, level, PAdicMatrix(n)}});
}

SchwartzBruhatFn SchwartzBruhatFn::modulated_ball(const PAdicMatrix& modulation, int p, int level) {
  const int n = modulation.size();
  return SchwartzBruhatFn(n, p, {SchwartzTerm{Cyclotomic(1L), PAdicMatrix(n), level, modulation}});
}

int SchwartzBruhatFn::support_exponent() const {
  int ms = INT_MIN / 2;
  for (const auto& t : terms_) {
    ms = std::max(ms, -t.level);
    const int v = matrix_val(t.center, p_);
    if (v != kInfiniteValuation) ms = std::max(ms, -v);
  }
  return ms;
}

int SchwartzBruhatFn::constancy_level() const {
  int L = INT_MIN / 2;
  for (const auto& t : terms_) {
    L = std::max(L, t.level);
    const int v = matrix_val(t.modulation, p_);
    if (v != kInfiniteValuation) L = std::max(L, -v);
  }
  return L;
}

SchwartzBruhatFn SchwartzBruhatFn::truncated(int m) const {
  std::vector<SchwartzTerm> out;
  for (const auto& t : terms_) {
    const int v = matrix_val(t.center, p_);
    if (t.level >= -m) {
      if (v >= -m) out.push_back(t);
    } else if (v >= t.level) {
      out.push_back(SchwartzTerm{t.coeff, PAdicMatrix(n_), -m, t.modulation});
    }
  }
  return SchwartzBruhatFn(n_, p_, std::move(out));
}

SchwartzBruhatFn SchwartzBruhatFn::scaled(const Cyclotomic& c) const {
  std::vector<SchwartzTerm> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return SchwartzBruhatFn(n_, p_, std::move(out));
}

SchwartzBruhatFn& SchwartzBruhatFn::operator+=(const SchwartzBruhatFn& o) {
  if (o.n_ != n_ || o.p_ != p_) throw EngineError(ErrorKind::InvalidInput, "adding Schwartz functions of different shape");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

Cyclotomic evaluate(const SchwartzBruhatFn& f, const PAdicMatrix& x) {
  if (x.size() != f.n()) throw EngineError(ErrorKind::InvalidInput, "evaluation point has wrong size");
  Cyclotomic acc;
  for (const auto& t : f.terms()) {
    if (!in_coset(x, t.center, t.level, f.prime())) continue;
    acc += t.coeff * psi_value(trace_product(t.modulation, x), f.prime());
  }
  return acc;
}

SchwartzBruhatFn canonicalize(const SchwartzBruhatFn& f, long long max_cells) {
  const int n = f.n(), p = f.prime(), nn = n * n;
  if (f.empty()) return f;
  const int L = f.constancy_level();
  // Cells are keyed by p^E x mod p^{L+E}; E leaves room for merging above the support ball.
  const int E = std::max(f.support_exponent(), 0) + 2;
  const int top = L + E;
  if (std::pow(static_cast<double>(p), top) > 4e18 / p) {
    throw EngineError(ErrorKind::BudgetExceeded, "canonicalize refinement too deep");
  }
  const long long modulus = int_pow(p, top);
  long long total = 0;
  for (const auto& t : f.terms()) {
    const double cells = std::pow(static_cast<double>(p), static_cast<double>(nn) * (L - t.level));
    if (cells > static_cast<double>(max_cells) || (total += static_cast<long long>(cells)) > max_cells) {
      throw EngineError(ErrorKind::BudgetExceeded, "canonicalize would enumerate too many cells");
    }
  }
  using Key = std::vector<long long>;
  std::map<Key, Cyclotomic> cells;
  for (const auto& t : f.terms()) {
    const int depth = L - t.level;
    const long long per = int_pow(p, depth);
    const long long count = int_pow(per, nn);
    const long long stride = int_pow(p, t.level + E);
    // psi(tr(b (a + p^k Y))) = psi(tr(ba)) * zeta_{p^D}^{sum w_e y_e}
    const int vb = t.modulation.valuation(p);
    const int D = vb == kInfiniteValuation ? 0 : std::max(0, -(vb + t.level));
    const long long pd = int_pow(p, D);
    Key base(static_cast<std::size_t>(nn));
    std::vector<long long> w(static_cast<std::size_t>(nn), 0);
    for (int e = 0; e < nn; ++e) {
      const BigRational scaled = t.center.entries()[static_cast<std::size_t>(e)] * prime_power(p, E);
      base[static_cast<std::size_t>(e)] = residue_mod_prime_power(scaled, p, top).get_si();
      // entry e = (i, j) pairs with b(j, i)
      const BigRational bji = t.modulation(e % n, e / n) * prime_power(p, t.level + D);
      w[static_cast<std::size_t>(e)] = D == 0 ? 0 : residue_mod_prime_power(bji, p, D).get_si();
    }
    const Cyclotomic c0 = t.coeff * psi_value(trace_product(t.modulation, t.center), p);
    std::vector<Cyclotomic> table(static_cast<std::size_t>(pd));
    for (long long j = 0; j < pd; ++j) table[static_cast<std::size_t>(j)] = c0 * Cyclotomic::root(p, D, j);
    std::vector<long long> digit(static_cast<std::size_t>(nn), 0);
    Key key(static_cast<std::size_t>(nn));
    for (long long idx = 0; idx < count; ++idx) {
      long long r = idx, phase = 0;
      for (int e = 0; e < nn; ++e) {
        const long long d = r % per;
        r /= per;
        key[static_cast<std::size_t>(e)] = static_cast<long long>(
            (static_cast<__int128>(base[static_cast<std::size_t>(e)]) + static_cast<__int128>(stride) * d) % modulus);
        if (D > 0) phase = (phase + static_cast<long long>(static_cast<__int128>(w[static_cast<std::size_t>(e)]) * d % pd)) % pd;
      }
      auto [it, fresh] = cells.try_emplace(key, table[static_cast<std::size_t>(phase)]);
      if (!fresh) it->second += table[static_cast<std::size_t>(phase)];
    }
  }
  // Merge complete sibling families with equal values.
  std::map<std::pair<int, Key>, Cyclotomic> current;
  for (auto& [k, v] : cells)
    if (!v.is_zero()) current.emplace(std::make_pair(L, k), std::move(v));
  const long long family = int_pow(p, nn);
  for (int level = L; !current.empty() && level - 1 + E >= 0; --level) {
    const long long pmod = int_pow(p, level - 1 + E);
    std::map<Key, std::vector<std::map<std::pair<int, Key>, Cyclotomic>::iterator>> parents;
    for (auto it = current.begin(); it != current.end(); ++it) {
      if (it->first.first != level) continue;
      Key parent = it->first.second;
      for (auto& x : parent) x %= pmod;
      parents[parent].push_back(it);
    }
    bool merged = false;
    for (auto& [parent, kids] : parents) {
      if (static_cast<long long>(kids.size()) != family) continue;
      const Cyclotomic v = kids.front()->second;
      if (!std::all_of(kids.begin(), kids.end(), [&](auto& it) { return it->second == v; })) continue;
      for (auto& it : kids) current.erase(it);
      current.emplace(std::make_pair(level - 1, parent), v);
      merged = true;
    }
    if (!merged) break;
  }
  std::vector<SchwartzTerm> out;
  const BigRational unscale = prime_power(p, -E);
  for (const auto& [k, v] : current) {
    std::vector<BigRational> c;
    for (long long x : k.second) c.push_back(BigRational(static_cast<long>(x)) * unscale);
    out.push_back(SchwartzTerm{v, PAdicMatrix(n, std::move(c)), k.first, PAdicMatrix(n)});
  }
  return SchwartzBruhatFn(n, p, std::move(out));
}

SchwartzBruhatFn fourier(const SchwartzBruhatFn& f) {
  const int n = f.n(), p = f.prime();
  std::vector<SchwartzTerm> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const Cyclotomic c = t.coeff * Cyclotomic(prime_power(p, -t.level * n * n)) *
                         psi_value(trace_product(t.modulation, t.center), p);
    out.push_back(SchwartzTerm{c, -t.modulation, -t.level, t.center});
  }
  return SchwartzBruhatFn(n, p, std::move(out));
}

SchwartzBruhatFn reflect(const SchwartzBruhatFn& f) {
  std::vector<SchwartzTerm> out = f.terms();
  for (auto& t : out) {
    t.center = -t.center;
    t.modulation = -t.modulation;
  }
  return SchwartzBruhatFn(f.n(), f.prime(), std::move(out));
}

Cyclotomic inner_product(const SchwartzBruhatFn& f, const SchwartzBruhatFn& g) {
  if (f.n() != g.n() || f.prime() != g.prime()) throw EngineError(ErrorKind::InvalidInput, "inner product shape mismatch");
  const int n = f.n(), p = f.prime();
  Cyclotomic acc;
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) {
      const int kk = std::min(s.level, t.level);
      if (!in_coset(s.center, t.center, kk, p)) continue;
      const SchwartzTerm& small = s.level >= t.level ? s : t;
      const int K = small.level;
      const PAdicMatrix w = s.modulation - t.modulation;
      const int vw = w.valuation(p);
      if (vw != kInfiniteValuation && vw < -K) continue;
      acc += s.coeff * t.coeff.conjugate() * psi_value(trace_product(w, small.center), p) *
             Cyclotomic(prime_power(p, -K * n * n));
    }
  }
  return acc;
}

bool functions_equal(const SchwartzBruhatFn& f, const SchwartzBruhatFn& g) {
  const SchwartzBruhatFn d = f - g;
  return inner_product(d, d).is_zero();
}

}  // namespace gj

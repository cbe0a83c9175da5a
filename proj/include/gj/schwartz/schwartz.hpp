#pragma once

#include <random>
#include <vector>

#include "json.hpp"

#include "gj/padic/padic.hpp"

namespace gj {

/// x -> coeff * psi(tr(modulation x)) * 1[x in center + p^level M_n(Z_p)].
struct SchwartzTerm {
  Cyclotomic coeff;
  PAdicMatrix center;
  int level = 0;
  PAdicMatrix modulation;
};

class SchwartzBruhatFn {
 public:
  SchwartzBruhatFn(int n, int p) : n_(n), p_(p) {}
  SchwartzBruhatFn(int n, int p, std::vector<SchwartzTerm> terms);

  /// 1[p^level M_n(Z_p)], level 0 gives the unit ball.
  static SchwartzBruhatFn ball(int n, int p, int level = 0);
  static SchwartzBruhatFn coset(const PAdicMatrix& center, int p, int level,
                                const Cyclotomic& coeff = Cyclotomic(1L));
  static SchwartzBruhatFn modulated_ball(const PAdicMatrix& modulation, int p, int level = 0);

  int n() const { return n_; }
  int prime() const { return p_; }
  const std::vector<SchwartzTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Smallest ms with support inside p^{-ms} M_n(Z_p) (may be negative);
  /// kInfiniteValuation negated is never returned, empty functions give INT_MIN / 2.
  int support_exponent() const;
  /// Level L with the function constant on every x + p^L M_n(Z_p).
  int constancy_level() const;

  /// Restriction to p^{-m} M_n(Z_p).
  SchwartzBruhatFn truncated(int m) const;
  SchwartzBruhatFn scaled(const Cyclotomic& c) const;

  SchwartzBruhatFn& operator+=(const SchwartzBruhatFn& o);
  friend SchwartzBruhatFn operator+(SchwartzBruhatFn a, const SchwartzBruhatFn& b) { return a += b; }
  friend SchwartzBruhatFn operator-(SchwartzBruhatFn a, const SchwartzBruhatFn& b) {
    return a += b.scaled(Cyclotomic(-1L));
  }

 private:
  int n_;
  int p_;
  std::vector<SchwartzTerm> terms_;
};

Cyclotomic evaluate(const SchwartzBruhatFn& f, const PAdicMatrix& x);

/// Pairwise disjoint unmodulated cosets, siblings with equal values merged into
/// their parent, sorted. Throws BudgetExceeded when more than max_cells cells
/// would be enumerated.
SchwartzBruhatFn canonicalize(const SchwartzBruhatFn& f, long long max_cells = 2'000'000);

/// x -> int f(y) psi(tr(xy)) dy, term-wise closed form.
SchwartzBruhatFn fourier(const SchwartzBruhatFn& f);
/// x -> f(-x).
SchwartzBruhatFn reflect(const SchwartzBruhatFn& f);
/// int f(x) conj(g(x)) dx.
Cyclotomic inner_product(const SchwartzBruhatFn& f, const SchwartzBruhatFn& g);
/// Exact equality as functions, via ||f - g||^2 = 0.
bool functions_equal(const SchwartzBruhatFn& f, const SchwartzBruhatFn& g);

/// Random function with up to max_terms terms, levels in [-level_bound, level_bound]
/// and entry valuations in [-level_bound, level_bound].
SchwartzBruhatFn random_schwartz(int n, int p, std::mt19937_64& rng, int max_terms = 3, int level_bound = 3);

nlohmann::json to_json(const SchwartzBruhatFn& f);
/// Throws EngineError(InvalidInput) on malformed documents.
SchwartzBruhatFn schwartz_from_json(const nlohmann::json& doc);
nlohmann::json cyclotomic_to_json(const Cyclotomic& c, int p);
Cyclotomic cyclotomic_from_json(const nlohmann::json& doc, int p);
nlohmann::json matrix_to_json(const PAdicMatrix& m);
PAdicMatrix matrix_from_json(const nlohmann::json& doc);

}  // namespace gj

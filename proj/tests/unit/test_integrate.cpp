#include "doctest.h"

#include <random>

#include "gj/error.hpp"
#include "gj/integrate/integrate.hpp"
#include "gj/scalars/recurrence.hpp"

using namespace gj;

namespace {

Cyclotomic q_pow(int p, int e) { return Cyclotomic(prime_power(p, e)); }

// Brute-force count of invertible matrices mod p.
long long count_gl(int n, int p) {
  const int nn = n * n;
  long long total = 1, good = 0;
  for (int i = 0; i < nn; ++i) total *= p;
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<BigRational> e;
    long long r = idx;
    for (int i = 0; i < nn; ++i, r /= p) e.emplace_back(static_cast<long>(r % p));
    const BigRational d = PAdicMatrix(n, e).det();
    if (valuation(d, p) == 0) ++good;
  }
  return good;
}

PAdicMatrix random_matrix(std::mt19937& rng, int n, int vmin, int p) {
  std::uniform_int_distribution<int> num(-5, 5), e(vmin, 1);
  std::vector<BigRational> v;
  for (int i = 0; i < n * n; ++i) {
    BigRational x(num(rng), 1);
    x *= prime_power(p, e(rng));
    x.canonicalize();
    v.push_back(x);
  }
  return PAdicMatrix(n, v);
}

PAdicMatrix random_unimodular(std::mt19937& rng, int n, int p) {
  while (true) {
    PAdicMatrix u = random_matrix(rng, n, 0, p);
    const BigRational d = u.det();
    if (d != 0 && valuation(d, p) == 0 && u.valuation(p) >= 0) return u;
  }
}

ShellSeries series_from(int k_lo, std::vector<Cyclotomic> e, int weight, int q) {
  ShellSeries s;
  s.k_lo = k_lo;
  s.entries = std::move(e);
  s.weight = weight;
  s.q = q;
  return s;
}

}  // namespace

TEST_CASE("integrate_region examples") {
  const auto one = [](const PAdicMatrix&) { return Cyclotomic(1L); };
  CHECK(integrate_region(one, 1, 2, {{PAdicMatrix(1), 0}}, 0) == Cyclotomic(1L));
  CHECK(integrate_region(one, 2, 3, {{PAdicMatrix(2), 0}}, 0) == Cyclotomic(1L));
  const auto psi = [](const PAdicMatrix& x) { return psi_value(x(0, 0), 2); };
  CHECK(integrate_region(psi, 1, 2, {{PAdicMatrix(1), -1}}, 1).is_zero());
  CHECK_THROWS_AS(integrate_region(one, 1, 2, {{PAdicMatrix(1), 0}}, std::nullopt), EngineError);
  CHECK_THROWS_AS(integrate_region(one, 2, 3, {{PAdicMatrix(2), 0}}, 6, 1000), EngineError);
}

TEST_CASE("integrate_region additivity") {
  std::mt19937 rng(4);
  for (int p : {2, 3}) {
    SchwartzBruhatFn f(1, p, {SchwartzTerm{Cyclotomic(1L), PAdicMatrix::scalar(1, BigRational(1, p)), 1,
                                           PAdicMatrix::scalar(1, BigRational(1, p * p))}});
    Cyclotomic whole = integrate_region(f, {{PAdicMatrix(1), -1}});
    Cyclotomic parts;
    for (int a = 0; a < p; ++a) parts += integrate_region(f, {{PAdicMatrix::scalar(1, BigRational(a, p)), 0}});
    CHECK(whole == parts);
    CHECK(whole == integrate_region(f, {{PAdicMatrix::scalar(1, BigRational(1, p)), 1}}));
  }
}

TEST_CASE("shell_integral examples") {
  const auto triv2 = test_character(2, "trivial");
  for (int p : {2, 3, 5}) {
    const auto chi = test_character(p, "trivial");
    CHECK(shell_integral(fixed_family(SchwartzBruhatFn::ball(1, p)), chi, 0, 0) ==
          Cyclotomic(BigRational(p - 1, p)));
  }
  for (int p : {2, 3}) {
    const auto chi = test_character(p, "trivial");
    CHECK(shell_integral(fixed_family(SchwartzBruhatFn::ball(2, p)), chi, 0, 0) ==
          Cyclotomic(BigRational(static_cast<long>(count_gl(2, p)), p * p * p * p)));
  }
  CHECK(shell_integral(fixed_family(SchwartzBruhatFn::ball(2, 2)), triv2, 0, 0) == Cyclotomic(BigRational(3, 8)));
  CHECK(shell_integral(whole_space(PAdicMatrix::identity(1), 2), triv2, -1, 1) == Cyclotomic(BigRational(-1, 2)));
}

TEST_CASE("measure relation: sum of shells is the additive integral") {
  std::mt19937 rng(8);
  for (int n : {1, 2})
    for (int p : {2, 3}) {
      const auto chi = test_character(p, "trivial");
      for (int t = 0; t < 6; ++t) {
        PAdicMatrix a = random_matrix(rng, n, -1, p);
        const BigRational d = a.det();
        if (d == 0) continue;
        // level fine enough that the coset has constant det valuation
        const int level = valuation(d, p) - (n - 1) * a.valuation(p) + 1;
        SchwartzBruhatFn f = SchwartzBruhatFn::coset(a, p, level);
        ShellValues sv = shell_values(f, chi, valuation(d, p) + 2);
        Cyclotomic sum;
        for (int k = sv.k_lo; k <= sv.k_hi(); ++k) sum += sv.at(k);
        CHECK(sum == integrate_region(f, {{a, level}}));
        CHECK(sv.at(valuation(d, p)) == sum);
      }
    }
}

TEST_CASE("shell integrals are invariant under GL_n(Z_p)") {
  std::mt19937 rng(12);
  for (int n : {1, 2})
    for (int p : {2, 3})
      for (const char* kind : {"trivial", "ramified"}) {
        const auto chi = test_character(p, kind);
        for (int t = 0; t < 3; ++t) {
          SchwartzTerm term{Cyclotomic(1L), random_matrix(rng, n, -1, p), 1, random_matrix(rng, n, -1, p)};
          SchwartzBruhatFn f(n, p, {term});
          const PAdicMatrix u = random_unimodular(rng, n, p);
          // g -> f(u g): center u^{-1} a, modulation b u
          SchwartzTerm moved{term.coeff, mat_invert(u) * term.center, term.level, term.modulation * u};
          SchwartzBruhatFn g(n, p, {moved});
          const int k_hi = n == 1 ? 4 : 2;
          ShellValues a = shell_values(f, chi, k_hi), b = shell_values(g, chi, k_hi);
          const Cyclotomic twist = char_eval(chi, u.det());
          for (int k = std::min(a.k_lo, b.k_lo); k <= k_hi; ++k) CHECK(a.at(k) == b.at(k) * twist);
        }
      }
}

TEST_CASE("stabilized shell integrals") {
  const auto chi = test_character(2, "trivial");
  // compact support: immediate
  auto ball = fixed_family(SchwartzBruhatFn::ball(1, 2));
  CHECK(stabilized_shell_integral(ball, chi, 0) == shell_integral(ball, chi, 0, 0));
  // psi(tr g) on M_2(Q_2), k = 0, against the serial reference at m = 4
  IntegrationConfig ref;
  ref.reference = true;
  ref.hard_budget = 200'000'000;
  auto psi = whole_space(PAdicMatrix::identity(2), 2);
  Windows w;
  Cyclotomic v = stabilized_shell_integral(psi, chi, 0, {}, &w);
  CHECK(v == shell_integral(psi, chi, 0, w.m_hi));
  CHECK(shell_integral(psi, chi, 0, 2) == shell_integral(psi, chi, 0, 2, ref));
  CHECK(w.m_hi - w.m_lo >= 2);
  auto zero = fixed_family(SchwartzBruhatFn(2, 2));
  CHECK(stabilized_shell_integral(zero, chi, 0).is_zero());
  IntegrationConfig tight;
  tight.m_max = 1;
  CHECK_THROWS_AS(stabilized_shells(psi, chi, 3, 4, tight), EngineError);
}

TEST_CASE("rationalize examples") {
  RationalizeOptions opt;
  opt.r_max = 1;
  for (int p : {2, 3}) {
    const Cyclotomic c(BigRational(p - 1, p));
    ShellSeries s = series_from(-3, {0, 0, 0}, 2, p);
    for (int k = 0; k < 20; ++k) s.entries.push_back(c);
    RationalFunction expected(LaurentPoly(c), LaurentPoly::from_coefficients(0, {1, 0, -1}), p);
    CHECK(ratfun_equal(rationalize(s, opt), expected));
  }
  ShellSeries single = series_from(-2, {0, Cyclotomic(7L), 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 2, 2);
  CHECK(ratfun_equal(rationalize(single, opt), RationalFunction::monomial(Cyclotomic(7L), -2, 2)));

  // order two: expand, re-fit, compare
  RationalFunction r(LaurentPoly::from_coefficients(0, {1, 0, 3}),
                     LaurentPoly::from_coefficients(0, {1, 0, Cyclotomic(BigRational(-5, 6)), 0, Cyclotomic(BigRational(1, 6))}), 2);
  std::vector<Cyclotomic> coeffs = r.expand(0, 40);
  ShellSeries s2 = series_from(0, {}, 2, 2);
  for (int k = 0; k <= 20; ++k) s2.entries.push_back(coeffs[static_cast<std::size_t>(2 * k)]);
  RationalizeOptions opt2;
  opt2.r_max = 2;
  RationalFunction back = rationalize(s2, opt2);
  CHECK(ratfun_equal(back, r));
  std::vector<Cyclotomic> again = back.expand(0, 19);
  for (int k = 0; k < 10; ++k) CHECK(again[static_cast<std::size_t>(k)] == coeffs[static_cast<std::size_t>(k)]);

  ShellSeries noisy = series_from(0, {}, 2, 2);
  for (int k = 0; k < 14; ++k) noisy.entries.emplace_back(static_cast<long>(k * k * k % 7 + (k == 9)));
  CHECK_THROWS_AS(rationalize(noisy, opt), EngineError);
}

TEST_CASE("shell volumes of M_2(Z_2) satisfy an order-two recurrence") {
  const auto chi = test_character(2, "trivial");
  ShellValues sv = shell_values(SchwartzBruhatFn::ball(2, 2), chi, 9);
  std::vector<Cyclotomic> vols;
  for (int k = 0; k <= 9; ++k) vols.push_back(sv.at(k));
  auto rec = find_recurrence(vols, 2, 3);
  REQUIRE(rec);
  CHECK(rec->order() == 2);
  CHECK_FALSE(find_recurrence(vols, 1, 3));
  ShellValues ref = shell_values_reference(SchwartzBruhatFn::ball(2, 2), chi, 3, {200'000'000, 0});
  for (int k = 0; k <= 3; ++k) CHECK(ref.at(k) == vols[static_cast<std::size_t>(k)]);
}

TEST_CASE("thread count does not change shell values") {
  std::mt19937 rng(21);
  const auto chi = test_character(3, "ramified");
  SchwartzBruhatFn f(2, 3, {SchwartzTerm{Cyclotomic(1L), random_matrix(rng, 2, 0, 3), 0, random_matrix(rng, 2, -1, 3)}});
  ShellValues a = shell_values(f, chi, 3, {10'000'000, 1});
  ShellValues b = shell_values(f, chi, 3, {10'000'000, 4});
  CHECK(a.values == b.values);
  CHECK(a.cells == b.cells);
}

#include "doctest.h"

#include <random>

#include "gj/error.hpp"
#include "gj/schwartz/schwartz.hpp"

using namespace gj;

namespace {

BigRational small_rational(std::mt19937& rng, int p, int vmin) {
  std::uniform_int_distribution<int> num(-8, 8), e(vmin, 1);
  BigRational x(num(rng), 1);
  x *= prime_power(p, e(rng));
  x.canonicalize();
  return x;
}

PAdicMatrix random_matrix(std::mt19937& rng, int n, int p, int vmin) {
  std::vector<BigRational> e;
  for (int i = 0; i < n * n; ++i) e.push_back(small_rational(rng, p, vmin));
  return PAdicMatrix(n, e);
}

SchwartzBruhatFn random_function(std::mt19937& rng, int n, int p, int kmax, int terms, int mod_vmin = -2) {
  std::uniform_int_distribution<int> lev(-kmax, kmax), a(0, 8), c(-3, 3);
  std::vector<SchwartzTerm> ts;
  for (int t = 0; t < terms; ++t) {
    SchwartzTerm term;
    term.coeff = Cyclotomic(static_cast<long>(c(rng))) + root_of_unity(p, 2, a(rng));
    term.level = lev(rng);
    term.center = random_matrix(rng, n, p, -2);
    term.modulation = random_matrix(rng, n, p, mod_vmin);
    ts.push_back(term);
  }
  return SchwartzBruhatFn(n, p, ts);
}

PAdicMatrix random_point(std::mt19937& rng, int n, int p) { return random_matrix(rng, n, p, -3); }

// n = 1: int_{a + p^k Z_p} psi(x y) dy by summing over cells of level N.
Cyclotomic direct_fourier_1d(const BigRational& a, int k, const BigRational& x, int p, int N) {
  Cyclotomic acc;
  const long long count = int_pow(p, N - k);
  for (long long j = 0; j < count; ++j) {
    const BigRational y = a + prime_power(p, k) * static_cast<long>(j);
    acc += psi_value(x * y, p);
  }
  return acc * Cyclotomic(prime_power(p, -N));
}

}  // namespace

TEST_CASE("evaluate") {
  const auto one = SchwartzBruhatFn::ball(1, 2);
  CHECK(evaluate(one, PAdicMatrix::scalar(1, 3)) == Cyclotomic(1L));
  CHECK(evaluate(one, PAdicMatrix::scalar(1, BigRational(1, 2))) == Cyclotomic(0L));
  const auto mod = SchwartzBruhatFn::modulated_ball(PAdicMatrix::diagonal({BigRational(1, 2), 0}), 2);
  CHECK(evaluate(mod, PAdicMatrix::identity(2)) == Cyclotomic(-1L));
}

TEST_CASE("canonicalize") {
  std::mt19937 rng(2);
  const auto f = random_function(rng, 1, 2, 1, 3);
  CHECK(canonicalize(f - f).empty());

  const auto split = SchwartzBruhatFn::ball(1, 2, 1) + SchwartzBruhatFn::coset(PAdicMatrix::scalar(1, 1), 2, 1);
  const auto c = canonicalize(split);
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].level == 0);
  for (BigRational x : {BigRational(0), BigRational(1), BigRational(1, 2)}) {
    CHECK(evaluate(c, PAdicMatrix::scalar(1, x)) == evaluate(SchwartzBruhatFn::ball(1, 2), PAdicMatrix::scalar(1, x)));
  }

  for (int p : {2, 3}) {
    for (int n : {1, 2}) {
      const auto g = random_function(rng, n, p, 1, 3, -1);
      SchwartzBruhatFn cg(n, p);
      try {
        cg = canonicalize(g);
      } catch (const EngineError&) {
        continue;
      }
      for (int t = 0; t < 100; ++t) {
        const auto x = random_point(rng, n, p);
        CHECK(evaluate(g, x) == evaluate(cg, x));
      }
    }
  }
}

TEST_CASE("fourier examples") {
  for (int n : {1, 2, 3}) {
    for (int p : {2, 3}) CHECK(functions_equal(fourier(SchwartzBruhatFn::ball(n, p)), SchwartzBruhatFn::ball(n, p)));
  }
  const auto f = fourier(SchwartzBruhatFn::ball(1, 2, 1));
  CHECK(functions_equal(f, SchwartzBruhatFn::ball(1, 2, -1).scaled(Cyclotomic(BigRational(1, 2)))));
  // pointwise against the direct character sum
  for (BigRational x : {BigRational(0), BigRational(1, 2), BigRational(1, 4), BigRational(3, 2), BigRational(5)}) {
    CHECK(evaluate(f, PAdicMatrix::scalar(1, x)) == direct_fourier_1d(0, 1, x, 2, 5));
  }
  const auto g = fourier(SchwartzBruhatFn::coset(PAdicMatrix::scalar(1, BigRational(1, 3)), 3, -1));
  for (BigRational x : {BigRational(0), BigRational(1, 3), BigRational(2, 9), BigRational(1), BigRational(4, 27)}) {
    CHECK(evaluate(g, PAdicMatrix::scalar(1, x)) == direct_fourier_1d(BigRational(1, 3), -1, x, 3, 4));
  }
}

TEST_CASE("fourier inversion, plancherel, linearity") {
  std::mt19937 rng(17);
  for (int p : {2, 3}) {
    for (int n : {1, 2}) {
      for (int t = 0; t < 6; ++t) {
        const auto f = random_function(rng, n, p, 3, 3);
        const auto g = random_function(rng, n, p, 3, 2);
        CHECK(functions_equal(fourier(fourier(f)), reflect(f)));
        CHECK(inner_product(f, f) == inner_product(fourier(f), fourier(f)));
        CHECK(inner_product(f, g) == inner_product(fourier(f), fourier(g)));
        const Cyclotomic a = root_of_unity(p, 1, 1), b(BigRational(2, 3));
        CHECK(functions_equal(fourier(f.scaled(a) + g.scaled(b)), fourier(f).scaled(a) + fourier(g).scaled(b)));
      }
    }
  }
}

TEST_CASE("reflect") {
  CHECK(functions_equal(reflect(SchwartzBruhatFn::ball(2, 3)), SchwartzBruhatFn::ball(2, 3)));
  const auto f = SchwartzBruhatFn::coset(PAdicMatrix::scalar(1, 1), 2, 2);
  const auto r = reflect(f);
  CHECK(evaluate(r, PAdicMatrix::scalar(1, -1)) == Cyclotomic(1L));
  CHECK(evaluate(r, PAdicMatrix::scalar(1, 1)) == Cyclotomic(0L));
  std::mt19937 rng(5);
  const auto g = random_function(rng, 2, 2, 2, 3);
  CHECK(functions_equal(reflect(reflect(g)), g));
}

TEST_CASE("inner product") {
  CHECK(inner_product(SchwartzBruhatFn::ball(1, 5), SchwartzBruhatFn::ball(1, 5)) == Cyclotomic(1L));
  CHECK(inner_product(SchwartzBruhatFn::ball(1, 2, 1), SchwartzBruhatFn::coset(PAdicMatrix::scalar(1, 1), 2, 1)).is_zero());
}

TEST_CASE("truncation") {
  std::mt19937 rng(8);
  for (int t = 0; t < 5; ++t) {
    const auto f = random_function(rng, 2, 3, 2, 3);
    const auto tr = f.truncated(1);
    for (int s = 0; s < 50; ++s) {
      const auto x = random_point(rng, 2, 3);
      const bool inside = x.valuation(3) >= -1;
      CHECK(evaluate(tr, x) == (inside ? evaluate(f, x) : Cyclotomic()));
    }
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(12);
  for (int p : {2, 3}) {
    auto f = random_function(rng, 2, p, 2, 3);
    f = f + SchwartzBruhatFn::ball(2, p).scaled(Cyclotomic::imaginary_unit());
    const auto g = schwartz_from_json(to_json(f));
    CHECK(functions_equal(f, g));
  }
  CHECK_THROWS_AS(schwartz_from_json(nlohmann::json::parse(R"({"n":2,"p":4,"terms":[]})")), EngineError);
  CHECK_THROWS_AS(schwartz_from_json(nlohmann::json::parse(R"({"n":2,"p":3,"terms":[{"center":[["1"]]}]})")), EngineError);
}

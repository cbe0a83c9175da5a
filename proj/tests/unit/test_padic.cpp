#include "doctest.h"

#include <random>

#include "gj/error.hpp"
#include "gj/padic/padic.hpp"

using namespace gj;

namespace {

BigRational random_rational(std::mt19937& rng, int p) {
  std::uniform_int_distribution<int> num(-40, 40), e(-3, 3), u(1, 7);
  BigRational x(num(rng), 1);
  int k = e(rng);
  int w = u(rng);
  while (w % p == 0) ++w;
  x /= w;
  x *= prime_power(p, k);
  return x;
}

PAdicMatrix random_matrix(std::mt19937& rng, int n, int p) {
  std::vector<BigRational> e;
  for (int i = 0; i < n * n; ++i) e.push_back(random_rational(rng, p));
  return PAdicMatrix(n, e);
}

}  // namespace

TEST_CASE("norm monomial") {
  CHECK(norm_monomial(1, 2).valuation == 0);
  CHECK(norm_monomial(1, 2).norm == 1);
  CHECK(norm_monomial(BigRational(1, 2), 2).valuation == -1);
  CHECK(norm_monomial(BigRational(1, 2), 2).norm == 2);
  CHECK(norm_monomial(18, 3).valuation == 2);
  CHECK(norm_monomial(18, 3).norm == BigRational(1, 9));
  CHECK_THROWS_AS(norm_monomial(0, 3), EngineError);
  std::mt19937 rng(1);
  for (int t = 0; t < 50; ++t) {
    const BigRational x = random_rational(rng, 3), y = random_rational(rng, 3);
    if (x == 0 || y == 0) continue;
    CHECK(norm_monomial(x * y, 3).norm == norm_monomial(x, 3).norm * norm_monomial(y, 3).norm);
  }
}

TEST_CASE("psi") {
  for (int x = -10; x <= 10; ++x) CHECK(psi_value(x, 2) == Cyclotomic(1L));
  CHECK(psi_value(BigRational(1, 2), 2) == Cyclotomic(-1L));
  CHECK(psi_value(BigRational(1, 3), 2) == Cyclotomic(1L));
  CHECK(psi_value(BigRational(1, 4), 2) == Cyclotomic::imaginary_unit());
  for (int p : {2, 3, 5}) {
    for (int m = 1; m <= 3; ++m) CHECK(psi_value(prime_power(p, -m), p) != Cyclotomic(1L));
    std::mt19937 rng(static_cast<unsigned>(p));
    for (int t = 0; t < 40; ++t) {
      const BigRational x = random_rational(rng, p), y = random_rational(rng, p);
      CHECK(psi_value(x + y, p) == psi_value(x, p) * psi_value(y, p));
    }
  }
}

TEST_CASE("matrix inverse") {
  CHECK(mat_invert(PAdicMatrix::identity(3)) == PAdicMatrix::identity(3));
  CHECK(mat_invert(PAdicMatrix::diagonal({3, 1})) == PAdicMatrix::diagonal({BigRational(1, 3), 1}));
  CHECK(mat_invert(PAdicMatrix::from_rows({{1, 1}, {0, 1}})) == PAdicMatrix::from_rows({{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(mat_invert(PAdicMatrix::from_rows({{1, 2}, {2, 4}})), EngineError);
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_matrix(rng, 3, 2);
    if (g.det() == 0) continue;
    CHECK(g * mat_invert(g) == PAdicMatrix::identity(3));
  }
}

TEST_CASE("determinant and trace identities") {
  std::mt19937 rng(4);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_matrix(rng, 2, 3), h = random_matrix(rng, 2, 3);
    CHECK((g * h).det() == g.det() * h.det());
    CHECK((g * h).trace() == (h * g).trace());
    CHECK(trace_product(g, h) == (g * h).trace());
    if (g.det() != 0 && h.det() != 0)
      CHECK(valuation((g * h).det(), 3) == valuation(g.det(), 3) + valuation(h.det(), 3));
  }
}

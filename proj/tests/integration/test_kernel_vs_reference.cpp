#include "doctest.h"

#include <random>

#include "gj/integrate/integrate.hpp"

using namespace gj;

// Parallel Smith-class kernel against the serial pointwise reference on
// random Schwartz-Bruhat functions small enough for the reference.
TEST_CASE("parallel kernel agrees with the serial reference") {
  std::mt19937_64 rng(101);
  int compared = 0;
  for (int n : {1, 2})
    for (int p : {2, 3})
      for (const char* kind : {"trivial", "unramified", "ramified"}) {
        const auto chi = test_character(p, kind);
        const int instances = n == 1 ? 8 : 3;
        for (int t = 0; t < instances; ++t) {
          const auto f = random_schwartz(n, p, rng, 2, n == 1 ? 3 : 1);
          const int k_hi = n == 1 ? 4 : 2;
          ShellValues fast, slow;
          try {
            fast = shell_values(f, chi, k_hi, {10'000'000, 0});
            slow = shell_values_reference(f, chi, k_hi, {300'000, 1});
          } catch (const std::exception&) {
            continue;  // too fine for the reference
          }
          ++compared;
          for (int k = std::min(fast.k_lo, slow.k_lo); k <= k_hi; ++k)
            CHECK_MESSAGE(fast.at(k) == slow.at(k), "n=", n, " p=", p, " ", kind, " k=", k);
        }
      }
  CHECK(compared >= 20);
}

TEST_CASE("stabilized shells agree between kernels") {
  IntegrationConfig fast, ref;
  ref.reference = true;
  ref.hard_budget = 50'000'000;
  for (int p : {2, 3}) {
    const auto chi = test_character(p, "ramified");
    const auto fam = whole_space(PAdicMatrix::scalar(1, BigRational(1, p)), p);
    const ShellValues a = stabilized_shells(fam, chi, 3, 3, fast);
    const ShellValues b = stabilized_shells(fam, chi, 3, 3, ref);
    for (int k = std::min(a.k_lo, b.k_lo); k <= 3; ++k) CHECK(a.at(k) == b.at(k));
  }
}

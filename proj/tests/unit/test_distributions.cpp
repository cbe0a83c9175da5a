#include "doctest.h"

#include "gj/distributions/distributions.hpp"
#include "gj/error.hpp"

using namespace gj;

namespace {

Cyclotomic rat(long a, long b = 1) { return Cyclotomic(BigRational(a, b)); }

PAdicMatrix pt(std::vector<BigRational> d) { return PAdicMatrix::diagonal(d); }

}  // namespace

TEST_CASE("constructors and tuple maps") {
  CHECK(gj_delta(2) == TwistedDistribution{2, 4, 1, KernelMode::Direct});
  CHECK(cstar_gamma(2) == TwistedDistribution{2, 3, 1, KernelMode::Inverse});
  const TwistedDistribution d{3, 5, -1, KernelMode::Inverse};
  CHECK(tilde(d) == TwistedDistribution{3, 5, 1, KernelMode::Inverse});
  CHECK(tilde(tilde(d)) == d);
  CHECK(closed_form_inverse(d) == TwistedDistribution{3, 1, 1, KernelMode::Direct});
  CHECK(closed_form_inverse(closed_form_inverse(d)) == d);
  CHECK(corrected_inverse(d) == TwistedDistribution{3, 11, 1, KernelMode::Direct});
  CHECK(corrected_inverse(corrected_inverse(d)) == d);
  CHECK(det_twist(det_twist(d, 3), -3) == d);
  CHECK(det_twist(d, 1).alpha2 == 6);
  CHECK(to_json(d)["mode"] == "INVERSE");
}

TEST_CASE("twist relation holds for small n") {
  for (int n = 1; n <= 8; ++n) {
    const Report r = verify_relation(n);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.details["chain"].size() == 4);
  }
  CHECK_THROWS_AS(verify_relation(0), EngineError);
}

TEST_CASE("spectral action of the direct kernel is the gamma factor") {
  for (int p : {2, 3})
    for (const char* kind : {"trivial", "unramified", "ramified"}) {
      const auto chi = test_character(p, kind);
      const int c = std::max(chi.conductor(), 1);
      const auto g = gamma_factor(chi, 1, SchwartzBruhatFn::coset(PAdicMatrix::identity(1), p, c)).gamma;
      for (const BigRational& x : {BigRational(1), BigRational(p), BigRational(1, p), BigRational(p - 1)}) {
        const auto v = spectral_action(gj_delta(1), chi, PAdicMatrix::scalar(1, x)).value;
        CHECK_MESSAGE(ratfun_equal(v, g), p, " ", kind, " ", x.get_str());
      }
    }
}

TEST_CASE("spectral action is independent of the point for n = 2") {
  const auto chi = test_character(2, "trivial");
  const auto base = spectral_action(gj_delta(2), chi, PAdicMatrix::identity(2)).value;
  CHECK(ratfun_equal(base, RationalFunction(LaurentPoly::from_coefficients(4, {8, 0, -8}),
                                            LaurentPoly::from_coefficients(0, {1, 0, -4}), 2)));
  CHECK(ratfun_equal(spectral_action(gj_delta(2), chi, pt({1, 2})).value, base));
  CHECK(ratfun_equal(spectral_action(gj_delta(2), chi, pt({BigRational(1, 2), 3})).value, base));
}

TEST_CASE("closed form and corrected inverses") {
  for (int p : {2, 3})
    for (const char* kind : {"trivial", "ramified"}) {
      const auto chi = test_character(p, kind);
      const auto x = PAdicMatrix::identity(1);
      // alpha = 0: both maps agree with the true inverse
      const TwistedDistribution zero{1, 0, 1, KernelMode::Inverse};
      const auto a = spectral_action(zero, chi, x).value;
      CHECK(ratfun_equal(a * spectral_action(closed_form_inverse(zero), chi, x).value, RationalFunction(rat(1), p)));
      for (int alpha2 : {1, 2, 3}) {
        const TwistedDistribution d{1, alpha2, -1, KernelMode::Inverse};
        const auto s = spectral_action(d, chi, x).value;
        CHECK(ratfun_equal(s * spectral_action(corrected_inverse(d), chi, x).value, RationalFunction(rat(1), p)));
        CHECK_FALSE(ratfun_equal(s * spectral_action(closed_form_inverse(d), chi, x).value,
                                 RationalFunction(rat(1), p)));
      }
    }
}

TEST_CASE("inverse check reports the corrected partner") {
  const Report r = verify_inverse_weak(TwistedDistribution{1, 2, 1, KernelMode::Inverse},
                                       {test_character(2, "trivial"), test_character(3, "ramified")});
  CHECK(r.verdict == Verdict::Fail);
  const auto& diag = r.details["corrected_inverse_diagnostic"];
  REQUIRE(diag.size() == 2);
  for (const auto& row : diag) CHECK(row["is_one"] == true);
  CHECK_THROWS_AS(verify_inverse_weak(gj_delta(1), {test_character(2, "trivial")}), EngineError);
}

TEST_CASE("singular points are rejected") {
  const auto chi = test_character(2, "trivial");
  CHECK_THROWS_AS(spectral_action(gj_delta(1), chi, PAdicMatrix(1)), EngineError);
  CHECK_THROWS_AS(spectral_action(gj_delta(2), chi, pt({1, 0})), EngineError);
  CHECK_THROWS_AS(spectral_action(gj_delta(2), chi, PAdicMatrix::identity(1)), EngineError);
}

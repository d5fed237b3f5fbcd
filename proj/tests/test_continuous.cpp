#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bicross/continuous.hpp"

using namespace bicross;
using namespace bicross::cont;

namespace {
constexpr double kGuard = 1e-12;
}

TEST_CASE("h_mul: identity, worked product, inverse") {
  HPoint id{1.0, 0.0};
  HPoint p{3.0, 4.0};
  HPoint r = h_mul(id, p);
  CHECK(r.a == 3.0);
  CHECK(r.b == 4.0);

  // (2,1)(3,4) = (6, 8 + 1/3).
  HPoint q = h_mul({2.0, 1.0}, {3.0, 4.0});
  CHECK(q.a == 6.0);
  CHECK(q.b == doctest::Approx(8.0 + 1.0 / 3.0).epsilon(1e-15));

  // (a,b)(1/a,-b) = (1,0).
  HPoint s{2.5, -7.0};
  HPoint t = h_mul(s, h_inv(s));
  CHECK(t.a == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(t.b) < 1e-12);
}

TEST_CASE("act_alpha: identity, sign branch, fixed points") {
  HPoint p{2.0, -3.0};
  auto r0 = act_alpha(0.0, p, kGuard);
  REQUIRE(r0.has_value());
  CHECK(r0->a == 2.0);
  CHECK(r0->b == -3.0);

  // 2 + (-3)*1 = -1 < 0: the negative branch flips both signs.
  auto r1 = act_alpha(1.0, p, kGuard);
  REQUIRE(r1.has_value());
  CHECK(r1->a == 1.0);
  CHECK(r1->b == 3.0);

  // b = 0 points are fixed for every x.
  auto r2 = act_alpha(7.5, {4.0, 0.0}, kGuard);
  REQUIRE(r2.has_value());
  CHECK(r2->a == 4.0);
  CHECK(r2->b == 0.0);

  // Singular set: a + bx = 0 is rejected, not a fault.
  CHECK_FALSE(act_alpha(1.0, {1.0, -1.0}, kGuard).has_value());
}

TEST_CASE("act_beta: identity of H, fixed zero, worked value") {
  auto r0 = act_beta({1.0, 0.0}, 0.3, kGuard);
  REQUIRE(r0.has_value());
  CHECK(*r0 == doctest::Approx(0.3).epsilon(1e-15));

  auto r1 = act_beta({2.0, 1.0}, 0.0, kGuard);
  REQUIRE(r1.has_value());
  CHECK(*r1 == 0.0);

  auto r2 = act_beta({2.0, 1.0}, 1.0, kGuard);
  REQUIRE(r2.has_value());
  CHECK(*r2 == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  CHECK_FALSE(act_beta({1.0, -1.0}, 1.0, kGuard).has_value());
}

TEST_CASE("matched identities hold at 1e-9 over 20000 samples") {
  SampleConfig cfg;
  cfg.count = 20000;
  cfg.seed = 7;
  CheckResult r = check_matched_identities(cfg);
  CHECK(r.passed);
  CHECK(r.counts["violations"] == 0);
  CHECK(r.counts["samples_used"] + r.counts["samples_rejected"] == 20000);
}

TEST_CASE("identity draws evaluate both sides bitwise equal") {
  // x = 0 and p = (1,0) reduce every identity to a plain copy.
  HPoint e{1.0, 0.0};
  auto lhs = act_alpha(0.0, e, kGuard);
  REQUIRE(lhs.has_value());
  CHECK(lhs->a == 1.0);
  CHECK(lhs->b == 0.0);
  auto b = act_beta(e, 0.0, kGuard);
  REQUIRE(b.has_value());
  CHECK(*b == 0.0);
}

TEST_CASE("a perturbed beta is caught as a negative control") {
  SampleConfig cfg;
  cfg.count = 2000;
  cfg.seed = 11;
  auto bad_beta = [](const HPoint& p, double x, double guard) -> std::optional<double> {
    const double w = p.a - p.b * x;  // wrong sign in the denominator
    if (std::fabs(w) <= guard) return std::nullopt;
    return x / (p.a * w);
  };
  CheckResult r = check_matched_identities(cfg, bad_beta);
  CHECK_FALSE(r.passed);
  CHECK(r.counts["violations"] > 0);
}

TEST_CASE("w point map round trip stays under 1e-8") {
  SampleConfig cfg;
  cfg.wmap_count = 5000;
  cfg.seed = 13;
  CheckResult r = check_w_pointmap(cfg);
  CHECK(r.passed);
  CHECK(r.counts["violations"] == 0);
}

TEST_CASE("w point map on identity inputs") {
  // g = 0, s = t = (1,0): u = t, first output = beta_t(h) + 0 = h.
  const double h = 3.7;
  auto ags = act_alpha(0.0, {1.0, 0.0}, kGuard);
  REQUIRE(ags.has_value());
  HPoint u = h_mul(h_inv(*ags), {1.0, 0.0});
  CHECK(u.a == 1.0);
  CHECK(std::fabs(u.b) == 0.0);
  auto buh = act_beta(u, h, kGuard);
  REQUIRE(buh.has_value());
  CHECK(*buh == doctest::Approx(h).epsilon(1e-15));

  // t = alpha_g(s): the fourth output coordinate is the H identity.
  HPoint s{2.0, 5.0};
  const double g = 0.25;
  auto a = act_alpha(g, s, kGuard);
  REQUIRE(a.has_value());
  HPoint u2 = h_mul(h_inv(*a), *a);
  CHECK(u2.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(u2.b) < 1e-12);
}

TEST_CASE("reports are reproducible bit for bit for a fixed seed") {
  SampleConfig cfg;
  cfg.count = 5000;
  cfg.seed = 99;
  CheckResult a = check_matched_identities(cfg);
  CheckResult b = check_matched_identities(cfg);
  CHECK(a.values == b.values);
  CHECK(a.counts == b.counts);
}

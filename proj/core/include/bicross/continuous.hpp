#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "bicross/check.hpp"

namespace bicross::cont {

/// Point of the group H = {(a,b) | a > 0, b real} with law
/// (a,b)(x,y) = (ax, ay + b/x); identity (1,0), inverse (1/a, -b).
struct HPoint {
  double a;
  double b;
};

HPoint h_mul(const HPoint& p, const HPoint& q);
HPoint h_inv(const HPoint& p);

/// alpha_x(a,b) = (a+bx, b) when a+bx > 0 and (-a-bx, -b) when a+bx < 0.
/// Returns nullopt when |a+bx| <= guard: the sample sits on (or too close
/// to) the singular set and is rejected rather than treated as a fault.
std::optional<HPoint> act_alpha(double x, const HPoint& p, double guard);

/// beta_{(a,b)}(x) = x / (a(a+bx)); same singular-set guard.
std::optional<double> act_beta(const HPoint& p, double x, double guard);

struct SampleConfig {
  std::int64_t count = 100000;
  std::int64_t wmap_count = 10000;
  std::uint64_t seed = 42;
  double guard = 1e-12;
  double tolerance = 1e-9;
  double wmap_tolerance = 1e-8;
  friend bool operator==(const SampleConfig&, const SampleConfig&) = default;
};

/// Relative error metric used throughout: |lhs-rhs| / max(1, |lhs|, |rhs|).
double rel_err(double lhs, double rhs);

/// Monte Carlo verification of the group laws and the four matched-pair
/// identities on the concrete pair (G, H) = ((R,+), ax+b-type group):
/// draws a log-uniform in [e^-3, e^3] and b, x uniform in [-10, 10], skips
/// samples within `guard` of the singular set a + bx = 0, and reports the
/// max relative error per identity at the configured tolerance.
///
/// `beta_override` substitutes the beta map (used as a negative control in
/// the test suites); the default is act_beta.
CheckResult check_matched_identities(
    const SampleConfig& cfg,
    const std::function<std::optional<double>(const HPoint&, double, double)>&
        beta_override = {});

/// The point transformation of the fundamental unitary,
///   (g, s, h, t) -> (beta_u(h) + g, s, h, u)  with  u = alpha_g(s)^{-1} t,
/// sampled randomly; injectivity is verified numerically by composing with
/// the inverse transformation re-solved from the output.
CheckResult check_w_pointmap(const SampleConfig& cfg);

}  // namespace bicross::cont

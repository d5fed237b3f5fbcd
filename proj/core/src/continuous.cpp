#include "bicross/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace bicross::cont {

HPoint h_mul(const HPoint& p, const HPoint& q) {
  return {p.a * q.a, p.a * q.b + p.b / q.a};
}

HPoint h_inv(const HPoint& p) { return {1.0 / p.a, -p.b}; }

std::optional<HPoint> act_alpha(double x, const HPoint& p, double guard) {
  const double w = p.a + p.b * x;
  if (std::fabs(w) <= guard) return std::nullopt;
  if (w > 0) return HPoint{w, p.b};
  return HPoint{-w, -p.b};
}

std::optional<double> act_beta(const HPoint& p, double x, double guard) {
  const double w = p.a + p.b * x;
  if (std::fabs(w) <= guard) return std::nullopt;
  return x / (p.a * w);
}

double rel_err(double lhs, double rhs) {
  return std::fabs(lhs - rhs) / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

namespace {

double rel_err_h(const HPoint& p, const HPoint& q) {
  return std::max(rel_err(p.a, q.a), rel_err(p.b, q.b));
}

/// Deterministic draws from raw 64-bit words; avoids the
/// implementation-defined std::uniform_real_distribution so that reports are
/// reproducible bit-for-bit for a fixed seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo_log, double hi_log) {
    return std::exp(uniform(lo_log, hi_log));
  }
  HPoint h_point() { return {log_uniform(-3.0, 3.0), uniform(-10.0, 10.0)}; }
  double g_point() { return uniform(-10.0, 10.0); }

 private:
  std::mt19937_64 rng_;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct ErrTracker {
  double max_err = 0.0;
  std::int64_t violations = 0;

  void record(double err, double tolerance) {
    max_err = std::max(max_err, err);
    if (err >= tolerance) ++violations;
  }
};

}  // namespace

CheckResult check_matched_identities(
    const SampleConfig& cfg,
    const std::function<std::optional<double>(const HPoint&, double, double)>&
        beta_override) {
  auto beta = beta_override
                  ? beta_override
                  : [](const HPoint& p, double x, double g) { return act_beta(p, x, g); };

  CheckResult r;
  r.name = "continuous-identities";
  r.statement =
      "h_mul associativity; alpha/beta action laws; the four matched-pair "
      "identities on random samples off the singular set";

  Sampler sampler(cfg.seed);
  const double guard = cfg.guard;

  ErrTracker assoc, beta_comp, alpha_prod, alpha_comp, beta_prod;
  std::int64_t used = 0, rejected = 0;

  for (std::int64_t it = 0; it < cfg.count; ++it) {
    const HPoint s = sampler.h_point();
    const HPoint t = sampler.h_point();
    const HPoint u = sampler.h_point();
    const double x = sampler.g_point();
    const double y = sampler.g_point();

    // Associativity of the H law needs no guard.
    const HPoint st = h_mul(s, t);
    assoc.record(rel_err_h(h_mul(st, u), h_mul(s, h_mul(t, u))), 1e-12);

    // Identity 1: beta_{st}(x) = beta_s(beta_t(x)).
    auto bt = beta(t, x, guard);
    auto b_st = beta(st, x, guard);
    auto bs_bt = bt ? beta(s, *bt, guard) : std::nullopt;
    // Identity 2: alpha_x(st) = alpha_{beta_t(x)}(s) alpha_x(t).
    auto a_x_st = act_alpha(x, st, guard);
    auto a_x_t = act_alpha(x, t, guard);
    auto a_bt_s = bt ? act_alpha(*bt, s, guard) : std::nullopt;
    // Identity 3: alpha_{x+y}(s) = alpha_x(alpha_y(s)).
    auto a_y_s = act_alpha(y, s, guard);
    auto a_xy_s = act_alpha(x + y, s, guard);
    auto a_x_ays = a_y_s ? act_alpha(x, *a_y_s, guard) : std::nullopt;
    // Identity 4: beta_s(x+y) = beta_{alpha_y(s)}(x) + beta_s(y).
    auto b_s_xy = beta(s, x + y, guard);
    auto b_s_y = beta(s, y, guard);
    auto b_ays_x = a_y_s ? beta(*a_y_s, x, guard) : std::nullopt;

    if (!bt || !b_st || !bs_bt || !a_x_st || !a_x_t || !a_bt_s || !a_y_s || !a_xy_s ||
        !a_x_ays || !b_s_xy || !b_s_y || !b_ays_x) {
      ++rejected;
      continue;
    }
    ++used;
    beta_comp.record(rel_err(*b_st, *bs_bt), cfg.tolerance);
    alpha_prod.record(rel_err_h(*a_x_st, h_mul(*a_bt_s, *a_x_t)), cfg.tolerance);
    alpha_comp.record(rel_err_h(*a_xy_s, *a_x_ays), cfg.tolerance);
    beta_prod.record(rel_err(*b_s_xy, *b_ays_x + *b_s_y), cfg.tolerance);
  }

  struct Named {
    const char* key;
    const ErrTracker* t;
    double tol;
  };
  const Named rows[] = {
      {"h_mul_associativity", &assoc, 1e-12},
      {"beta_composition", &beta_comp, cfg.tolerance},
      {"alpha_product", &alpha_prod, cfg.tolerance},
      {"alpha_composition", &alpha_comp, cfg.tolerance},
      {"beta_product", &beta_prod, cfg.tolerance},
  };
  for (const auto& row : rows) {
    r.values[std::string(row.key) + "_max_rel_err"] = fmt(row.t->max_err);
    if (row.t->violations > 0) {
      std::ostringstream os;
      os << row.key << ": " << row.t->violations
         << " samples exceed tolerance, max rel err " << fmt(row.t->max_err);
      r.fail(os.str());
    }
  }

  r.counts["samples"] = cfg.count;
  r.counts["samples_used"] = used;
  r.counts["samples_rejected"] = rejected;
  const double reject_rate =
      cfg.count > 0 ? static_cast<double>(rejected) / static_cast<double>(cfg.count) : 0.0;
  r.values["rejection_rate"] = fmt(reject_rate);
  if (reject_rate >= 1e-3) r.fail("singular rejection rate reached 0.1%");
  return r;
}

CheckResult check_w_pointmap(const SampleConfig& cfg) {
  CheckResult r;
  r.name = "continuous-wmap";
  r.statement =
      "(g,s,h,t) -> (beta_u(h)+g, s, h, u), u = alpha_g(s)^-1 t; inverse round trip";

  Sampler sampler(cfg.seed + 1);
  const double guard = cfg.guard;
  ErrTracker roundtrip;
  std::int64_t used = 0, rejected = 0;

  for (std::int64_t it = 0; it < cfg.wmap_count; ++it) {
    const double g = sampler.g_point();
    const HPoint s = sampler.h_point();
    const double h = sampler.g_point();
    const HPoint t = sampler.h_point();

    auto ags = act_alpha(g, s, guard);
    if (!ags) {
      ++rejected;
      continue;
    }
    const HPoint u = h_mul(h_inv(*ags), t);
    auto buh = act_beta(u, h, guard);
    if (!buh) {
      ++rejected;
      continue;
    }
    const double g_out = *buh + g;

    // Re-solve for the inputs from (g_out, s, h, u).
    auto b_back = act_beta(u, h, guard);
    if (!b_back) {
      ++rejected;
      continue;
    }
    const double g_back = g_out - *b_back;
    auto ags_back = act_alpha(g_back, s, guard);
    if (!ags_back) {
      ++rejected;
      continue;
    }
    const HPoint t_back = h_mul(*ags_back, u);

    ++used;
    double err = std::max({rel_err(g_back, g), rel_err_h(t_back, t)});
    roundtrip.record(err, cfg.wmap_tolerance);
  }

  r.values["roundtrip_max_rel_err"] = fmt(roundtrip.max_err);
  r.counts["samples"] = cfg.wmap_count;
  r.counts["samples_used"] = used;
  r.counts["samples_rejected"] = rejected;
  if (roundtrip.violations > 0) {
    std::ostringstream os;
    os << "round trip exceeds tolerance on " << roundtrip.violations
       << " samples, max rel err " << fmt(roundtrip.max_err);
    r.fail(os.str());
  }
  const double reject_rate = cfg.wmap_count > 0
                                 ? static_cast<double>(rejected) /
                                       static_cast<double>(cfg.wmap_count)
                                 : 0.0;
  r.values["rejection_rate"] = fmt(reject_rate);
  if (reject_rate >= 1e-3) r.fail("singular rejection rate reached 0.1%");
  return r;
}

}  // namespace bicross::cont

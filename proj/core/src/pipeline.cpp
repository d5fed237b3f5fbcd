#include "bicross/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "bicross/matched_pair.hpp"
#include "bicross/quantum_group.hpp"

namespace bicross {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::pair<std::string, std::vector<std::string>>>& verb_table() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> t = {
      {"validate-group", {}},
      {"validate-pair", {}},
      {"build", {"validate-pair"}},
      {"pentagon", {"build"}},
      {"coassoc", {"build"}},
      {"haar", {"build"}},
      {"counit", {"build"}},
      {"antipode", {"haar", "counit"}},
      {"dual", {"build"}},
      {"hopf", {}},
      {"continuous", {}},
  };
  return t;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Resolved objects plus intermediate results, keyed by declaration name.
struct Context {
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, Factorization> factorizations;
  std::map<std::string, MatchedPair> pairs;
  std::map<std::string, QuantumGroup> qgs;
  std::map<std::string, LinearFunctional> left_haar;
  std::map<std::string, LinearFunctional> counits;
  std::map<std::string, hopf::Presentation> presentations;
};

std::string scalar_list(const std::vector<Scalar>& values) {
  std::string s = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) s += ", ";
    s += values[k].str();
  }
  return s + "]";
}

}  // namespace

std::int64_t Report::passed() const {
  return static_cast<std::int64_t>(checks.size()) - failed();
}

std::int64_t Report::failed() const {
  std::int64_t n = 0;
  for (const auto& c : checks)
    if (!c.passed) ++n;
  return n;
}

std::string Report::to_machine() const {
  json j;
  j["format"] = "bicross-report";
  j["version"] = 1;
  j["seed"] = seed;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    json jc;
    jc["name"] = c.name;
    jc["statement"] = c.statement;
    jc["status"] = c.passed ? "pass" : "fail";
    jc["counterexamples"] = c.counterexamples;
    jc["counts"] = c.counts;
    jc["values"] = c.values;
    jc["timing_ms"] = c.timing_ms;
    j["checks"].push_back(std::move(jc));
  }
  j["summary"] = {{"checks", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  return j.dump(2) + "\n";
}

std::string Report::to_human() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    char t[32];
    std::snprintf(t, sizeof t, "%.1f", c.timing_ms);
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << t << " ms)\n";
    if (!c.passed) {
      os << "       " << c.statement << "\n";
      for (const auto& ce : c.counterexamples) os << "       counterexample: " << ce << "\n";
    }
  }
  os << "summary: " << passed() << "/" << checks.size() << " checks passed\n";
  return os.str();
}

std::string Report::strip_timing(const std::string& machine_report) {
  json j = json::parse(machine_report);
  if (j.contains("checks"))
    for (auto& c : j["checks"]) c.erase("timing_ms");
  return j.dump(2) + "\n";
}

std::vector<std::string> pipeline_verbs() {
  std::vector<std::string> v;
  for (const auto& [verb, deps] : verb_table()) v.push_back(verb);
  return v;
}

Report run_pipeline(const spec::SpecFile& spec, const std::vector<std::string>& commands,
                    const PipelineOptions& opts) {
  // Validate and order the requested verbs, checking dependencies.
  std::set<std::string> requested;
  for (const auto& c : commands) {
    bool known = false;
    for (const auto& [verb, deps] : verb_table()) known = known || verb == c;
    if (!known) throw DomainError("unknown command: " + c);
    requested.insert(c);
  }
  if (requested.empty()) throw DomainError("no commands requested");
  std::vector<std::string> ordered;
  for (const auto& [verb, deps] : verb_table()) {
    if (!requested.count(verb)) continue;
    for (const auto& dep : deps)
      if (!requested.count(dep))
        throw DomainError("command '" + verb + "' requires '" + dep +
                          "' to be requested as well");
    ordered.push_back(verb);
  }

  Report report;
  report.seed = opts.seed.value_or(42);
  Context ctx;

  auto add = [&](CheckResult r, const Timer& t) {
    r.timing_ms = t.ms();
    report.checks.push_back(std::move(r));
  };
  auto add_error = [&](const std::string& name, const std::string& what) {
    CheckResult r;
    r.name = name;
    r.statement = "object resolution";
    r.fail(what);
    report.checks.push_back(std::move(r));
  };

  // Resolve groups up front; they are cheap and everything refers to them.
  for (const auto& g : spec.groups) {
    try {
      if (!g.preset.empty()) {
        ctx.groups.emplace(g.name, *group_preset(g.preset));
      } else {
        ctx.groups.emplace(g.name, FiniteGroup::from_table(g.table));
      }
    } catch (const Error& e) {
      add_error("resolve/group/" + g.name, e.what());
    }
  }

  auto resolve_factorization = [&](const spec::FactorizationDecl& f) -> Factorization* {
    auto it = ctx.factorizations.find(f.name);
    if (it != ctx.factorizations.end()) return &it->second;
    if (!f.preset.empty()) {
      if (f.preset == "s3") {
        FiniteGroup s3 = symmetric_group(3);
        // G = <(1 2)>, H = <(1 2 3)>: transposition and 3-cycle subgroups.
        std::vector<Index> g_elems, h_elems;
        for (Index x = 0; x < s3.order(); ++x) {
          if (s3.label(x) == "e" || s3.label(x) == "(1 2)") g_elems.push_back(x);
          if (s3.label(x) == "e" || s3.label(x) == "(1 2 3)" || s3.label(x) == "(1 3 2)")
            h_elems.push_back(x);
        }
        auto [pos, ok] = ctx.factorizations.emplace(f.name, exact_factorization(s3, g_elems, h_elems));
        return &pos->second;
      }
      // s4: G = <(1 2 3 4)>, H = the copy of S3 fixing the last point.
      FiniteGroup s4 = symmetric_group(4);
      std::vector<Index> g_elems, h_elems;
      for (Index x = 0; x < s4.order(); ++x) {
        const std::string& l = s4.label(x);
        if (l == "e" || l == "(1 2 3 4)" || l == "(1 3)(2 4)" || l == "(1 4 3 2)")
          g_elems.push_back(x);
        if (l.find('4') == std::string::npos) h_elems.push_back(x);
      }
      auto [pos, ok] = ctx.factorizations.emplace(f.name, exact_factorization(s4, g_elems, h_elems));
      return &pos->second;
    }
    const FiniteGroup& ambient = ctx.groups.at(f.ambient);
    auto [pos, ok] =
        ctx.factorizations.emplace(f.name, exact_factorization(ambient, f.left, f.right));
    return &pos->second;
  };

  auto resolve_pair = [&](const spec::PairDecl& p) -> MatchedPair* {
    auto it = ctx.pairs.find(p.name);
    if (it != ctx.pairs.end()) return &it->second;
    MatchedPair mp;
    switch (p.kind) {
      case spec::PairDecl::Kind::kFrom: {
        const spec::FactorizationDecl* fd = nullptr;
        for (const auto& f : spec.factorizations)
          if (f.name == p.from) fd = &f;
        if (!fd) throw DataError("pair references unknown factorization " + p.from);
        mp = resolve_factorization(*fd)->pair;
        break;
      }
      case spec::PairDecl::Kind::kTrivial:
        mp = MatchedPair::trivial(ctx.groups.at(p.gname), ctx.groups.at(p.hname));
        break;
      case spec::PairDecl::Kind::kExplicit:
        mp.g = ctx.groups.at(p.gname);
        mp.h = ctx.groups.at(p.hname);
        mp.alpha = p.alpha;
        mp.beta = p.beta;
        break;
    }
    auto [pos, ok] = ctx.pairs.emplace(p.name, std::move(mp));
    return &pos->second;
  };

  for (const auto& verb : ordered) {
    if (verb == "validate-group") {
      for (const auto& g : spec.groups) {
        auto it = ctx.groups.find(g.name);
        if (it == ctx.groups.end()) continue;  // resolution failure already recorded
        Timer t;
        add(validate_group(it->second, g.name), t);
      }
    } else if (verb == "validate-pair") {
      for (const auto& p : spec.pairs) {
        Timer t;
        try {
          MatchedPair* mp = resolve_pair(p);
          add(validate_pair(*mp, p.name), t);
        } catch (const Error& e) {
          add_error("resolve/pair/" + p.name, e.what());
        }
      }
    } else if (verb == "build") {
      for (const auto& p : spec.pairs) {
        auto it = ctx.pairs.find(p.name);
        if (it == ctx.pairs.end()) continue;
        if (!validate_pair(it->second).passed) continue;  // reported by validate-pair
        Timer t;
        try {
          QuantumGroup q = build_quantum_group(it->second);
          CheckResult r;
          r.name = "build/" + p.name;
          r.statement =
              "dim M = |G| |H|; w is a permutation unitary; Delta(basis) lies in M (x) M";
          r.counts["dim_m"] = q.dim_m;
          r.counts["expected_dim"] =
              static_cast<std::int64_t>(q.pair.g.order()) * q.pair.h.order();
          if (q.dim_m != q.pair.g.order() * q.pair.h.order())
            r.fail("dim M = " + std::to_string(q.dim_m));
          if (!q.w.is_permutation()) r.fail("w is not a permutation operator");
          if (!q.delta_in_tensor_square)
            r.fail("Delta of a basis element escaped M (x) M");
          ctx.qgs.emplace(p.name, std::move(q));
          add(std::move(r), t);
          Timer t2;
          add(coaction_identity_check(it->second, p.name), t2);
        } catch (const Error& e) {
          add_error("build/" + p.name, e.what());
        }
      }
    } else if (verb == "pentagon") {
      for (const auto& p : spec.pairs) {
        auto it = ctx.qgs.find(p.name);
        if (it == ctx.qgs.end()) continue;
        Timer t;
        add(pentagon_check(it->second.w, p.name), t);
      }
    } else if (verb == "coassoc") {
      for (const auto& p : spec.pairs) {
        auto it = ctx.qgs.find(p.name);
        if (it == ctx.qgs.end()) continue;
        Timer t;
        add(coassociativity_check(it->second, p.name), t);
      }
    } else if (verb == "haar") {
      for (const auto& p : spec.pairs) {
        auto it = ctx.qgs.find(p.name);
        if (it == ctx.qgs.end()) continue;
        const QuantumGroup& q = it->second;
        Timer tl;
        InvarianceResult left = find_invariant_functionals(q, Side::kLeft, p.name);
        if (left.solutions.size() == 1) {
          left.check.values["functional"] = scalar_list(left.solutions[0].values);
          ctx.left_haar.emplace(p.name, left.solutions[0]);
        }
        add(std::move(left.check), tl);
        Timer tr;
        InvarianceResult right = find_invariant_functionals(q, Side::kRight, p.name);
        if (right.solutions.size() == 1)
          right.check.values["functional"] = scalar_list(right.solutions[0].values);
        add(std::move(right.check), tr);

        Timer td;
        CheckResult dw;
        dw.name = "haar-dual-weight/" + p.name;
        dw.statement =
            "the dual weight of the counting functional on H is proportional to the "
            "solved left-invariant functional";
        try {
          LinearFunctional cand = dual_weight_candidate(q);
          dw.values["candidate"] = scalar_list(cand.values);
          auto hl = ctx.left_haar.find(p.name);
          if (hl == ctx.left_haar.end()) {
            dw.fail("left-invariant solve did not produce a unique functional");
          } else if (!proportional(cand, hl->second)) {
            dw.fail("candidate is not proportional to the solved left functional");
          }
        } catch (const Error& e) {
          dw.fail(e.what());
        }
        add(std::move(dw), td);
      }
    } else if (verb == "counit") {
      for (const auto& p : spec.pairs) {
        auto it = ctx.qgs.find(p.name);
        if (it == ctx.qgs.end()) continue;
        Timer t;
        try {
          CounitResult c = compute_counit(it->second);
          c.check.name = "counit/" + p.name;
          if (c.check.passed) {
            c.check.values["functional"] = scalar_list(c.counit.values);
            ctx.counits.emplace(p.name, c.counit);
          }
          add(std::move(c.check), t);
        } catch (const Error& e) {
          add_error("counit/" + p.name, e.what());
        }
      }
    } else if (verb == "antipode") {
      for (const auto& p : spec.pairs) {
        auto it = ctx.qgs.find(p.name);
        if (it == ctx.qgs.end()) continue;
        auto phi = ctx.left_haar.find(p.name);
        auto eps = ctx.counits.find(p.name);
        Timer t;
        if (phi == ctx.left_haar.end() || eps == ctx.counits.end()) {
          add_error("antipode/" + p.name,
                    "left Haar functional or counit unavailable for this pair");
          continue;
        }
        AntipodeResult a = compute_antipode(it->second, phi->second, eps->second);
        a.check.name = "antipode/" + p.name;
        add(std::move(a.check), t);
      }
    } else if (verb == "dual") {
      for (const auto& p : spec.pairs) {
        auto it = ctx.qgs.find(p.name);
        if (it == ctx.qgs.end()) continue;
        const QuantumGroup& q = it->second;
        Timer t;
        Timer t_pentagon;
        DualResult d = build_dual(q);
        d.pentagon.name = "pentagon/dual-" + p.name;
        d.pentagon.timing_ms = t_pentagon.ms();
        CheckResult r;
        r.name = "dual/" + p.name;
        r.statement =
            "dual algebra from first-leg slices of w; dim M-hat = |G| |H|; "
            "sigma w-hat^* sigma recovers w";
        r.counts["dual_dim"] = static_cast<std::int64_t>(d.algebra_basis.size());
        r.counts["dim_m"] = q.dim_m;
        if (d.algebra_basis.size() != q.dim_m)
          r.fail("dual dimension " + std::to_string(d.algebra_basis.size()));
        Operator sigma = copy_swap(q.two_copy, 2);
        if (sigma * d.w_hat.adjoint() * sigma != q.w)
          r.fail("double dual does not recover w");
        r.values["dual_commutative"] = d.commutative ? "true" : "false";
        r.counts["dual_center_dim"] = static_cast<std::int64_t>(d.center_dim);

        // Recorded (not asserted): invariant comparison with the bicrossed
        // product of the transposed pair.
        try {
          QuantumGroup qt = build_quantum_group(transpose_pair(q.pair));
          r.counts["transpose_dim"] = qt.dim_m;
          r.values["transpose_commutative"] =
              basis_commutative(qt.algebra_basis) ? "true" : "false";
          r.counts["transpose_center_dim"] =
              static_cast<std::int64_t>(center_dimension(qt.algebra_basis));
          const bool invariants_match =
              qt.dim_m == d.algebra_basis.size() &&
              basis_commutative(qt.algebra_basis) == d.commutative &&
              center_dimension(qt.algebra_basis) == d.center_dim;
          r.values["transpose_invariants_match"] = invariants_match ? "true" : "false";
        } catch (const Error& e) {
          r.values["transpose_invariants_match"] = std::string("error: ") + e.what();
        }
        add(std::move(r), t);
        report.checks.push_back(std::move(d.pentagon));
      }
    } else if (verb == "hopf") {
      for (const auto& pd : spec.presentations) {
        Timer t;
        try {
          hopf::Presentation pres =
              !pd.preset.empty() ? *hopf::presentation_preset(pd.preset)
                                 : hopf::Presentation::build(pd.data);
          CheckResult rel = check_relations_preserved(pres);
          rel.name = "hopf-relations/" + pd.name;
          add(std::move(rel), t);

          Timer t2;
          std::vector<hopf::Mono> samples;
          for (std::size_t g = 0; g < pres.ngens(); ++g) {
            samples.push_back(hopf::Mono(pres.ngens(), 0));
            samples.back()[g] = 1;
            if (pres.generators()[g].invertible) {
              samples.push_back(hopf::Mono(pres.ngens(), 0));
              samples.back()[g] = -1;
            }
          }
          auto rnd = hopf::random_monomials(pres, opts.hopf_random_samples,
                                            report.seed, opts.hopf_max_exp);
          samples.insert(samples.end(), rnd.begin(), rnd.end());
          CheckResult ax = check_hopf_axioms(pres, samples);
          ax.name = "hopf-axioms/" + pd.name;
          auto names = pres.generator_names();
          for (std::size_t g = 0; g < pres.ngens(); ++g) {
            hopf::NCPoly s2 = antipode_square(pres, g);
            ax.values["antipode_square_" + names[g]] = nc::poly_str(s2, names);
          }
          add(std::move(ax), t2);
        } catch (const Error& e) {
          add_error("hopf/" + pd.name, e.what());
        }
      }
    } else if (verb == "continuous") {
      for (const auto& cd : spec.continuous) {
        cont::SampleConfig cfg = cd.config;
        if (opts.seed) cfg.seed = *opts.seed;
        if (opts.samples) {
          cfg.count = *opts.samples;
          cfg.wmap_count = std::max<std::int64_t>(1, *opts.samples / 10);
        }
        if (opts.tolerance) cfg.tolerance = *opts.tolerance;
        Timer t;
        CheckResult ids = check_matched_identities(cfg);
        ids.name = "continuous-identities/" + cd.name;
        add(std::move(ids), t);
        Timer t2;
        CheckResult wm = check_w_pointmap(cfg);
        wm.name = "continuous-wmap/" + cd.name;
        add(std::move(wm), t2);
      }
    }
  }
  return report;
}

}  // namespace bicross

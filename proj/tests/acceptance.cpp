// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bicross/continuous.hpp"
#include "bicross/hopf.hpp"
#include "bicross/pipeline.hpp"
#include "bicross/quantum_group.hpp"

using namespace bicross;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> run;
};

struct Corpus {
  std::vector<std::pair<std::string, MatchedPair>> pairs;
};

Corpus build_corpus() {
  Corpus c;
  FiniteGroup s3 = symmetric_group(3);
  FiniteGroup s4 = symmetric_group(4);
  FiniteGroup z6 = cyclic_group(6);

  std::vector<Index> s3_g, s3_h;
  for (Index x = 0; x < s3.order(); ++x) {
    const std::string& l = s3.label(x);
    if (l == "e" || l == "(1 2)") s3_g.push_back(x);
    if (l == "e" || l == "(1 2 3)" || l == "(1 3 2)") s3_h.push_back(x);
  }
  std::vector<Index> s4_g, s4_h;
  for (Index x = 0; x < s4.order(); ++x) {
    const std::string& l = s4.label(x);
    if (l == "e" || l == "(1 2 3 4)" || l == "(1 3)(2 4)" || l == "(1 4 3 2)")
      s4_g.push_back(x);
    if (l.find('4') == std::string::npos) s4_h.push_back(x);
  }
  std::vector<Index> s3_all(s3.order());
  std::iota(s3_all.begin(), s3_all.end(), 0);

  c.pairs.emplace_back("s3", exact_factorization(s3, s3_g, s3_h).pair);
  c.pairs.emplace_back("s4", exact_factorization(s4, s4_g, s4_h).pair);
  c.pairs.emplace_back("z6", exact_factorization(z6, {0, 3}, {0, 2, 4}).pair);
  c.pairs.emplace_back("g-trivial", exact_factorization(s3, {0}, s3_all).pair);
  c.pairs.emplace_back("h-trivial", exact_factorization(s3, s3_all, {0}).pair);
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_corpus_spec() {
  std::ifstream in(std::string(BICROSS_SOURCE_DIR) + "/specs/corpus.spec");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  Corpus corpus = build_corpus();
  const MatchedPair& p_s3 = corpus.pairs[0].second;
  const MatchedPair& p_s4 = corpus.pairs[1].second;

  std::vector<Criterion> criteria;

  criteria.push_back({1, "matched-pair identities (s3, exhaustive, exact, < 1 s)",
                      [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = validate_pair(p_s3, "s3");
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << r.counts["stg_triples"] << "+" << r.counts["ghs_triples"]
       << " triples, " << r.counts["violations"] << " violations, " << dt << " s";
    detail = os.str();
    return r.passed && r.counts["violations"] == 0 && dt < 1.0;
  }});

  criteria.push_back({2, "pentagon for s3 (36x36) and s4 (576x576, sparse), exact, < 60 s",
                      [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r3 = pentagon_check(multiplicative_unitary(p_s3), "s3");
    CheckResult r4 = pentagon_check(multiplicative_unitary(p_s4), "s4");
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << "s3 " << (r3.passed ? "exact" : "VIOLATED") << ", s4 "
       << (r4.passed ? "exact" : "VIOLATED") << ", " << dt << " s";
    detail = os.str();
    return r3.passed && r4.passed && dt < 60.0;
  }});

  criteria.push_back({3, "algebra dimension dim M = |G| |H| on every corpus pair",
                      [&](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (const auto& [name, p] : corpus.pairs) {
      QuantumGroup q = build_quantum_group(p);
      Index expected = p.g.order() * p.h.order();
      ok = ok && q.dim_m == expected;
      os << name << "=" << q.dim_m << " ";
    }
    detail = os.str() + "(expected 6, 24, 6, 6, 6)";
    return ok;
  }});

  criteria.push_back({4, "coassociativity: all 6 basis elements (s3), generator set (s4)",
                      [&](std::string& detail) {
    QuantumGroup q3 = build_quantum_group(p_s3);
    CheckResult r3 = coassociativity_check(q3, "s3");
    QuantumGroup q4 = build_quantum_group(p_s4);
    CheckResult r4 = coassociativity_check(q4, "s4");
    std::ostringstream os;
    os << "s3: " << r3.counts["elements_checked"] << " basis elements ("
       << r3.values["check_set"] << "), s4: " << r4.counts["elements_checked"]
       << " generators (" << r4.values["check_set"] << ")";
    detail = os.str();
    return r3.passed && r4.passed && r3.counts["elements_checked"] == 6 &&
           r3.values["check_set"] == "algebra-basis" &&
           r4.values["check_set"] == "generators";
  }});

  criteria.push_back({5, "haar existence/uniqueness + dual-weight proportionality, every pair",
                      [&](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (const auto& [name, p] : corpus.pairs) {
      QuantumGroup q = build_quantum_group(p);
      InvarianceResult left = find_invariant_functionals(q, Side::kLeft, name);
      InvarianceResult right = find_invariant_functionals(q, Side::kRight, name);
      bool prop = left.solutions.size() == 1 &&
                  proportional(dual_weight_candidate(q), left.solutions[0]);
      ok = ok && left.solutions.size() == 1 && right.solutions.size() == 1 && prop;
      os << name << "(" << left.solutions.size() << "," << right.solutions.size()
         << (prop ? ",prop" : ",NOT-PROP") << ") ";
    }
    detail = os.str();
    return ok;
  }});

  criteria.push_back({6, "baseline recovery: function algebra and group algebra, exact",
                      [&](std::string& detail) {
    // G-trivial: Delta(delta_s) = sum_{uv=s} delta_u (x) delta_v and the
    // counting Haar functional.
    const MatchedPair& pg = corpus.pairs[3].second;
    const FiniteGroup& h = pg.h;
    QuantumGroup qg = build_quantum_group(pg);
    bool ok = true;
    for (Index s = 0; s < h.order(); ++s) {
      std::vector<Scalar> f(h.order(), Scalar(0));
      f[s] = Scalar(1);
      Operator expected = Operator::zero(qg.two_copy);
      for (Index u = 0; u < h.order(); ++u)
        for (Index v = 0; v < h.order(); ++v) {
          if (h.mul(u, v) != s) continue;
          std::vector<Scalar> fu(h.order(), Scalar(0)), fv(h.order(), Scalar(0));
          fu[u] = Scalar(1);
          fv[v] = Scalar(1);
          expected += tensor(embed_function(pg, fu), embed_function(pg, fv));
        }
      ok = ok && comultiply(qg, embed_function(pg, f)) == expected;
    }
    auto haar_g = find_invariant_functionals(qg, Side::kLeft).solutions;
    ok = ok && haar_g.size() == 1;
    for (Index s = 0; ok && s < h.order(); ++s) {
      std::vector<Scalar> f(h.order(), Scalar(0));
      f[s] = Scalar(1);
      ok = ok && evaluate(qg, haar_g[0], embed_function(pg, f)) == Scalar(1);
    }
    bool g_side = ok;

    // H-trivial: Delta(lambda_g) = lambda_g (x) lambda_g and the
    // identity-coefficient Haar functional.
    const MatchedPair& ph = corpus.pairs[4].second;
    const FiniteGroup& g = ph.g;
    QuantumGroup qh = build_quantum_group(ph);
    bool ok2 = true;
    for (Index x = 0; x < g.order(); ++x) {
      Operator lx = left_regular(ph, x);
      ok2 = ok2 && comultiply(qh, lx) == tensor(lx, lx);
    }
    auto haar_h = find_invariant_functionals(qh, Side::kLeft).solutions;
    ok2 = ok2 && haar_h.size() == 1;
    for (Index x = 0; ok2 && x < g.order(); ++x) {
      Scalar expected = x == g.identity() ? Scalar(static_cast<long>(g.order())) : Scalar(0);
      ok2 = ok2 && evaluate(qh, haar_h[0], left_regular(ph, x)) == expected;
    }
    detail = std::string("function-algebra side ") + (g_side ? "exact" : "FAILED") +
             ", group-algebra side " + (ok2 ? "exact" : "FAILED");
    return g_side && ok2;
  }});

  criteria.push_back({7, "antipode from strong invariance, every pair, laws exact",
                      [&](std::string& detail) {
    bool ok = true;
    std::ostringstream os;
    for (const auto& [name, p] : corpus.pairs) {
      QuantumGroup q = build_quantum_group(p);
      auto left = find_invariant_functionals(q, Side::kLeft).solutions;
      CounitResult eps = compute_counit(q);
      if (left.size() != 1 || !eps.check.passed) {
        ok = false;
        os << name << "(prereq-failed) ";
        continue;
      }
      AntipodeResult a = compute_antipode(q, left[0], eps.counit);
      ok = ok && a.slices_span && a.check.passed;
      os << name << "(" << (a.slices_span ? "span" : "NO-SPAN") << ","
         << (a.check.passed ? "laws-exact" : "LAWS-FAILED")
         << (a.s_squared_is_identity ? ",S2=id" : ",S2!=id") << ") ";
    }
    detail = os.str();
    return ok;
  }});

  criteria.push_back({8, "symbolic hopf suites, both presentations, 1000 samples, < 30 s",
                      [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream os;
    std::mt19937_64 confluence_rng(42);
    for (const hopf::Presentation& pres :
         {hopf::heisenberg_primal(), hopf::heisenberg_dual()}) {
      CheckResult rel = check_relations_preserved(pres);
      std::vector<hopf::Mono> samples;
      for (std::size_t gi = 0; gi < pres.ngens(); ++gi) {
        hopf::Mono m(pres.ngens(), 0);
        m[gi] = 1;
        samples.push_back(m);
        if (pres.generators()[gi].invertible) {
          m[gi] = -1;
          samples.push_back(m);
        }
      }
      auto rnd = hopf::random_monomials(pres, 1000, 42, 2);
      samples.insert(samples.end(), rnd.begin(), rnd.end());
      CheckResult ax = check_hopf_axioms(pres, samples);

      // Confluence stress: both reduction strategies agree on random
      // word expressions.
      bool confluent = true;
      for (int iter = 0; iter < 500; ++iter) {
        hopf::Word w;
        long budget = 10;
        while (budget > 0) {
          std::size_t gi = confluence_rng() % pres.ngens();
          long e = static_cast<long>(confluence_rng() % 3) + 1;
          if (pres.generators()[gi].invertible && confluence_rng() % 2 == 0) e = -e;
          w.push_back({gi, e});
          budget -= e < 0 ? -e : e;
          if (confluence_rng() % 4 == 0) break;
        }
        confluent = confluent &&
                    normalize(pres, {{1, w}}, hopf::Strategy::kLeftmost) ==
                        normalize(pres, {{1, w}}, hopf::Strategy::kRightmost);
      }
      ok = ok && rel.passed && ax.passed && confluent;
      os << pres.name() << "(" << (rel.passed ? "relations" : "RELATIONS-FAIL") << ","
         << (ax.passed ? "axioms" : "AXIOMS-FAIL") << ","
         << (confluent ? "confluent" : "NOT-CONFLUENT") << ") ";
    }
    // Non-Kac witness: S^2(C) differs from C as exact normal forms.
    hopf::Presentation primal = hopf::heisenberg_primal();
    hopf::NCPoly s2c = antipode_square(primal, 2);
    bool non_kac = !(s2c == hopf::NCPoly::generator(3, 2));
    ok = ok && non_kac;
    double dt = seconds_since(t0);
    os << (non_kac ? "S2(C)!=C" : "S2(C)==C!") << ", " << dt << " s";
    detail = os.str();
    return ok && dt < 30.0;
  }});

  criteria.push_back({9, "continuous example: 1e5 samples < 1e-9, wmap 1e4 < 1e-8, < 10 s",
                      [&](std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    cont::SampleConfig cfg;  // defaults: 1e5 / 1e4 samples, tolerances 1e-9 / 1e-8
    CheckResult ids = cont::check_matched_identities(cfg);
    CheckResult wm = cont::check_w_pointmap(cfg);
    double dt = seconds_since(t0);
    std::ostringstream os;
    os << (ids.passed ? "identities ok" : "IDENTITIES FAIL") << " (rejected "
       << ids.counts["samples_rejected"] << "), "
       << (wm.passed ? "wmap ok" : "WMAP FAIL") << ", " << dt << " s";
    detail = os.str();
    return ids.passed && wm.passed && dt < 10.0;
  }});

  criteria.push_back({10, "determinism: bit-identical machine reports modulo timing",
                      [&](std::string& detail) {
    spec::SpecFile sf = spec::parse_spec(read_corpus_spec());
    std::vector<std::string> cmds = {"validate-group", "validate-pair", "build",
                                     "pentagon", "coassoc", "haar", "counit",
                                     "antipode", "dual", "hopf", "continuous"};
    PipelineOptions opts;
    opts.seed = 42;
    Report r1 = run_pipeline(sf, cmds, opts);
    Report r2 = run_pipeline(sf, cmds, opts);
    std::string a = Report::strip_timing(r1.to_machine());
    std::string b = Report::strip_timing(r2.to_machine());
    std::ostringstream os;
    os << r1.passed() << "/" << r1.checks.size() << " checks, reports "
       << (a == b ? "identical" : "DIFFER");
    detail = os.str();
    return a == b && r1.all_passed();
  }});

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double dt = seconds_since(t0);
    std::printf("[%s] criterion %2d: %s — %s (%.2f s)\n", ok ? "PASS" : "FAIL",
                c.number, c.title.c_str(), detail.c_str(), dt);
    if (!ok) ++failures;
  }
  std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}

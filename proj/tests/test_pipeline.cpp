#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "bicross/pipeline.hpp"

using namespace bicross;
using json = nlohmann::ordered_json;

namespace {

spec::SpecFile small_spec() {
  return spec::parse_spec(R"(
group z2 preset Z2
group z3 preset Z3
factorization f preset s3
pair p from f
presentation primal preset heisenberg-primal
continuous c samples 2000 wmap-samples 500 seed 3
)");
}

}  // namespace

TEST_CASE("validate-group on a preset yields one passing check per group") {
  spec::SpecFile s = spec::parse_spec("group z2 preset Z2\n");
  Report r = run_pipeline(s, {"validate-group"});
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].name == "validate-group/z2");
  CHECK(r.checks[0].passed);
  CHECK(r.all_passed());
}

TEST_CASE("unknown commands and unsatisfied dependencies are errors") {
  spec::SpecFile s = small_spec();
  CHECK_THROWS_WITH_AS(run_pipeline(s, {"frobnicate"}), doctest::Contains("unknown command"),
                       DomainError);
  CHECK_THROWS_WITH_AS(run_pipeline(s, {"haar"}), doctest::Contains("requires"),
                       DomainError);
  CHECK_THROWS_WITH_AS(run_pipeline(s, {"antipode", "build", "validate-pair", "haar"}),
                       doctest::Contains("requires"), DomainError);
  // Commands listed out of order are fine as long as dependencies are present.
  CHECK_NOTHROW(run_pipeline(s, {"haar", "build", "validate-pair"}));
}

TEST_CASE("full pipeline on the s3 factorization passes with dim M = 6") {
  spec::SpecFile s = small_spec();
  Report r = run_pipeline(s, {"validate-pair", "build", "pentagon", "coassoc", "haar",
                              "counit", "antipode", "dual", "hopf", "continuous"});
  CHECK(r.all_passed());
  bool saw_dim = false;
  for (const auto& c : r.checks) {
    if (c.name == "build/p") {
      saw_dim = true;
      CHECK(c.counts.at("dim_m") == 6);
    }
  }
  CHECK(saw_dim);
}

TEST_CASE("a corrupted pair fails validate-pair naming the identity") {
  spec::SpecFile s = spec::parse_spec(R"(
group z2 preset Z2
group z3 preset Z3
pair broken explicit z2 z3
alpha
0 1 2
0 0 1
beta
0 0 0
1 1 1
)");
  Report r = run_pipeline(s, {"validate-pair"});
  CHECK_FALSE(r.all_passed());
  REQUIRE(r.checks.size() == 1);
  bool named = false;
  for (const auto& ce : r.checks[0].counterexamples)
    named = named || ce.find("alpha") != std::string::npos ||
            ce.find("beta") != std::string::npos;
  CHECK(named);
}

TEST_CASE("machine reports are bit-identical across runs modulo timing") {
  spec::SpecFile s = small_spec();
  std::vector<std::string> cmds = {"validate-group", "validate-pair", "build",
                                   "pentagon", "coassoc", "haar", "counit",
                                   "antipode", "dual", "hopf", "continuous"};
  PipelineOptions opts;
  opts.seed = 42;
  opts.hopf_random_samples = 50;
  std::string a = Report::strip_timing(run_pipeline(s, cmds, opts).to_machine());
  std::string b = Report::strip_timing(run_pipeline(s, cmds, opts).to_machine());
  CHECK(a == b);

  // Every check appears exactly once.
  json j = json::parse(a);
  std::set<std::string> names;
  for (const auto& c : j["checks"]) {
    CHECK(names.insert(c["name"].get<std::string>()).second);
  }
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("machine report format is versioned") {
  spec::SpecFile s = spec::parse_spec("group z2 preset Z2\n");
  json j = json::parse(run_pipeline(s, {"validate-group"}).to_machine());
  CHECK(j["format"] == "bicross-report");
  CHECK(j["version"] == 1);
  CHECK(j.contains("seed"));
}

TEST_CASE("dual verb records the transpose comparison") {
  spec::SpecFile s = small_spec();
  Report r = run_pipeline(s, {"validate-pair", "build", "dual"});
  bool saw = false;
  for (const auto& c : r.checks) {
    if (c.name == "dual/p") {
      saw = true;
      CHECK(c.values.count("transpose_invariants_match"));
      CHECK(c.values.at("transpose_invariants_match") == "true");
      CHECK(c.counts.at("dual_dim") == 6);
    }
  }
  CHECK(saw);
}

TEST_CASE("hopf verb reports the antipode squares") {
  spec::SpecFile s = small_spec();
  PipelineOptions opts;
  opts.hopf_random_samples = 20;
  Report r = run_pipeline(s, {"hopf"}, opts);
  CHECK(r.all_passed());
  bool saw = false;
  for (const auto& c : r.checks) {
    if (c.name == "hopf-axioms/primal") {
      saw = true;
      CHECK(c.values.at("antipode_square_A") == "A");
      CHECK(c.values.at("antipode_square_C") != "C");
    }
  }
  CHECK(saw);
}

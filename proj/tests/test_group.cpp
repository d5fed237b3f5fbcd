#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "bicross/group.hpp"
#include "bicross/matched_pair.hpp"

using namespace bicross;

namespace {

/// Independent oracle: S_n built directly from permutation words, kept free
/// of the library's construction path.
struct PermOracle {
  std::vector<std::vector<Index>> perms;
  std::map<std::vector<Index>, Index> rank;

  explicit PermOracle(Index n) {
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      rank[p] = static_cast<Index>(perms.size());
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  Index compose(Index a, Index b) const {  // apply b, then a
    std::vector<Index> ab(perms[a].size());
    for (Index x = 0; x < ab.size(); ++x) ab[x] = perms[a][perms[b][x]];
    return rank.at(ab);
  }
};

}  // namespace

TEST_CASE("Z2 validates") {
  CHECK(validate_group(cyclic_group(2)).passed);
}

TEST_CASE("a corrupted product is reported with the violating triple") {
  // Swap two interior entries of the Z4 table; identity and inverses
  // survive, associativity does not.
  auto table = cyclic_group(4).table();
  std::swap(table[2][1], table[2][3]);
  FiniteGroup g = FiniteGroup::from_table(table);
  CheckResult r = validate_group(g);
  CHECK_FALSE(r.passed);
  CHECK(r.counts["violations"] > 0);
  bool mentions_assoc = false;
  for (const auto& c : r.counterexamples)
    mentions_assoc = mentions_assoc || c.find("associativity") != std::string::npos;
  CHECK(mentions_assoc);
}

TEST_CASE("S3 table agrees with the permutation-composition oracle") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(validate_group(s3).passed);
  PermOracle oracle(3);
  REQUIRE(s3.order() == 6);
  for (Index a = 0; a < 6; ++a)
    for (Index b = 0; b < 6; ++b) CHECK(s3.mul(a, b) == oracle.compose(a, b));
}

TEST_CASE("S4 table agrees with the permutation-composition oracle") {
  FiniteGroup s4 = symmetric_group(4);
  CHECK(s4.order() == 24);
  CHECK(validate_group(s4).passed);
  PermOracle oracle(4);
  for (Index a = 0; a < 24; ++a)
    for (Index b = 0; b < 24; ++b) CHECK(s4.mul(a, b) == oracle.compose(a, b));
}

TEST_CASE("group presets resolve") {
  for (const auto& name : group_preset_names()) {
    auto g = group_preset(name);
    REQUIRE(g.has_value());
    CHECK(validate_group(*g, name).passed);
  }
  CHECK_FALSE(group_preset("Z5").has_value());
}

TEST_CASE("from_table rejects tables without identity or inverses") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 1}, {1, 1}}), DataError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), DataError);
}

TEST_CASE("exact factorization of S3 into <(1 2)> and <(1 2 3)>") {
  FiniteGroup s3 = symmetric_group(3);
  std::vector<Index> transposition, three_cycle;
  for (Index x = 0; x < s3.order(); ++x) {
    const std::string& l = s3.label(x);
    if (l == "e" || l == "(1 2)") transposition.push_back(x);
    if (l == "e" || l == "(1 2 3)" || l == "(1 3 2)") three_cycle.push_back(x);
  }
  Factorization f = exact_factorization(s3, transposition, three_cycle);
  CHECK(f.pair.g.order() == 2);
  CHECK(f.pair.h.order() == 3);
  CheckResult r = validate_pair(f.pair, "s3");
  CHECK(r.passed);
  CHECK(r.counts["stg_triples"] == 3 * 3 * 2);
  CHECK(r.counts["ghs_triples"] == 2 * 2 * 3);

  // The nontrivial transposition inverts the 3-cycles via alpha.
  bool alpha_nontrivial = false;
  for (Index s = 0; s < 3; ++s)
    alpha_nontrivial = alpha_nontrivial || f.pair.alpha[1][s] != s;
  CHECK(alpha_nontrivial);
}

TEST_CASE("Z6 factors over Z2 * Z3 with trivial mutual actions") {
  FiniteGroup z6 = cyclic_group(6);
  Factorization f = exact_factorization(z6, {0, 3}, {0, 2, 4});
  CHECK(validate_pair(f.pair).passed);
  for (Index g = 0; g < 2; ++g)
    for (Index s = 0; s < 3; ++s) {
      CHECK(f.pair.alpha[g][s] == s);
      CHECK(f.pair.beta[g][s] == g);
    }
}

TEST_CASE("factorization error cases") {
  FiniteGroup z4 = cyclic_group(4);
  // {0,2} meets {0,2} nontrivially (and is the only order-2 subgroup).
  CHECK_THROWS_WITH_AS(static_cast<void>(exact_factorization(z4, {0, 2}, {0, 2})),
                       doctest::Contains("nontrivial intersection"), DataError);
  // Not a subgroup.
  CHECK_THROWS_WITH_AS(static_cast<void>(exact_factorization(z4, {0, 1}, {0, 2})),
                       doctest::Contains("not a subgroup"), DataError);
  // Sizes do not multiply to |L|.
  FiniteGroup z6 = cyclic_group(6);
  CHECK_THROWS_WITH_AS(static_cast<void>(exact_factorization(z6, {0, 3}, {0})),
                       doctest::Contains("product set"), DataError);
}

TEST_CASE("degenerate factorizations give the trivial-side pairs") {
  FiniteGroup s3 = symmetric_group(3);
  std::vector<Index> all(s3.order());
  std::iota(all.begin(), all.end(), 0);

  Factorization htriv = exact_factorization(s3, all, {s3.identity()});
  CHECK(htriv.pair.g.order() == 6);
  CHECK(htriv.pair.h.order() == 1);
  CHECK(validate_pair(htriv.pair).passed);

  Factorization gtriv = exact_factorization(s3, {s3.identity()}, all);
  CHECK(gtriv.pair.g.order() == 1);
  CHECK(gtriv.pair.h.order() == 6);
  CHECK(validate_pair(gtriv.pair).passed);
}

TEST_CASE("S4 factors over the 4-cycle and the point stabilizer") {
  FiniteGroup s4 = symmetric_group(4);
  std::vector<Index> four_cycle, stab;
  for (Index x = 0; x < s4.order(); ++x) {
    const std::string& l = s4.label(x);
    if (l == "e" || l == "(1 2 3 4)" || l == "(1 3)(2 4)" || l == "(1 4 3 2)")
      four_cycle.push_back(x);
    if (l.find('4') == std::string::npos) stab.push_back(x);
  }
  REQUIRE(four_cycle.size() == 4);
  REQUIRE(stab.size() == 6);
  Factorization f = exact_factorization(s4, four_cycle, stab);
  CHECK(f.pair.g.order() == 4);
  CHECK(f.pair.h.order() == 6);
  CHECK(validate_pair(f.pair, "s4").passed);
}

TEST_CASE("reconstruction: the chosen factorization order is a bijection onto L") {
  FiniteGroup s3 = symmetric_group(3);
  std::vector<Index> g_elems, h_elems;
  for (Index x = 0; x < s3.order(); ++x) {
    const std::string& l = s3.label(x);
    if (l == "e" || l == "(1 2)") g_elems.push_back(x);
    if (l == "e" || l == "(1 2 3)" || l == "(1 3 2)") h_elems.push_back(x);
  }
  Factorization f = exact_factorization(s3, g_elems, h_elems);
  const bool gh_order = f.convention == FactorizationConvention::kGH ||
                        f.convention == FactorizationConvention::kGHInverse;
  std::vector<bool> hit(s3.order(), false);
  for (Index gi = 0; gi < f.pair.g.order(); ++gi) {
    for (Index si = 0; si < f.pair.h.order(); ++si) {
      Index l = gh_order ? s3.mul(f.g_in_ambient[gi], f.h_in_ambient[si])
                         : s3.mul(f.h_in_ambient[si], f.g_in_ambient[gi]);
      CHECK_FALSE(hit[l]);
      hit[l] = true;
    }
  }
  CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bicross/specfile.hpp"

using namespace bicross;
using namespace bicross::spec;

namespace {

std::string dsl_primal() {
  return R"(presentation primal begin
  generator A invertible star A
  generator B star B
  generator C star -C
  relation [A,B] = 0
  relation [A,C] = B
  relation [B,C] = 0
  coproduct A = A (x) A
  coproduct B = A (x) B + B (x) A^-1
  coproduct C = C (x) A^-2 + 1 (x) C
  counit A = 1
  counit B = 0
  counit C = 0
  antipode A = A^-1
  antipode B = -B
  antipode C = -C A^2
end
)";
}

}  // namespace

TEST_CASE("empty file parses to an empty SpecFile") {
  SpecFile s = parse_spec("");
  CHECK(s == SpecFile{});
  SpecFile t = parse_spec("# only a comment\n\n");
  CHECK(t == SpecFile{});
}

TEST_CASE("group preset reference loads the built-in table") {
  SpecFile s = parse_spec("group g preset S3\n");
  REQUIRE(s.groups.size() == 1);
  CHECK(s.groups[0].preset == "S3");
  CHECK_THROWS_AS(parse_spec("group g preset Q8\n"), ParseError);
}

TEST_CASE("explicit tables parse with range checks") {
  SpecFile s = parse_spec("group g table 2\n0 1\n1 0\n");
  REQUIRE(s.groups.size() == 1);
  CHECK(s.groups[0].table == std::vector<std::vector<Index>>{{0, 1}, {1, 0}});
  // Ragged row.
  CHECK_THROWS_AS(parse_spec("group g table 2\n0 1\n1\n"), ParseError);
  // Entry out of range.
  CHECK_THROWS_AS(parse_spec("group g table 2\n0 1\n1 2\n"), ParseError);
}

TEST_CASE("parse errors carry 1-based line positions") {
  try {
    parse_spec("group g preset Z2\nbogus keyword\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_spec("group g table 3\n0 1 2\n1 2 0\n2 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("undefined references are parse errors") {
  CHECK_THROWS_WITH_AS(parse_spec("pair p trivial g h\n"),
                       doctest::Contains("undefined group"), ParseError);
  CHECK_THROWS_WITH_AS(parse_spec("factorization f ambient g left [ 0 ] right [ 0 ]\n"),
                       doctest::Contains("undefined group"), ParseError);
  CHECK_THROWS_WITH_AS(parse_spec("pair p from f\n"),
                       doctest::Contains("undefined factorization"), ParseError);
}

TEST_CASE("duplicate names are rejected") {
  CHECK_THROWS_WITH_AS(parse_spec("group g preset Z2\ngroup g preset Z3\n"),
                       doctest::Contains("duplicate"), ParseError);
}

TEST_CASE("presentation DSL parses the primal data") {
  SpecFile s = parse_spec(dsl_primal());
  REQUIRE(s.presentations.size() == 1);
  const auto& d = s.presentations[0].data;
  REQUIRE(d.generators.size() == 3);
  CHECK(d.generators[0].invertible);
  CHECK(d.generators[2].star_sign == -1);
  CHECK(d.brackets.size() == 3);
  CHECK(d.counits == std::vector<nc::Coeff>{1, 0, 0});
  // Builds into a working presentation identical in behavior to the preset.
  hopf::Presentation built = hopf::Presentation::build(d);
  hopf::Presentation preset = hopf::heisenberg_primal();
  CHECK(check_relations_preserved(built).passed);
  for (std::size_t g = 0; g < 3; ++g)
    CHECK(antipode_square(built, g) == antipode_square(preset, g));
}

TEST_CASE("product-form relations are accepted") {
  std::string text = R"(presentation p begin
  generator A star -A
  generator B star -B
  generator C star C
  relation B A = A B - 2 B
  relation [A,C] = 2 C
  relation C B = B C - C^2
  coproduct A = A (x) 1 + 1 (x) A
  coproduct B = B (x) 1 + 1 (x) B + A (x) C
  coproduct C = C (x) 1 + 1 (x) C
  counit A = 0
  counit B = 0
  counit C = 0
  antipode A = -A
  antipode B = -B + A C
  antipode C = -C
end
)";
  SpecFile s = parse_spec(text);
  hopf::Presentation built = hopf::Presentation::build(s.presentations[0].data);
  CHECK(check_relations_preserved(built).passed);
  hopf::Presentation preset = hopf::heisenberg_dual();
  for (std::size_t g = 0; g < 3; ++g)
    CHECK(antipode_square(built, g) == antipode_square(preset, g));
}

TEST_CASE("missing structure maps are parse errors") {
  std::string text = R"(presentation p begin
  generator A star A
  counit A = 1
  antipode A = A
end
)";
  CHECK_THROWS_WITH_AS(parse_spec(text), doctest::Contains("missing coproduct"),
                       ParseError);
}

TEST_CASE("continuous declarations parse keys in any order") {
  SpecFile s = parse_spec("continuous c tolerance 1e-8 samples 500 seed 7\n");
  REQUIRE(s.continuous.size() == 1);
  CHECK(s.continuous[0].config.count == 500);
  CHECK(s.continuous[0].config.seed == 7);
  CHECK(s.continuous[0].config.tolerance == 1e-8);
  CHECK_THROWS_AS(parse_spec("continuous c speed 3\n"), ParseError);
}

TEST_CASE("parse-print round trip is structurally identical") {
  std::ostringstream text;
  text << "group g preset S3\n"
       << "group t table 2\n1 0\n0 1\n";  // identity at index 1
  text << "factorization f ambient g left [ 0 ] right [ 0 1 2 3 4 5 ]\n"
       << "factorization fp preset s3\n"
       << "pair p1 from fp\n"
       << "pair p2 trivial g t\n"
       << "pair p3 explicit t g\n"
       << "alpha\n0 1 2 3 4 5\n0 1 2 3 4 5\nbeta\n0 0 0 0 0 0\n1 1 1 1 1 1\n"
       << dsl_primal()
       << "presentation q preset heisenberg-dual\n"
       << "continuous c samples 123 seed 5 guard 1e-10\n";
  SpecFile a = parse_spec(text.str());
  std::string printed = print_spec(a);
  SpecFile b = parse_spec(printed);
  CHECK(a == b);
  // And printing is a fixed point.
  CHECK(print_spec(b) == printed);
}

TEST_CASE("the shipped corpus and broken-pair specs parse") {
  for (const char* path : {"specs/corpus.spec", "specs/broken_pair.spec"}) {
    std::ifstream in(std::string(BICROSS_SOURCE_DIR) + "/" + path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    SpecFile s = parse_spec(buf.str());
    SpecFile round = parse_spec(print_spec(s));
    CHECK(s == round);
  }
}

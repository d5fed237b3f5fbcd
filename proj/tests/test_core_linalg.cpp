#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bicross/operator.hpp"
#include "bicross/span.hpp"

using namespace bicross;

namespace {

Scalar q(long n, long d = 1) { return Scalar(rational(n, d)); }

/// Uniform random sparse operator with small rational entries.
Operator random_operator(HilbertIndex space, std::mt19937_64& rng, int fill_percent) {
  std::vector<std::tuple<Index, Index, Scalar>> entries;
  for (Index r = 0; r < space.total_dim(); ++r) {
    for (Index c = 0; c < space.total_dim(); ++c) {
      if (rng() % 100 < static_cast<unsigned>(fill_percent)) {
        long re = static_cast<long>(rng() % 7) - 3;
        long im = static_cast<long>(rng() % 7) - 3;
        entries.emplace_back(r, c, Scalar(rational(re), rational(im)));
      }
    }
  }
  return Operator::from_entries(space, entries);
}

Operator random_permutation(HilbertIndex space, std::mt19937_64& rng) {
  std::vector<Index> perm(space.total_dim());
  for (Index k = 0; k < perm.size(); ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  return Operator::pullback(space, [&](Index x) { return perm[x]; });
}

}  // namespace

TEST_CASE("scalar field arithmetic is exact") {
  Scalar a(rational(1, 3), rational(2, 5));
  Scalar b(rational(-7, 2), rational(1, 4));
  CHECK(a + b - b == a);
  CHECK((a * b) / b == a);
  CHECK(a.conj().conj() == a);
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK_THROWS_AS(a / Scalar(0), DomainError);
}

TEST_CASE("hilbert index flattening is row-major") {
  HilbertIndex h{2, 3, 4};
  CHECK(h.total_dim() == 24);
  CHECK(h.flatten({0, 0, 0}) == 0);
  CHECK(h.flatten({0, 0, 1}) == 1);
  CHECK(h.flatten({0, 1, 0}) == 4);
  CHECK(h.flatten({1, 0, 0}) == 12);
  for (Index x = 0; x < 24; ++x) CHECK(h.flatten(h.unflatten(x)) == x);
  CHECK_THROWS_AS(h.flatten({2, 0, 0}), DimensionError);
}

TEST_CASE("tensor of identities and diagonals") {
  Operator i2 = Operator::identity(HilbertIndex{2});
  Operator i3 = Operator::identity(HilbertIndex{3});
  CHECK(tensor(i2, i3) == Operator::identity(HilbertIndex{2, 3}));

  Operator d = Operator::diagonal(HilbertIndex{2}, {q(1), q(2)});
  Operator expected =
      Operator::diagonal(HilbertIndex{2, 2}, {q(1), q(1), q(2), q(2)});
  CHECK(tensor(d, i2) == expected);
}

TEST_CASE("tensor of permutations matches the entrywise definition") {
  std::mt19937_64 rng(7);
  HilbertIndex ha{3}, hb{4};
  Operator p = random_permutation(ha, rng);
  Operator r = random_permutation(hb, rng);
  Operator t = tensor(p, r);
  CHECK(t.is_permutation());
  for (Index ra = 0; ra < 3; ++ra)
    for (Index ca = 0; ca < 3; ++ca)
      for (Index rb = 0; rb < 4; ++rb)
        for (Index cb = 0; cb < 4; ++cb)
          CHECK(t.entry(ra * 4 + rb, ca * 4 + cb) == p.entry(ra, ca) * r.entry(rb, cb));
}

TEST_CASE("tensor is associative up to index flattening") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 10; ++iter) {
    Operator a = random_operator(HilbertIndex{2}, rng, 60);
    Operator b = random_operator(HilbertIndex{3}, rng, 60);
    Operator c = random_operator(HilbertIndex{2}, rng, 60);
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
  }
}

TEST_CASE("adjoint is involutive and anti-multiplicative") {
  std::mt19937_64 rng(13);
  HilbertIndex h{4};
  for (int iter = 0; iter < 20; ++iter) {
    Operator a = random_operator(h, rng, 50);
    Operator b = random_operator(h, rng, 50);
    CHECK(a.adjoint().adjoint() == a);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
  }
}

TEST_CASE("adjoint of a permutation is its inverse") {
  std::mt19937_64 rng(17);
  HilbertIndex h{6};
  Operator p = random_permutation(h, rng);
  CHECK(p * p.adjoint() == Operator::identity(h));
  CHECK(p.adjoint() * p == Operator::identity(h));
}

TEST_CASE("place_legs puts factors where asked") {
  HilbertIndex two{2};
  Operator x = Operator::from_entries(
      two, {{0, 1, q(1)}, {1, 0, q(1)}});  // the swap on a single qubit-like factor
  HilbertIndex ambient{2, 2};
  CHECK(place_legs(x, {0}, ambient) == tensor(x, Operator::identity(two)));
  CHECK(place_legs(x, {1}, ambient) == tensor(Operator::identity(two), x));
  CHECK_THROWS_AS(place_legs(x, {0}, HilbertIndex{3, 2}), DimensionError);
  CHECK_THROWS_AS(place_legs(x, {2}, ambient), DimensionError);
}

TEST_CASE("place_legs on legs {0,2} matches brute-force basis action") {
  std::mt19937_64 rng(23);
  HilbertIndex op_space{2, 3};
  Operator op = random_operator(op_space, rng, 40);
  HilbertIndex ambient{2, 4, 3};
  Operator placed = place_legs(op, {0, 2}, ambient);

  // Apply to every ambient basis vector and compare against the definition.
  for (Index col = 0; col < ambient.total_dim(); ++col) {
    std::vector<Scalar> v(ambient.total_dim(), Scalar(0));
    v[col] = Scalar(1);
    std::vector<Scalar> out = placed.apply(v);
    auto cm = ambient.unflatten(col);
    for (Index row = 0; row < ambient.total_dim(); ++row) {
      auto rm = ambient.unflatten(row);
      Scalar expected(0);
      if (rm[1] == cm[1])
        expected = op.entry(op_space.flatten({rm[0], rm[2]}),
                            op_space.flatten({cm[0], cm[2]}));
      CHECK(out[row] == expected);
    }
  }
}

TEST_CASE("span_saturate of the identity alone") {
  Operator i = Operator::identity(HilbertIndex{3});
  auto basis = span_saturate({i});
  CHECK(basis.size() == 1);
}

TEST_CASE("span_saturate of the 2x2 matrix units has dimension 4") {
  HilbertIndex h{2};
  std::vector<Operator> units;
  for (Index r = 0; r < 2; ++r)
    for (Index c = 0; c < 2; ++c)
      units.push_back(Operator::from_entries(h, {{r, c, q(1)}}));
  auto basis = span_saturate(units);
  CHECK(basis.size() == 4);
}

TEST_CASE("span_saturate output is closed under multiplication") {
  std::mt19937_64 rng(29);
  HilbertIndex h{3};
  std::vector<Operator> gens = {random_permutation(h, rng),
                                Operator::diagonal(h, {q(1), q(2), q(0)})};
  auto basis = span_saturate(gens);
  SpanBasis sb;
  for (const auto& b : basis) sb.insert(vectorize(b));
  CHECK(sb.dim() == basis.size());
  for (const auto& a : basis)
    for (const auto& b : basis) CHECK(sb.contains(vectorize(a * b)));
}

TEST_CASE("span basis tracks combinations over the original generators") {
  HilbertIndex h{2};
  Operator e00 = Operator::from_entries(h, {{0, 0, q(1)}});
  Operator e11 = Operator::from_entries(h, {{1, 1, q(1)}});
  SpanBasis sb(/*track_combinations=*/true);
  sb.insert(vectorize(e00 + e11));
  sb.insert(vectorize(e00 - e11));
  auto combo = sb.coords_in_originals(vectorize(e00));
  REQUIRE(combo.has_value());
  CHECK((*combo).at(0) == q(1, 2));
  CHECK((*combo).at(1) == q(1, 2));
}

TEST_CASE("nullspace of a small exact system") {
  // x + y = 0, y + z = 0 -> 1-dimensional nullspace (1, -1, 1).
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> eqs = {
      {{0, q(1)}, {1, q(1)}},
      {{1, q(1)}, {2, q(1)}},
  };
  auto basis = nullspace(eqs, 3);
  REQUIRE(basis.size() == 1);
  Scalar x = basis[0][0], y = basis[0][1], z = basis[0][2];
  CHECK(x + y == Scalar(0));
  CHECK(y + z == Scalar(0));
  CHECK(x != Scalar(0));
}

TEST_CASE("solve_linear_map recovers a matrix from spanning pairs") {
  // M = [[1, 2], [0, 1]] probed on e1, e2, e1+e2.
  std::vector<std::vector<Scalar>> xs = {{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}};
  std::vector<std::vector<Scalar>> ys = {{q(1), q(0)}, {q(2), q(1)}, {q(3), q(1)}};
  auto m = solve_linear_map(xs, ys, 2);
  REQUIRE(m.has_value());
  CHECK((*m)[0][0] == q(1));
  CHECK((*m)[0][1] == q(2));
  CHECK((*m)[1][0] == q(0));
  CHECK((*m)[1][1] == q(1));

  // Inconsistent data has no linear-map solution.
  ys[2] = {q(0), q(0)};
  CHECK_FALSE(solve_linear_map(xs, ys, 2).has_value());

  // Non-spanning probes are rejected.
  CHECK_FALSE(solve_linear_map({{q(1), q(0)}}, {{q(1), q(0)}}, 2).has_value());
}

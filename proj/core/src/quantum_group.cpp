#include "bicross/quantum_group.hpp"

#include <algorithm>
#include <sstream>

namespace bicross {

namespace {

HilbertIndex pair_space(const MatchedPair& p) {
  return HilbertIndex{p.g.order(), p.h.order()};
}

std::uint64_t tensor_coord(Index four_row, Index four_col, Index d) {
  const Index ra = four_row / d, rb = four_row % d;
  const Index ca = four_col / d, cb = four_col % d;
  return static_cast<std::uint64_t>(ra * d + ca) * (static_cast<std::uint64_t>(d) * d) +
         (rb * d + cb);
}

/// Sparse vector of a two-copy operator in (first-copy coord, second-copy
/// coord) ordering, under which vec(a (x) b) is the outer product of vec(a)
/// and vec(b).
SparseVec tensor_vectorize(const Operator& x, Index d) {
  SparseVec v;
  for (Index r = 0; r < x.dim(); ++r)
    for (const auto& [c, val] : x.rows()[r]) v.emplace(tensor_coord(r, c, d), val);
  return v;
}

}  // namespace

Operator embed_function(const MatchedPair& p, const std::vector<Scalar>& f) {
  if (f.size() != p.h.order())
    throw DimensionError("embed_function: table size != |H|");
  HilbertIndex space = pair_space(p);
  std::vector<Scalar> diag(space.total_dim());
  for (Index g = 0; g < p.g.order(); ++g)
    for (Index s = 0; s < p.h.order(); ++s)
      diag[space.flatten({g, s})] = f[p.alpha[g][s]];
  return Operator::diagonal(std::move(space), diag);
}

Operator left_regular(const MatchedPair& p, Index g) {
  if (g >= p.g.order()) throw DomainError("left_regular: invalid element index");
  HilbertIndex space = pair_space(p);
  const Index ginv = p.g.inv(g);
  return Operator::pullback(space, [&, space](Index x) {
    auto m = space.unflatten(x);
    m[0] = p.g.mul(ginv, m[0]);
    return space.flatten(m);
  });
}

CheckResult coaction_identity_check(const MatchedPair& p, const std::string& name) {
  CheckResult r;
  r.name = "coaction/" + name;
  r.statement = "(iota(x)alpha)alpha = (Delta_G(x)iota)alpha on G x G x H";
  const Index ng = p.g.order(), nh = p.h.order();
  std::int64_t points = 0;
  for (Index u = 0; u < nh; ++u) {  // indicator basis function delta_u
    for (Index g = 0; g < ng; ++g) {
      for (Index g2 = 0; g2 < ng; ++g2) {
        for (Index s = 0; s < nh; ++s) {
          ++points;
          const bool lhs = p.alpha[g][p.alpha[g2][s]] == u;
          const bool rhs = p.alpha[p.g.mul(g, g2)][s] == u;
          if (lhs != rhs) {
            std::ostringstream os;
            os << "f=delta_" << u << " at (g=" << g << ",g'=" << g2 << ",s=" << s << ")";
            r.fail(os.str());
          }
        }
      }
    }
  }
  r.counts["evaluations"] = points;
  return r;
}

Operator multiplicative_unitary(const MatchedPair& p) {
  if (!validate_pair(p).passed)
    throw DataError("multiplicative_unitary: pair data is corrupted");
  const Index ng = p.g.order(), nh = p.h.order();
  HilbertIndex four{ng, nh, ng, nh};
  return Operator::pullback(four, [&, four](Index x) {
    auto m = four.unflatten(x);
    const Index g = m[0], s = m[1], h = m[2], t = m[3];
    const Index u = p.h.mul(p.h.inv(p.alpha[g][s]), t);
    return four.flatten({p.g.mul(p.beta[h][u], g), s, h, u});
  });
}

CheckResult pentagon_check(const Operator& w, const std::string& name) {
  CheckResult r;
  r.name = "pentagon/" + name;
  r.statement = "w12 w13 w23 = w23 w12 on the three-copy space";

  const auto& f = w.space().factors();
  if (f.size() % 2 != 0)
    throw DimensionError("pentagon_check: w is not on a two-copy space");
  const std::size_t k = f.size() / 2;
  for (std::size_t i = 0; i < k; ++i)
    if (f[i] != f[i + k])
      throw DimensionError("pentagon_check: copies have different factors");

  std::vector<Index> triple_factors;
  for (int copy = 0; copy < 3; ++copy)
    triple_factors.insert(triple_factors.end(), f.begin(), f.begin() + k);
  HilbertIndex ambient(triple_factors);

  auto legs = [&](std::size_t c1, std::size_t c2) {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(c1 * k + i);
    for (std::size_t i = 0; i < k; ++i) v.push_back(c2 * k + i);
    return v;
  };
  Operator w12 = place_legs(w, legs(0, 1), ambient);
  Operator w13 = place_legs(w, legs(0, 2), ambient);
  Operator w23 = place_legs(w, legs(1, 2), ambient);

  Operator lhs = w12 * w13 * w23;
  Operator rhs = w23 * w12;
  if (lhs != rhs) {
    Operator diff = lhs - rhs;
    r.fail("difference has " + std::to_string(diff.nnz()) + " nonzero entries, e.g. " +
           diff.str(4));
  }
  r.counts["three_copy_dim"] = ambient.total_dim();
  return r;
}

QuantumGroup build_quantum_group(const MatchedPair& p) {
  if (!validate_pair(p).passed)
    throw DataError("build_quantum_group: pair does not satisfy the matched identities");

  QuantumGroup q;
  q.pair = p;
  q.space = pair_space(p);
  q.two_copy = HilbertIndex::concat(q.space, q.space);
  q.w = multiplicative_unitary(p);

  const Index ng = p.g.order(), nh = p.h.order();
  for (Index s = 0; s < nh; ++s) {
    std::vector<Scalar> f(nh, Scalar(0));
    f[s] = Scalar(1);
    q.h_generators.push_back(embed_function(p, f));
  }
  for (Index g = 0; g < ng; ++g) q.g_generators.push_back(left_regular(p, g));

  std::vector<Operator> gens = q.h_generators;
  gens.insert(gens.end(), q.g_generators.begin(), q.g_generators.end());
  q.algebra_basis = span_saturate(gens);
  q.dim_m = static_cast<Index>(q.algebra_basis.size());

  for (const auto& b : q.algebra_basis) q.membership.insert(vectorize(b));

  auto id_coords = q.membership.coords(vectorize(Operator::identity(q.space)));
  if (!id_coords) throw Error("build_quantum_group: identity escaped the algebra span");
  q.identity_coords = std::move(*id_coords);

  // Comultiplication of every basis element, expanded over b_i (x) b_j.
  Operator w_star = q.w.adjoint();
  for (const auto& b : q.algebra_basis) {
    Operator one_b = place_legs(b, {2, 3}, q.two_copy);
    q.delta_basis.push_back(w_star * one_b * q.w);
  }
  q.delta_coords.resize(q.delta_basis.size());
  for (std::size_t k = 0; k < q.delta_basis.size(); ++k) {
    auto c = coords_in_m_tensor_m(q, q.delta_basis[k]);
    if (!c) {
      q.delta_in_tensor_square = false;
    } else {
      q.delta_coords[k] = std::move(*c);
    }
  }
  return q;
}

std::optional<std::vector<Scalar>> coords_in_m(const QuantumGroup& q,
                                               const Operator& z) {
  if (z.space() != q.space) return std::nullopt;
  return q.membership.coords(vectorize(z));
}

std::optional<std::map<std::pair<std::size_t, std::size_t>, Scalar>>
coords_in_m_tensor_m(const QuantumGroup& q, const Operator& x) {
  if (x.space() != q.two_copy) return std::nullopt;
  const Index d = q.space.total_dim();
  SparseVec v = tensor_vectorize(x, d);

  // In the (first copy, second copy) coordinate split, vec(b_i (x) b_j) is
  // the outer product of two RREF rows, so the coefficient of b_i (x) b_j can
  // be read off at the pivot pair.
  const std::uint64_t dd = static_cast<std::uint64_t>(d) * d;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> coeffs;
  for (std::size_t i = 0; i < q.membership.dim(); ++i) {
    for (std::size_t j = 0; j < q.membership.dim(); ++j) {
      auto it = v.find(q.membership.pivot(i) * dd + q.membership.pivot(j));
      if (it == v.end() || it->second.is_zero()) continue;
      coeffs[{i, j}] = it->second;
    }
  }
  // Verify the expansion reproduces x exactly.
  for (const auto& [ij, c] : coeffs) {
    const SparseVec& vi = q.membership.row(ij.first);
    const SparseVec& vj = q.membership.row(ij.second);
    for (const auto& [ki, xi] : vi) {
      for (const auto& [kj, xj] : vj) {
        const std::uint64_t key = ki * dd + kj;
        auto it = v.find(key);
        Scalar nv = (it == v.end() ? Scalar(0) : it->second) - c * xi * xj;
        if (nv.is_zero()) {
          if (it != v.end()) v.erase(it);
        } else if (it == v.end()) {
          v.emplace(key, std::move(nv));
        } else {
          it->second = std::move(nv);
        }
      }
    }
  }
  if (!v.empty()) return std::nullopt;
  return coeffs;
}

Operator comultiply(const QuantumGroup& q, const Operator& z) {
  if (!coords_in_m(q, z))
    throw DomainError("comultiply: operator lies outside the algebra M");
  Operator one_z = place_legs(z, {2, 3}, q.two_copy);
  return q.w.adjoint() * one_z * q.w;
}

CheckResult coassociativity_check(const QuantumGroup& q, const std::string& name) {
  CheckResult r;
  r.name = "coassociativity/" + name;
  r.statement = "(Delta(x)iota)Delta = (iota(x)Delta)Delta";

  const bool exhaustive = q.space.total_dim() <= 8;
  std::vector<const Operator*> set;
  if (exhaustive) {
    for (const auto& b : q.algebra_basis) set.push_back(&b);
  } else {
    for (const auto& b : q.h_generators) set.push_back(&b);
    for (const auto& b : q.g_generators) set.push_back(&b);
  }
  r.values["check_set"] = exhaustive ? "algebra-basis" : "generators";

  // Three copies of l^2(G x H).
  std::vector<Index> tf;
  for (int c = 0; c < 3; ++c) {
    tf.push_back(q.space.factors()[0]);
    tf.push_back(q.space.factors()[1]);
  }
  HilbertIndex triple(tf);
  Operator w12 = place_legs(q.w, {0, 1, 2, 3}, triple);
  Operator w23 = place_legs(q.w, {2, 3, 4, 5}, triple);
  Operator w12s = w12.adjoint();
  Operator w23s = w23.adjoint();

  std::int64_t checked = 0;
  for (const Operator* z : set) {
    ++checked;
    Operator dz = comultiply(q, *z);
    Operator lhs = w12s * place_legs(dz, {2, 3, 4, 5}, triple) * w12;
    Operator rhs = w23s * place_legs(dz, {0, 1, 4, 5}, triple) * w23;
    if (lhs != rhs)
      r.fail("element #" + std::to_string(checked - 1) + ": sides differ, diff nnz=" +
             std::to_string((lhs - rhs).nnz()));
  }
  r.counts["elements_checked"] = checked;
  return r;
}

InvarianceResult find_invariant_functionals(const QuantumGroup& q, Side side,
                                            const std::string& name) {
  const std::size_t n = q.dim();
  const Index d = q.space.total_dim();

  // One equation per basis element a_k and matrix-coefficient functional
  // omega_{rc}. For the left side:
  //   sum_{ij} coords[k][{i,j}] b_i[r,c] phi_j - [r==c] phi_k = 0,
  // and mirrored for the right side.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> equations;
  for (std::size_t k = 0; k < n; ++k) {
    std::map<std::pair<Index, Index>, std::map<std::size_t, Scalar>> buckets;
    for (const auto& [ij, coeff] : q.delta_coords[k]) {
      const std::size_t sliced = side == Side::kLeft ? ij.first : ij.second;
      const std::size_t kept = side == Side::kLeft ? ij.second : ij.first;
      const Operator& bs = q.algebra_basis[sliced];
      for (Index r = 0; r < d; ++r) {
        for (const auto& [c, v] : bs.rows()[r]) {
          auto& row = buckets[{r, c}];
          auto it = row.find(kept);
          if (it == row.end())
            row.emplace(kept, coeff * v);
          else
            it->second += coeff * v;
        }
      }
    }
    // Diagonal functionals constrain even when the sliced side vanishes.
    for (Index r = 0; r < d; ++r) buckets[{r, r}];
    for (auto& [rc, row] : buckets) {
      if (rc.first == rc.second) {
        auto it = row.find(k);
        if (it == row.end())
          row.emplace(k, Scalar(-1));
        else
          it->second -= Scalar(1);
      }
      std::vector<std::pair<std::size_t, Scalar>> eq;
      for (auto& [j, v] : row)
        if (!v.is_zero()) eq.emplace_back(j, std::move(v));
      if (!eq.empty()) equations.push_back(std::move(eq));
    }
  }

  InvarianceResult out;
  auto sols = nullspace(equations, n);
  out.check.name = std::string(side == Side::kLeft ? "haar-left/" : "haar-right/") + name;
  out.check.statement = side == Side::kLeft
                            ? "phi((omega(x)iota)Delta(a)) = omega(1) phi(a)"
                            : "psi((iota(x)omega)Delta(a)) = omega(1) psi(a)";
  out.check.counts["solution_dim"] = static_cast<std::int64_t>(sols.size());
  if (sols.size() != 1)
    out.check.fail("solution space dimension " + std::to_string(sols.size()) +
                   " (expected 1)");

  for (auto& s : sols) {
    LinearFunctional f{std::move(s)};
    if (sols.size() == 1) {
      Scalar at_one = evaluate_at_identity(q, f);
      if (!at_one.is_zero()) {
        Scalar scale = Scalar(static_cast<long>(q.dim())) / at_one;
        for (auto& v : f.values) v *= scale;
      }
    }
    out.solutions.push_back(std::move(f));
  }
  return out;
}

LinearFunctional dual_weight_candidate(const QuantumGroup& q) {
  const Index ng = q.pair.g.order(), nh = q.pair.h.order();
  // Structured products embed(delta_s) * lambda_g, inserted in (s, g) order.
  SpanBasis structured(/*track_combinations=*/true);
  for (Index s = 0; s < nh; ++s)
    for (Index g = 0; g < ng; ++g)
      structured.insert(vectorize(q.h_generators[s] * q.g_generators[g]));
  if (structured.dim() != q.dim())
    throw Error("dual_weight_candidate: product generators do not form a basis");

  const Index ge = q.pair.g.identity();
  LinearFunctional f;
  f.values.reserve(q.dim());
  for (const auto& b : q.algebra_basis) {
    auto combo = structured.coords_in_originals(vectorize(b));
    if (!combo) throw Error("dual_weight_candidate: basis expansion failed");
    Scalar v(0);
    for (const auto& [orig, c] : *combo) {
      if (orig % ng == ge) v += c;  // counting functional hits lambda_e only
    }
    f.values.push_back(std::move(v));
  }
  return f;
}

Scalar evaluate(const QuantumGroup& q, const LinearFunctional& f, const Operator& z) {
  auto c = coords_in_m(q, z);
  if (!c) throw DomainError("evaluate: operator outside M");
  Scalar out(0);
  for (std::size_t k = 0; k < f.values.size(); ++k) out += (*c)[k] * f.values[k];
  return out;
}

Scalar evaluate_at_identity(const QuantumGroup& q, const LinearFunctional& f) {
  Scalar out(0);
  for (std::size_t k = 0; k < f.values.size(); ++k)
    out += q.identity_coords[k] * f.values[k];
  return out;
}

bool proportional(const LinearFunctional& a, const LinearFunctional& b) {
  if (a.values.size() != b.values.size()) return false;
  std::size_t k = 0;
  while (k < b.values.size() && b.values[k].is_zero()) ++k;
  if (k == b.values.size()) return false;  // b = 0
  if (a.values[k].is_zero()) return false;
  Scalar ratio = a.values[k] / b.values[k];
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != ratio * b.values[i]) return false;
  return true;
}

CounitResult compute_counit(const QuantumGroup& q) {
  const std::size_t n = q.dim();
  // Unknowns (eps_0..eps_{n-1}, t); the inhomogeneous right-hand sides are
  // carried by t and the solution is rescaled to t = 1.
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> equations;
  for (std::size_t k = 0; k < n; ++k) {
    std::map<std::size_t, std::map<std::size_t, Scalar>> by_j, by_i;
    for (const auto& [ij, c] : q.delta_coords[k]) {
      by_j[ij.second][ij.first] += c;
      by_i[ij.first][ij.second] += c;
    }
    for (std::size_t j = 0; j < n; ++j) {
      auto it = by_j.find(j);
      std::vector<std::pair<std::size_t, Scalar>> eq;
      if (it != by_j.end())
        for (auto& [i, c] : it->second)
          if (!c.is_zero()) eq.emplace_back(i, c);
      if (j == k) eq.emplace_back(n, Scalar(-1));
      if (!eq.empty()) equations.push_back(std::move(eq));
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto it = by_i.find(i);
      std::vector<std::pair<std::size_t, Scalar>> eq;
      if (it != by_i.end())
        for (auto& [j, c] : it->second)
          if (!c.is_zero()) eq.emplace_back(j, c);
      if (i == k) eq.emplace_back(n, Scalar(-1));
      if (!eq.empty()) equations.push_back(std::move(eq));
    }
  }

  auto sols = nullspace(equations, n + 1);
  CounitResult out;
  out.check.name = "counit";
  out.check.statement = "(eps(x)iota)Delta = iota = (iota(x)eps)Delta, unique solution";
  out.check.counts["solution_dim"] = static_cast<std::int64_t>(sols.size());

  std::optional<std::vector<Scalar>> pick;
  for (auto& s : sols) {
    if (!s[n].is_zero()) {
      if (pick) {
        pick.reset();
        break;
      }
      pick = s;
    }
  }
  if (sols.size() != 1 || !pick) {
    if (sols.empty() || std::none_of(sols.begin(), sols.end(),
                                     [&](const auto& s) { return !s[n].is_zero(); }))
      throw Error("compute_counit: no solution (assembly bug)");
    out.check.fail("counit solve not unique: nullspace dim " +
                   std::to_string(sols.size()));
    return out;
  }

  Scalar t = (*pick)[n];
  out.counit.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.counit.values[i] = (*pick)[i] / t;

  // Independent operator-level verification of both counit laws.
  for (std::size_t k = 0; k < n; ++k) {
    Operator left = Operator::zero(q.space), right = Operator::zero(q.space);
    for (const auto& [ij, c] : q.delta_coords[k]) {
      left += (c * out.counit.values[ij.first]) * q.algebra_basis[ij.second];
      right += (c * out.counit.values[ij.second]) * q.algebra_basis[ij.first];
    }
    if (left != q.algebra_basis[k])
      out.check.fail("(eps(x)iota)Delta fails on basis element " + std::to_string(k));
    if (right != q.algebra_basis[k])
      out.check.fail("(iota(x)eps)Delta fails on basis element " + std::to_string(k));
  }
  out.check.counts["basis_elements"] = static_cast<std::int64_t>(n);
  return out;
}

namespace {

std::vector<Scalar> map_coords(const std::vector<std::vector<Scalar>>& m,
                               const std::vector<Scalar>& x) {
  const std::size_t n = m.size();
  std::vector<Scalar> y(n, Scalar(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!m[r][c].is_zero() && !x[c].is_zero()) y[r] += m[r][c] * x[c];
  return y;
}

}  // namespace

Operator apply_linear_map(const QuantumGroup& q,
                          const std::vector<std::vector<Scalar>>& matrix,
                          const Operator& z) {
  auto c = coords_in_m(q, z);
  if (!c) throw DomainError("apply_linear_map: operator outside M");
  std::vector<Scalar> y = map_coords(matrix, *c);
  Operator out = Operator::zero(q.space);
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!y[k].is_zero()) out += y[k] * q.algebra_basis[k];
  return out;
}

AntipodeResult compute_antipode(const QuantumGroup& q, const LinearFunctional& phi,
                                const LinearFunctional& counit) {
  const std::size_t n = q.dim();
  AntipodeResult out;
  out.check.name = "antipode";
  out.check.statement =
      "S((iota(x)phi)(Delta(a)(1(x)b))) = (iota(x)phi)((1(x)a)Delta(b)); "
      "anti-multiplicative; m(S(x)iota)Delta = eps(.)1 = m(iota(x)S)Delta";

  // Slice coordinates for every basis pair (a, b).
  std::vector<std::vector<Scalar>> xs, ys;
  xs.reserve(n * n);
  ys.reserve(n * n);
  SpanBasis slice_span;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Operator one_b = place_legs(q.algebra_basis[b], {2, 3}, q.two_copy);
      auto dx = coords_in_m_tensor_m(q, q.delta_basis[a] * one_b);
      Operator one_a = place_legs(q.algebra_basis[a], {2, 3}, q.two_copy);
      auto dy = coords_in_m_tensor_m(q, one_a * q.delta_basis[b]);
      if (!dx || !dy) {
        out.check.fail("slice escaped M (x) M at pair (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
        return out;
      }
      std::vector<Scalar> x(n, Scalar(0)), y(n, Scalar(0));
      for (const auto& [ij, c] : *dx) x[ij.first] += c * phi.values[ij.second];
      for (const auto& [ij, c] : *dy) y[ij.first] += c * phi.values[ij.second];
      SparseVec xv;
      for (std::size_t k = 0; k < n; ++k)
        if (!x[k].is_zero()) xv.emplace(k, x[k]);
      slice_span.insert(std::move(xv));
      xs.push_back(std::move(x));
      ys.push_back(std::move(y));
    }
  }

  out.slices_span = slice_span.dim() == n;
  out.check.counts["slice_span_dim"] = static_cast<std::int64_t>(slice_span.dim());
  if (!out.slices_span) {
    out.check.fail("slices span a " + std::to_string(slice_span.dim()) +
                   "-dimensional subspace of M, antipode left undefined");
    return out;
  }

  auto m = solve_linear_map(xs, ys, n);
  if (!m) {
    out.check.fail("strong invariance relation is not a well-defined linear map");
    return out;
  }
  out.matrix = std::move(*m);

  // Anti-multiplicativity on all basis pairs.
  std::vector<Operator> s_basis;
  s_basis.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Operator sk = Operator::zero(q.space);
    for (std::size_t r = 0; r < n; ++r)
      if (!out.matrix[r][k].is_zero()) sk += out.matrix[r][k] * q.algebra_basis[r];
    s_basis.push_back(std::move(sk));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Operator lhs = apply_linear_map(q, out.matrix, q.algebra_basis[i] * q.algebra_basis[j]);
      if (lhs != s_basis[j] * s_basis[i]) {
        out.check.fail("S(ab) != S(b)S(a) at basis pair (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
      }
    }
  }

  // Antipode laws against the counit.
  Operator one = Operator::identity(q.space);
  for (std::size_t k = 0; k < n; ++k) {
    Operator lhs = Operator::zero(q.space), rhs = Operator::zero(q.space);
    for (const auto& [ij, c] : q.delta_coords[k]) {
      lhs += c * (s_basis[ij.first] * q.algebra_basis[ij.second]);
      rhs += c * (q.algebra_basis[ij.first] * s_basis[ij.second]);
    }
    Operator expected = counit.values[k] * one;
    if (lhs != expected)
      out.check.fail("m(S(x)iota)Delta != eps(.)1 on basis element " + std::to_string(k));
    if (rhs != expected)
      out.check.fail("m(iota(x)S)Delta != eps(.)1 on basis element " + std::to_string(k));
  }

  // Record whether S^2 = id (the Kac property in this finite setting).
  out.s_squared_is_identity = true;
  for (std::size_t i = 0; i < n && out.s_squared_is_identity; ++i) {
    std::vector<Scalar> e(n, Scalar(0));
    e[i] = Scalar(1);
    std::vector<Scalar> s2 = map_coords(out.matrix, map_coords(out.matrix, e));
    for (std::size_t r = 0; r < n; ++r) {
      if (s2[r] != (r == i ? Scalar(1) : Scalar(0))) {
        out.s_squared_is_identity = false;
        break;
      }
    }
  }
  out.check.values["s_squared_is_identity"] = out.s_squared_is_identity ? "true" : "false";
  out.check.counts["basis_pairs"] = static_cast<std::int64_t>(n * n);
  return out;
}

DualResult build_dual(const QuantumGroup& q) {
  DualResult out;
  const Index d = q.space.total_dim();
  Operator sigma = copy_swap(q.two_copy, 2);
  out.w_hat = sigma * q.w.adjoint() * sigma;
  out.pentagon = pentagon_check(out.w_hat, "dual");

  // First-leg slices (omega_{rc} (x) iota)(w).
  std::map<std::pair<Index, Index>, std::vector<std::tuple<Index, Index, Scalar>>> slices;
  for (Index r = 0; r < q.w.dim(); ++r) {
    for (const auto& [c, v] : q.w.rows()[r]) {
      const Index ra = r / d, rb = r % d;
      const Index ca = c / d, cb = c % d;
      slices[{ra, ca}].emplace_back(rb, cb, v);
    }
  }
  std::vector<Operator> gens;
  gens.reserve(slices.size());
  for (const auto& [rc, entries] : slices)
    gens.push_back(Operator::from_entries(q.space, entries));
  out.algebra_basis = span_saturate(gens);
  out.commutative = basis_commutative(out.algebra_basis);
  out.center_dim = center_dimension(out.algebra_basis);
  return out;
}

bool basis_commutative(const std::vector<Operator>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i] * basis[j] != basis[j] * basis[i]) return false;
  return true;
}

std::size_t center_dimension(const std::vector<Operator>& basis) {
  // z = sum_i z_i b_i is central iff sum_i z_i (b_i b_k - b_k b_i) = 0 for
  // every k; one equation per (k, matrix coordinate).
  const std::size_t n = basis.size();
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> equations;
  for (std::size_t k = 0; k < n; ++k) {
    std::map<std::uint64_t, std::vector<std::pair<std::size_t, Scalar>>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Operator comm = basis[i] * basis[k] - basis[k] * basis[i];
      for (const auto& [coord, v] : vectorize(comm)) rows[coord].emplace_back(i, v);
    }
    for (auto& [coord, eq] : rows) equations.push_back(std::move(eq));
  }
  return nullspace(equations, n).size();
}

}  // namespace bicross

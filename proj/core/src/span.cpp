#include "bicross/span.hpp"

#include <algorithm>
#include <tuple>

namespace bicross {

namespace {

void axpy(SparseVec& v, const Scalar& c, const SparseVec& w) {
  if (c.is_zero()) return;
  for (const auto& [k, val] : w) {
    auto it = v.find(k);
    if (it == v.end()) {
      Scalar nv = c * val;
      if (!nv.is_zero()) v.emplace(k, std::move(nv));
    } else {
      it->second += c * val;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

void combo_axpy(std::map<std::size_t, Scalar>& v, const Scalar& c,
                const std::map<std::size_t, Scalar>& w) {
  if (c.is_zero()) return;
  for (const auto& [k, val] : w) {
    auto it = v.find(k);
    if (it == v.end()) {
      Scalar nv = c * val;
      if (!nv.is_zero()) v.emplace(k, std::move(nv));
    } else {
      it->second += c * val;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

}  // namespace

SparseVec vectorize(const Operator& op) {
  SparseVec v;
  const std::uint64_t dim = op.dim();
  for (Index r = 0; r < op.dim(); ++r)
    for (const auto& [c, val] : op.rows()[r]) v.emplace(r * dim + c, val);
  return v;
}

Operator devectorize(const HilbertIndex& space, const SparseVec& v) {
  const std::uint64_t dim = space.total_dim();
  std::vector<std::tuple<Index, Index, Scalar>> entries;
  entries.reserve(v.size());
  for (const auto& [k, val] : v)
    entries.emplace_back(static_cast<Index>(k / dim),
                         static_cast<Index>(k % dim), val);
  return Operator::from_entries(space, entries);
}

bool SpanBasis::insert(SparseVec v) {
  const std::size_t original = inserted_++;
  std::map<std::size_t, Scalar> combo;
  if (track_) combo.emplace(original, Scalar(1));

  for (const auto& row : rows_) {
    auto it = v.find(row.pivot);
    if (it == v.end()) continue;
    Scalar c = -it->second;
    axpy(v, c, row.vec);
    if (track_) combo_axpy(combo, c, row.combo);
  }
  if (v.empty()) return false;

  const std::uint64_t piv = v.begin()->first;
  Scalar lead_inv = Scalar(1) / v.begin()->second;
  for (auto& [k, val] : v) val *= lead_inv;
  if (track_)
    for (auto& [k, val] : combo) val *= lead_inv;

  // Clear the new pivot column in the existing rows.
  for (auto& row : rows_) {
    auto it = row.vec.find(piv);
    if (it == row.vec.end()) continue;
    Scalar c = -it->second;
    axpy(row.vec, c, v);
    if (track_) combo_axpy(row.combo, c, combo);
  }

  Row nr{piv, std::move(v), std::move(combo)};
  auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), piv,
      [](const Row& r, std::uint64_t p) { return r.pivot < p; });
  rows_.insert(pos, std::move(nr));
  return true;
}

std::optional<std::vector<Scalar>> SpanBasis::coords(const SparseVec& v) const {
  std::vector<Scalar> coeffs(rows_.size(), Scalar(0));
  SparseVec residual = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    auto it = residual.find(rows_[k].pivot);
    if (it == residual.end()) continue;
    coeffs[k] = it->second;
    axpy(residual, -coeffs[k], rows_[k].vec);
  }
  if (!residual.empty()) return std::nullopt;
  return coeffs;
}

std::optional<std::map<std::size_t, Scalar>> SpanBasis::coords_in_originals(
    const SparseVec& v) const {
  if (!track_) throw Error("SpanBasis: combination tracking disabled");
  auto c = coords(v);
  if (!c) return std::nullopt;
  std::map<std::size_t, Scalar> out;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    combo_axpy(out, (*c)[k], rows_[k].combo);
  return out;
}

std::vector<Operator> span_saturate(const std::vector<Operator>& generators) {
  if (generators.empty()) throw DataError("span_saturate: no generators");
  const HilbertIndex& space = generators.front().space();
  for (const auto& g : generators)
    if (g.space() != space)
      throw DimensionError("span_saturate: generators on different spaces");

  SpanBasis sb;
  std::vector<Operator> reps;
  auto consider = [&](const Operator& op) {
    if (sb.insert(vectorize(op))) reps.push_back(op);
  };

  consider(Operator::identity(space));
  for (const auto& g : generators) consider(g);

  // Multiply representatives pairwise until the span stabilizes. Pairs
  // involving newly found elements are queued by restarting the scan window.
  std::size_t tried = 0;
  while (true) {
    const std::size_t n = reps.size();
    if (tried == n * n) break;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        consider(reps[i] * reps[j]);
      }
    }
    tried = n * n;
  }

  std::vector<Operator> basis;
  basis.reserve(sb.dim());
  for (std::size_t k = 0; k < sb.dim(); ++k)
    basis.push_back(devectorize(space, sb.row(k)));
  return basis;
}

std::vector<std::vector<Scalar>> nullspace(
    const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& equations,
    std::size_t unknowns) {
  SpanBasis sb;
  for (const auto& eq : equations) {
    SparseVec v;
    for (const auto& [idx, c] : eq) {
      if (idx >= unknowns) throw DimensionError("nullspace: unknown out of range");
      if (!c.is_zero()) {
        auto it = v.find(idx);
        if (it == v.end())
          v.emplace(idx, c);
        else {
          it->second += c;
          if (it->second.is_zero()) v.erase(it);
        }
      }
    }
    if (!v.empty()) sb.insert(std::move(v));
  }

  std::vector<bool> is_pivot(unknowns, false);
  for (std::size_t k = 0; k < sb.dim(); ++k) is_pivot[sb.pivot(k)] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> sol(unknowns, Scalar(0));
    sol[free] = Scalar(1);
    for (std::size_t k = 0; k < sb.dim(); ++k) {
      auto it = sb.row(k).find(free);
      if (it != sb.row(k).end()) sol[sb.pivot(k)] = -it->second;
    }
    basis.push_back(std::move(sol));
  }
  return basis;
}

std::optional<std::vector<std::vector<Scalar>>> solve_linear_map(
    const std::vector<std::vector<Scalar>>& xs,
    const std::vector<std::vector<Scalar>>& ys, std::size_t n) {
  if (xs.size() != ys.size()) throw DimensionError("solve_linear_map: pair count");
  // Row-reduce the augmented system (x_k | y_k); M x = y transposes to
  // x^T M^T = y^T, so a pivot row (e_i | z) pins column i of M to z.
  SpanBasis sb;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k].size() != n || ys[k].size() != n)
      throw DimensionError("solve_linear_map: vector length");
    SparseVec v;
    for (std::size_t j = 0; j < n; ++j) {
      if (!xs[k][j].is_zero()) v.emplace(j, xs[k][j]);
      if (!ys[k][j].is_zero()) v.emplace(n + j, ys[k][j]);
    }
    if (v.empty()) continue;
    if (v.begin()->first >= n) return std::nullopt;  // 0 -> nonzero: inconsistent
    sb.insert(std::move(v));
  }
  // Need the x-parts to span: exactly n rows, pivots 0..n-1 in the x block.
  if (sb.dim() != n) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k)
    if (sb.pivot(k) != k) return std::nullopt;

  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    // Full RREF means row i is exactly (e_i | column i of M).
    for (const auto& [coord, val] : sb.row(i)) {
      if (coord < n) {
        if (coord != i) return std::nullopt;
      } else {
        m[coord - n][i] = val;
      }
    }
  }
  return m;
}

}  // namespace bicross

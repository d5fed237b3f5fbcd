#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bicross/operator.hpp"
#include "bicross/scalar.hpp"

namespace bicross {

/// Sparse exact vector keyed by a 64-bit coordinate. Operators vectorize as
/// coordinate r * dim + c.
using SparseVec = std::map<std::uint64_t, Scalar>;

SparseVec vectorize(const Operator& op);
Operator devectorize(const HilbertIndex& space, const SparseVec& v);

/// Reduced row echelon basis of a growing subspace of sparse exact vectors.
/// Rows are kept pivot-sorted with unit pivots and pivot columns cleared in
/// all other rows, so the row set is the canonical RREF basis of the span,
/// independent of insertion order. Optionally tracks each row as an explicit
/// linear combination of the originally inserted vectors.
class SpanBasis {
 public:
  explicit SpanBasis(bool track_combinations = false)
      : track_(track_combinations) {}

  /// Inserts a vector; returns true if the rank grew.
  bool insert(SparseVec v);

  std::size_t dim() const { return rows_.size(); }
  std::size_t inserted_count() const { return inserted_; }

  const SparseVec& row(std::size_t k) const { return rows_[k].vec; }
  std::uint64_t pivot(std::size_t k) const { return rows_[k].pivot; }

  /// Coordinates of v over the RREF rows, or nullopt if v is not in the span.
  std::optional<std::vector<Scalar>> coords(const SparseVec& v) const;

  bool contains(const SparseVec& v) const { return coords(v).has_value(); }

  /// Expansion of v over the originally inserted vectors (requires tracking).
  /// Entries are (original insertion index, coefficient).
  std::optional<std::map<std::size_t, Scalar>> coords_in_originals(
      const SparseVec& v) const;

 private:
  struct Row {
    std::uint64_t pivot = 0;
    SparseVec vec;
    std::map<std::size_t, Scalar> combo;  // over original insertion indices
  };

  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;  // sorted by pivot
};

/// Canonical (RREF) basis of the smallest unital algebra containing the
/// generators, obtained by saturating the linear span under multiplication.
/// Always terminates: the dimension is bounded by total_dim^2.
std::vector<Operator> span_saturate(const std::vector<Operator>& generators);

/// Basis of the solution space of the homogeneous system rows * x = 0.
/// Each equation row holds (unknown index, coefficient) pairs.
std::vector<std::vector<Scalar>> nullspace(
    const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& equations,
    std::size_t unknowns);

/// Solves for the n x n matrix M with M * x_k = y_k for all pairs.
/// Returns nullopt when the x_k do not span (underdetermined) or the system
/// is inconsistent (no linear map exists).
std::optional<std::vector<std::vector<Scalar>>> solve_linear_map(
    const std::vector<std::vector<Scalar>>& xs,
    const std::vector<std::vector<Scalar>>& ys, std::size_t n);

}  // namespace bicross

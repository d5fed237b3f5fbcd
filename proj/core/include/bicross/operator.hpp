#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bicross/hilbert.hpp"
#include "bicross/scalar.hpp"

namespace bicross {

/// A square operator on an indexed finite-dimensional Hilbert space, stored
/// sparsely as per-row lists of (column, value) pairs sorted by column.
/// Values are exact Gaussian rationals and entries are never zero, so
/// operator equality is entrywise-exact equality of the representations.
///
/// The sparse representation is shared by everything from 2x2 toys up to the
/// triple-tensor-leg permutation products in the pentagon checks, where dense
/// storage would be infeasible.
class Operator {
 public:
  using Entry = std::pair<Index, Scalar>;

  Operator() = default;

  static Operator zero(HilbertIndex space);
  static Operator identity(HilbertIndex space);
  static Operator diagonal(HilbertIndex space, const std::vector<Scalar>& diag);

  /// The operator P with (P xi)(x) = xi(point_map(x)); i.e. P has its row-x
  /// unit entry in column point_map(x). Throws DataError unless point_map is
  /// a bijection of the basis.
  static Operator pullback(HilbertIndex space,
                           const std::function<Index(Index)>& point_map);

  /// Builds from an unsorted coordinate list (duplicates are accumulated).
  static Operator from_entries(
      HilbertIndex space,
      const std::vector<std::tuple<Index, Index, Scalar>>& entries);

  const HilbertIndex& space() const { return space_; }
  Index dim() const { return space_.total_dim(); }
  const std::vector<std::vector<Entry>>& rows() const { return rows_; }

  Scalar entry(Index r, Index c) const;
  std::size_t nnz() const;
  bool is_zero() const;

  /// Exactly one entry per row and per column, every entry equal to 1.
  bool is_permutation() const;

  Operator adjoint() const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(const Scalar& c, Operator a);

  friend bool operator==(const Operator& a, const Operator& b);
  friend bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

  /// Debug rendering of the nonzero entries.
  std::string str(std::size_t max_entries = 24) const;

 private:
  explicit Operator(HilbertIndex space);
  void set_unit(Index r, Index c) { rows_[r].push_back({c, Scalar(1)}); }

  HilbertIndex space_;
  std::vector<std::vector<Entry>> rows_;
};

/// Kronecker product with row-major index flattening: the result lives on
/// concat(a.space, b.space) and (a (x) b)[(ra,rb),(ca,cb)] = a[ra,ca]*b[rb,cb].
Operator tensor(const Operator& a, const Operator& b);

/// Places `op` on the listed ambient factor positions (op factor k acts on
/// ambient factor legs[k]) and acts as the identity elsewhere. Legs must be
/// distinct and their ambient factor sizes must match op's factors.
Operator place_legs(const Operator& op, const std::vector<std::size_t>& legs,
                    const HilbertIndex& ambient);

/// The flip of a two-copy space: copy sizes (d, d), point (x, y) -> (y, x).
Operator copy_swap(const HilbertIndex& two_copy_space, std::size_t factors_per_copy);

}  // namespace bicross

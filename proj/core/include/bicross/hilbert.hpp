#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bicross/errors.hpp"

namespace bicross {

using Index = std::uint32_t;

/// An indexed finite-dimensional Hilbert space presented as an ordered tensor
/// product of factors. Multi-indices flatten row-major over the factor list;
/// that convention is fixed globally so point-transformation formulas map to
/// matrices deterministically.
class HilbertIndex {
 public:
  HilbertIndex() = default;
  explicit HilbertIndex(std::vector<Index> factor_sizes);
  HilbertIndex(std::initializer_list<Index> sizes)
      : HilbertIndex(std::vector<Index>(sizes)) {}

  const std::vector<Index>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  Index total_dim() const { return total_; }

  Index flatten(const std::vector<Index>& multi) const;
  std::vector<Index> unflatten(Index flat) const;

  /// Concatenation of factor lists; the index space of a tensor product.
  static HilbertIndex concat(const HilbertIndex& a, const HilbertIndex& b);

  friend bool operator==(const HilbertIndex& a, const HilbertIndex& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const HilbertIndex& a, const HilbertIndex& b) {
    return !(a == b);
  }

 private:
  std::vector<Index> factors_;
  Index total_ = 1;
};

}  // namespace bicross

#include "bicross/hilbert.hpp"

#include <limits>

namespace bicross {

HilbertIndex::HilbertIndex(std::vector<Index> factor_sizes)
    : factors_(std::move(factor_sizes)) {
  std::uint64_t total = 1;
  for (Index f : factors_) {
    if (f == 0) throw DimensionError("HilbertIndex: zero factor size");
    total *= f;
    if (total > std::numeric_limits<Index>::max())
      throw DimensionError("HilbertIndex: total dimension overflow");
  }
  total_ = static_cast<Index>(total);
}

Index HilbertIndex::flatten(const std::vector<Index>& multi) const {
  if (multi.size() != factors_.size())
    throw DimensionError("HilbertIndex::flatten: rank mismatch");
  Index flat = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (multi[k] >= factors_[k])
      throw DimensionError("HilbertIndex::flatten: index out of range");
    flat = flat * factors_[k] + multi[k];
  }
  return flat;
}

std::vector<Index> HilbertIndex::unflatten(Index flat) const {
  if (flat >= total_) throw DimensionError("HilbertIndex::unflatten: out of range");
  std::vector<Index> multi(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    multi[k] = flat % factors_[k];
    flat /= factors_[k];
  }
  return multi;
}

HilbertIndex HilbertIndex::concat(const HilbertIndex& a, const HilbertIndex& b) {
  std::vector<Index> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return HilbertIndex(std::move(f));
}

}  // namespace bicross

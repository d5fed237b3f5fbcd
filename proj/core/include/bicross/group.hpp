#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicross/check.hpp"
#include "bicross/errors.hpp"
#include "bicross/hilbert.hpp"

namespace bicross {

/// A finite group given by its multiplication table. Elements are indices
/// 0..order-1; identity and inverse tables are derived on construction.
class FiniteGroup {
 public:
  /// Builds from a square table (table[a][b] = a*b). Derives the identity
  /// and inverses, throwing DataError when they do not exist. Associativity
  /// is *not* checked here; validate_group reports on it exhaustively.
  static FiniteGroup from_table(std::vector<std::vector<Index>> table,
                                std::vector<std::string> labels = {});

  Index order() const { return order_; }
  Index mul(Index a, Index b) const { return table_[a][b]; }
  Index identity() const { return identity_; }
  Index inv(Index a) const { return inv_[a]; }
  const std::vector<std::vector<Index>>& table() const { return table_; }
  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  Index order_ = 0;
  std::vector<std::vector<Index>> table_;
  Index identity_ = 0;
  std::vector<Index> inv_;
  std::vector<std::string> labels_;
};

/// Exhaustively checks the group laws: closure/latin-square shape,
/// associativity over all triples, identity and inverse laws. Violations are
/// report content, one record per offending tuple.
CheckResult validate_group(const FiniteGroup& g, const std::string& name = "group");

/// Built-in groups: cyclic Z_n and symmetric S_n (indexed by lexicographic
/// rank of the permutation word, composed as mappings).
FiniteGroup cyclic_group(Index n);
FiniteGroup symmetric_group(Index n);

/// Named presets: Z2 Z3 Z4 Z6 S3 S4.
std::optional<FiniteGroup> group_preset(const std::string& name);
std::vector<std::string> group_preset_names();

}  // namespace bicross

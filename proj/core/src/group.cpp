#include "bicross/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace bicross {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Index>> table,
                                    std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = static_cast<Index>(table.size());
  if (g.order_ == 0) throw DataError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != g.order_) throw DataError("group table is not square");
    for (Index x : row)
      if (x >= g.order_) throw DataError("group table entry out of range");
  }
  g.table_ = std::move(table);

  // Identity: the unique e with e*x = x*e = x for all x.
  bool found = false;
  for (Index e = 0; e < g.order_; ++e) {
    bool ok = true;
    for (Index x = 0; x < g.order_ && ok; ++x)
      ok = g.table_[e][x] == x && g.table_[x][e] == x;
    if (ok) {
      g.identity_ = e;
      found = true;
      break;
    }
  }
  if (!found) throw DataError("group table has no identity element");

  g.inv_.assign(g.order_, 0);
  for (Index a = 0; a < g.order_; ++a) {
    bool has = false;
    for (Index b = 0; b < g.order_; ++b) {
      if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) {
        g.inv_[a] = b;
        has = true;
        break;
      }
    }
    if (!has) {
      std::ostringstream os;
      os << "group table: element " << a << " has no inverse";
      throw DataError(os.str());
    }
  }

  if (labels.empty()) {
    for (Index a = 0; a < g.order_; ++a) labels.push_back(std::to_string(a));
  }
  if (labels.size() != g.order_) throw DataError("group labels: length mismatch");
  g.labels_ = std::move(labels);
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (Index a = 0; a < order_; ++a)
    for (Index b = a + 1; b < order_; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

CheckResult validate_group(const FiniteGroup& g, const std::string& name) {
  CheckResult r;
  r.name = "validate-group/" + name;
  r.statement = "associativity, identity, inverses, latin-square rows/columns";
  const Index n = g.order();

  for (Index a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (Index b = 0; b < n; ++b) {
      Index ab = g.mul(a, b), ba = g.mul(b, a);
      if (row[ab]) r.fail("row " + std::to_string(a) + " repeats " + std::to_string(ab));
      if (col[ba]) r.fail("column " + std::to_string(a) + " repeats " + std::to_string(ba));
      row[ab] = col[ba] = true;
    }
  }

  std::int64_t triples = 0;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        ++triples;
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          std::ostringstream os;
          os << "associativity fails at (" << a << "," << b << "," << c << ")";
          r.fail(os.str());
        }
      }
    }
  }
  r.counts["associativity_triples"] = triples;

  const Index e = g.identity();
  for (Index a = 0; a < n; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a)
      r.fail("identity law fails at " + std::to_string(a));
    if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e)
      r.fail("inverse law fails at " + std::to_string(a));
  }
  r.counts["order"] = n;
  return r;
}

FiniteGroup cyclic_group(Index n) {
  if (n == 0) throw DataError("cyclic_group: order must be positive");
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  std::vector<std::string> labels(n);
  for (Index a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (Index b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

namespace {

std::vector<std::vector<Index>> all_permutations(Index n) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<Index>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return perms;
}

std::string cycle_label(const std::vector<Index>& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (Index start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    s += "(";
    Index x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) s += " ";
      s += std::to_string(x + 1);  // 1-based in labels
      first = false;
      x = p[x];
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

}  // namespace

FiniteGroup symmetric_group(Index n) {
  auto perms = all_permutations(n);
  const Index order = static_cast<Index>(perms.size());
  std::map<std::vector<Index>, Index> rank;
  for (Index k = 0; k < order; ++k) rank[perms[k]] = k;

  std::vector<std::vector<Index>> t(order, std::vector<Index>(order));
  std::vector<std::string> labels(order);
  for (Index a = 0; a < order; ++a) {
    labels[a] = cycle_label(perms[a]);
    for (Index b = 0; b < order; ++b) {
      // (a*b)(x) = a(b(x)): apply b first.
      std::vector<Index> ab(n);
      for (Index x = 0; x < n; ++x) ab[x] = perms[a][perms[b][x]];
      t[a][b] = rank[ab];
    }
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

std::optional<FiniteGroup> group_preset(const std::string& name) {
  if (name == "Z2") return cyclic_group(2);
  if (name == "Z3") return cyclic_group(3);
  if (name == "Z4") return cyclic_group(4);
  if (name == "Z6") return cyclic_group(6);
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  return std::nullopt;
}

std::vector<std::string> group_preset_names() {
  return {"Z2", "Z3", "Z4", "Z6", "S3", "S4"};
}

}  // namespace bicross

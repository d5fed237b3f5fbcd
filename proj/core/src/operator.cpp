#include "bicross/operator.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace bicross {

namespace {

void sort_and_compact(std::vector<Operator::Entry>& row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Operator::Entry> out;
  out.reserve(row.size());
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else {
      out.push_back(std::move(e));
    }
  }
  row = std::move(out);
}

}  // namespace

Operator::Operator(HilbertIndex space)
    : space_(std::move(space)), rows_(space_.total_dim()) {}

Operator Operator::zero(HilbertIndex space) { return Operator(std::move(space)); }

Operator Operator::identity(HilbertIndex space) {
  Operator op(std::move(space));
  for (Index r = 0; r < op.dim(); ++r) op.set_unit(r, r);
  return op;
}

Operator Operator::diagonal(HilbertIndex space, const std::vector<Scalar>& diag) {
  Operator op(std::move(space));
  if (diag.size() != op.dim())
    throw DimensionError("Operator::diagonal: length mismatch");
  for (Index r = 0; r < op.dim(); ++r)
    if (!diag[r].is_zero()) op.rows_[r].push_back({r, diag[r]});
  return op;
}

Operator Operator::pullback(HilbertIndex space,
                            const std::function<Index(Index)>& point_map) {
  Operator op(std::move(space));
  std::vector<bool> hit(op.dim(), false);
  for (Index r = 0; r < op.dim(); ++r) {
    Index c = point_map(r);
    if (c >= op.dim()) throw DataError("Operator::pullback: image out of range");
    if (hit[c]) throw DataError("Operator::pullback: point map not injective");
    hit[c] = true;
    op.set_unit(r, c);
  }
  return op;
}

Operator Operator::from_entries(
    HilbertIndex space,
    const std::vector<std::tuple<Index, Index, Scalar>>& entries) {
  Operator op(std::move(space));
  for (const auto& [r, c, v] : entries) {
    if (r >= op.dim() || c >= op.dim())
      throw DimensionError("Operator::from_entries: index out of range");
    op.rows_[r].push_back({c, v});
  }
  for (auto& row : op.rows_) sort_and_compact(row);
  return op;
}

Scalar Operator::entry(Index r, Index c) const {
  if (r >= dim() || c >= dim())
    throw DimensionError("Operator::entry: index out of range");
  const auto& row = rows_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, Index col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Scalar(0);
}

std::size_t Operator::nnz() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

bool Operator::is_zero() const {
  for (const auto& row : rows_)
    if (!row.empty()) return false;
  return true;
}

bool Operator::is_permutation() const {
  std::vector<bool> col_hit(dim(), false);
  for (const auto& row : rows_) {
    if (row.size() != 1) return false;
    if (row[0].second != Scalar(1)) return false;
    if (col_hit[row[0].first]) return false;
    col_hit[row[0].first] = true;
  }
  return true;
}

Operator Operator::adjoint() const {
  Operator out(space_);
  for (Index r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[r]) out.rows_[c].push_back({r, v.conj()});
  for (auto& row : out.rows_) sort_and_compact(row);
  return out;
}

Operator& Operator::operator+=(const Operator& o) {
  if (space_ != o.space_) throw DimensionError("Operator+: space mismatch");
  for (Index r = 0; r < dim(); ++r) {
    for (const auto& e : o.rows_[r]) rows_[r].push_back(e);
    sort_and_compact(rows_[r]);
  }
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  if (space_ != o.space_) throw DimensionError("Operator-: space mismatch");
  for (Index r = 0; r < dim(); ++r) {
    for (const auto& [c, v] : o.rows_[r]) rows_[r].push_back({c, -v});
    sort_and_compact(rows_[r]);
  }
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.space_ != b.space_) throw DimensionError("Operator*: space mismatch");
  Operator out(a.space_);
  std::map<Index, Scalar> acc;
  for (Index r = 0; r < a.dim(); ++r) {
    acc.clear();
    for (const auto& [k, av] : a.rows_[r]) {
      for (const auto& [c, bv] : b.rows_[k]) {
        auto it = acc.find(c);
        if (it == acc.end()) {
          acc.emplace(c, av * bv);
        } else {
          it->second += av * bv;
        }
      }
    }
    auto& row = out.rows_[r];
    for (auto& [c, v] : acc)
      if (!v.is_zero()) row.push_back({c, std::move(v)});
  }
  return out;
}

Operator operator*(const Scalar& c, Operator a) {
  if (c.is_zero()) return Operator::zero(a.space_);
  for (auto& row : a.rows_)
    for (auto& e : row) e.second *= c;
  return a;
}

bool operator==(const Operator& a, const Operator& b) {
  return a.space_ == b.space_ && a.rows_ == b.rows_;
}

std::vector<Scalar> Operator::apply(const std::vector<Scalar>& v) const {
  if (v.size() != dim()) throw DimensionError("Operator::apply: length mismatch");
  std::vector<Scalar> out(dim(), Scalar(0));
  for (Index r = 0; r < dim(); ++r)
    for (const auto& [c, val] : rows_[r]) out[r] += val * v[c];
  return out;
}

std::string Operator::str(std::size_t max_entries) const {
  std::ostringstream os;
  os << "Operator(dim=" << dim() << ", nnz=" << nnz() << ")";
  std::size_t shown = 0;
  for (Index r = 0; r < dim() && shown < max_entries; ++r) {
    for (const auto& [c, v] : rows_[r]) {
      os << " [" << r << "," << c << "]=" << v.str();
      if (++shown >= max_entries) break;
    }
  }
  return os.str();
}

Operator tensor(const Operator& a, const Operator& b) {
  HilbertIndex space = HilbertIndex::concat(a.space(), b.space());
  const Index db = b.dim();
  std::vector<std::tuple<Index, Index, Scalar>> entries;
  entries.reserve(a.nnz() * b.nnz());
  for (Index ra = 0; ra < a.dim(); ++ra) {
    for (const auto& [ca, va] : a.rows()[ra]) {
      for (Index rb = 0; rb < db; ++rb) {
        for (const auto& [cb, vb] : b.rows()[rb]) {
          entries.emplace_back(ra * db + rb, ca * db + cb, va * vb);
        }
      }
    }
  }
  return Operator::from_entries(std::move(space), entries);
}

Operator place_legs(const Operator& op, const std::vector<std::size_t>& legs,
                    const HilbertIndex& ambient) {
  const auto& of = op.space().factors();
  const auto& af = ambient.factors();
  if (legs.size() != of.size())
    throw DimensionError("place_legs: leg count does not match operator rank");
  std::vector<bool> used(af.size(), false);
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (legs[k] >= af.size()) throw DimensionError("place_legs: leg out of range");
    if (used[legs[k]]) throw DimensionError("place_legs: duplicate leg");
    used[legs[k]] = true;
    if (af[legs[k]] != of[k])
      throw DimensionError("place_legs: ambient factor size mismatch at leg");
  }

  std::vector<std::size_t> rest;
  for (std::size_t p = 0; p < af.size(); ++p)
    if (!used[p]) rest.push_back(p);
  Index rest_count = 1;
  for (std::size_t p : rest) rest_count *= af[p];

  std::vector<std::tuple<Index, Index, Scalar>> entries;
  entries.reserve(op.nnz() * rest_count);
  std::vector<Index> rmulti(af.size(), 0), cmulti(af.size(), 0);
  for (Index r = 0; r < op.dim(); ++r) {
    if (op.rows()[r].empty()) continue;
    std::vector<Index> rop = op.space().unflatten(r);
    for (const auto& [c, v] : op.rows()[r]) {
      std::vector<Index> cop = op.space().unflatten(c);
      // Enumerate every assignment of the complement factors.
      for (Index rest_flat = 0; rest_flat < rest_count; ++rest_flat) {
        Index tmp = rest_flat;
        for (std::size_t q = rest.size(); q-- > 0;) {
          Index size = af[rest[q]];
          rmulti[rest[q]] = cmulti[rest[q]] = tmp % size;
          tmp /= size;
        }
        for (std::size_t k = 0; k < legs.size(); ++k) {
          rmulti[legs[k]] = rop[k];
          cmulti[legs[k]] = cop[k];
        }
        entries.emplace_back(ambient.flatten(rmulti), ambient.flatten(cmulti), v);
      }
    }
  }
  return Operator::from_entries(ambient, entries);
}

Operator copy_swap(const HilbertIndex& two_copy_space, std::size_t factors_per_copy) {
  const auto& f = two_copy_space.factors();
  if (f.size() != 2 * factors_per_copy)
    throw DimensionError("copy_swap: rank is not twice the copy rank");
  for (std::size_t k = 0; k < factors_per_copy; ++k)
    if (f[k] != f[k + factors_per_copy])
      throw DimensionError("copy_swap: copies have different factor sizes");
  return Operator::pullback(two_copy_space, [&](Index x) {
    std::vector<Index> m = two_copy_space.unflatten(x);
    std::rotate(m.begin(), m.begin() + factors_per_copy, m.end());
    return two_copy_space.flatten(m);
  });
}

}  // namespace bicross

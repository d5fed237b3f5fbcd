#include "bicross/matched_pair.hpp"

#include <map>
#include <set>
#include <sstream>

namespace bicross {

MatchedPair MatchedPair::trivial(FiniteGroup g, FiniteGroup h) {
  MatchedPair p;
  const Index ng = g.order(), nh = h.order();
  p.g = std::move(g);
  p.h = std::move(h);
  p.alpha.assign(ng, std::vector<Index>(nh));
  p.beta.assign(ng, std::vector<Index>(nh));
  for (Index gi = 0; gi < ng; ++gi)
    for (Index si = 0; si < nh; ++si) {
      p.alpha[gi][si] = si;
      p.beta[gi][si] = gi;
    }
  return p;
}

namespace {

void check_shape(const MatchedPair& p) {
  const Index ng = p.g.order(), nh = p.h.order();
  if (p.alpha.size() != ng || p.beta.size() != ng)
    throw DimensionError("matched pair: table row count != |G|");
  for (Index gi = 0; gi < ng; ++gi) {
    if (p.alpha[gi].size() != nh || p.beta[gi].size() != nh)
      throw DimensionError("matched pair: table column count != |H|");
    for (Index si = 0; si < nh; ++si) {
      if (p.alpha[gi][si] >= nh) throw DimensionError("alpha entry out of range");
      if (p.beta[gi][si] >= ng) throw DimensionError("beta entry out of range");
    }
  }
}

std::string triple(const char* names, Index a, Index b, Index c) {
  std::ostringstream os;
  os << "(" << names[0] << "=" << a << "," << names[1] << "=" << b << ","
     << names[2] << "=" << c << ")";
  return os.str();
}

}  // namespace

CheckResult validate_pair(const MatchedPair& p, const std::string& name) {
  check_shape(p);
  CheckResult r;
  r.name = "validate-pair/" + name;
  r.statement =
      "beta_{st}(g)=beta_s(beta_t(g)); alpha_g(st)=alpha_{beta_t(g)}(s)alpha_g(t); "
      "alpha_{gh}(s)=alpha_g(alpha_h(s)); beta_s(gh)=beta_{alpha_h(s)}(g)beta_s(h)";

  const Index ng = p.g.order(), nh = p.h.order();
  const Index eg = p.g.identity(), eh = p.h.identity();

  for (Index si = 0; si < nh; ++si)
    if (p.alpha[eg][si] != si)
      r.fail("alpha_e(s)=s fails at s=" + std::to_string(si));
  for (Index gi = 0; gi < ng; ++gi)
    if (p.beta[gi][eh] != gi)
      r.fail("beta_e(g)=g fails at g=" + std::to_string(gi));

  // Identities 1 and 2, quantified over (s, t, g).
  std::int64_t stg = 0;
  for (Index s = 0; s < nh; ++s) {
    for (Index t = 0; t < nh; ++t) {
      const Index st = p.h.mul(s, t);
      for (Index g = 0; g < ng; ++g) {
        ++stg;
        if (p.beta[g][st] != p.beta[p.beta[g][t]][s]) {
          r.fail("beta-composition " + triple("stg", s, t, g));
          ++r.counts["beta_composition_violations"];
        }
        if (p.alpha[g][st] !=
            p.h.mul(p.alpha[p.beta[g][t]][s], p.alpha[g][t])) {
          r.fail("alpha-product " + triple("stg", s, t, g));
          ++r.counts["alpha_product_violations"];
        }
      }
    }
  }

  // Identities 3 and 4, quantified over (g, h, s).
  std::int64_t ghs = 0;
  for (Index g = 0; g < ng; ++g) {
    for (Index h = 0; h < ng; ++h) {
      const Index gh = p.g.mul(g, h);
      for (Index s = 0; s < nh; ++s) {
        ++ghs;
        if (p.alpha[gh][s] != p.alpha[g][p.alpha[h][s]]) {
          r.fail("alpha-composition " + triple("ghs", g, h, s));
          ++r.counts["alpha_composition_violations"];
        }
        if (p.beta[gh][s] !=
            p.g.mul(p.beta[g][p.alpha[h][s]], p.beta[h][s])) {
          r.fail("beta-product " + triple("ghs", g, h, s));
          ++r.counts["beta_product_violations"];
        }
      }
    }
  }

  r.counts["stg_triples"] = stg;
  r.counts["ghs_triples"] = ghs;
  return r;
}

MatchedPair transpose_pair(const MatchedPair& p) {
  if (!validate_pair(p).passed)
    throw DataError("transpose_pair: input pair is not matched");
  MatchedPair q;
  q.g = p.h;
  q.h = p.g;
  const Index ng = q.g.order(), nh = q.h.order();
  q.alpha.assign(ng, std::vector<Index>(nh));
  q.beta.assign(ng, std::vector<Index>(nh));
  for (Index si = 0; si < ng; ++si)
    for (Index gi = 0; gi < nh; ++gi) {
      q.alpha[si][gi] = p.beta[gi][si];
      q.beta[si][gi] = p.alpha[gi][si];
    }
  return q;
}

std::string convention_name(FactorizationConvention c) {
  switch (c) {
    case FactorizationConvention::kGH: return "gh";
    case FactorizationConvention::kGHInverse: return "gh-inverse";
    case FactorizationConvention::kHG: return "hg";
    case FactorizationConvention::kHGInverse: return "hg-inverse";
  }
  return "?";
}

namespace {

bool is_subgroup(const FiniteGroup& l, const std::vector<Index>& elems) {
  std::set<Index> s(elems.begin(), elems.end());
  if (s.size() != elems.size()) return false;  // duplicates
  if (s.find(l.identity()) == s.end()) return false;
  for (Index a : elems) {
    if (a >= l.order()) return false;
    if (s.find(l.inv(a)) == s.end()) return false;
    for (Index b : elems)
      if (s.find(l.mul(a, b)) == s.end()) return false;
  }
  return true;
}

FiniteGroup subgroup_as_group(const FiniteGroup& l, const std::vector<Index>& elems) {
  std::map<Index, Index> idx;
  for (Index k = 0; k < elems.size(); ++k) idx[elems[k]] = k;
  const Index n = static_cast<Index>(elems.size());
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  std::vector<std::string> labels(n);
  for (Index a = 0; a < n; ++a) {
    labels[a] = l.label(elems[a]);
    for (Index b = 0; b < n; ++b) t[a][b] = idx.at(l.mul(elems[a], elems[b]));
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

}  // namespace

Factorization exact_factorization(const FiniteGroup& l,
                                  const std::vector<Index>& g_elems,
                                  const std::vector<Index>& h_elems) {
  if (!is_subgroup(l, g_elems))
    throw DataError("exact_factorization: first element set is not a subgroup");
  if (!is_subgroup(l, h_elems))
    throw DataError("exact_factorization: second element set is not a subgroup");

  std::set<Index> gs(g_elems.begin(), g_elems.end());
  for (Index x : h_elems)
    if (x != l.identity() && gs.count(x))
      throw DataError("exact_factorization: subgroups have nontrivial intersection");

  const Index ng = static_cast<Index>(g_elems.size());
  const Index nh = static_cast<Index>(h_elems.size());
  if (static_cast<std::uint64_t>(ng) * nh != l.order())
    throw DataError("exact_factorization: product set is not all of the ambient group");

  // Unique factorization tables in both orders: x = g*h and x = h*g.
  constexpr Index kUnset = ~Index{0};
  std::vector<std::pair<Index, Index>> fac_gh(l.order(), {kUnset, kUnset});
  std::vector<std::pair<Index, Index>> fac_hg(l.order(), {kUnset, kUnset});
  for (Index gi = 0; gi < ng; ++gi) {
    for (Index hi = 0; hi < nh; ++hi) {
      Index x = l.mul(g_elems[gi], h_elems[hi]);
      if (fac_gh[x].first != kUnset)
        throw DataError("exact_factorization: product set is not all of the ambient group");
      fac_gh[x] = {gi, hi};
      Index y = l.mul(h_elems[hi], g_elems[gi]);
      if (fac_hg[y].first != kUnset)
        throw DataError("exact_factorization: product set is not all of the ambient group");
      fac_hg[y] = {gi, hi};
    }
  }

  FiniteGroup G = subgroup_as_group(l, g_elems);
  FiniteGroup H = subgroup_as_group(l, h_elems);

  const FactorizationConvention order[] = {
      FactorizationConvention::kGH, FactorizationConvention::kGHInverse,
      FactorizationConvention::kHG, FactorizationConvention::kHGInverse};

  for (FactorizationConvention conv : order) {
    MatchedPair p;
    p.g = G;
    p.h = H;
    p.alpha.assign(ng, std::vector<Index>(nh));
    p.beta.assign(ng, std::vector<Index>(nh));
    for (Index gi = 0; gi < ng; ++gi) {
      for (Index si = 0; si < nh; ++si) {
        switch (conv) {
          case FactorizationConvention::kGH: {
            Index x = l.mul(h_elems[si], g_elems[gi]);
            auto [b, a] = fac_gh[x];
            p.alpha[gi][si] = a;
            p.beta[gi][si] = b;
            break;
          }
          case FactorizationConvention::kGHInverse: {
            Index x = l.mul(h_elems[si], l.inv(g_elems[gi]));
            auto [b, a] = fac_gh[x];
            p.alpha[gi][si] = a;
            p.beta[gi][si] = G.inv(b);
            break;
          }
          case FactorizationConvention::kHG: {
            Index x = l.mul(g_elems[gi], h_elems[si]);
            auto [b, a] = fac_hg[x];
            p.alpha[gi][si] = a;
            p.beta[gi][si] = b;
            break;
          }
          case FactorizationConvention::kHGInverse: {
            Index x = l.mul(g_elems[gi], l.inv(h_elems[si]));
            auto [b, a] = fac_hg[x];
            p.alpha[gi][si] = H.inv(a);
            p.beta[gi][si] = b;
            break;
          }
        }
      }
    }
    if (validate_pair(p).passed) {
      Factorization f{std::move(p), conv, g_elems, h_elems};
      return f;
    }
  }
  throw DataError("exact_factorization: no read-off convention passes validation");
}

}  // namespace bicross

#pragma once

#include <string>
#include <vector>

#include "bicross/check.hpp"
#include "bicross/group.hpp"

namespace bicross {

/// Two finite groups G and H with mutual actions
///   alpha: G x H -> H   (a left G-action on H)
///   beta:  G x H -> G   (a left H-action on G, stored as beta[g][s] = beta_s(g))
/// subject to four compatibility identities, checked exhaustively by
/// validate_pair:
///   (1) beta_{st}(g)  = beta_s(beta_t(g))
///   (2) alpha_g(st)   = alpha_{beta_t(g)}(s) alpha_g(t)
///   (3) alpha_{gh}(s) = alpha_g(alpha_h(s))
///   (4) beta_s(gh)    = beta_{alpha_h(s)}(g) beta_s(h)
struct MatchedPair {
  FiniteGroup g;
  FiniteGroup h;
  // alpha[gi][si] = index in H of alpha_g(s); beta[gi][si] = index in G of beta_s(g).
  std::vector<std::vector<Index>> alpha;
  std::vector<std::vector<Index>> beta;

  Index alpha_at(Index gi, Index si) const { return alpha[gi][si]; }
  Index beta_at(Index gi, Index si) const { return beta[gi][si]; }

  /// The pair with both actions trivial (always matched).
  static MatchedPair trivial(FiniteGroup g, FiniteGroup h);

  friend bool operator==(const MatchedPair& a, const MatchedPair& b) {
    return a.g == b.g && a.h == b.h && a.alpha == b.alpha && a.beta == b.beta;
  }
};

/// Exhaustive check of the four compatibility identities plus the
/// identity-argument laws alpha_e = id, beta_e = id. Table shape errors
/// throw; identity violations are report content naming the identity and
/// the offending triple.
CheckResult validate_pair(const MatchedPair& p, const std::string& name = "pair");

/// The matched pair with the roles of (G, alpha) and (H, beta) swapped.
/// An involution; the output of a valid pair is again valid.
MatchedPair transpose_pair(const MatchedPair& p);

/// How the mutual actions are read off the ambient factorization. The
/// candidates differ in factor order and inverse placement and are tried in
/// this (documented) order; the first candidate whose tables pass
/// validate_pair wins.
enum class FactorizationConvention {
  kGH,         // factor s*g    in G*H order: alpha = H part, beta = G part
  kGHInverse,  // factor s*g^-1 in G*H order: alpha = H part, beta = (G part)^-1
  kHG,         // factor g*s    in H*G order: alpha = H part, beta = G part
  kHGInverse,  // factor g*s^-1 in H*G order: alpha = (H part)^-1, beta = G part
};

std::string convention_name(FactorizationConvention c);

struct Factorization {
  MatchedPair pair;
  FactorizationConvention convention;
  // Element maps back into the ambient group.
  std::vector<Index> g_in_ambient;
  std::vector<Index> h_in_ambient;
};

/// Derives a matched pair from an exact factorization of an ambient group:
/// g_elems and h_elems must be subgroups intersecting only in the identity
/// with |G|*|H| = |L|. The action tables are extracted from the unique
/// factorizations of mixed products, with the read-off convention chosen as
/// the first candidate whose tables pass validate_pair.
///
/// Throws DataError: not a subgroup, nontrivial intersection, product set
/// not all of l, or no convention passing validation.
Factorization exact_factorization(const FiniteGroup& l,
                                  const std::vector<Index>& g_elems,
                                  const std::vector<Index>& h_elems);

}  // namespace bicross

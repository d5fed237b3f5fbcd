#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicross/check.hpp"
#include "bicross/matched_pair.hpp"
#include "bicross/operator.hpp"
#include "bicross/span.hpp"

namespace bicross {

/// A linear functional on the crossed-product algebra, determined by its
/// values on the algebra basis.
struct LinearFunctional {
  std::vector<Scalar> values;
};

/// The bicrossed-product quantum group assembled from a matched pair on
/// l^2(G x H): the fundamental unitary w, a canonical (RREF) basis of the
/// crossed-product algebra M, the generator families, and the expansion of
/// Delta over the tensor-square basis.
struct QuantumGroup {
  MatchedPair pair;
  HilbertIndex space;     // factors {|G|, |H|}
  HilbertIndex two_copy;  // factors {|G|, |H|, |G|, |H|}
  Operator w;             // multiplicative unitary, a permutation operator

  std::vector<Operator> h_generators;  // embedded indicator functions, one per H element
  std::vector<Operator> g_generators;  // left translations, one per G element
  std::vector<Operator> algebra_basis;
  SpanBasis membership;  // RREF span of the vectorized algebra basis

  std::vector<Operator> delta_basis;  // Delta(b_k) on the two-copy space
  // delta_coords[k][{i,j}] = coefficient of b_i (x) b_j in Delta(b_k)
  std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> delta_coords;
  bool delta_in_tensor_square = true;

  std::vector<Scalar> identity_coords;  // expansion of 1 over algebra_basis
  Index dim_m = 0;

  std::size_t dim() const { return algebra_basis.size(); }
};

/// Diagonal operator on l^2(G x H) with entry f(alpha_g(s)) at point (g, s):
/// the embedding of a function on H along the action alpha.
Operator embed_function(const MatchedPair& p, const std::vector<Scalar>& f);

/// Permutation operator sending basis point (g', s) to (g g', s): the left
/// regular representation of G tensored with the identity on l^2(H).
Operator left_regular(const MatchedPair& p, Index g);

/// Verifies (iota (x) alpha) alpha = (Delta_G (x) iota) alpha exhaustively:
/// for every indicator function on H the two iterated embeddings agree as
/// functions on G x G x H.
CheckResult coaction_identity_check(const MatchedPair& p,
                            const std::string& name = "pair");

/// The fundamental unitary on l^2(G x H x G x H), realized as the pullback of
///   (g, s, h, t) -> (beta_u(h) g, s, h, u)   with  u = alpha_g(s)^{-1} t.
/// Throws DataError when the point transformation is not bijective (which
/// signals corrupted pair data).
Operator multiplicative_unitary(const MatchedPair& p);

/// Exact check of w12 w13 w23 = w23 w12 on the three-copy space, using sparse
/// leg placement. w must live on a two-copy space.
CheckResult pentagon_check(const Operator& w, const std::string& name = "w");

QuantumGroup build_quantum_group(const MatchedPair& p);

/// Expansion of z over the algebra basis, or nullopt when z lies outside M.
std::optional<std::vector<Scalar>> coords_in_m(const QuantumGroup& q,
                                               const Operator& z);

/// Expansion of a two-copy operator over { b_i (x) b_j }, or nullopt when it
/// lies outside M (x) M.
std::optional<std::map<std::pair<std::size_t, std::size_t>, Scalar>>
coords_in_m_tensor_m(const QuantumGroup& q, const Operator& x);

/// Delta(z) = w^* (1 (x) z) w. Throws DomainError when z is outside M.
Operator comultiply(const QuantumGroup& q, const Operator& z);

/// (Delta (x) iota) Delta = (iota (x) Delta) Delta, exactly, on every algebra
/// basis element when dim M <= 8 and on the generator set otherwise.
CheckResult coassociativity_check(const QuantumGroup& q,
                                  const std::string& name = "qg");

enum class Side { kLeft, kRight };

struct InvarianceResult {
  std::vector<LinearFunctional> solutions;  // basis of the solution space
  CheckResult check;                        // passes iff the space is 1-dimensional
};

/// Solves the exact homogeneous system expressing left (right) invariance
///   phi((omega (x) iota) Delta(a)) = omega(1) phi(a)
/// against the spanning set of matrix-coefficient functionals omega. When the
/// solution space is one-dimensional the representative is normalized so that
/// its value at the identity operator equals dim M.
InvarianceResult find_invariant_functionals(const QuantumGroup& q, Side side,
                                            const std::string& name = "qg");

/// The dual weight on the crossed product of the counting functional on H:
/// value 1 on each product generator embed(delta_s) * lambda_g with g = e and
/// value 0 otherwise.
LinearFunctional dual_weight_candidate(const QuantumGroup& q);

Scalar evaluate(const QuantumGroup& q, const LinearFunctional& f, const Operator& z);
Scalar evaluate_at_identity(const QuantumGroup& q, const LinearFunctional& f);

/// True when both functionals are nonzero scalar multiples of each other.
bool proportional(const LinearFunctional& a, const LinearFunctional& b);

struct CounitResult {
  LinearFunctional counit;
  CheckResult check;
};

/// The unique functional with (eps (x) iota) Delta = iota = (iota (x) eps) Delta
/// on the basis, found by exact linear solve. Throws Error when no solution
/// exists (an assembly bug), reports failure when it is not unique.
CounitResult compute_counit(const QuantumGroup& q);

struct AntipodeResult {
  bool slices_span = false;
  /// Matrix of S over algebra-basis coordinates (column i = image of b_i).
  std::vector<std::vector<Scalar>> matrix;
  bool s_squared_is_identity = false;
  CheckResult check;
};

/// Reconstructs the antipode from strong left invariance,
///   S((iota (x) phi)(Delta(a)(1 (x) b))) = (iota (x) phi)((1 (x) a) Delta(b)),
/// as the unique linear map matching all basis pairs (a, b); verifies
/// anti-multiplicativity and m(S (x) iota)Delta(a) = eps(a) 1 = m(iota (x) S)Delta(a).
/// When the left slices do not span M the antipode is left undefined and the
/// check reports it.
AntipodeResult compute_antipode(const QuantumGroup& q, const LinearFunctional& phi,
                                const LinearFunctional& counit);

Operator apply_linear_map(const QuantumGroup& q,
                          const std::vector<std::vector<Scalar>>& matrix,
                          const Operator& z);

struct DualResult {
  Operator w_hat;                    // sigma w^* sigma
  std::vector<Operator> algebra_basis;  // span closure of first-leg slices of w
  CheckResult pentagon;
  bool commutative = false;
  std::size_t center_dim = 0;
};

/// The dual package: w_hat = sigma w^* sigma together with the algebra
/// generated by the first-leg slices of w.
DualResult build_dual(const QuantumGroup& q);

bool basis_commutative(const std::vector<Operator>& basis);
std::size_t center_dimension(const std::vector<Operator>& basis);

}  // namespace bicross

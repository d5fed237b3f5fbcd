#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicross/check.hpp"
#include "bicross/ncpoly.hpp"

namespace bicross::hopf {

using nc::Coeff;
using nc::Mono;
using nc::NCPoly;
using nc::TensorPoly;
using nc::TensorPoly3;
using nc::Word;
using nc::WordSum;

struct GeneratorDecl {
  std::string name;
  bool invertible = false;
  int star_sign = 1;  // star(X) = star_sign * X
  friend bool operator==(const GeneratorDecl&, const GeneratorDecl&) = default;
};

/// Raw presentation data. Commutation relations are given in bracket form,
/// one per generator pair (lo < hi in declaration order):
///   [X_lo, X_hi] = value,
/// with `value` already normal ordered. Coproduct values are sums of tensors
/// of words, counit values rationals, antipode values word sums.
struct PresentationData {
  std::string name;
  std::vector<GeneratorDecl> generators;
  struct Bracket {
    std::size_t lo, hi;
    WordSum value;
    friend bool operator==(const Bracket&, const Bracket&) = default;
  };
  std::vector<Bracket> brackets;
  std::vector<std::vector<std::tuple<Coeff, Word, Word>>> coproducts;  // per generator
  std::vector<Coeff> counits;                                          // per generator
  std::vector<WordSum> antipodes;                                      // per generator
  friend bool operator==(const PresentationData&, const PresentationData&) = default;
};

enum class Strategy { kLeftmost, kRightmost };

/// A generators-and-relations package with a validated straightening system:
/// rules for every descent (including derived rules past the inverse of an
/// invertible leading generator), locally confluent on all generator-pair
/// overlaps, plus the coproduct, counit, antipode and star data.
///
/// Engine restriction: at most one invertible generator, and it must be the
/// first in normal order. Both built-in presentations satisfy this.
class Presentation {
 public:
  static Presentation build(PresentationData data);

  const std::string& name() const { return name_; }
  std::size_t ngens() const { return gens_.size(); }
  const std::vector<GeneratorDecl>& generators() const { return gens_; }
  std::vector<std::string> generator_names() const;

  /// Straightening rule for the descent word X_hi^{sign_hi} X_lo^{sign_lo};
  /// signs are +1/-1 and select among base and derived rules.
  const NCPoly& rule(std::size_t hi, int sign_hi, std::size_t lo, int sign_lo) const;

  const TensorPoly& coproduct_of(std::size_t gen) const { return coproducts_[gen]; }
  const Coeff& counit_of(std::size_t gen) const { return counits_[gen]; }
  const NCPoly& antipode_of(std::size_t gen) const { return antipodes_[gen]; }

  /// Defining relations in raw (unnormalized, two-sided) word form, used by
  /// the preservation checks; includes X X^-1 = 1 for invertible generators.
  struct Relation {
    std::string display;
    WordSum value;  // the relation polynomial, normalizes to zero
  };
  const std::vector<Relation>& relations() const { return relations_; }

  NCPoly one() const { return NCPoly::constant(ngens(), 1); }

 private:
  friend NCPoly normalize(const Presentation&, const WordSum&, Strategy);

  std::string name_;
  std::vector<GeneratorDecl> gens_;
  std::map<std::array<long, 4>, NCPoly> rules_;
  std::vector<TensorPoly> coproducts_;
  std::vector<Coeff> counits_;
  std::vector<NCPoly> antipodes_;
  std::vector<Relation> relations_;
};

/// Canonical normal form of a word-sum expression. Two expressions equal in
/// the algebra normalize identically. Throws DomainError on negative powers
/// of non-invertible generators or undeclared generators.
NCPoly normalize(const Presentation& p, const WordSum& input,
                 Strategy strategy = Strategy::kLeftmost);

NCPoly mul(const Presentation& p, const NCPoly& a, const NCPoly& b);
NCPoly pow(const Presentation& p, const NCPoly& a, long e);

/// The anti-linear anti-multiplicative involution extended from the
/// generator star-signs.
NCPoly star(const Presentation& p, const NCPoly& a);

/// Multiplicative extension of the generator coproducts.
TensorPoly coproduct(const Presentation& p, const NCPoly& a);
Coeff counit(const Presentation& p, const NCPoly& a);
/// Anti-multiplicative extension of the generator antipodes.
NCPoly antipode(const Presentation& p, const NCPoly& a);

NCPoly antipode_square(const Presentation& p, std::size_t gen);

TensorPoly tensor_mul(const Presentation& p, const TensorPoly& a, const TensorPoly& b);

/// For every defining relation r: Delta(r) = 0 in the tensor square,
/// eps(r) = 0, S(r) = 0 and star(r) = 0 after normalization.
CheckResult check_relations_preserved(const Presentation& p);

/// Counit laws, antipode laws and coassociativity, exactly, on every sample
/// monomial.
CheckResult check_hopf_axioms(const Presentation& p, const std::vector<Mono>& samples);

/// Deterministic monomial sampler for the randomized suites: exponents
/// uniform in [-max_exp, max_exp] for invertible generators and
/// [0, max_exp] otherwise.
std::vector<Mono> random_monomials(const Presentation& p, std::size_t count,
                                   std::uint64_t seed, long max_exp);

Presentation heisenberg_primal();
Presentation heisenberg_dual();
std::optional<Presentation> presentation_preset(const std::string& name);
std::vector<std::string> presentation_preset_names();

}  // namespace bicross::hopf

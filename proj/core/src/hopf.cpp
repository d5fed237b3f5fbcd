#include "bicross/hopf.hpp"

#include <random>
#include <set>
#include <sstream>

#include "bicross/errors.hpp"

namespace bicross::hopf {

using nc::Letter;

namespace {

Coeff sign_pow(int sign, long e) {
  if (sign == 1) return 1;
  return (e % 2 == 0) ? Coeff(1) : Coeff(-1);
}

Coeff coeff_pow(const Coeff& base, long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("coeff_pow: zero to a negative power");
    return coeff_pow(Coeff(1) / base, -e);
  }
  Coeff out(1);
  for (long k = 0; k < e; ++k) out *= base;
  return out;
}

/// Inverse of a one-term polynomial c * m with m supported on invertible
/// generators only.
std::optional<NCPoly> invert_single_term(const Presentation& p, const NCPoly& a) {
  if (a.terms.size() != 1) return std::nullopt;
  const auto& [m, c] = *a.terms.begin();
  Mono inv(m.size(), 0);
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] != 0 && !p.generators()[g].invertible) return std::nullopt;
    inv[g] = -m[g];
  }
  NCPoly out;
  out.add_term(inv, Coeff(1) / c);
  return out;
}

}  // namespace

std::vector<std::string> Presentation::generator_names() const {
  std::vector<std::string> names;
  names.reserve(gens_.size());
  for (const auto& g : gens_) names.push_back(g.name);
  return names;
}

const NCPoly& Presentation::rule(std::size_t hi, int sign_hi, std::size_t lo,
                                 int sign_lo) const {
  auto it = rules_.find({static_cast<long>(hi), sign_hi, static_cast<long>(lo), sign_lo});
  if (it == rules_.end()) {
    std::ostringstream os;
    os << "missing straightening rule for " << gens_[hi].name
       << (sign_hi < 0 ? "^-1 " : " ") << gens_[lo].name << (sign_lo < 0 ? "^-1" : "");
    throw Error(os.str());
  }
  return it->second;
}

namespace {

/// Word-rewriting worker. The worklist merges coefficients of identical
/// intermediate words, and whole-letter descents X_j^e X_i^f are crossed in
/// a single step through a memoized pair normal form; both are needed to
/// keep the branching of repeated straightening polynomial in the degree.
class Normalizer {
 public:
  Normalizer(const Presentation& p, Strategy strategy)
      : p_(p), strategy_(strategy) {}

  NCPoly run(const WordSum& input) {
    std::map<Word, Coeff> work;
    auto push = [&](const Word& raw, const Coeff& c) {
      if (c == 0) return;
      Word cw = cleaned(raw);
      auto it = work.find(cw);
      if (it == work.end()) {
        work.emplace(std::move(cw), c);
      } else {
        it->second += c;
        if (it->second == 0) work.erase(it);
      }
    };
    for (const auto& [c, w] : input) push(w, c);

    NCPoly out;
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const Word& cw = node.key();
      const Coeff& c = node.mapped();
      bump();

      const std::size_t pos = find_descent(cw);
      if (pos == kNone) {
        for (const auto& letter : cw)
          if (letter.exp < 0 && !p_.generators()[letter.gen].invertible)
            throw DomainError("normalize: negative power of non-invertible generator " +
                              p_.generators()[letter.gen].name);
        Mono m(p_.ngens(), 0);
        for (const auto& letter : cw) m[letter.gen] = letter.exp;
        out.add_term(m, c);
        continue;
      }

      // Cross the two whole letters in one step.
      const NCPoly& crossed = pair_normal_form(cw[pos], cw[pos + 1]);
      for (const auto& [m, rc] : crossed.terms) {
        Word nw;
        nw.reserve(cw.size() + m.size());
        nw.insert(nw.end(), cw.begin(), cw.begin() + pos);
        for (const auto& letter : nc::word_of_mono(m)) nw.push_back(letter);
        nw.insert(nw.end(), cw.begin() + pos + 2, cw.end());
        push(nw, c * rc);
      }
    }
    return out;
  }

 private:
  static constexpr std::size_t kNone = ~std::size_t{0};

  void bump() {
    if (++steps_ > 20'000'000) throw Error("normalize: rewriting step limit exceeded");
  }

  Word cleaned(const Word& raw) const {
    Word cw;
    cw.reserve(raw.size());
    for (const auto& letter : raw) {
      if (letter.gen >= p_.ngens())
        throw DomainError("normalize: undeclared generator in word");
      if (letter.exp == 0) continue;
      if (!cw.empty() && cw.back().gen == letter.gen) {
        cw.back().exp += letter.exp;
        if (cw.back().exp == 0) cw.pop_back();
      } else {
        cw.push_back(letter);
      }
    }
    return cw;
  }

  std::size_t find_descent(const Word& w) const {
    if (w.size() < 2) return kNone;
    if (strategy_ == Strategy::kLeftmost) {
      for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k].gen > w[k + 1].gen) return k;
    } else {
      for (std::size_t k = w.size() - 1; k-- > 0;)
        if (w[k].gen > w[k + 1].gen) return k;
    }
    return kNone;
  }

  /// Normal form of the two-letter word X_j^e X_i^f (j > i), memoized.
  const NCPoly& pair_normal_form(const Letter& a, const Letter& b) {
    const int sa = a.exp > 0 ? 1 : -1;
    const int sb = b.exp > 0 ? 1 : -1;
    if (sa < 0 && !p_.generators()[a.gen].invertible)
      throw DomainError("normalize: negative power of non-invertible generator " +
                        p_.generators()[a.gen].name);
    if (sb < 0 && !p_.generators()[b.gen].invertible)
      throw DomainError("normalize: negative power of non-invertible generator " +
                        p_.generators()[b.gen].name);

    const std::array<long, 4> key{static_cast<long>(a.gen), a.exp,
                                  static_cast<long>(b.gen), b.exp};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    NCPoly result;
    if (a.exp == sa && b.exp == sb) {
      result = p_.rule(a.gen, sa, b.gen, sb);
    } else {
      // Peel one step off the pair and renormalize the short remainder;
      // the recursion stays within two-letter crossings of smaller total
      // exponent, all memoized.
      const NCPoly& base = p_.rule(a.gen, sa, b.gen, sb);
      WordSum ws;
      for (const auto& [m, rc] : base.terms) {
        Word w;
        if (a.exp != sa) w.push_back({a.gen, a.exp - sa});
        for (const auto& letter : nc::word_of_mono(m)) w.push_back(letter);
        if (b.exp != sb) w.push_back({b.gen, b.exp - sb});
        ws.emplace_back(rc, std::move(w));
      }
      result = run(ws);
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  const Presentation& p_;
  Strategy strategy_;
  std::size_t steps_ = 0;
  std::map<std::array<long, 4>, NCPoly> memo_;
};

}  // namespace

NCPoly normalize(const Presentation& p, const WordSum& input, Strategy strategy) {
  return Normalizer(p, strategy).run(input);
}

NCPoly mul(const Presentation& p, const NCPoly& a, const NCPoly& b) {
  WordSum ws;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      Word w = nc::word_of_mono(ma);
      for (const auto& letter : nc::word_of_mono(mb)) w.push_back(letter);
      ws.emplace_back(ca * cb, std::move(w));
    }
  }
  return normalize(p, ws);
}

NCPoly pow(const Presentation& p, const NCPoly& a, long e) {
  if (e < 0) {
    auto inv = invert_single_term(p, a);
    if (!inv) throw DomainError("pow: negative power of a non-invertible element");
    return pow(p, *inv, -e);
  }
  NCPoly out = p.one();
  for (long k = 0; k < e; ++k) out = mul(p, out, a);
  return out;
}

NCPoly star(const Presentation& p, const NCPoly& a) {
  WordSum ws;
  for (const auto& [m, c] : a.terms) {
    Word w = nc::word_of_mono(m);
    std::reverse(w.begin(), w.end());
    Coeff sign(1);
    for (const auto& letter : w)
      sign *= sign_pow(p.generators()[letter.gen].star_sign, letter.exp);
    // Rational coefficients are self-conjugate; the generator signs carry
    // the anti-linearity.
    ws.emplace_back(sign * c, std::move(w));
  }
  return normalize(p, ws);
}

TensorPoly tensor_mul(const Presentation& p, const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [ab1, c1] : a.terms) {
    for (const auto& [ab2, c2] : b.terms) {
      NCPoly u = mul(p, NCPoly{{{ab1.first, 1}}}, NCPoly{{{ab2.first, 1}}});
      NCPoly v = mul(p, NCPoly{{{ab1.second, 1}}}, NCPoly{{{ab2.second, 1}}});
      const Coeff c = c1 * c2;
      for (const auto& [mu, cu] : u.terms)
        for (const auto& [mv, cv] : v.terms) out.add_term(mu, mv, c * cu * cv);
    }
  }
  return out;
}

namespace {

TensorPoly tensor_one(const Presentation& p) {
  TensorPoly t;
  t.add_term(Mono(p.ngens(), 0), Mono(p.ngens(), 0), 1);
  return t;
}

std::optional<TensorPoly> invert_single_tensor(const Presentation& p,
                                               const TensorPoly& t) {
  if (t.terms.size() != 1) return std::nullopt;
  const auto& [ab, c] = *t.terms.begin();
  auto check_invertible = [&](const Mono& m) {
    for (std::size_t g = 0; g < m.size(); ++g)
      if (m[g] != 0 && !p.generators()[g].invertible) return false;
    return true;
  };
  if (!check_invertible(ab.first) || !check_invertible(ab.second)) return std::nullopt;
  Mono u(ab.first.size(), 0), v(ab.second.size(), 0);
  for (std::size_t g = 0; g < u.size(); ++g) {
    u[g] = -ab.first[g];
    v[g] = -ab.second[g];
  }
  TensorPoly out;
  out.add_term(u, v, Coeff(1) / c);
  return out;
}

TensorPoly coproduct_letter(const Presentation& p, const nc::Letter& letter) {
  TensorPoly base = p.coproduct_of(letter.gen);
  long e = letter.exp;
  if (e < 0) {
    auto inv = invert_single_tensor(p, base);
    if (!inv)
      throw DomainError("coproduct: generator " + p.generators()[letter.gen].name +
                        " has no invertible group-like coproduct");
    base = *inv;
    e = -e;
  }
  TensorPoly out = tensor_one(p);
  for (long k = 0; k < e; ++k) out = tensor_mul(p, out, base);
  return out;
}

TensorPoly coproduct_word(const Presentation& p, const Word& w) {
  TensorPoly out = tensor_one(p);
  for (const auto& letter : w) out = tensor_mul(p, out, coproduct_letter(p, letter));
  return out;
}

Coeff counit_word(const Presentation& p, const Word& w) {
  Coeff out(1);
  for (const auto& letter : w) out *= coeff_pow(p.counit_of(letter.gen), letter.exp);
  return out;
}

NCPoly antipode_letter(const Presentation& p, const nc::Letter& letter) {
  NCPoly base = p.antipode_of(letter.gen);
  return pow(p, base, letter.exp);
}

NCPoly antipode_word(const Presentation& p, const Word& w) {
  // Anti-homomorphism: reverse the factors, then map the generators.
  NCPoly out = p.one();
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out = mul(p, out, antipode_letter(p, *it));
  return out;
}

}  // namespace

TensorPoly coproduct(const Presentation& p, const NCPoly& a) {
  TensorPoly out;
  for (const auto& [m, c] : a.terms) {
    TensorPoly t = coproduct_word(p, nc::word_of_mono(m));
    for (const auto& [ab, v] : t.terms) out.add_term(ab.first, ab.second, c * v);
  }
  return out;
}

Coeff counit(const Presentation& p, const NCPoly& a) {
  Coeff out(0);
  for (const auto& [m, c] : a.terms) out += c * counit_word(p, nc::word_of_mono(m));
  return out;
}

NCPoly antipode(const Presentation& p, const NCPoly& a) {
  NCPoly out;
  for (const auto& [m, c] : a.terms) out += c * antipode_word(p, nc::word_of_mono(m));
  return out;
}

NCPoly antipode_square(const Presentation& p, std::size_t gen) {
  if (gen >= p.ngens()) throw DomainError("antipode_square: generator out of range");
  return antipode(p, antipode(p, NCPoly::generator(p.ngens(), gen)));
}

Presentation Presentation::build(PresentationData d) {
  Presentation p;
  p.name_ = std::move(d.name);
  p.gens_ = std::move(d.generators);
  const std::size_t n = p.gens_.size();
  if (n == 0) throw DataError("presentation: no generators");

  std::set<std::string> names;
  for (std::size_t g = 0; g < n; ++g) {
    const auto& gen = p.gens_[g];
    if (gen.name.empty() || !names.insert(gen.name).second)
      throw DataError("presentation: generator names must be unique and nonempty");
    if (gen.star_sign != 1 && gen.star_sign != -1)
      throw DataError("presentation: star sign must be +1 or -1");
    if (gen.invertible && g != 0)
      throw DataError(
          "presentation: an invertible generator must come first in normal order "
          "(engine restriction)");
  }

  // Base straightening rules from the bracket relations.
  std::set<std::pair<std::size_t, std::size_t>> covered;
  std::vector<NCPoly> bracket_value(n * n);
  for (const auto& br : d.brackets) {
    if (br.lo >= br.hi || br.hi >= n)
      throw DataError("presentation: bracket indices must satisfy lo < hi < ngens");
    if (!covered.insert({br.lo, br.hi}).second)
      throw DataError("presentation: duplicate bracket relation");
    NCPoly value;
    for (const auto& [c, w] : br.value) {
      Mono m = nc::mono_of_word_checked(w, n);
      for (std::size_t g = 0; g < n; ++g)
        if (m[g] < 0 && !p.gens_[g].invertible)
          throw DataError("presentation: bracket value uses a negative power");
      value.add_term(m, c);
    }
    bracket_value[br.lo * n + br.hi] = value;
    // [X_lo, X_hi] = V  =>  X_hi X_lo -> X_lo X_hi - V.
    Mono lohi(n, 0);
    lohi[br.lo] = 1;
    lohi[br.hi] = 1;
    NCPoly rhs;
    rhs.add_term(lohi, 1);
    rhs -= value;
    p.rules_[{static_cast<long>(br.hi), 1, static_cast<long>(br.lo), 1}] = std::move(rhs);
  }
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = lo + 1; hi < n; ++hi)
      if (!covered.count({lo, hi}))
        throw DataError("presentation: missing bracket relation for pair " +
                        p.gens_[lo].name + ", " + p.gens_[hi].name);

  // Derived rules for straightening past the inverse of the leading
  // generator: X_hi X_0^-1 = X_0^-1 X_hi + X_0^-1 [X_0, X_hi] X_0^-1,
  // derived in ascending order and verified by multiplying back.
  if (p.gens_[0].invertible) {
    for (std::size_t hi = 1; hi < n; ++hi) {
      const NCPoly& v = bracket_value[0 * n + hi];
      WordSum ws;
      ws.emplace_back(1, Word{{0, -1}, {hi, 1}});
      for (const auto& [m, c] : v.terms) {
        Word w{{0, -1}};
        for (const auto& letter : nc::word_of_mono(m)) w.push_back(letter);
        w.push_back({0, -1});
        ws.emplace_back(c, w);
      }
      NCPoly rule;
      try {
        rule = normalize(p, ws);
      } catch (const Error& e) {
        throw DataError(std::string("presentation: cannot derive the inverse rule for ") +
                        p.gens_[hi].name + " past " + p.gens_[0].name + "^-1: " + e.what());
      }
      // Verify (X_hi X_0^-1) X_0 = X_hi with the derived rule excluded.
      WordSum check;
      for (const auto& [m, c] : rule.terms) {
        Word w = nc::word_of_mono(m);
        w.push_back({0, 1});
        check.emplace_back(c, w);
      }
      if (normalize(p, check) != NCPoly::generator(n, hi))
        throw DataError("presentation: derived inverse rule failed verification for " +
                        p.gens_[hi].name);
      p.rules_[{static_cast<long>(hi), 1, 0, -1}] = std::move(rule);
    }
  }

  // Local confluence on all generator-pair overlaps X_k X_j X_i (k > j > i):
  // reducing the left or the right descent first must agree.
  for (std::size_t k = 2; k < n; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        std::vector<long> signs{1};
        if (p.gens_[i].invertible) signs.push_back(-1);
        for (long si : signs) {
          WordSum ws{{1, Word{{k, 1}, {j, 1}, {i, si}}}};
          NCPoly left = normalize(p, ws, Strategy::kLeftmost);
          NCPoly right = normalize(p, ws, Strategy::kRightmost);
          if (!(left == right)) {
            std::ostringstream os;
            os << "presentation: straightening not locally confluent on overlap "
               << p.gens_[k].name << " " << p.gens_[j].name << " " << p.gens_[i].name
               << (si < 0 ? "^-1" : "");
            throw DataError(os.str());
          }
        }
      }
    }
  }

  // Structure maps on generators.
  if (d.coproducts.size() != n || d.counits.size() != n || d.antipodes.size() != n)
    throw DataError("presentation: coproduct/counit/antipode lists must cover all generators");
  for (std::size_t g = 0; g < n; ++g) {
    TensorPoly t;
    for (const auto& [c, wu, wv] : d.coproducts[g]) {
      NCPoly u = normalize(p, {{1, wu}});
      NCPoly v = normalize(p, {{1, wv}});
      for (const auto& [mu, cu] : u.terms)
        for (const auto& [mv, cv] : v.terms) t.add_term(mu, mv, c * cu * cv);
    }
    p.coproducts_.push_back(std::move(t));
    p.counits_.push_back(d.counits[g]);
    p.antipodes_.push_back(normalize(p, d.antipodes[g]));
  }

  // Raw relations for the preservation checks.
  auto names_vec = p.generator_names();
  for (const auto& br : d.brackets) {
    WordSum r;
    r.emplace_back(1, Word{{br.lo, 1}, {br.hi, 1}});
    r.emplace_back(-1, Word{{br.hi, 1}, {br.lo, 1}});
    for (const auto& [c, w] : br.value) r.emplace_back(-c, w);
    NCPoly v;
    for (const auto& [c, w] : br.value) v.add_term(nc::mono_of_word_checked(w, n), c);
    p.relations_.push_back(
        {"[" + names_vec[br.lo] + "," + names_vec[br.hi] + "] = " + nc::poly_str(v, names_vec),
         std::move(r)});
  }
  if (p.gens_[0].invertible) {
    const std::string& a = names_vec[0];
    p.relations_.push_back(
        {a + " " + a + "^-1 = 1", {{1, Word{{0, 1}, {0, -1}}}, {-1, Word{}}}});
    p.relations_.push_back(
        {a + "^-1 " + a + " = 1", {{1, Word{{0, -1}, {0, 1}}}, {-1, Word{}}}});
  }
  return p;
}

CheckResult check_relations_preserved(const Presentation& p) {
  CheckResult r;
  r.name = "hopf-relations/" + p.name();
  r.statement =
      "for every defining relation r: Delta(r) = 0, eps(r) = 0, S(r) = 0, star(r) = 0";
  auto names = p.generator_names();

  for (const auto& rel : p.relations()) {
    NCPoly nf = normalize(p, rel.value);
    if (!nf.is_zero())
      r.fail("relation does not normalize to zero: " + rel.display);

    TensorPoly dr;
    Coeff er(0);
    NCPoly sr, str_r;
    for (const auto& [c, w] : rel.value) {
      TensorPoly t = coproduct_word(p, w);
      for (const auto& [ab, v] : t.terms) dr.add_term(ab.first, ab.second, c * v);
      er += c * counit_word(p, w);
      sr += c * antipode_word(p, w);
      // star of a word: reverse, apply generator signs, renormalize.
      Word rw = w;
      std::reverse(rw.begin(), rw.end());
      Coeff sign(1);
      for (const auto& letter : rw)
        sign *= sign_pow(p.generators()[letter.gen].star_sign, letter.exp);
      str_r += (sign * c) * normalize(p, {{1, rw}});
    }
    if (!dr.is_zero())
      r.fail("Delta does not preserve: " + rel.display + " -> " + nc::tensor_str(dr, names));
    if (er != 0) r.fail("eps does not preserve: " + rel.display);
    if (!sr.is_zero())
      r.fail("S does not preserve: " + rel.display + " -> " + nc::poly_str(sr, names));
    if (!str_r.is_zero())
      r.fail("star does not preserve: " + rel.display);
  }
  r.counts["relations"] = static_cast<std::int64_t>(p.relations().size());
  return r;
}

CheckResult check_hopf_axioms(const Presentation& p, const std::vector<Mono>& samples) {
  CheckResult r;
  r.name = "hopf-axioms/" + p.name();
  r.statement =
      "(eps(x)iota)Delta = iota = (iota(x)eps)Delta; m(S(x)iota)Delta = eps(.)1 = "
      "m(iota(x)S)Delta; (Delta(x)iota)Delta = (iota(x)Delta)Delta";
  auto names = p.generator_names();
  const std::size_t n = p.ngens();

  for (const auto& m : samples) {
    NCPoly pm;
    pm.add_term(m, 1);
    const std::string label = nc::mono_str(m, names);
    TensorPoly dm = coproduct(p, pm);

    NCPoly left_counit, right_counit, left_antipode, right_antipode;
    TensorPoly3 coassoc_l, coassoc_r;
    for (const auto& [ab, c] : dm.terms) {
      NCPoly u;
      u.add_term(ab.first, 1);
      NCPoly v;
      v.add_term(ab.second, 1);
      left_counit += (c * counit(p, u)) * v;
      right_counit += (c * counit(p, v)) * u;
      left_antipode += c * mul(p, antipode(p, u), v);
      right_antipode += c * mul(p, u, antipode(p, v));
      TensorPoly du = coproduct(p, u);
      for (const auto& [xy, cu] : du.terms)
        coassoc_l.add_term(xy.first, xy.second, ab.second, c * cu);
      TensorPoly dv = coproduct(p, v);
      for (const auto& [xy, cv] : dv.terms)
        coassoc_r.add_term(ab.first, xy.first, xy.second, c * cv);
    }

    if (!(left_counit == pm)) r.fail("(eps(x)iota)Delta != id at " + label);
    if (!(right_counit == pm)) r.fail("(iota(x)eps)Delta != id at " + label);
    NCPoly expected = counit(p, pm) * p.one();
    if (!(left_antipode == expected)) r.fail("m(S(x)iota)Delta != eps(.)1 at " + label);
    if (!(right_antipode == expected)) r.fail("m(iota(x)S)Delta != eps(.)1 at " + label);
    if (!(coassoc_l == coassoc_r)) r.fail("coassociativity fails at " + label);
  }
  r.counts["samples"] = static_cast<std::int64_t>(samples.size());
  (void)n;
  return r;
}

std::vector<Mono> random_monomials(const Presentation& p, std::size_t count,
                                   std::uint64_t seed, long max_exp) {
  std::mt19937_64 rng(seed);
  std::vector<Mono> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Mono m(p.ngens(), 0);
    for (std::size_t g = 0; g < p.ngens(); ++g) {
      if (p.generators()[g].invertible) {
        m[g] = static_cast<long>(rng() % (2 * max_exp + 1)) - max_exp;
      } else {
        m[g] = static_cast<long>(rng() % (max_exp + 1));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

Presentation heisenberg_primal() {
  PresentationData d;
  d.name = "heisenberg-primal";
  d.generators = {{"A", true, 1}, {"B", false, 1}, {"C", false, -1}};
  d.brackets = {
      {0, 1, {}},                 // [A,B] = 0 (B central)
      {0, 2, {{1, {{1, 1}}}}},    // [A,C] = B
      {1, 2, {}},                 // [B,C] = 0
  };
  d.coproducts = {
      {{1, {{0, 1}}, {{0, 1}}}},                       // A (x) A
      {{1, {{0, 1}}, {{1, 1}}}, {1, {{1, 1}}, {{0, -1}}}},  // A(x)B + B(x)A^-1
      {{1, {{2, 1}}, {{0, -2}}}, {1, {}, {{2, 1}}}},        // C(x)A^-2 + 1(x)C
  };
  d.counits = {1, 0, 0};
  d.antipodes = {
      {{1, {{0, -1}}}},            // S(A) = A^-1
      {{-1, {{1, 1}}}},            // S(B) = -B
      {{-1, {{2, 1}, {0, 2}}}},    // S(C) = -C A^2
  };
  return Presentation::build(std::move(d));
}

Presentation heisenberg_dual() {
  PresentationData d;
  d.name = "heisenberg-dual";
  d.generators = {{"A", false, -1}, {"B", false, -1}, {"C", false, 1}};
  d.brackets = {
      {0, 1, {{2, {{1, 1}}}}},  // [A,B] = 2B
      {0, 2, {{2, {{2, 1}}}}},  // [A,C] = 2C
      {1, 2, {{1, {{2, 2}}}}},  // [B,C] = C^2
  };
  d.coproducts = {
      {{1, {{0, 1}}, {}}, {1, {}, {{0, 1}}}},  // A(x)1 + 1(x)A
      {{1, {{1, 1}}, {}}, {1, {}, {{1, 1}}}, {1, {{0, 1}}, {{2, 1}}}},
      {{1, {{2, 1}}, {}}, {1, {}, {{2, 1}}}},  // C(x)1 + 1(x)C
  };
  d.counits = {0, 0, 0};
  d.antipodes = {
      {{-1, {{0, 1}}}},                 // S(A) = -A
      {{-1, {{1, 1}}}, {1, {{0, 1}, {2, 1}}}},  // S(B) = -B + A C
      {{-1, {{2, 1}}}},                 // S(C) = -C
  };
  return Presentation::build(std::move(d));
}

std::optional<Presentation> presentation_preset(const std::string& name) {
  if (name == "heisenberg-primal") return heisenberg_primal();
  if (name == "heisenberg-dual") return heisenberg_dual();
  return std::nullopt;
}

std::vector<std::string> presentation_preset_names() {
  return {"heisenberg-primal", "heisenberg-dual"};
}

}  // namespace bicross::hopf

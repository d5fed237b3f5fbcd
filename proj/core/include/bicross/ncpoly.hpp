#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bicross/scalar.hpp"

namespace bicross::nc {

using Coeff = Rational;

/// A normal-ordered monomial: exponent per generator, in declaration order.
/// Negative exponents are legal only for invertible generators.
using Mono = std::vector<long>;

/// A noncommutative polynomial in canonical form: monomials are normal
/// ordered, no zero coefficients are stored, equality is term-by-term.
struct NCPoly {
  std::map<Mono, Coeff> terms;

  bool is_zero() const { return terms.empty(); }

  void add_term(const Mono& m, const Coeff& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const Coeff& c, NCPoly p) {
    if (c == 0) return NCPoly{};
    for (auto& [m, v] : p.terms) v *= c;
    return p;
  }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.terms == b.terms;
  }

  static NCPoly constant(std::size_t ngens, const Coeff& c) {
    NCPoly p;
    p.add_term(Mono(ngens, 0), c);
    return p;
  }
  static NCPoly generator(std::size_t ngens, std::size_t g, long exp = 1) {
    Mono m(ngens, 0);
    m[g] = exp;
    NCPoly p;
    p.add_term(m, 1);
    return p;
  }
};

/// One factor of an unnormalized word: generator index and integer power.
struct Letter {
  std::size_t gen;
  long exp;
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
  friend bool operator<(const Letter& a, const Letter& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.exp < b.exp;
  }
};

using Word = std::vector<Letter>;
/// An unnormalized expression: a formal sum of coefficient-word pairs.
using WordSum = std::vector<std::pair<Coeff, Word>>;

Word word_of_mono(const Mono& m);
Mono mono_of_word_checked(const Word& w, std::size_t ngens);

/// Elements of the algebraic tensor square / cube, as finite sums of
/// monomial tensors with exact coefficients. Both legs normal ordered.
struct TensorPoly {
  std::map<std::pair<Mono, Mono>, Coeff> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Mono& a, const Mono& b, const Coeff& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(std::move(key), c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
    return a.terms == b.terms;
  }
};

struct TensorPoly3 {
  std::map<std::array<Mono, 3>, Coeff> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Mono& a, const Mono& b, const Mono& c, const Coeff& v) {
    if (v == 0) return;
    std::array<Mono, 3> key{a, b, c};
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(std::move(key), v);
    } else {
      it->second += v;
      if (it->second == 0) terms.erase(it);
    }
  }
  friend bool operator==(const TensorPoly3& a, const TensorPoly3& b) {
    return a.terms == b.terms;
  }
};

std::string mono_str(const Mono& m, const std::vector<std::string>& names);
std::string poly_str(const NCPoly& p, const std::vector<std::string>& names);
std::string tensor_str(const TensorPoly& t, const std::vector<std::string>& names);

}  // namespace bicross::nc

#include "bicross/ncpoly.hpp"

#include "bicross/errors.hpp"

namespace bicross::nc {

Word word_of_mono(const Mono& m) {
  Word w;
  for (std::size_t g = 0; g < m.size(); ++g)
    if (m[g] != 0) w.push_back({g, m[g]});
  return w;
}

Mono mono_of_word_checked(const Word& w, std::size_t ngens) {
  Mono m(ngens, 0);
  std::size_t last = 0;
  bool first = true;
  for (const auto& [g, e] : w) {
    if (g >= ngens) throw DomainError("word uses an undeclared generator");
    if (!first && g <= last) throw DomainError("word is not normal ordered");
    m[g] = e;
    last = g;
    first = false;
  }
  return m;
}

std::string mono_str(const Mono& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (!s.empty()) s += " ";
    s += names[g];
    if (m[g] != 1) s += "^" + std::to_string(m[g]);
  }
  return s.empty() ? "1" : s;
}

std::string poly_str(const NCPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms) {
    const bool neg = c < 0;
    Coeff a = neg ? Coeff(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string ms = mono_str(m, names);
    if (a != 1) {
      s += a.get_str();
      if (ms != "1") s += " " + ms;
    } else {
      s += ms;
    }
  }
  return s;
}

std::string tensor_str(const TensorPoly& t, const std::vector<std::string>& names) {
  if (t.is_zero()) return "0";
  std::string s;
  for (const auto& [ab, c] : t.terms) {
    const bool neg = c < 0;
    Coeff a = neg ? Coeff(-c) : c;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (a != 1) s += a.get_str() + " ";
    s += mono_str(ab.first, names) + " (x) " + mono_str(ab.second, names);
  }
  return s;
}

}  // namespace bicross::nc

#include "bicross/specfile.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace bicross::spec {

namespace {

// ---------------------------------------------------------------------------
// Expression tokens (used inside relation / coproduct / antipode lines).

struct Tok {
  enum Kind { kIdent, kNumber, kPlus, kMinus, kCaret, kLBracket, kRBracket, kComma, kTensor, kEquals, kEnd };
  Kind kind;
  std::string text;
  int col;  // 1-based
};

std::vector<Tok> lex_expr(const std::string& s, int line) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    const int col = static_cast<int>(i) + 1;
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (s.compare(i, 3, "(x)") == 0) {
      toks.push_back({Tok::kTensor, "(x)", col});
      i += 3;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      toks.push_back({Tok::kIdent, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        std::size_t k = j + 1;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j + 1) throw ParseError(line, static_cast<int>(j) + 2, "malformed rational");
        j = k;
      }
      toks.push_back({Tok::kNumber, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    switch (c) {
      case '+': toks.push_back({Tok::kPlus, "+", col}); break;
      case '-': toks.push_back({Tok::kMinus, "-", col}); break;
      case '^': toks.push_back({Tok::kCaret, "^", col}); break;
      case '[': toks.push_back({Tok::kLBracket, "[", col}); break;
      case ']': toks.push_back({Tok::kRBracket, "]", col}); break;
      case ',': toks.push_back({Tok::kComma, ",", col}); break;
      case '=': toks.push_back({Tok::kEquals, "=", col}); break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    ++i;
  }
  toks.push_back({Tok::kEnd, "", static_cast<int>(s.size()) + 1});
  return toks;
}

class ExprParser {
 public:
  ExprParser(std::vector<Tok> toks, int line,
             const std::map<std::string, std::size_t>& gens)
      : toks_(std::move(toks)), line_(line), gens_(gens) {}

  const Tok& peek() const { return toks_[pos_]; }
  Tok take() { return toks_[pos_++]; }
  bool at(Tok::Kind k) const { return peek().kind == k; }

  Tok expect(Tok::Kind k, const std::string& what) {
    if (!at(k)) throw ParseError(line_, peek().col, "expected " + what);
    return take();
  }

  nc::Coeff number() {
    Tok t = expect(Tok::kNumber, "a number");
    nc::Coeff q(t.text);
    q.canonicalize();
    return q;
  }

  long integer_exponent() {
    bool neg = false;
    if (at(Tok::kMinus)) {
      take();
      neg = true;
    }
    Tok t = expect(Tok::kNumber, "an integer exponent");
    if (t.text.find('/') != std::string::npos)
      throw ParseError(line_, t.col, "exponent must be an integer");
    long e = std::strtol(t.text.c_str(), nullptr, 10);
    return neg ? -e : e;
  }

  std::size_t generator(const Tok& t) const {
    auto it = gens_.find(t.text);
    if (it == gens_.end())
      throw ParseError(line_, t.col, "undeclared generator '" + t.text + "'");
    return it->second;
  }

  /// coeff? factor*, at least one of the two present.
  std::pair<nc::Coeff, nc::Word> product() {
    nc::Coeff c(1);
    nc::Word w;
    bool any = false;
    if (at(Tok::kNumber)) {
      c = number();
      any = true;
    }
    while (at(Tok::kIdent)) {
      Tok t = take();
      long exp = 1;
      if (at(Tok::kCaret)) {
        take();
        exp = integer_exponent();
      }
      w.push_back({generator(t), exp});
      any = true;
    }
    if (!any) throw ParseError(line_, peek().col, "expected a term");
    return {c, w};
  }

  /// term (('+'|'-') term)*, with an optional leading sign.
  nc::WordSum expr() {
    nc::WordSum out;
    nc::Coeff sign(1);
    if (at(Tok::kMinus)) {
      take();
      sign = -1;
    } else if (at(Tok::kPlus)) {
      take();
    }
    while (true) {
      auto [c, w] = product();
      out.emplace_back(sign * c, std::move(w));
      if (at(Tok::kPlus)) {
        take();
        sign = 1;
      } else if (at(Tok::kMinus)) {
        take();
        sign = -1;
      } else {
        break;
      }
    }
    return out;
  }

  /// product (x) product (('+'|'-') product (x) product)*
  std::vector<std::tuple<nc::Coeff, nc::Word, nc::Word>> tensor_expr() {
    std::vector<std::tuple<nc::Coeff, nc::Word, nc::Word>> out;
    nc::Coeff sign(1);
    if (at(Tok::kMinus)) {
      take();
      sign = -1;
    } else if (at(Tok::kPlus)) {
      take();
    }
    while (true) {
      auto [cl, wl] = product();
      expect(Tok::kTensor, "'(x)'");
      auto [cr, wr] = product();
      out.emplace_back(sign * cl * cr, std::move(wl), std::move(wr));
      if (at(Tok::kPlus)) {
        take();
        sign = 1;
      } else if (at(Tok::kMinus)) {
        take();
        sign = -1;
      } else {
        break;
      }
    }
    return out;
  }

  void expect_end() {
    if (!at(Tok::kEnd))
      throw ParseError(line_, peek().col, "unexpected trailing input");
  }

 private:
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  int line_;
  const std::map<std::string, std::size_t>& gens_;
};

// ---------------------------------------------------------------------------
// Line-level machinery.

struct Line {
  int number;  // 1-based
  std::string text;
  std::vector<std::string> words;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream is(text);
  std::string raw;
  int number = 0;
  while (std::getline(is, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ws(raw);
    std::vector<std::string> words;
    std::string w;
    while (ws >> w) words.push_back(w);
    if (words.empty()) continue;
    lines.push_back({number, raw, std::move(words)});
  }
  return lines;
}

Index parse_index(const Line& line, const std::string& w, Index bound,
                  const std::string& what) {
  for (char c : w)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line.number, 1, what + ": malformed index '" + w + "'");
  unsigned long v = std::strtoul(w.c_str(), nullptr, 10);
  if (bound != 0 && v >= bound)
    throw ParseError(line.number, 1,
                     what + ": index " + w + " out of range (bound " +
                         std::to_string(bound) + ")");
  return static_cast<Index>(v);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(split_lines(text)) {}

  SpecFile run() {
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_];
      const std::string& kw = line.words[0];
      if (kw == "group") {
        parse_group(line);
      } else if (kw == "factorization") {
        parse_factorization(line);
      } else if (kw == "pair") {
        parse_pair(line);
      } else if (kw == "presentation") {
        parse_presentation(line);
      } else if (kw == "continuous") {
        parse_continuous(line);
      } else {
        throw ParseError(line.number, 1, "unknown keyword '" + kw + "'");
      }
    }
    return std::move(out_);
  }

 private:
  const std::string& word(const Line& line, std::size_t k, const std::string& what) {
    if (k >= line.words.size())
      throw ParseError(line.number, static_cast<int>(line.text.size()) + 1,
                       "expected " + what);
    return line.words[k];
  }

  void no_extra(const Line& line, std::size_t k) {
    if (line.words.size() > k)
      throw ParseError(line.number, 1, "unexpected trailing tokens on line");
  }

  std::string fresh_name(const Line& line, const std::string& name) {
    if (!names_.insert(name).second)
      throw ParseError(line.number, 1, "duplicate name '" + name + "'");
    return name;
  }

  const Line& next_line(const std::string& what) {
    if (pos_ >= lines_.size())
      throw ParseError(lines_.empty() ? 1 : lines_.back().number, 1,
                       "unexpected end of file, expected " + what);
    return lines_[pos_];
  }

  std::vector<std::vector<Index>> parse_table(Index rows, Index cols, Index bound,
                                              const std::string& what) {
    std::vector<std::vector<Index>> table;
    for (Index r = 0; r < rows; ++r) {
      const Line& line = next_line(what + " row");
      ++pos_;
      if (line.words.size() != cols)
        throw ParseError(line.number, 1,
                         what + ": expected " + std::to_string(cols) +
                             " entries, got " + std::to_string(line.words.size()));
      std::vector<Index> row;
      row.reserve(cols);
      for (const auto& w : line.words) row.push_back(parse_index(line, w, bound, what));
      table.push_back(std::move(row));
    }
    return table;
  }

  void parse_group(const Line& line) {
    GroupDecl d;
    d.name = fresh_name(line, word(line, 1, "group name"));
    const std::string& kind = word(line, 2, "'preset' or 'table'");
    ++pos_;
    if (kind == "preset") {
      d.preset = word(line, 3, "preset name");
      no_extra(line, 4);
      auto g = group_preset(d.preset);
      if (!g)
        throw ParseError(line.number, 1, "unknown group preset '" + d.preset + "'");
      group_orders_[d.name] = g->order();
    } else if (kind == "table") {
      Index n = parse_index(line, word(line, 3, "group order"), 0, "group order");
      no_extra(line, 4);
      if (n == 0) throw ParseError(line.number, 1, "group order must be positive");
      d.table = parse_table(n, n, n, "group table");
      group_orders_[d.name] = n;
    } else {
      throw ParseError(line.number, 1, "expected 'preset' or 'table'");
    }
    out_.groups.push_back(std::move(d));
  }

  Index group_order(const Line& line, const std::string& name) {
    auto it = group_orders_.find(name);
    if (it == group_orders_.end())
      throw ParseError(line.number, 1, "undefined group '" + name + "'");
    return it->second;
  }

  void parse_factorization(const Line& line) {
    FactorizationDecl d;
    d.name = fresh_name(line, word(line, 1, "factorization name"));
    const std::string& kind = word(line, 2, "'preset' or 'ambient'");
    ++pos_;
    if (kind == "preset") {
      d.preset = word(line, 3, "preset name");
      no_extra(line, 4);
      if (d.preset != "s3" && d.preset != "s4")
        throw ParseError(line.number, 1,
                         "unknown factorization preset '" + d.preset + "'");
      // Orders of the derived subgroup pair, for later range checks.
      factorization_orders_[d.name] = d.preset == "s3" ? std::pair<Index, Index>{2, 3}
                                                       : std::pair<Index, Index>{4, 6};
    } else if (kind == "ambient") {
      d.ambient = word(line, 3, "ambient group name");
      Index order = group_order(line, d.ambient);
      std::size_t k = 4;
      auto bracket_list = [&](const char* key) {
        if (word(line, k, key) != key)
          throw ParseError(line.number, 1, std::string("expected '") + key + "'");
        ++k;
        if (word(line, k, "'['") != "[")
          throw ParseError(line.number, 1, "expected '['");
        ++k;
        std::vector<Index> elems;
        while (word(line, k, "']'") != "]") {
          elems.push_back(parse_index(line, line.words[k], order, key));
          ++k;
        }
        ++k;
        return elems;
      };
      d.left = bracket_list("left");
      d.right = bracket_list("right");
      no_extra(line, k);
      factorization_orders_[d.name] = {static_cast<Index>(d.left.size()),
                                       static_cast<Index>(d.right.size())};
    } else {
      throw ParseError(line.number, 1, "expected 'preset' or 'ambient'");
    }
    out_.factorizations.push_back(std::move(d));
  }

  void parse_pair(const Line& line) {
    PairDecl d;
    d.name = fresh_name(line, word(line, 1, "pair name"));
    const std::string& kind = word(line, 2, "'from', 'trivial' or 'explicit'");
    ++pos_;
    if (kind == "from") {
      d.kind = PairDecl::Kind::kFrom;
      d.from = word(line, 3, "factorization name");
      no_extra(line, 4);
      if (!factorization_orders_.count(d.from))
        throw ParseError(line.number, 1, "undefined factorization '" + d.from + "'");
      pair_orders_[d.name] = factorization_orders_[d.from];
    } else if (kind == "trivial" || kind == "explicit") {
      d.kind = kind == "trivial" ? PairDecl::Kind::kTrivial : PairDecl::Kind::kExplicit;
      d.gname = word(line, 3, "G group name");
      d.hname = word(line, 4, "H group name");
      no_extra(line, 5);
      Index ng = group_order(line, d.gname);
      Index nh = group_order(line, d.hname);
      pair_orders_[d.name] = {ng, nh};
      if (d.kind == PairDecl::Kind::kExplicit) {
        const Line& ah = next_line("'alpha'");
        if (ah.words.size() != 1 || ah.words[0] != "alpha")
          throw ParseError(ah.number, 1, "expected 'alpha'");
        ++pos_;
        d.alpha = parse_table(ng, nh, nh, "alpha table");
        const Line& bh = next_line("'beta'");
        if (bh.words.size() != 1 || bh.words[0] != "beta")
          throw ParseError(bh.number, 1, "expected 'beta'");
        ++pos_;
        d.beta = parse_table(ng, nh, ng, "beta table");
      }
    } else {
      throw ParseError(line.number, 1, "expected 'from', 'trivial' or 'explicit'");
    }
    out_.pairs.push_back(std::move(d));
  }

  void parse_presentation(const Line& line) {
    PresentationDecl d;
    d.name = fresh_name(line, word(line, 1, "presentation name"));
    const std::string& kind = word(line, 2, "'preset' or 'begin'");
    ++pos_;
    if (kind == "preset") {
      d.preset = word(line, 3, "preset name");
      no_extra(line, 4);
      if (!hopf::presentation_preset(d.preset))
        throw ParseError(line.number, 1,
                         "unknown presentation preset '" + d.preset + "'");
      out_.presentations.push_back(std::move(d));
      return;
    }
    if (kind != "begin") throw ParseError(line.number, 1, "expected 'preset' or 'begin'");
    no_extra(line, 3);

    hopf::PresentationData data;
    data.name = d.name;
    std::map<std::string, std::size_t> gen_index;
    std::map<std::size_t, std::vector<std::tuple<nc::Coeff, nc::Word, nc::Word>>> coproducts;
    std::map<std::size_t, nc::Coeff> counits;
    std::map<std::size_t, nc::WordSum> antipodes;
    std::set<std::pair<std::size_t, std::size_t>> bracket_pairs;

    while (true) {
      const Line& bl = next_line("'end'");
      ++pos_;
      const std::string& kw = bl.words[0];
      if (kw == "end") {
        no_extra(bl, 1);
        break;
      }
      if (kw == "generator") {
        hopf::GeneratorDecl g;
        g.name = word(bl, 1, "generator name");
        if (gen_index.count(g.name))
          throw ParseError(bl.number, 1, "duplicate generator '" + g.name + "'");
        std::size_t k = 2;
        if (k < bl.words.size() && bl.words[k] == "invertible") {
          g.invertible = true;
          ++k;
        }
        if (word(bl, k, "'star'") != "star")
          throw ParseError(bl.number, 1, "expected 'star'");
        ++k;
        std::string sv = word(bl, k, "star value (NAME or -NAME)");
        ++k;
        no_extra(bl, k);
        if (!sv.empty() && sv[0] == '-') {
          g.star_sign = -1;
          sv = sv.substr(1);
        }
        if (sv != g.name)
          throw ParseError(bl.number, 1,
                           "star value must be the generator itself up to sign");
        gen_index[g.name] = data.generators.size();
        data.generators.push_back(std::move(g));
        continue;
      }

      // The remaining block keywords carry an expression after the keyword.
      std::string rest = bl.text;
      rest.erase(0, rest.find(kw) + kw.size());
      ExprParser ep(lex_expr(rest, bl.number), bl.number, gen_index);

      if (kw == "relation") {
        std::size_t lo, hi;
        bool negate = false;
        if (ep.at(Tok::kLBracket)) {
          ep.take();
          Tok x = ep.expect(Tok::kIdent, "generator");
          ep.expect(Tok::kComma, "','");
          Tok y = ep.expect(Tok::kIdent, "generator");
          ep.expect(Tok::kRBracket, "']'");
          std::size_t xi = ep.generator(x), yi = ep.generator(y);
          if (xi == yi) throw ParseError(bl.number, x.col, "bracket of a generator with itself");
          lo = std::min(xi, yi);
          hi = std::max(xi, yi);
          negate = xi > yi;  // [Y,X] = -[X,Y]
          ep.expect(Tok::kEquals, "'='");
          nc::WordSum value = ep.expr();
          ep.expect_end();
          if (negate)
            for (auto& [c, w] : value) c = -c;
          if (!bracket_pairs.insert({lo, hi}).second)
            throw ParseError(bl.number, 1, "duplicate relation for this generator pair");
          data.brackets.push_back({lo, hi, std::move(value)});
        } else {
          // Product form: "Y X = expr" with Y later in normal order than X.
          Tok y = ep.expect(Tok::kIdent, "generator");
          Tok x = ep.expect(Tok::kIdent, "generator");
          std::size_t yi = ep.generator(y), xi = ep.generator(x);
          if (yi <= xi)
            throw ParseError(bl.number, y.col,
                             "product-form relation must be 'Y X = ...' with Y later "
                             "in declaration order");
          ep.expect(Tok::kEquals, "'='");
          nc::WordSum value = ep.expr();
          ep.expect_end();
          // Y X = E  <=>  [X,Y] = X Y - E.
          nc::WordSum bracket;
          bracket.emplace_back(1, nc::Word{{xi, 1}, {yi, 1}});
          for (auto& [c, w] : value) bracket.emplace_back(-c, std::move(w));
          if (!bracket_pairs.insert({xi, yi}).second)
            throw ParseError(bl.number, 1, "duplicate relation for this generator pair");
          data.brackets.push_back({xi, yi, std::move(bracket)});
        }
        continue;
      }

      if (kw == "coproduct" || kw == "counit" || kw == "antipode") {
        Tok g = ep.expect(Tok::kIdent, "generator");
        std::size_t gi = ep.generator(g);
        ep.expect(Tok::kEquals, "'='");
        if (kw == "coproduct") {
          if (coproducts.count(gi))
            throw ParseError(bl.number, 1, "duplicate coproduct for '" + g.text + "'");
          coproducts[gi] = ep.tensor_expr();
        } else if (kw == "counit") {
          if (counits.count(gi))
            throw ParseError(bl.number, 1, "duplicate counit for '" + g.text + "'");
          nc::Coeff sign(1);
          if (ep.at(Tok::kMinus)) {
            ep.take();
            sign = -1;
          }
          counits[gi] = sign * ep.number();
        } else {
          if (antipodes.count(gi))
            throw ParseError(bl.number, 1, "duplicate antipode for '" + g.text + "'");
          antipodes[gi] = ep.expr();
        }
        ep.expect_end();
        continue;
      }

      throw ParseError(bl.number, 1, "unknown presentation keyword '" + kw + "'");
    }

    const std::size_t n = data.generators.size();
    for (std::size_t g = 0; g < n; ++g) {
      const std::string& gname = data.generators[g].name;
      auto itc = coproducts.find(g);
      if (itc == coproducts.end())
        throw ParseError(line.number, 1, "missing coproduct for generator '" + gname + "'");
      data.coproducts.push_back(itc->second);
      auto ite = counits.find(g);
      if (ite == counits.end())
        throw ParseError(line.number, 1, "missing counit for generator '" + gname + "'");
      data.counits.push_back(ite->second);
      auto its = antipodes.find(g);
      if (its == antipodes.end())
        throw ParseError(line.number, 1, "missing antipode for generator '" + gname + "'");
      data.antipodes.push_back(its->second);
    }
    for (std::size_t lo = 0; lo < n; ++lo)
      for (std::size_t hi = lo + 1; hi < n; ++hi)
        if (!bracket_pairs.count({lo, hi}))
          throw ParseError(line.number, 1,
                           "missing relation for pair " + data.generators[lo].name +
                               ", " + data.generators[hi].name);

    d.data = std::move(data);
    out_.presentations.push_back(std::move(d));
  }

  void parse_continuous(const Line& line) {
    ContinuousDecl d;
    d.name = fresh_name(line, word(line, 1, "continuous config name"));
    std::size_t k = 2;
    while (k < line.words.size()) {
      const std::string& key = line.words[k];
      const std::string& val = word(line, k + 1, "value for '" + key + "'");
      char* end = nullptr;
      if (key == "samples") {
        d.config.count = std::strtoll(val.c_str(), &end, 10);
      } else if (key == "wmap-samples") {
        d.config.wmap_count = std::strtoll(val.c_str(), &end, 10);
      } else if (key == "seed") {
        d.config.seed = std::strtoull(val.c_str(), &end, 10);
      } else if (key == "tolerance") {
        d.config.tolerance = std::strtod(val.c_str(), &end);
      } else if (key == "wmap-tolerance") {
        d.config.wmap_tolerance = std::strtod(val.c_str(), &end);
      } else if (key == "guard") {
        d.config.guard = std::strtod(val.c_str(), &end);
      } else {
        throw ParseError(line.number, 1, "unknown continuous key '" + key + "'");
      }
      if (end == nullptr || *end != '\0')
        throw ParseError(line.number, 1, "malformed value '" + val + "' for '" + key + "'");
      k += 2;
    }
    ++pos_;
    out_.continuous.push_back(std::move(d));
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  SpecFile out_;
  std::set<std::string> names_;
  std::map<std::string, Index> group_orders_;
  std::map<std::string, std::pair<Index, Index>> factorization_orders_;
  std::map<std::string, std::pair<Index, Index>> pair_orders_;
};

// ---------------------------------------------------------------------------
// Canonical printing.

std::string word_str(const nc::Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& [g, e] : w) {
    if (!s.empty()) s += " ";
    s += names[g];
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string wordsum_str(const nc::WordSum& ws, const std::vector<std::string>& names) {
  if (ws.empty()) return "0";
  std::string s;
  for (const auto& [c, w] : ws) {
    nc::Coeff a = c < 0 ? nc::Coeff(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string body = word_str(w, names);
    if (a != 1 || body.empty()) {
      s += a.get_str();
      if (!body.empty()) s += " ";
    }
    s += body;
  }
  return s;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

SpecFile parse_spec(const std::string& text) { return Parser(text).run(); }

std::string print_spec(const SpecFile& spec) {
  std::ostringstream os;
  for (const auto& g : spec.groups) {
    if (!g.preset.empty()) {
      os << "group " << g.name << " preset " << g.preset << "\n";
    } else {
      os << "group " << g.name << " table " << g.table.size() << "\n";
      for (const auto& row : g.table) {
        os << " ";
        for (Index x : row) os << " " << x;
        os << "\n";
      }
    }
  }
  for (const auto& f : spec.factorizations) {
    if (!f.preset.empty()) {
      os << "factorization " << f.name << " preset " << f.preset << "\n";
    } else {
      os << "factorization " << f.name << " ambient " << f.ambient << " left [";
      for (std::size_t k = 0; k < f.left.size(); ++k) os << (k ? " " : " ") << f.left[k];
      os << " ] right [";
      for (std::size_t k = 0; k < f.right.size(); ++k) os << " " << f.right[k];
      os << " ]\n";
    }
  }
  for (const auto& p : spec.pairs) {
    switch (p.kind) {
      case PairDecl::Kind::kFrom:
        os << "pair " << p.name << " from " << p.from << "\n";
        break;
      case PairDecl::Kind::kTrivial:
        os << "pair " << p.name << " trivial " << p.gname << " " << p.hname << "\n";
        break;
      case PairDecl::Kind::kExplicit:
        os << "pair " << p.name << " explicit " << p.gname << " " << p.hname << "\n";
        os << "alpha\n";
        for (const auto& row : p.alpha) {
          os << " ";
          for (Index x : row) os << " " << x;
          os << "\n";
        }
        os << "beta\n";
        for (const auto& row : p.beta) {
          os << " ";
          for (Index x : row) os << " " << x;
          os << "\n";
        }
        break;
    }
  }
  for (const auto& pd : spec.presentations) {
    if (!pd.preset.empty()) {
      os << "presentation " << pd.name << " preset " << pd.preset << "\n";
      continue;
    }
    std::vector<std::string> names;
    for (const auto& g : pd.data.generators) names.push_back(g.name);
    os << "presentation " << pd.name << " begin\n";
    for (const auto& g : pd.data.generators) {
      os << "  generator " << g.name;
      if (g.invertible) os << " invertible";
      os << " star " << (g.star_sign < 0 ? "-" : "") << g.name << "\n";
    }
    for (const auto& br : pd.data.brackets) {
      os << "  relation [" << names[br.lo] << "," << names[br.hi]
         << "] = " << wordsum_str(br.value, names) << "\n";
    }
    for (std::size_t g = 0; g < names.size(); ++g) {
      os << "  coproduct " << names[g] << " =";
      const auto& terms = pd.data.coproducts[g];
      if (terms.empty()) {
        os << " 0 (x) 0";  // unreachable for valid data
      }
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& [c, wl, wr] = terms[t];
        nc::Coeff a = c < 0 ? nc::Coeff(-c) : c;
        if (t == 0) {
          os << (c < 0 ? " -" : " ");
        } else {
          os << (c < 0 ? " - " : " + ");
        }
        std::string l = word_str(wl, names), r = word_str(wr, names);
        if (a != 1 || l.empty()) {
          os << a.get_str();
          if (!l.empty()) os << " ";
        }
        os << l << " (x) " << (r.empty() ? "1" : r);
      }
      os << "\n";
    }
    for (std::size_t g = 0; g < names.size(); ++g) {
      const auto& c = pd.data.counits[g];
      os << "  counit " << names[g] << " = " << c.get_str() << "\n";
    }
    for (std::size_t g = 0; g < names.size(); ++g)
      os << "  antipode " << names[g] << " = " << wordsum_str(pd.data.antipodes[g], names)
         << "\n";
    os << "end\n";
  }
  for (const auto& c : spec.continuous) {
    os << "continuous " << c.name << " samples " << c.config.count << " wmap-samples "
       << c.config.wmap_count << " seed " << c.config.seed << " tolerance "
       << fmt_double(c.config.tolerance) << " wmap-tolerance "
       << fmt_double(c.config.wmap_tolerance) << " guard " << fmt_double(c.config.guard)
       << "\n";
  }
  return os.str();
}

}  // namespace bicross::spec

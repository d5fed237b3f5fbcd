#pragma once

#include <string>
#include <vector>

#include "bicross/continuous.hpp"
#include "bicross/errors.hpp"
#include "bicross/group.hpp"
#include "bicross/hopf.hpp"

namespace bicross::spec {

/// Parse failure with a 1-based source location.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& message)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
              message),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct GroupDecl {
  std::string name;
  std::string preset;  // empty when a table is given
  std::vector<std::vector<Index>> table;
  friend bool operator==(const GroupDecl&, const GroupDecl&) = default;
};

struct FactorizationDecl {
  std::string name;
  std::string preset;   // "s3" / "s4", empty when explicit
  std::string ambient;  // group name
  std::vector<Index> left, right;
  friend bool operator==(const FactorizationDecl&, const FactorizationDecl&) = default;
};

struct PairDecl {
  enum class Kind { kFrom, kTrivial, kExplicit };
  std::string name;
  Kind kind = Kind::kFrom;
  std::string from;            // factorization name
  std::string gname, hname;    // for trivial/explicit
  std::vector<std::vector<Index>> alpha, beta;
  friend bool operator==(const PairDecl&, const PairDecl&) = default;
};

struct PresentationDecl {
  std::string name;
  std::string preset;  // empty when a DSL block is given
  hopf::PresentationData data;
  friend bool operator==(const PresentationDecl&, const PresentationDecl&) = default;
};

struct ContinuousDecl {
  std::string name;
  cont::SampleConfig config;
  friend bool operator==(const ContinuousDecl&, const ContinuousDecl&) = default;
};

struct SpecFile {
  std::vector<GroupDecl> groups;
  std::vector<FactorizationDecl> factorizations;
  std::vector<PairDecl> pairs;
  std::vector<PresentationDecl> presentations;
  std::vector<ContinuousDecl> continuous;
  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Parses the line-oriented spec grammar (see docs/specfile.ebnf). Errors
/// carry 1-based line/column positions.
SpecFile parse_spec(const std::string& text);

/// Canonical serialization; parsing it back yields a structurally identical
/// SpecFile.
std::string print_spec(const SpecFile& spec);

}  // namespace bicross::spec

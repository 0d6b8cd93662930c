#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qtilt/algebra.hpp"

namespace qtilt {

/// Text form of an algebra:
///
///   # comment
///   field = Q            (or: field = Fp 7)
///   vertex 1
///   arrow a: 1 -> 2
///   relation a*b - 2*c*d
struct AlgebraSpec {
  struct ArrowDecl {
    std::string label, source, target;
    bool operator==(const ArrowDecl&) const = default;
  };
  struct Term {
    std::int64_t coeff = 1;
    std::vector<std::string> arrows;
    bool operator==(const Term&) const = default;
  };
  using Relation = std::vector<Term>;

  std::string field = "Q";  // "Q" or "Fp <p>"
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<Relation> relations;

  bool operator==(const AlgebraSpec&) const = default;
};

/// Parse error carrying a 1-based line and column.
class SpecError : public Error {
 public:
  SpecError(int line, int column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

AlgebraSpec parse_spec(const std::string& text);
std::string print_spec(const AlgebraSpec& spec);
Field spec_field(const AlgebraSpec& spec);
/// Builds the algebra; call under a FieldScope for spec_field(spec).
AlgebraPtr build_from_spec(const AlgebraSpec& spec);

/// nakayama_a, radsquare_a, auslander_uniserial, preprojective_a, auslander_nakayama.
AlgebraSpec family_spec(const std::string& name, int n);
/// "name:n"
AlgebraSpec family_spec(const std::string& name_colon_n);
std::vector<std::string> family_names();

/// Runs the command line (args exclude the program name). Exit codes:
/// 0 success, 1 error, 2 incomplete (node budget exhausted).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtilt

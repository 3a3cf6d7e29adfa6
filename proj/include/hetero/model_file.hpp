#pragma once

// Line-based model files. See docs/model_format.md for the grammar.
//
//   # N(3,1)
//   dim 7
//   params a b
//   structure g2-standard
//   d e7 = a*e12 + b*e34 - (a+b)*e56
//   instanton (1,2) = lambda*e7
//   eval a=1, b=2

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hetero/connection.hpp"
#include "hetero/gstructure.hpp"
#include "hetero/lie_model.hpp"
#include "hetero/verifier.hpp"

namespace hetero {

struct ModelFile {
  enum class Structure { G2Standard, Spin7Standard, Explicit };

  int dim = 0;
  std::vector<std::string> params;
  Structure structure = Structure::G2Standard;
  KForm structure_form;  // set when structure == Explicit
  /// de^k for the frames listed in the file; the rest are closed.
  std::map<int, KForm> differentials;
  /// (i,j) with i < j maps to sigma_j^i; sigma_i^j is its negative.
  std::map<std::pair<int, int>, KForm> instanton;
  std::vector<Assignment> eval_points;

  bool operator==(const ModelFile&) const = default;
};

/// Throws ParseError for malformed input and ClosureError when d^2 != 0.
ModelFile parse_model(std::string_view text);
/// Canonical text; parse_model(print_model(m)) == m.
std::string print_model(const ModelFile& file);

LieAlgebraModel to_model(const ModelFile& file);
/// Throws PreconditionFailure when an explicit form does not induce the frame metric.
GStructure to_structure(const ModelFile& file);
/// Empty when the file has no instanton lines.
std::optional<Connection> to_instanton(const ModelFile& file);

VerifyInput to_verify_input(const ModelFile& file, std::string name, ConnectionChoice connection);

/// "a=1, b=-2/3" -> assignment. Throws ParseError.
Assignment parse_assignment(std::string_view text, int line = 1, int column = 1);
std::string format_assignment(const Assignment& values, const std::vector<std::string>& order = {});

}  // namespace hetero

#pragma once

#include "fbca/fbc.hpp"
#include "fbca/monomial.hpp"
#include "fbca/presentation.hpp"

#include <json.hpp>

#include <string>

namespace fbca {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}
};

nlohmann::json load_json_file(const std::string &path); // ParseError on failure

// {"vertices": [...], "arrows": [{"name","source","target"}],
//  "relations": [[arrow names in traversal order], ...]}
struct AlgebraInput {
  Quiver quiver;
  std::vector<Path> generators;
};
AlgebraInput algebra_from_json(const nlohmann::json &j);
nlohmann::json algebra_to_json(const Quiver &q, const std::vector<Path> &generators);

// {"angles", "g", "P", "L", "d"} with "d" a map or the string "trivial".
// Optional "p_labels"/"l_labels" arrays carry display names.
Fbc fbc_from_json(const nlohmann::json &j);
nlohmann::json fbc_to_json(const Fbc &E);

// {"vertices", "arrows", "relations": [{"kind", "terms": [{"coeff", "path"}]}]}
Presentation presentation_from_json(const nlohmann::json &j);
nlohmann::json presentation_to_json(const Presentation &P);

std::string quiver_to_dot(const Quiver &q, const std::string &name = "Q");

} // namespace fbca

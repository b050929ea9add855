#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fpush/splitting.hpp"

namespace fpush::cli {

using json = nlohmann::ordered_json;

/// Malformed or inconsistent problem document. Carries a location when known.
class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

/// A ring, named modules over it, and an optional task block.
///
///   { "characteristic": 3, "variables": ["x", "y"], "weights": [3, 2],
///     "relations": ["x^2-y^3"],
///     "modules": { "R": {"free": [0]}, "m": {"ideal": ["x", "y"]},
///                  "FR": {"pushforward": "R", "q": 3} },
///     "task": { "command": "decompose", "module": "FR" } }
///
/// Module entries: free, ideal, quotient, residue_field, generator_degrees +
/// relations, pushforward (+ q), direct_sum; any entry may add "shift".
struct ProblemDocument {
  json source;
  RingPtr ring;
  std::map<std::string, GradedModule> modules;
  std::vector<std::string> order;  ///< module names in document order
  json task = json::object();

  const GradedModule& module(const std::string& name) const;
};

ProblemDocument parse_document(const std::string& text);
ProblemDocument load_document(const std::string& path);

json degree_json(const RationalDegree& d);
json matrix_json(const PolyRing& ring, const PolyMatrix& m);
/// [[a, b],\n [c, d]]
std::string dense_text(const PolyRing& ring, const PolyMatrix& m);
json module_json(const GradedModule& m);
json decomposition_json(const Decomposition& d);

}  // namespace fpush::cli

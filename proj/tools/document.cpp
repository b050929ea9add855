#include "document.hpp"

#include <fstream>
#include <sstream>

#include "fpush/frobenius.hpp"

namespace fpush::cli {

namespace {

RationalDegree parse_degree(const json& j, const std::string& where) {
  if (j.is_number_integer()) return RationalDegree(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return RationalDegree::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw DocumentError(where + ": bad degree '" + j.get<std::string>() + "'");
    }
  }
  throw DocumentError(where + ": degree must be an integer or a string like \"1/3\"");
}

Polynomial parse_poly(const PolyRing& T, const json& j, const std::string& where) {
  if (!j.is_string()) throw DocumentError(where + ": polynomial must be a string");
  try {
    return T.parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

std::vector<Polynomial> parse_polys(const PolyRing& T, const json& j, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected a list of polynomials");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_poly(T, j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::uint64_t parse_q(const json& entry, std::uint32_t p, const std::string& where) {
  if (!entry.contains("q")) return p;
  if (!entry["q"].is_number_unsigned()) throw DocumentError(where + ".q: expected a positive integer");
  return entry["q"].get<std::uint64_t>();
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

const GradedModule& ProblemDocument::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw DocumentError("unknown module '" + name + "'");
  return it->second;
}

ProblemDocument parse_document(const std::string& text) {
  ProblemDocument doc;
  try {
    doc.source = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw DocumentError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  const json& s = doc.source;
  if (!s.is_object()) throw DocumentError("document must be a JSON object");
  if (!s.contains("characteristic") || !s["characteristic"].is_number_unsigned())
    throw DocumentError("characteristic: expected a prime");
  if (!s.contains("variables") || !s["variables"].is_array() || s["variables"].empty())
    throw DocumentError("variables: expected a non-empty list of names");

  std::vector<std::string> names;
  for (const auto& v : s["variables"]) {
    if (!v.is_string()) throw DocumentError("variables: names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<int> weights(names.size(), 1);
  if (s.contains("weights")) {
    if (!s["weights"].is_array() || s["weights"].size() != names.size())
      throw DocumentError("weights: expected one positive integer per variable");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!s["weights"][i].is_number_integer() || s["weights"][i].get<int>() <= 0)
        throw DocumentError("weights[" + std::to_string(i) + "]: expected a positive integer");
      weights[i] = s["weights"][i].get<int>();
    }
  }
  PolyRing T = [&] {
    try {
      return PolyRing(PrimeField(s["characteristic"].get<std::uint32_t>()), names, weights);
    } catch (const std::exception& e) {
      throw DocumentError(std::string("ring: ") + e.what());
    }
  }();
  std::vector<Polynomial> rels;
  if (s.contains("relations")) rels = parse_polys(T, s["relations"], "relations");
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (!T.is_homogeneous(rels[i])) throw DocumentError("relations[" + std::to_string(i) + "]: not homogeneous");
  doc.ring = make_ring(T, rels);

  json mods = s.contains("modules") ? s["modules"] : json::object();
  if (!mods.is_object()) throw DocumentError("modules: expected an object");
  for (auto it = mods.begin(); it != mods.end(); ++it) {
    const std::string name = it.key();
    const std::string where = "modules." + name;
    const json& e = it.value();
    if (!e.is_object()) throw DocumentError(where + ": expected an object");
    GradedModule m;
    try {
      if (e.contains("free")) {
        std::vector<RationalDegree> degs;
        for (std::size_t i = 0; i < e["free"].size(); ++i)
          degs.push_back(parse_degree(e["free"][i], where + ".free[" + std::to_string(i) + "]"));
        m = free_module(doc.ring, degs);
      } else if (e.contains("ideal")) {
        m = ideal_module(doc.ring, parse_polys(T, e["ideal"], where + ".ideal"));
      } else if (e.contains("quotient")) {
        m = quotient_ring_module(doc.ring, parse_polys(T, e["quotient"], where + ".quotient"));
      } else if (e.contains("residue_field")) {
        m = residue_field(doc.ring);
      } else if (e.contains("relations") || e.contains("generator_degrees")) {
        PolyMatrix rows;
        const json& r = e.contains("relations") ? e["relations"] : json::array();
        for (std::size_t i = 0; i < r.size(); ++i)
          rows.push_back(parse_polys(T, r[i], where + ".relations[" + std::to_string(i) + "]"));
        std::vector<RationalDegree> degs;
        if (e.contains("generator_degrees")) {
          for (std::size_t i = 0; i < e["generator_degrees"].size(); ++i)
            degs.push_back(parse_degree(e["generator_degrees"][i], where + ".generator_degrees[" + std::to_string(i) + "]"));
        } else {
          degs.assign(rows.empty() ? 0 : rows.front().size(), RationalDegree(0));
        }
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (rows[i].size() != degs.size())
            throw DocumentError(where + ".relations[" + std::to_string(i) + "]: expected " +
                                std::to_string(degs.size()) + " entries");
        m = GradedModule(doc.ring, degs, rows);
      } else if (e.contains("pushforward")) {
        m = pushforward(doc.module(e["pushforward"].get<std::string>()), parse_q(e, T.characteristic(), where));
      } else if (e.contains("direct_sum")) {
        std::vector<GradedModule> parts;
        for (const auto& n : e["direct_sum"]) parts.push_back(doc.module(n.get<std::string>()));
        m = direct_sum(parts);
      } else {
        throw DocumentError(where + ": unknown module kind");
      }
      if (e.contains("shift")) m = m.shifted(parse_degree(e["shift"], where + ".shift"));
    } catch (const DocumentError&) {
      throw;
    } catch (const std::exception& ex) {
      throw DocumentError(where + ": " + ex.what());
    }
    doc.modules[name] = m;
    doc.order.push_back(name);
  }
  if (s.contains("task")) {
    if (!s["task"].is_object()) throw DocumentError("task: expected an object");
    doc.task = s["task"];
  }
  return doc;
}

ProblemDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

json degree_json(const RationalDegree& d) { return d.str(); }

json matrix_json(const PolyRing& ring, const PolyMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& p : row) r.push_back(ring.format(p));
    out.push_back(r);
  }
  return out;
}

std::string dense_text(const PolyRing& ring, const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ",\n [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? ", " : "") + ring.format(m[i][j]);
    out += "]";
  }
  return out + "]";
}

json module_json(const GradedModule& m) {
  json degs = json::array();
  for (const auto& d : m.generator_degrees()) degs.push_back(degree_json(d));
  return {{"generator_degrees", degs},
          {"relations", matrix_json(m.ring().ambient(), m.relations())},
          {"hilbert_series", m.hilbert_series().str()}};
}

json decomposition_json(const Decomposition& d) {
  const auto& T = d.module.ring().ambient();
  json classes = json::array();
  for (const auto& c : d.classes) {
    json shifts = json::array();
    for (const auto& s : c.shifts) shifts.push_back(degree_json(s));
    classes.push_back({{"representative", module_json(c.representative)},
                       {"multiplicity", c.multiplicity()},
                       {"free", c.free_rank_one},
                       {"members", c.members},
                       {"shifts", shifts}});
  }
  json summands = json::array();
  for (const auto& s : d.summands)
    summands.push_back({{"module", module_json(s.module)},
                        {"indecomposable", s.indecomposable},
                        {"inclusion", matrix_json(T, s.inclusion)},
                        {"projection", matrix_json(T, s.projection)}});
  return {{"summand_count", d.summands.size()},
          {"free_rank", d.free_rank()},
          {"complete", d.complete},
          {"verified", d.verified},
          {"classes", classes},
          {"summands", summands}};
}

}  // namespace fpush::cli

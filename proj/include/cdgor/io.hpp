#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "cdgor/error.hpp"
#include "cdgor/poset.hpp"
#include "cdgor/simplicial.hpp"

namespace cdgor::io {

// Writers emit one element, cover or facet per line so files diff cleanly and
// are byte-identical for equal values.

inline std::string poset_to_json(const GradedPoset& p) {
  std::ostringstream os;
  os << "{\n  \"elements\": [\n";
  const auto& ids = p.elements();
  for (std::size_t i = 0; i < ids.size(); ++i)
    os << "    {\"id\": " << ids[i] << ", \"rank\": " << p.rank_at(i) << "}" << (i + 1 < ids.size() ? "," : "")
       << "\n";
  os << "  ],\n  \"covers\": [\n";
  const auto covers = p.cover_pairs();
  for (std::size_t i = 0; i < covers.size(); ++i)
    os << "    [" << covers[i].first << ", " << covers[i].second << "]" << (i + 1 < covers.size() ? "," : "") << "\n";
  os << "  ],\n  \"bottom\": " << p.bottom() << ",\n  \"top\": " << p.top() << "\n}\n";
  return os.str();
}

inline std::string complex_to_json(const SimplicialComplex& d) {
  std::ostringstream os;
  os << "{\n  \"vertices\": [";
  const auto& vs = d.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? ", " : "") << vs[i];
  os << "],\n  \"facets\": [\n";
  const auto& fs = d.facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < fs[i].size(); ++j) os << (j ? ", " : "") << fs[i][j];
    os << "]" << (i + 1 < fs.size() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

namespace detail {

inline nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace detail

inline PosetDescription poset_description_from_json(const nlohmann::json& j) {
  return detail::guarded([&] {
    PosetDescription d;
    for (const auto& e : j.at("elements")) d.elements.emplace_back(e.at("id").get<ElementId>(), e.at("rank").get<int>());
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::ParseError, "cover must be a pair");
      d.covers.emplace_back(c[0].get<ElementId>(), c[1].get<ElementId>());
    }
    d.bottom = j.at("bottom").get<ElementId>();
    d.top = j.at("top").get<ElementId>();
    return d;
  });
}

inline GradedPoset poset_from_json(const std::string& text) {
  return validate(poset_description_from_json(detail::parse_json(text)));
}

inline SimplicialComplex complex_from_json(const std::string& text) {
  const auto j = detail::parse_json(text);
  return detail::guarded([&] {
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<Face>());
    SimplicialComplex d = SimplicialComplex::from_faces(facets);
    auto listed = j.at("vertices").get<std::vector<Vertex>>();
    std::sort(listed.begin(), listed.end());
    if (listed != d.vertices()) throw Error(ErrorCode::InvalidInput, "vertex list does not match the facets");
    return d;
  });
}

using Document = std::variant<GradedPoset, SimplicialComplex>;

/// Decides the kind by its keys: "elements" for a poset, "facets" for a complex.
inline Document document_from_json(const std::string& text) {
  const auto j = detail::parse_json(text);
  if (j.is_object() && j.contains("elements")) return validate(poset_description_from_json(j));
  if (j.is_object() && j.contains("facets")) return complex_from_json(text);
  throw Error(ErrorCode::ParseError, "neither a poset nor a complex document");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace cdgor::io

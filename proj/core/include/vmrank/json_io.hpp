#pragma once

#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "vmrank/graph.hpp"
#include "vmrank/vertex_model.hpp"

// Interchange formats.
//
// Graph:  {"vertices": n, "edges": [[u, v], ...], "free_loops": f,
//          "labels": [v1, ..., vk]}   (0-based; labels absent for a plain graph)
// Model:  {"colors": n, "max_degree": D,
//          "weights": [{"multiset": [m1, ..., mn], "re": "p/q", "im": "p/q"}]}
//          (omitted multisets weigh 0)
//
// Readers throw InputError on malformed documents.
namespace vmrank::io {

// A document without "labels" parses to an arity-0 fragment.
Fragment fragment_from_json(const nlohmann::json& doc);
MultiGraph graph_from_json(const nlohmann::json& doc);
nlohmann::ordered_json to_json(const MultiGraph& g);
nlohmann::ordered_json to_json(const Fragment& f);

VertexModel model_from_json(const nlohmann::json& doc);
// Only nonzero weights are written.
nlohmann::ordered_json to_json(const VertexModel& y);

nlohmann::json parse_document(const std::string& text);
nlohmann::json read_document(const std::string& path);

}  // namespace vmrank::io

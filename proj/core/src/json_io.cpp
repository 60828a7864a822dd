#include "vmrank/json_io.hpp"

#include <fstream>
#include <sstream>

#include "vmrank/errors.hpp"

namespace vmrank::io {

namespace {

int require_count(const nlohmann::json& doc, const char* key, bool required, int fallback = 0) {
  if (!doc.contains(key)) {
    if (required) throw InputError(std::string("missing field '") + key + "'");
    return fallback;
  }
  const auto& value = doc.at(key);
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw InputError(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return value.get<int>();
}

int require_index(const nlohmann::json& value, const char* what) {
  if (!value.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return value.get<int>();
}

std::string require_string(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return "0";
  const auto& value = doc.at(key);
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw InputError(std::string("weight field '") + key + "' must be a rational string");
}

}  // namespace

Fragment fragment_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  const int vertices = require_count(doc, "vertices", true);
  const int free_loops = require_count(doc, "free_loops", false);
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) throw InputError("'edges' must be an array");
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2) throw InputError("each edge must be a pair [u, v]");
      edges.push_back({require_index(pair[0], "edge endpoint"), require_index(pair[1], "edge endpoint")});
    }
  }
  MultiGraph g(vertices, std::move(edges), free_loops);
  if (!doc.contains("labels")) return Fragment(std::move(g));
  if (!doc.at("labels").is_array()) throw InputError("'labels' must be an array");
  std::vector<int> labels;
  for (const auto& v : doc.at("labels")) labels.push_back(require_index(v, "label"));
  return Fragment(g, labels);
}

MultiGraph graph_from_json(const nlohmann::json& doc) {
  Fragment f = fragment_from_json(doc);
  if (f.arity() != 0) throw InputError("expected a plain graph, got a fragment with labels");
  return f.graph();
}

nlohmann::ordered_json to_json(const MultiGraph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.vertex_count()}, {"edges", edges}, {"free_loops", g.free_loops()}};
}

nlohmann::ordered_json to_json(const Fragment& f) {
  nlohmann::ordered_json doc = to_json(f.graph());
  if (f.arity() > 0) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (int i = 0; i < f.arity(); ++i) labels.push_back(i);
    doc["labels"] = labels;
  }
  return doc;
}

VertexModel model_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("model document must be a JSON object");
  const int colors = require_count(doc, "colors", true);
  const int max_degree = require_count(doc, "max_degree", true);
  VertexModel model(colors, max_degree);
  if (!doc.contains("weights")) return model;
  if (!doc.at("weights").is_array()) throw InputError("'weights' must be an array");
  for (const auto& entry : doc.at("weights")) {
    if (!entry.is_object() || !entry.contains("multiset") || !entry.at("multiset").is_array()) {
      throw InputError("each weight needs a 'multiset' array");
    }
    std::vector<int> counts;
    int size = 0;
    for (const auto& c : entry.at("multiset")) {
      counts.push_back(require_index(c, "multiplicity"));
      size += counts.back();
    }
    if (size > max_degree) throw InputError("weight given for a multiset larger than max_degree");
    const GaussianRational re = GaussianRational::parse(require_string(entry, "re"));
    const GaussianRational im = GaussianRational::parse(require_string(entry, "im"));
    if (!re.is_real() || !im.is_real()) throw InputError("'re' and 'im' must be real rationals");
    model.set_weight(counts, GaussianRational(re.real(), im.real()));
  }
  return model;
}

nlohmann::ordered_json to_json(const VertexModel& y) {
  nlohmann::ordered_json weights = nlohmann::ordered_json::array();
  y.for_each_multiset([&](std::span<const int> counts, const GaussianRational& w) {
    if (w.is_zero()) return;
    weights.push_back({{"multiset", std::vector<int>(counts.begin(), counts.end())},
                       {"re", w.real().get_str()},
                       {"im", w.imag().get_str()}});
  });
  return {{"colors", y.colors()}, {"max_degree", y.max_degree()}, {"weights", weights}};
}

nlohmann::json parse_document(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

nlohmann::json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

}  // namespace vmrank::io

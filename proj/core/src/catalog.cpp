#include "vmrank/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "vmrank/errors.hpp"

namespace vmrank {

namespace {

// Stubs are decided label by label: a label either pairs with a later free
// label (a bare edge) or attaches to one of the unlabeled vertices.
void assign_stubs(int arity, int vertices, int label, std::vector<int>& partner_or_vertex, std::vector<Edge>& stubs,
                  const std::function<void(const std::vector<Edge>&)>& emit) {
  if (label == arity) {
    emit(stubs);
    return;
  }
  if (partner_or_vertex[static_cast<std::size_t>(label)] != -1) {
    assign_stubs(arity, vertices, label + 1, partner_or_vertex, stubs, emit);
    return;
  }
  for (int v = 0; v < vertices; ++v) {
    partner_or_vertex[static_cast<std::size_t>(label)] = arity + v;
    stubs.push_back({label, arity + v});
    assign_stubs(arity, vertices, label + 1, partner_or_vertex, stubs, emit);
    stubs.pop_back();
  }
  for (int other = label + 1; other < arity; ++other) {
    if (partner_or_vertex[static_cast<std::size_t>(other)] != -1) continue;
    partner_or_vertex[static_cast<std::size_t>(label)] = other;
    partner_or_vertex[static_cast<std::size_t>(other)] = label;
    stubs.push_back({label, other});
    assign_stubs(arity, vertices, label + 1, partner_or_vertex, stubs, emit);
    stubs.pop_back();
    partner_or_vertex[static_cast<std::size_t>(other)] = -1;
  }
  partner_or_vertex[static_cast<std::size_t>(label)] = -1;
}

}  // namespace

FragmentCatalog enumerate_fragments(int arity, CatalogBounds bounds, CatalogGuard guard) {
  if (arity < 0 || bounds.max_vertices < 0 || bounds.max_edges < 0) throw InputError("negative catalog bound");
  if (arity > guard.max_arity || bounds.max_vertices > guard.max_vertices || bounds.max_edges > guard.max_edges) {
    throw GuardViolation("catalog bounds (k=" + std::to_string(arity) + ", V*=" + std::to_string(bounds.max_vertices) +
                         ", E*=" + std::to_string(bounds.max_edges) + ") exceed guard (k<=" +
                         std::to_string(guard.max_arity) + ", V*<=" + std::to_string(guard.max_vertices) +
                         ", E*<=" + std::to_string(guard.max_edges) + ")");
  }

  std::map<std::string, Fragment> unique;
  std::vector<int> labels(static_cast<std::size_t>(arity));
  std::iota(labels.begin(), labels.end(), 0);

  for (int vertices = 0; vertices <= bounds.max_vertices; ++vertices) {
    // Edge types among unlabeled vertices: pairs (a, b) with a <= b.
    std::vector<Edge> types;
    for (int a = 0; a < vertices; ++a) {
      for (int b = a; b < vertices; ++b) types.push_back({arity + a, arity + b});
    }
    std::vector<int> assignment(static_cast<std::size_t>(arity), -1);
    std::vector<Edge> stubs;
    assign_stubs(arity, vertices, 0, assignment, stubs, [&](const std::vector<Edge>& stub_edges) {
      const int budget = bounds.max_edges - static_cast<int>(stub_edges.size());
      if (budget < 0) return;
      std::vector<Edge> edges = stub_edges;
      auto extend = [&](auto&& self, std::size_t first_type, int left) -> void {
        for (int free_loops = 0; free_loops <= 1; ++free_loops) {
          Fragment f(MultiGraph(arity + vertices, edges, free_loops), labels);
          std::string key = canonical_form(f);
          unique.try_emplace(std::move(key), std::move(f));
        }
        if (left == 0) return;
        for (std::size_t t = first_type; t < types.size(); ++t) {
          edges.push_back(types[t]);
          self(self, t, left - 1);
          edges.pop_back();
        }
      };
      extend(extend, 0, budget);
    });
  }

  FragmentCatalog catalog{arity, bounds, {}};
  std::vector<std::pair<std::tuple<int, int, std::string>, Fragment>> sorted;
  sorted.reserve(unique.size());
  for (auto& [key, f] : unique) {
    sorted.emplace_back(std::make_tuple(f.unlabeled_count(), f.graph().edge_count(), key), std::move(f));
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  catalog.items.reserve(sorted.size());
  for (auto& entry : sorted) catalog.items.push_back(std::move(entry.second));
  return catalog;
}

}  // namespace vmrank

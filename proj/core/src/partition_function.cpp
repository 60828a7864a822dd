#include "vmrank/partition_function.hpp"

#include <string>

#include "vmrank/errors.hpp"

namespace vmrank {

namespace {

void check_degrees(const VertexModel& y, const MultiGraph& g, int first_weighted) {
  const auto deg = g.degrees();
  for (int v = first_weighted; v < g.vertex_count(); ++v) {
    if (deg[static_cast<std::size_t>(v)] > y.max_degree()) {
      throw GuardViolation("vertex of degree " + std::to_string(deg[static_cast<std::size_t>(v)]) +
                           " exceeds model max_degree " + std::to_string(y.max_degree()));
    }
  }
}

std::size_t coloring_count(int colors, int edges) {
  std::size_t total = 1;
  for (int e = 0; e < edges; ++e) {
    total *= static_cast<std::size_t>(colors);
    if (total > kMaxColorings) {
      throw GuardViolation(std::to_string(edges) + " edges with " + std::to_string(colors) +
                           " colors exceed the brute-force coloring guard");
    }
  }
  return total;
}

// Runs over every edge coloring and calls visit(colors, product) where the
// product covers the weights of vertices first_weighted..n-1. Colorings with
// a zero product are skipped.
template <typename Visit>
void for_each_weighted_coloring(const VertexModel& y, const MultiGraph& g, int first_weighted, Visit&& visit) {
  const int n = g.vertex_count();
  const int colors = y.colors();
  const auto& edges = g.edges();
  coloring_count(colors, g.edge_count());

  std::vector<int> coloring(edges.size(), 0);
  // With every edge at color 0 a vertex's slot is its degree times stride(0) = 1.
  std::vector<std::size_t> slot(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++slot[static_cast<std::size_t>(e.u)];
    ++slot[static_cast<std::size_t>(e.v)];
  }

  GaussianRational product;
  while (true) {
    product = 1;
    bool zero = false;
    for (int v = first_weighted; v < n; ++v) {
      const GaussianRational& w = y.weight_at_slot(slot[static_cast<std::size_t>(v)]);
      if (w.is_zero()) {
        zero = true;
        break;
      }
      if (!w.is_one()) product *= w;
    }
    if (!zero) visit(coloring, product);

    std::size_t e = 0;
    for (; e < edges.size(); ++e) {
      const int old_color = coloring[e];
      const int new_color = old_color + 1 == colors ? 0 : old_color + 1;
      coloring[e] = new_color;
      const std::size_t from = y.stride(old_color);
      const std::size_t to = y.stride(new_color);
      slot[static_cast<std::size_t>(edges[e].u)] += to - from;
      slot[static_cast<std::size_t>(edges[e].v)] += to - from;
      if (new_color != 0) break;
    }
    if (e == edges.size()) break;
  }
}

}  // namespace

GaussianRational partition_function(const VertexModel& y, const MultiGraph& g) {
  check_degrees(y, g, 0);
  GaussianRational total;
  for_each_weighted_coloring(y, g, 0, [&](const std::vector<int>&, const GaussianRational& product) {
    total += product;
  });
  if (g.free_loops() != 0 && !total.is_zero()) total *= GaussianRational(y.colors()).pow(g.free_loops());
  return total;
}

FragmentTensor::FragmentTensor(int colors, int arity) : colors_(colors), arity_(arity) {
  entries_.resize(coloring_count(colors, arity));
}

FragmentTensor::FragmentTensor(int colors, int arity, std::vector<GaussianRational> entries)
    : colors_(colors), arity_(arity), entries_(std::move(entries)) {
  if (entries_.size() != coloring_count(colors, arity)) throw InputError("fragment tensor has the wrong entry count");
}

std::size_t FragmentTensor::index_of(std::span<const int> phi) const {
  if (phi.size() != static_cast<std::size_t>(arity_)) throw InputError("boundary coloring has the wrong length");
  std::size_t index = 0;
  for (int c : phi) {
    if (c < 0 || c >= colors_) throw InputError("boundary color out of range");
    index = index * static_cast<std::size_t>(colors_) + static_cast<std::size_t>(c);
  }
  return index;
}

FragmentTensor fragment_tensor(const VertexModel& y, const Fragment& g) {
  const int k = g.arity();
  const MultiGraph& graph = g.graph();
  check_degrees(y, graph, k);
  std::vector<int> stub(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) stub[static_cast<std::size_t>(i)] = g.stub_edge(i);

  FragmentTensor tensor(y.colors(), k);
  const auto colors = static_cast<std::size_t>(y.colors());
  for_each_weighted_coloring(y, graph, k, [&](const std::vector<int>& coloring, const GaussianRational& product) {
    std::size_t index = 0;
    for (int e : stub) index = index * colors + static_cast<std::size_t>(coloring[static_cast<std::size_t>(e)]);
    tensor[index] += product;
  });
  if (graph.free_loops() != 0) {
    const GaussianRational scale = GaussianRational(y.colors()).pow(graph.free_loops());
    for (std::size_t i = 0; i < tensor.entries().size(); ++i) {
      if (!tensor[i].is_zero()) tensor[i] *= scale;
    }
  }
  return tensor;
}

GaussianRational pair_partition(const FragmentTensor& a, const FragmentTensor& b) {
  if (a.colors() != b.colors() || a.arity() != b.arity()) {
    throw InputError("pairing tensors of different shape");
  }
  GaussianRational total;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    total += a[i] * b[i];
  }
  return total;
}

}  // namespace vmrank

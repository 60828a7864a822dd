#include "vmrank/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vmrank/errors.hpp"

namespace vmrank {

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges, int free_loops)
    : vertex_count_(vertex_count), edges_(std::move(edges)), free_loops_(free_loops) {
  if (vertex_count_ < 0) throw InputError("negative vertex count");
  if (free_loops_ < 0) throw InputError("negative free loop count");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for " +
                       std::to_string(vertex_count_) + " vertices");
    }
  }
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge& e : edges_) {
    ++d[static_cast<std::size_t>(e.u)];
    ++d[static_cast<std::size_t>(e.v)];
  }
  return d;
}

int MultiGraph::max_degree() const {
  const auto d = degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

Fragment::Fragment(MultiGraph graph) : graph_(std::move(graph)) {}

Fragment::Fragment(const MultiGraph& graph, std::span<const int> labels) : arity_(static_cast<int>(labels.size())) {
  const int n = graph.vertex_count();
  const auto deg = graph.degrees();
  // position[v] = new index of v; labeled vertices go first in label order.
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int v = labels[i];
    if (v < 0 || v >= n) throw InputError("label " + std::to_string(i + 1) + " names a missing vertex");
    if (position[static_cast<std::size_t>(v)] != -1) throw InputError("label map is not injective");
    if (deg[static_cast<std::size_t>(v)] != 1) {
      throw InputError("labeled vertex " + std::to_string(v) + " has degree " +
                       std::to_string(deg[static_cast<std::size_t>(v)]) + ", expected 1");
    }
    position[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  int next = arity_;
  for (auto& p : position) {
    if (p == -1) p = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(graph.edges().size());
  for (const Edge& e : graph.edges()) {
    edges.push_back({position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]});
  }
  graph_ = MultiGraph(n, std::move(edges), graph.free_loops());
}

int Fragment::stub_edge(int label) const {
  const auto& edges = graph_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].u == label || edges[e].v == label) return static_cast<int>(e);
  }
  throw InputError("label " + std::to_string(label + 1) + " has no stub");
}

namespace {

struct Dissolved {
  MultiGraph graph;
  std::vector<int> new_index;  // -1 for dissolved vertices
};

// Removes every vertex flagged in `through` (each must have degree exactly 2)
// by concatenating its two incident edges. Chains of dissolved vertices that
// close up without meeting a kept vertex become free loops.
Dissolved dissolve(int vertex_count, const std::vector<Edge>& edges, int free_loops, const std::vector<char>& through) {
  const int half_count = 2 * static_cast<int>(edges.size());
  auto endpoint = [&](int h) {
    const Edge& e = edges[static_cast<std::size_t>(h / 2)];
    return (h % 2 == 0) ? e.u : e.v;
  };

  // partner[h]: the other half-edge at the same dissolved vertex.
  std::vector<int> partner(static_cast<std::size_t>(half_count), -1);
  std::vector<int> first_half(static_cast<std::size_t>(vertex_count), -1);
  std::vector<int> seen_count(static_cast<std::size_t>(vertex_count), 0);
  for (int h = 0; h < half_count; ++h) {
    const int v = endpoint(h);
    if (!through[static_cast<std::size_t>(v)]) continue;
    if (++seen_count[static_cast<std::size_t>(v)] > 2) throw InputError("dissolved point has degree above 2");
    int& first = first_half[static_cast<std::size_t>(v)];
    if (first == -1) {
      first = h;
    } else {
      partner[static_cast<std::size_t>(first)] = h;
      partner[static_cast<std::size_t>(h)] = first;
    }
  }
  for (int v = 0; v < vertex_count; ++v) {
    if (through[static_cast<std::size_t>(v)] && seen_count[static_cast<std::size_t>(v)] != 2) {
      throw InputError("dissolved point has degree " + std::to_string(seen_count[static_cast<std::size_t>(v)]));
    }
  }

  Dissolved out;
  out.new_index.assign(static_cast<std::size_t>(vertex_count), -1);
  int kept = 0;
  for (int v = 0; v < vertex_count; ++v) {
    if (!through[static_cast<std::size_t>(v)]) out.new_index[static_cast<std::size_t>(v)] = kept++;
  }

  std::vector<char> used(edges.size(), 0);
  std::vector<Edge> result;
  for (int h = 0; h < half_count; ++h) {
    const int start = endpoint(h);
    if (through[static_cast<std::size_t>(start)] || used[static_cast<std::size_t>(h / 2)]) continue;
    int cur = h;
    while (true) {
      used[static_cast<std::size_t>(cur / 2)] = 1;
      const int opposite = cur ^ 1;
      const int w = endpoint(opposite);
      if (!through[static_cast<std::size_t>(w)]) {
        result.push_back({out.new_index[static_cast<std::size_t>(start)], out.new_index[static_cast<std::size_t>(w)]});
        break;
      }
      cur = partner[static_cast<std::size_t>(opposite)];
    }
  }

  int closed = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (used[e]) continue;
    int cur = static_cast<int>(2 * e);
    while (!used[static_cast<std::size_t>(cur / 2)]) {
      used[static_cast<std::size_t>(cur / 2)] = 1;
      cur = partner[static_cast<std::size_t>(cur ^ 1)];
    }
    ++closed;
  }

  out.graph = MultiGraph(kept, std::move(result), free_loops + closed);
  return out;
}

void require_even(const Fragment& f, const char* what) {
  if (f.arity() % 2 != 0) throw InputError(std::string(what) + " needs a fragment of even arity");
}

}  // namespace

MultiGraph glue(const Fragment& g, const Fragment& h) {
  if (g.arity() != h.arity()) {
    throw InputError("cannot glue fragments of arity " + std::to_string(g.arity()) + " and " +
                     std::to_string(h.arity()));
  }
  const int k = g.arity();
  const int ng = g.graph().vertex_count();
  const int nh = h.graph().vertex_count();
  const int n = ng + nh - k;
  auto map_h = [&](int x) { return x < k ? x : ng + (x - k); };

  std::vector<Edge> edges = g.graph().edges();
  for (const Edge& e : h.graph().edges()) edges.push_back({map_h(e.u), map_h(e.v)});
  std::vector<char> through(static_cast<std::size_t>(n), 0);
  std::fill_n(through.begin(), k, 1);
  return dissolve(n, edges, g.graph().free_loops() + h.graph().free_loops(), through).graph;
}

Fragment fragment_product(const Fragment& g, const Fragment& h) {
  require_even(g, "fragment_product");
  if (g.arity() != h.arity()) throw InputError("fragment_product needs equal arities");
  const int k = g.arity() / 2;
  const int ng = g.graph().vertex_count();
  const int nh = h.graph().vertex_count();
  const int n = ng + nh - k;
  // h's left labels land on g's right labels; the rest of h follows g.
  auto map_h = [&](int x) { return x < k ? k + x : ng + (x - k); };

  std::vector<Edge> edges = g.graph().edges();
  for (const Edge& e : h.graph().edges()) edges.push_back({map_h(e.u), map_h(e.v)});
  std::vector<char> through(static_cast<std::size_t>(n), 0);
  for (int i = k; i < 2 * k; ++i) through[static_cast<std::size_t>(i)] = 1;
  Dissolved d = dissolve(n, edges, g.graph().free_loops() + h.graph().free_loops(), through);

  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) labels.push_back(d.new_index[static_cast<std::size_t>(i)]);
  for (int i = k; i < 2 * k; ++i) labels.push_back(d.new_index[static_cast<std::size_t>(map_h(i))]);
  return Fragment(d.graph, labels);
}

Fragment fragment_power(const Fragment& x, int s) {
  if (s < 1) throw InputError("fragment_power needs s >= 1");
  Fragment out = x;
  for (int i = 1; i < s; ++i) out = fragment_product(out, x);
  return out;
}

Fragment tensor_power(const Fragment& x, int m) {
  require_even(x, "tensor_power");
  if (m < 1) throw InputError("tensor_power needs m >= 1");
  const int k = x.arity() / 2;
  const int n = x.graph().vertex_count();
  std::vector<Edge> edges;
  std::vector<int> labels(static_cast<std::size_t>(2 * k * m));
  for (int j = 0; j < m; ++j) {
    const int offset = j * n;
    for (const Edge& e : x.graph().edges()) edges.push_back({e.u + offset, e.v + offset});
    for (int i = 0; i < k; ++i) {
      labels[static_cast<std::size_t>(i + j * k)] = offset + i;
      labels[static_cast<std::size_t>(k * m + i + j * k)] = offset + k + i;
    }
  }
  return Fragment(MultiGraph(n * m, std::move(edges), m * x.graph().free_loops()), labels);
}

Fragment perm_fragment(int k, const Permutation& pi) {
  if (k < 0) throw InputError("perm_fragment needs k >= 0");
  const int m = pi.size();
  const int half = k * m;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(half));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) edges.push_back({i * k + j, half + pi(i) * k + j});
  }
  std::vector<int> labels(static_cast<std::size_t>(2 * half));
  std::iota(labels.begin(), labels.end(), 0);
  return Fragment(MultiGraph(2 * half, std::move(edges)), labels);
}

Fragment r_fragment(const Permutation& pi) { return perm_fragment(1, pi); }

Fragment unit_fragment(int k) { return perm_fragment(1, Permutation::identity(k)); }

MultiGraph pin_edges(const MultiGraph& g, std::span<const int> u_set, std::span<const int> targets) {
  if (u_set.size() != targets.size()) throw InputError("pin_edges: map is not total on U");
  const int n = g.vertex_count();
  std::vector<char> in_u(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edges = g.edges();
  for (std::size_t j = 0; j < u_set.size(); ++j) {
    const int u = u_set[j];
    const int t = targets[j];
    if (u < 0 || u >= n || t < 0 || t >= n) throw InputError("pin_edges: vertex out of range");
    if (in_u[static_cast<std::size_t>(u)]) throw InputError("pin_edges: U has a repeated vertex");
    in_u[static_cast<std::size_t>(u)] = 1;
    edges.push_back({u, t});
  }
  return MultiGraph(n, std::move(edges), g.free_loops());
}

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h) {
  std::vector<Edge> edges = g.edges();
  const int offset = g.vertex_count();
  for (const Edge& e : h.edges()) edges.push_back({e.u + offset, e.v + offset});
  return MultiGraph(g.vertex_count() + h.vertex_count(), std::move(edges), g.free_loops() + h.free_loops());
}

Fragment disjoint_union(const Fragment& g, const MultiGraph& h) {
  std::vector<int> labels(static_cast<std::size_t>(g.arity()));
  std::iota(labels.begin(), labels.end(), 0);
  return Fragment(disjoint_union(g.graph(), h), labels);
}

}  // namespace vmrank

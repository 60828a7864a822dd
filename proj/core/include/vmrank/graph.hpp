#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vmrank/permutation.hpp"

namespace vmrank {

struct Edge {
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite multigraph with loops, parallel edges, and a count of vertexless
/// loops O.
///
/// Edge e owns half-edges 2e (at u) and 2e+1 (at v); the degree of a vertex
/// is its number of half-edges, so a loop adds 2. The empty graph has no
/// vertices, no edges and no free loops, and differs from O.
class MultiGraph {
 public:
  MultiGraph() = default;
  // Throws InputError if an endpoint is out of range or a count is negative.
  MultiGraph(int vertex_count, std::vector<Edge> edges, int free_loops = 0);

  static MultiGraph free_loop() { return MultiGraph(0, {}, 1); }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int free_loops() const { return free_loops_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int v) const;
  std::vector<int> degrees() const;
  int total_degree() const { return 2 * edge_count(); }
  int max_degree() const;

  // Vertex of half-edge h.
  int endpoint(int h) const {
    const Edge& e = edges_[static_cast<std::size_t>(h / 2)];
    return (h % 2 == 0) ? e.u : e.v;
  }

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  int free_loops_ = 0;
};

/// A k-fragment: a multigraph with k labeled degree-1 stub vertices.
///
/// Stored normalized: the vertex carrying label i (0-based) is vertex i, so
/// labeled vertices are 0..k-1 and the unlabeled ones follow.
class Fragment {
 public:
  Fragment() = default;
  // Arity 0.
  explicit Fragment(MultiGraph graph);
  // labels[i] is the vertex carrying label i+1. Throws InputError unless the
  // labels are distinct, in range, and each labeled vertex has degree 1.
  Fragment(const MultiGraph& graph, std::span<const int> labels);

  int arity() const { return arity_; }
  const MultiGraph& graph() const { return graph_; }
  int unlabeled_count() const { return graph_.vertex_count() - arity_; }

  // Edge id of the stub at label i.
  int stub_edge(int label) const;

  friend bool operator==(const Fragment&, const Fragment&) = default;

 private:
  MultiGraph graph_;
  int arity_ = 0;
};

// ---------------------------------------------------------------------------
// Structural products.

// G.H: identify equally labeled vertices and dissolve each identified point,
// joining its two edges into one. Closed chains with no surviving vertex
// become free loops. Throws InputError on arity mismatch.
MultiGraph glue(const Fragment& g, const Fragment& h);

// GH for 2k-fragments: label k+i of g meets label i of h (i < k). The result
// keeps labels 0..k-1 of g and k..2k-1 of h.
Fragment fragment_product(const Fragment& g, const Fragment& h);

// x^s under fragment_product, s >= 1.
Fragment fragment_power(const Fragment& x, int s);

// m stacked copies of a 2k-fragment: copy j sends label i to i + jk and
// label k+i to km + i + jk.
Fragment tensor_power(const Fragment& x, int m);

// P_{k,pi} for pi on m points: 2km stub vertices, km edges. Copy block i
// (labels ik..ik+k-1) on the left is joined strand by strand to block pi(i)
// on the right. At k = 1 this is the edge set {i, m + pi(i)}.
Fragment perm_fragment(int k, const Permutation& pi);

// r_pi: edge i joins labels i and k + pi(i). Equal to perm_fragment(1, pi).
Fragment r_fragment(const Permutation& pi);

// The unit of fragment_product on 2k-fragments: k parallel strands.
Fragment unit_fragment(int k);

// G_s: append one edge {u, targets[j]} for each u = u_set[j]. Targets may
// repeat or equal u (a loop).
MultiGraph pin_edges(const MultiGraph& g, std::span<const int> u_set, std::span<const int> targets);

MultiGraph disjoint_union(const MultiGraph& g, const MultiGraph& h);
Fragment disjoint_union(const Fragment& g, const MultiGraph& h);

// ---------------------------------------------------------------------------
// Isomorphism classes.

inline constexpr int kCanonicalVertexGuard = 10;

// Equal strings iff the inputs are isomorphic; label-respecting for
// fragments. Brute force over orderings of the unlabeled vertices within
// refined degree classes. Throws GuardViolation above the vertex guard.
std::string canonical_form(const Fragment& f, int vertex_guard = kCanonicalVertexGuard);
std::string canonical_form(const MultiGraph& g, int vertex_guard = kCanonicalVertexGuard);

}  // namespace vmrank

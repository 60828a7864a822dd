#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vmrank/gaussian_rational.hpp"
#include "vmrank/graph.hpp"
#include "vmrank/vertex_model.hpp"

namespace vmrank {

// Brute-force enumeration refuses graphs with more colorings than this.
inline constexpr std::size_t kMaxColorings = std::size_t{1} << 24;

/// p_y(G): sum over all edge colorings of the product of vertex weights.
///
/// A loop shows its color twice at its vertex. Each free loop contributes a
/// factor n; the empty graph evaluates to 1. Throws GuardViolation when a
/// vertex degree exceeds the model's max_degree or the coloring count
/// exceeds kMaxColorings.
GaussianRational partition_function(const VertexModel& y, const MultiGraph& g);

/// Boundary tensor of a fragment: one entry per coloring phi of the k stubs.
/// Entry phi sums, over edge colorings that give label i's stub color
/// phi(i), the product of weights at unlabeled vertices.
class FragmentTensor {
 public:
  FragmentTensor(int colors, int arity);
  FragmentTensor(int colors, int arity, std::vector<GaussianRational> entries);

  int colors() const { return colors_; }
  int arity() const { return arity_; }
  const std::vector<GaussianRational>& entries() const { return entries_; }

  // phi[0] is the most significant digit of the flat index.
  std::size_t index_of(std::span<const int> phi) const;
  const GaussianRational& at(std::span<const int> phi) const { return entries_[index_of(phi)]; }
  const GaussianRational& operator[](std::size_t index) const { return entries_[index]; }
  GaussianRational& operator[](std::size_t index) { return entries_[index]; }

 private:
  int colors_;
  int arity_;
  std::vector<GaussianRational> entries_;
};

FragmentTensor fragment_tensor(const VertexModel& y, const Fragment& g);

// Sum over phi of a(phi) b(phi). Equals p_y(glue(G, H)) for the source
// fragments. Throws InputError on a shape mismatch.
GaussianRational pair_partition(const FragmentTensor& a, const FragmentTensor& b);

struct ContractionOptions {
  // Largest number of cut edges the frontier tensor may carry.
  std::size_t frontier_guard = 20;
  // Elimination order; when empty a greedy order keeps the frontier narrow.
  std::optional<std::vector<int>> order;
};

// p_y(G) by eliminating vertices one at a time into a frontier tensor over
// the cut edges. Equal to partition_function for every order.
GaussianRational partition_function_contracted(const VertexModel& y, const MultiGraph& g,
                                               const ContractionOptions& options = {});

// The order the default contraction uses.
std::vector<int> greedy_elimination_order(const MultiGraph& g);

}  // namespace vmrank

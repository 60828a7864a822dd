#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vmrank/gaussian_rational.hpp"

namespace vmrank {

/// An n-color vertex model truncated to degree D: one weight in Q(i) for
/// every color multiset of size at most D. A multiset is given by its count
/// vector in N^n. Weights not set explicitly are zero.
class VertexModel {
 public:
  // Throws InputError for colors < 1 or negative max_degree, GuardViolation
  // if the table would exceed 2^22 slots.
  VertexModel(int colors, int max_degree);

  static VertexModel from_function(int colors, int max_degree,
                                   const std::function<GaussianRational(std::span<const int>)>& weight);

  int colors() const { return colors_; }
  int max_degree() const { return max_degree_; }

  // Throws InputError for a wrong-length vector or negative counts,
  // GuardViolation if the multiset is larger than max_degree.
  const GaussianRational& weight(std::span<const int> counts) const;
  void set_weight(std::span<const int> counts, GaussianRational value);

  // Slot arithmetic for evaluators: the slot of a multiset is the sum of
  // stride(c) over its elements (with multiplicity).
  std::size_t stride(int color) const { return strides_[static_cast<std::size_t>(color)]; }
  const GaussianRational& weight_at_slot(std::size_t slot) const { return table_[slot]; }

  // Visits every multiset of size <= D in increasing slot order.
  void for_each_multiset(const std::function<void(std::span<const int>, const GaussianRational&)>& visit) const;

 private:
  std::size_t slot_of(std::span<const int> counts) const;

  int colors_;
  int max_degree_;
  std::vector<std::size_t> strides_;
  std::vector<GaussianRational> table_;
};

// y == 1 on every multiset.
VertexModel ones_model(int colors, int max_degree);

// Two colors; weight 1 when color 2 appears at most once, else 0. Its
// partition function counts matchings (color 2 marks matched edges).
VertexModel matchings_model(int max_degree);

// One color; weight i^d on the multiset of size d, so p_y(G) = (-1)^|E|.
VertexModel parity_model(int max_degree);

// Deterministic pseudo-random Gaussian-integer weights with real and
// imaginary parts in [-2, 2], derived from a 64-bit Mersenne Twister.
VertexModel random_model(int colors, int max_degree, std::uint64_t seed);

}  // namespace vmrank

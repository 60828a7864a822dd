#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "vmrank/permutation.hpp"

namespace vmrank {

/// Nonincreasing sequence of positive integers; doubles as a Young shape
/// (row i has parts()[i] cells) and as a cycle type.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  // Throws InputError unless parts are positive and nonincreasing.
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int height() const { return static_cast<int>(parts_.size()); }

  // "(3,2,1)"; "()" for the empty partition.
  std::string to_string() const;
  // Parses "3,2,1" or "(3,2,1)"; "()" and "" are the empty partition.
  static IntegerPartition parse(const std::string& text);

  friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

 private:
  std::vector<int> parts_;
};

inline constexpr int kPartitionGuard = 12;
inline constexpr int kDimensionGuard = 20;

// Partitions of n in reverse lexicographic order: (n), (n-1,1), (n-2,2), ...
// Throws GuardViolation for n above the guard.
std::vector<IntegerPartition> partitions_of(int n, int guard = kPartitionGuard);

// Hook length of each cell, row by row.
std::vector<std::vector<int>> hook_lengths(const IntegerPartition& lambda);

// f^lambda = n! / (product of hook lengths). GuardViolation above the guard.
std::uint64_t dimension(const IntegerPartition& lambda, int guard = kDimensionGuard);

// f for the d-row rectangle (m, ..., m), evaluated as (dm)! / (m!^d p(m))
// with p(m) = prod_{i<d} binom(m+i, i). Requires d, m >= 1 and dm <= guard.
std::uint64_t rectangular_dimension(int d, int m, int guard = kDimensionGuard);

// Irreducible character chi_lambda on the class of cycle type mu, by the
// Murnaghan-Nakayama rule. Throws InputError when |lambda| != |mu|.
long long character(const IntegerPartition& lambda, const IntegerPartition& cycle_type);

IntegerPartition cycle_type(const Permutation& pi);

// Number of permutations with the given cycle type: n! / prod_j j^{m_j} m_j!.
std::uint64_t class_size(const IntegerPartition& cycle_type);

int orbit_count(const Permutation& pi);
int sign(const Permutation& pi);

}  // namespace vmrank

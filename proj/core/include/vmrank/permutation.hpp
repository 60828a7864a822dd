#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vmrank {

/// Bijection of {0, ..., m-1}, stored as its image sequence.
///
/// The product is read left to right: (rho * sigma)(i) = sigma(rho(i)).
/// With that order the permutation fragments satisfy r(rho) r(sigma) =
/// r(rho * sigma) under the left-to-right fragment product.
class Permutation {
 public:
  Permutation() = default;
  // Throws InputError unless images is a permutation of 0..m-1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  static Permutation transposition(int m, int a, int b);
  // Parses 1-based images "2,3,1" (cycle notation is not accepted).
  static Permutation parse_one_based(const std::string& text);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  // Orbits, fixed points included.
  int orbit_count() const;
  // (-1)^(m - orbits).
  int sign() const;
  // Orbit lengths, nonincreasing.
  std::vector<int> cycle_lengths() const;
  std::vector<std::vector<int>> orbits() const;

  std::string to_string_one_based() const;

  friend Permutation operator*(const Permutation& rho, const Permutation& sigma);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// All permutations of {0..m-1} in lexicographic order of image sequences.
std::vector<Permutation> all_permutations(int m);

}  // namespace vmrank

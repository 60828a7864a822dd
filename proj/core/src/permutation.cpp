#include "vmrank/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vmrank/errors.hpp"

namespace vmrank {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw InputError("image sequence is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int m, int a, int b) {
  if (a < 0 || b < 0 || a >= m || b >= m) throw InputError("transposition out of range");
  std::vector<int> images(static_cast<std::size_t>(m));
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
  return Permutation(std::move(images));
}

Permutation Permutation::parse_one_based(const std::string& text) {
  std::vector<int> images;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InputError("empty entry in permutation '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed permutation '" + text + "'");
    }
    if (used != item.size()) throw InputError("malformed permutation '" + text + "'");
    images.push_back(value - 1);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    for (int i = static_cast<int>(start); !seen[static_cast<std::size_t>(i)]; i = images_[static_cast<std::size_t>(i)]) {
      seen[static_cast<std::size_t>(i)] = 1;
      orbit.push_back(i);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

int Permutation::orbit_count() const { return static_cast<int>(orbits().size()); }

int Permutation::sign() const { return (size() - orbit_count()) % 2 == 0 ? 1 : -1; }

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> lengths;
  for (const auto& orbit : orbits()) lengths.push_back(static_cast<int>(orbit.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::string Permutation::to_string_one_based() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

Permutation operator*(const Permutation& rho, const Permutation& sigma) {
  if (rho.size() != sigma.size()) throw InputError("composing permutations of different degree");
  std::vector<int> images(rho.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = sigma(rho(static_cast<int>(i)));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(std::max(m, 0)));
  std::iota(images.begin(), images.end(), 0);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace vmrank

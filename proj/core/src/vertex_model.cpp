#include "vmrank/vertex_model.hpp"

#include <random>
#include <string>

#include "vmrank/errors.hpp"

namespace vmrank {

namespace {
constexpr std::size_t kMaxTableSlots = std::size_t{1} << 22;
}

VertexModel::VertexModel(int colors, int max_degree) : colors_(colors), max_degree_(max_degree) {
  if (colors < 1) throw InputError("a vertex model needs at least one color");
  if (max_degree < 0) throw InputError("negative max_degree");
  std::size_t size = 1;
  for (int c = 0; c < colors; ++c) {
    strides_.push_back(size);
    size *= static_cast<std::size_t>(max_degree + 1);
    if (size > kMaxTableSlots) {
      throw GuardViolation("weight table for " + std::to_string(colors) + " colors and degree " +
                           std::to_string(max_degree) + " is too large");
    }
  }
  table_.resize(size);
}

VertexModel VertexModel::from_function(int colors, int max_degree,
                                       const std::function<GaussianRational(std::span<const int>)>& weight) {
  VertexModel model(colors, max_degree);
  std::vector<std::pair<std::vector<int>, GaussianRational>> fills;
  model.for_each_multiset([&](std::span<const int> counts, const GaussianRational&) {
    fills.emplace_back(std::vector<int>(counts.begin(), counts.end()), weight(counts));
  });
  for (auto& [counts, value] : fills) model.set_weight(counts, std::move(value));
  return model;
}

std::size_t VertexModel::slot_of(std::span<const int> counts) const {
  if (counts.size() != static_cast<std::size_t>(colors_)) {
    throw InputError("multiset has " + std::to_string(counts.size()) + " coordinates, model has " +
                     std::to_string(colors_) + " colors");
  }
  int total = 0;
  std::size_t slot = 0;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] < 0) throw InputError("negative multiplicity in multiset");
    total += counts[c];
    if (total > max_degree_) {
      throw GuardViolation("multiset of size above max_degree " + std::to_string(max_degree_));
    }
    slot += strides_[c] * static_cast<std::size_t>(counts[c]);
  }
  return slot;
}

const GaussianRational& VertexModel::weight(std::span<const int> counts) const { return table_[slot_of(counts)]; }

void VertexModel::set_weight(std::span<const int> counts, GaussianRational value) {
  table_[slot_of(counts)] = std::move(value);
}

void VertexModel::for_each_multiset(
    const std::function<void(std::span<const int>, const GaussianRational&)>& visit) const {
  std::vector<int> counts(static_cast<std::size_t>(colors_), 0);
  // Odometer over [0, D]^n, skipping vectors whose sum exceeds D.
  while (true) {
    int total = 0;
    for (int c : counts) total += c;
    if (total <= max_degree_) visit(counts, table_[slot_of(counts)]);
    std::size_t c = 0;
    while (c < counts.size() && counts[c] == max_degree_) counts[c++] = 0;
    if (c == counts.size()) break;
    ++counts[c];
  }
}

VertexModel ones_model(int colors, int max_degree) {
  return VertexModel::from_function(colors, max_degree, [](std::span<const int>) { return GaussianRational(1); });
}

VertexModel matchings_model(int max_degree) {
  return VertexModel::from_function(2, max_degree, [](std::span<const int> counts) {
    return GaussianRational(counts[1] <= 1 ? 1 : 0);
  });
}

VertexModel parity_model(int max_degree) {
  return VertexModel::from_function(1, max_degree, [](std::span<const int> counts) {
    return GaussianRational::imaginary_unit().pow(counts[0]);
  });
}

VertexModel random_model(int colors, int max_degree, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return VertexModel::from_function(colors, max_degree, [&](std::span<const int>) {
    const long re = static_cast<long>(engine() % 5) - 2;
    const long im = static_cast<long>(engine() % 5) - 2;
    return GaussianRational(mpq_class(re), mpq_class(im));
  });
}

}  // namespace vmrank

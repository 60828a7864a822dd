#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "vmrank/errors.hpp"
#include "vmrank/graph.hpp"

namespace vmrank {

namespace {

// Colour refinement on the unlabeled vertices. Labeled vertex i starts with
// its own colour i; unlabeled vertices start from their loop count and
// degree, then split by the multiset of neighbour colours until stable.
std::vector<int> refined_colours(const MultiGraph& g, int k) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> neighbours(static_cast<std::size_t>(n));
  std::vector<int> loops(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) {
      ++loops[static_cast<std::size_t>(e.u)];
    } else {
      neighbours[static_cast<std::size_t>(e.u)].push_back(e.v);
      neighbours[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
  }
  const auto deg = g.degrees();

  std::vector<int> colour(static_cast<std::size_t>(n));
  {
    std::map<std::pair<int, int>, int> rank;
    for (int v = k; v < n; ++v) rank[{loops[static_cast<std::size_t>(v)], deg[static_cast<std::size_t>(v)]}] = 0;
    int next = k;
    for (auto& [key, value] : rank) value = next++;
    for (int v = 0; v < n; ++v) {
      colour[static_cast<std::size_t>(v)] =
          v < k ? v : rank[{loops[static_cast<std::size_t>(v)], deg[static_cast<std::size_t>(v)]}];
    }
  }

  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<int>, int> rank;
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = k; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (int w : neighbours[static_cast<std::size_t>(v)]) around.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      rank[sig] = 0;
    }
    int next = k;
    for (auto& [key, value] : rank) value = next++;
    for (int v = k; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[signature[static_cast<std::size_t>(v)]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

std::string encode(int k, int n, int free_loops, const std::vector<Edge>& sorted_edges) {
  std::string out = "k" + std::to_string(k) + ";n" + std::to_string(n) + ";f" + std::to_string(free_loops) + ";";
  for (const Edge& e : sorted_edges) {
    out += std::to_string(e.u);
    out.push_back('-');
    out += std::to_string(e.v);
    out.push_back(',');
  }
  return out;
}

std::string canonical(const MultiGraph& g, int k, int vertex_guard) {
  const int n = g.vertex_count();
  if (n - k > vertex_guard) {
    throw GuardViolation("canonical_form: " + std::to_string(n - k) + " unlabeled vertices exceed guard " +
                         std::to_string(vertex_guard));
  }
  const auto colour = refined_colours(g, k);

  // Unlabeled vertices grouped into blocks of equal colour, blocks ordered by
  // colour. Candidate orderings permute vertices within each block only.
  std::vector<int> order(static_cast<std::size_t>(n - k));
  std::iota(order.begin(), order.end(), k);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && colour[static_cast<std::size_t>(order[j])] == colour[static_cast<std::size_t>(order[i])]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<Edge> best;
  bool have_best = false;
  std::vector<int> position(static_cast<std::size_t>(n));
  std::iota(position.begin(), position.begin() + k, 0);
  std::vector<Edge> candidate(g.edges().size());

  auto evaluate = [&]() {
    for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = k + static_cast<int>(i);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      int a = position[static_cast<std::size_t>(g.edges()[e].u)];
      int b = position[static_cast<std::size_t>(g.edges()[e].v)];
      if (a > b) std::swap(a, b);
      candidate[e] = {a, b};
    }
    std::sort(candidate.begin(), candidate.end());
    if (!have_best || candidate < best) {
      best = candidate;
      have_best = true;
    }
  };

  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      evaluate();
      return;
    }
    const auto [lo, hi] = blocks[block];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, block + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  recurse(recurse, 0);
  return encode(k, n, g.free_loops(), best);
}

}  // namespace

std::string canonical_form(const Fragment& f, int vertex_guard) {
  return canonical(f.graph(), f.arity(), vertex_guard);
}

std::string canonical_form(const MultiGraph& g, int vertex_guard) { return canonical(g, 0, vertex_guard); }

}  // namespace vmrank

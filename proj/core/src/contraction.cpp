#include <algorithm>
#include <string>

#include "vmrank/errors.hpp"
#include "vmrank/partition_function.hpp"

namespace vmrank {

namespace {

struct Incidence {
  std::vector<std::vector<int>> edges_at;  // non-loop edge ids per vertex, with multiplicity
  std::vector<std::vector<int>> loops_at;
};

Incidence incidence_of(const MultiGraph& g) {
  Incidence inc;
  inc.edges_at.resize(static_cast<std::size_t>(g.vertex_count()));
  inc.loops_at.resize(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const Edge& edge = g.edges()[e];
    if (edge.is_loop()) {
      inc.loops_at[static_cast<std::size_t>(edge.u)].push_back(static_cast<int>(e));
    } else {
      inc.edges_at[static_cast<std::size_t>(edge.u)].push_back(static_cast<int>(e));
      inc.edges_at[static_cast<std::size_t>(edge.v)].push_back(static_cast<int>(e));
    }
  }
  return inc;
}

int other_end(const Edge& e, int v) { return e.u == v ? e.v : e.u; }

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

std::vector<int> greedy_elimination_order(const MultiGraph& g) {
  const int n = g.vertex_count();
  const Incidence inc = incidence_of(g);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  long width = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_width = 0;
    for (int v = 0; v < n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      long closing = 0;
      long opening = 0;
      for (int e : inc.edges_at[static_cast<std::size_t>(v)]) {
        const int w = other_end(g.edges()[static_cast<std::size_t>(e)], v);
        (done[static_cast<std::size_t>(w)] ? closing : opening) += 1;
      }
      const long next = width - closing + opening;
      if (best == -1 || next < best_width) {
        best = v;
        best_width = next;
      }
    }
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    width = best_width;
  }
  return order;
}

GaussianRational partition_function_contracted(const VertexModel& y, const MultiGraph& g,
                                               const ContractionOptions& options) {
  const int n = g.vertex_count();
  const auto colors = static_cast<std::size_t>(y.colors());
  const auto deg = g.degrees();
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] > y.max_degree()) {
      throw GuardViolation("vertex of degree " + std::to_string(deg[static_cast<std::size_t>(v)]) +
                           " exceeds model max_degree " + std::to_string(y.max_degree()));
    }
  }

  std::vector<int> order;
  if (options.order) {
    order = *options.order;
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i)) throw InputError("elimination order is not a vertex permutation");
    }
    if (sorted.size() != static_cast<std::size_t>(n)) throw InputError("elimination order is not a vertex permutation");
  } else {
    order = greedy_elimination_order(g);
  }

  const Incidence inc = incidence_of(g);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> frontier;                  // open edge ids; position p has digit weight colors^p
  std::vector<GaussianRational> tensor{1};

  for (int v : order) {
    std::vector<char> closes(frontier.size(), 0);
    std::vector<int> opening;
    for (int e : inc.edges_at[static_cast<std::size_t>(v)]) {
      const int w = other_end(g.edges()[static_cast<std::size_t>(e)], v);
      if (!done[static_cast<std::size_t>(w)]) opening.push_back(e);
    }
    std::vector<int> next_frontier;
    std::vector<std::size_t> kept_positions;
    for (std::size_t p = 0; p < frontier.size(); ++p) {
      const Edge& edge = g.edges()[static_cast<std::size_t>(frontier[p])];
      if (edge.u == v || edge.v == v) {
        closes[p] = 1;
      } else {
        kept_positions.push_back(p);
        next_frontier.push_back(frontier[p]);
      }
    }
    next_frontier.insert(next_frontier.end(), opening.begin(), opening.end());
    if (next_frontier.size() > options.frontier_guard) {
      throw GuardViolation("frontier of " + std::to_string(next_frontier.size()) + " cut edges exceeds guard " +
                           std::to_string(options.frontier_guard));
    }

    const std::size_t loops = inc.loops_at[static_cast<std::size_t>(v)].size();
    const std::size_t local_count = power(colors, opening.size() + loops);
    const std::size_t kept_count = kept_positions.size();
    std::vector<GaussianRational> next(power(colors, next_frontier.size()));
    std::vector<std::size_t> digit(frontier.size());
    std::vector<std::size_t> local(opening.size() + loops);

    for (std::size_t old_index = 0; old_index < tensor.size(); ++old_index) {
      const GaussianRational& value = tensor[old_index];
      if (value.is_zero()) continue;
      std::size_t rest = old_index;
      std::size_t closing_slot = 0;
      for (std::size_t p = 0; p < frontier.size(); ++p) {
        digit[p] = rest % colors;
        rest /= colors;
        if (closes[p]) closing_slot += y.stride(static_cast<int>(digit[p]));
      }
      std::size_t kept_index = 0;
      for (std::size_t q = kept_count; q-- > 0;) kept_index = kept_index * colors + digit[kept_positions[q]];

      for (std::size_t assignment = 0; assignment < local_count; ++assignment) {
        std::size_t a = assignment;
        std::size_t slot = closing_slot;
        std::size_t opened_index = 0;
        std::size_t weight_of_digit = power(colors, kept_count);
        for (std::size_t j = 0; j < opening.size(); ++j) {
          const std::size_t c = a % colors;
          a /= colors;
          slot += y.stride(static_cast<int>(c));
          opened_index += c * weight_of_digit;
          weight_of_digit *= colors;
        }
        for (std::size_t j = 0; j < loops; ++j) {
          const std::size_t c = a % colors;
          a /= colors;
          slot += 2 * y.stride(static_cast<int>(c));
        }
        const GaussianRational& w = y.weight_at_slot(slot);
        if (w.is_zero()) continue;
        next[kept_index + opened_index] += value * w;
      }
    }
    tensor = std::move(next);
    frontier = std::move(next_frontier);
    done[static_cast<std::size_t>(v)] = 1;
  }

  GaussianRational result = tensor.front();
  if (g.free_loops() != 0 && !result.is_zero()) result *= GaussianRational(y.colors()).pow(g.free_loops());
  return result;
}

}  // namespace vmrank

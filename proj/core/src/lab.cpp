#include "vmrank/lab.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vmrank/errors.hpp"

namespace vmrank {

InvariantOracle partition_oracle(const VertexModel& y, ContractionOptions options) {
  return [y, options = std::move(options)](const MultiGraph& g) { return partition_function_contracted(y, g, options); };
}

InvariantOracle brute_force_oracle(const VertexModel& y) {
  return [y](const MultiGraph& g) { return partition_function(y, g); };
}

ExactMatrix connection_matrix(const InvariantOracle& f, std::span<const Fragment> fragments) {
  const std::size_t size = fragments.size();
  ExactMatrix c(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t s = r; s < size; ++s) {
      c(r, s) = f(glue(fragments[r], fragments[s]));
      if (s != r) c(s, r) = c(r, s);
    }
  }
  return c;
}

ExactMatrix tensor_matrix(const VertexModel& y, std::span<const Fragment> fragments) {
  if (fragments.empty()) return {};
  const int k = fragments.front().arity();
  std::size_t rows = 1;
  for (int i = 0; i < k; ++i) rows *= static_cast<std::size_t>(y.colors());
  ExactMatrix t(rows, fragments.size());
  for (std::size_t col = 0; col < fragments.size(); ++col) {
    if (fragments[col].arity() != k) throw InputError("tensor_matrix: fragments of mixed arity");
    const FragmentTensor tensor = fragment_tensor(y, fragments[col]);
    for (std::size_t row = 0; row < rows; ++row) t(row, col) = tensor[row];
  }
  return t;
}

RankBoundReport rank_bound_check(const VertexModel& y, const FragmentCatalog& catalog) {
  RankBoundReport report;
  report.catalog_size = catalog.items.size();
  report.bound = 1;
  for (int i = 0; i < catalog.arity; ++i) report.bound *= static_cast<std::size_t>(y.colors());

  const ExactMatrix c = connection_matrix(partition_oracle(y), catalog.items);
  const ExactMatrix t = tensor_matrix(y, catalog.items);
  report.gram_identity = catalog.items.empty() || (t.transpose() * t == c);
  report.rank = rank(c);
  return report;
}

void LinearCombo::add(GaussianRational coefficient, Fragment f) {
  if (f.arity() != arity_) {
    throw InputError("combination of arity " + std::to_string(arity_) + " given a fragment of arity " +
                     std::to_string(f.arity()));
  }
  terms_.emplace_back(std::move(coefficient), std::move(f));
}

LinearCombo antisymmetrizer(int k) {
  LinearCombo q(2 * k);
  for (const Permutation& pi : all_permutations(k)) q.add(pi.sign(), r_fragment(pi));
  return q;
}

GaussianRational tau(const InvariantOracle& f, const Fragment& x) {
  if (x.arity() % 2 != 0) throw InputError("tau needs a fragment of even arity");
  return f(glue(x, unit_fragment(x.arity() / 2)));
}

GaussianRational tau(const InvariantOracle& f, const LinearCombo& x) {
  GaussianRational total;
  for (const auto& [coefficient, fragment] : x.terms()) {
    if (coefficient.is_zero()) continue;
    total += coefficient * tau(f, fragment);
  }
  return total;
}

GaussianRational glue_value(const InvariantOracle& f, const LinearCombo& x, const Fragment& h) {
  GaussianRational total;
  for (const auto& [coefficient, fragment] : x.terms()) {
    if (coefficient.is_zero()) continue;
    total += coefficient * f(glue(fragment, h));
  }
  return total;
}

IdentityResult glue_identity_check(const InvariantOracle& f, const Fragment& x, const Permutation& rho,
                                   const Permutation& sigma) {
  if (x.arity() % 2 != 0) throw InputError("glue identity needs a fragment of even arity");
  if (rho.size() != sigma.size()) throw InputError("rho and sigma act on different sets");
  const int k = x.arity() / 2;
  const int m = rho.size();

  IdentityResult result;
  const Fragment left = fragment_product(tensor_power(x, m), perm_fragment(k, rho));
  result.lhs = f(glue(left, perm_fragment(k, sigma)));

  result.rhs = 1;
  for (const auto& orbit : (rho * sigma.inverse()).orbits()) {
    result.rhs *= tau(f, fragment_power(x, static_cast<int>(orbit.size())));
  }
  return result;
}

GaussianRational criterion_sum(const InvariantOracle& f, const MultiGraph& g, std::span<const int> u_set,
                               std::span<const int> targets) {
  if (u_set.size() != targets.size()) throw InputError("criterion: s must be defined on all of U");
  GaussianRational total;
  std::vector<int> permuted(targets.size());
  for (const Permutation& pi : all_permutations(static_cast<int>(u_set.size()))) {
    for (std::size_t a = 0; a < u_set.size(); ++a) permuted[a] = targets[static_cast<std::size_t>(pi(static_cast<int>(a)))];
    const GaussianRational value = f(pin_edges(g, u_set, permuted));
    if (pi.sign() > 0) {
      total += value;
    } else {
      total -= value;
    }
  }
  return total;
}

CriterionInstance random_criterion_instance(std::mt19937_64& rng, int u_size, int max_vertices, int max_edges) {
  if (u_size < 0 || max_edges < 0) throw InputError("negative criterion instance bound");
  auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const int n = uniform(std::max(u_size, 1), std::max({max_vertices, u_size, 1}));
  const int edge_count = uniform(0, max_edges);
  std::vector<Edge> edges;
  for (int e = 0; e < edge_count; ++e) edges.push_back({uniform(0, n - 1), uniform(0, n - 1)});

  std::vector<int> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(uniform(0, i))]);

  CriterionInstance instance{MultiGraph(n, std::move(edges)), {}, {}};
  instance.u_set.assign(vertices.begin(), vertices.begin() + u_size);
  for (int j = 0; j < u_size; ++j) instance.targets.push_back(uniform(0, n - 1));
  return instance;
}

KernelReport antisym_kernel_check(const InvariantOracle& f, std::span<const Fragment> fragments) {
  KernelReport report;
  if (fragments.empty()) return report;
  const int arity = fragments.front().arity();
  if (arity % 2 != 0) throw InputError("kernel check needs fragments of even arity");
  const LinearCombo q = antisymmetrizer(arity / 2);
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    if (fragments[i].arity() != arity) throw InputError("kernel check: fragments of mixed arity");
    const GaussianRational total = glue_value(f, q, fragments[i]);
    ++report.checked;
    if (!total.is_zero()) {
      report.first_violation = i;
      report.violation_value = total;
      break;
    }
  }
  return report;
}

}  // namespace vmrank

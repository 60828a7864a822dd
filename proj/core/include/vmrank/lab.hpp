#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "vmrank/catalog.hpp"
#include "vmrank/exact_matrix.hpp"
#include "vmrank/gaussian_rational.hpp"
#include "vmrank/graph.hpp"
#include "vmrank/partition_function.hpp"
#include "vmrank/vertex_model.hpp"

namespace vmrank {

/// Any graph invariant f: graph -> Q(i). Connection matrices and the
/// identities below are stated for an arbitrary oracle; p_y is the one that
/// ships (partition_oracle).
using InvariantOracle = std::function<GaussianRational(const MultiGraph&)>;

// p_y through the contraction evaluator. The model is copied into the oracle.
InvariantOracle partition_oracle(const VertexModel& y, ContractionOptions options = {});
// p_y through brute-force enumeration.
InvariantOracle brute_force_oracle(const VertexModel& y);

// C[G, H] = f(G.H) over the given fragments (all of one arity). Only the
// upper triangle is evaluated; the lower one is mirrored.
ExactMatrix connection_matrix(const InvariantOracle& f, std::span<const Fragment> fragments);

// Columns are the fragment tensors of the given fragments: n^k rows.
ExactMatrix tensor_matrix(const VertexModel& y, std::span<const Fragment> fragments);

struct RankBoundReport {
  std::size_t catalog_size = 0;
  std::size_t rank = 0;
  std::size_t bound = 0;        // n^k
  bool gram_identity = false;   // C == T^T T entrywise
  bool passed() const { return gram_identity && rank <= bound; }
};

// Builds C for p_y over the catalog, its rank, and the Gram factorization.
RankBoundReport rank_bound_check(const VertexModel& y, const FragmentCatalog& catalog);

/// Formal Q(i)-combination of fragments of one arity.
class LinearCombo {
 public:
  explicit LinearCombo(int arity) : arity_(arity) {}
  // Throws InputError when f has a different arity.
  void add(GaussianRational coefficient, Fragment f);

  int arity() const { return arity_; }
  const std::vector<std::pair<GaussianRational, Fragment>>& terms() const { return terms_; }

 private:
  int arity_;
  std::vector<std::pair<GaussianRational, Fragment>> terms_;
};

// q = sum over pi in S_k of sgn(pi) r_pi, arity 2k.
LinearCombo antisymmetrizer(int k);

// tau(x) = f(x . 1_k), extended linearly.
GaussianRational tau(const InvariantOracle& f, const Fragment& x);
GaussianRational tau(const InvariantOracle& f, const LinearCombo& x);

// f(x . H) extended linearly in x.
GaussianRational glue_value(const InvariantOracle& f, const LinearCombo& x, const Fragment& h);

struct IdentityResult {
  GaussianRational lhs;
  GaussianRational rhs;
  bool holds() const { return lhs == rhs; }
};

// f(x^{(x)m} P_rho . P_sigma) against the product over orbits c of
// rho sigma^-1 of tau(x^{|c|}).
IdentityResult glue_identity_check(const InvariantOracle& f, const Fragment& x, const Permutation& rho,
                                   const Permutation& sigma);

// sum over pi in S_U of sgn(pi) f(G_{s o pi}) where s maps u_set[j] to
// targets[j] and pi permutes the positions of u_set.
GaussianRational criterion_sum(const InvariantOracle& f, const MultiGraph& g, std::span<const int> u_set,
                               std::span<const int> targets);

struct CriterionInstance {
  MultiGraph graph;
  std::vector<int> u_set;
  std::vector<int> targets;
};

// Random graph on u_size..max_vertices vertices (at least u_size) with up to
// max_edges edges, a random u_set of the given size and a random s. The
// resulting G_s has maximum degree at most 2 * (max_edges + u_size).
CriterionInstance random_criterion_instance(std::mt19937_64& rng, int u_size, int max_vertices, int max_edges);

struct KernelReport {
  std::size_t checked = 0;
  std::optional<std::size_t> first_violation;  // catalog index
  GaussianRational violation_value;
  bool passed() const { return !first_violation.has_value(); }
};

// For every H of arity 2k: sum over pi in S_k of sgn(pi) f(r_pi . H) == 0.
KernelReport antisym_kernel_check(const InvariantOracle& f, std::span<const Fragment> fragments);

}  // namespace vmrank

// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vmrank/vmrank.hpp"

using namespace vmrank;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Records the first failure; later checks still run so the detail names it.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = "first failure: " + what;
    }
  }
  void note(const std::string& text) {
    if (outcome_.pass) outcome_.detail = text;
  }
  Outcome done() const { return outcome_; }

 private:
  Outcome outcome_;
};

std::string str(const GaussianRational& x) { return x.to_string(); }

Fragment star(int stubs) {
  std::vector<Edge> edges;
  std::vector<int> labels;
  for (int i = 0; i < stubs; ++i) {
    edges.push_back({i, stubs});
    labels.push_back(i);
  }
  return Fragment(MultiGraph(stubs + 1, edges), labels);
}

MultiGraph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return MultiGraph(n, edges);
}

Outcome vertexless_loop() {
  Checker c;
  for (int n = 1; n <= 4; ++n) {
    const VertexModel y = random_model(n, 4, 1000 + static_cast<unsigned>(n));
    const auto brute = partition_function(y, MultiGraph::free_loop());
    const auto contracted = partition_function_contracted(y, MultiGraph::free_loop());
    c.expect(brute == GaussianRational(n) && contracted == brute, "n=" + std::to_string(n) + " got " + str(brute));
  }
  c.note("p_y(O) = 1, 2, 3, 4");
  return c.done();
}

Outcome multiplicativity() {
  Checker c;
  const auto cat = enumerate_fragments(0, {3, 4});
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, cat.items.size() - 1);
  std::vector<VertexModel> models;
  for (int n = 1; n <= 3; ++n) models.push_back(random_model(n, 8, 2000 + static_cast<unsigned>(n)));
  for (int t = 0; t < 100; ++t) {
    const VertexModel& y = models[static_cast<std::size_t>(t % 3)];
    const MultiGraph& g = cat.items[pick(rng)].graph();
    const MultiGraph& h = cat.items[pick(rng)].graph();
    const auto joint = partition_function(y, disjoint_union(g, h));
    const auto product = partition_function(y, g) * partition_function(y, h);
    c.expect(joint == product, "pair " + std::to_string(t) + ": " + str(joint) + " != " + str(product));
  }
  c.note("100 random pairs from a " + std::to_string(cat.items.size()) + "-graph catalog, n = 1..3");
  return c.done();
}

Outcome gram_necessity() {
  Checker c;
  std::ostringstream summary;
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= 3; ++k) {
      const auto cat = enumerate_fragments(k, {3, 5});
      const VertexModel y = random_model(n, 10, 3000 + static_cast<unsigned>(10 * n + k));
      const RankBoundReport r = rank_bound_check(y, cat);
      const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      c.expect(r.gram_identity, where + ": C != T^T T");
      c.expect(r.rank <= r.bound, where + ": rank " + std::to_string(r.rank) + " > " + std::to_string(r.bound));
      summary << where << " |cat|=" << r.catalog_size << " rank=" << r.rank << "<=" << r.bound << "; ";
    }
  c.note(summary.str());
  return c.done();
}

Outcome char_sum_identity() {
  Checker c;
  int shapes = 0;
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const Polynomial lhs = char_sum_lhs(lambda), rhs = char_sum_rhs(lambda);
      c.expect(lhs == rhs, lambda.to_string() + ": " + lhs.to_string() + " != " + rhs.to_string());
      ++shapes;
    }
  c.expect(char_sum_lhs_enumerated(IntegerPartition({3, 2})) == char_sum_rhs(IntegerPartition({3, 2})),
           "enumerated sum for (3,2)");
  c.note(std::to_string(shapes) + " shapes, n <= 6");
  return c.done();
}

struct GridPoint {
  int n;
  GaussianRational d;
};

std::vector<GridPoint> m_grid() {
  std::vector<GridPoint> grid;
  for (int n = 1; n <= 4; ++n)
    for (const char* d : {"0", "1", "-1", "2", "-2", "3", "1/2", "-3/2"}) grid.push_back({n, GaussianRational::parse(d)});
  for (const char* d : {"0", "1", "2"}) grid.push_back({5, GaussianRational::parse(d)});
  return grid;
}

Outcome m_rank_formula_check() {
  Checker c;
  for (const auto& [n, d] : m_grid()) {
    const std::size_t computed = rank(m_matrix(n, d)), predicted = m_rank_formula(n, d);
    c.expect(computed == predicted, "n=" + std::to_string(n) + " d=" + str(d) + ": rank " + std::to_string(computed) +
                                        " formula " + std::to_string(predicted));
  }
  c.note("n <= 4 on 8 values of d, n = 5 on d in {0,1,2}");
  return c.done();
}

Outcome m_negation_check() {
  Checker c;
  for (const auto& [n, d] : m_grid()) {
    const ExactMatrix plus = m_matrix(n, d), minus = m_matrix(n, -d);
    const std::string where = "n=" + std::to_string(n) + " d=" + str(d);
    c.expect(rank(plus) == rank(minus), where + ": ranks differ");
    const ExactMatrix delta = sign_diagonal(n);
    ExactMatrix conjugated = delta * plus * delta;
    if (n % 2 == 1)
      for (std::size_t r = 0; r < conjugated.rows(); ++r)
        for (std::size_t col = 0; col < conjugated.cols(); ++col) conjugated(r, col) = -conjugated(r, col);
    c.expect(conjugated == minus, where + ": M(-d) != (-1)^n D M(d) D");
  }
  c.note("direct rank and sign-diagonal conjugation on the same grid");
  return c.done();
}

Outcome hook_formula() {
  Checker c;
  for (int d = 1; d <= 3; ++d)
    for (int m = 1; m <= 3; ++m) {
      const std::uint64_t rect = rectangular_dimension(d, m);
      const std::uint64_t hooks = dimension(IntegerPartition(std::vector<int>(static_cast<std::size_t>(d), m)));
      // (dm)! / (m!^d p(m)), p(m) = prod_{i<d} binom(m+i, i), evaluated here independently.
      mpz_class num, mfact, p = 1, den;
      mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(d * m));
      mpz_fac_ui(mfact.get_mpz_t(), static_cast<unsigned long>(m));
      for (int i = 0; i < d; ++i) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m + i), static_cast<unsigned long>(i));
        p *= b;
      }
      mpz_pow_ui(den.get_mpz_t(), mfact.get_mpz_t(), static_cast<unsigned long>(d));
      den *= p;
      const bool divides = mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0;
      const mpz_class closed = num / den;
      const std::string where = "d=" + std::to_string(d) + " m=" + std::to_string(m);
      c.expect(divides && closed == mpz_class(static_cast<unsigned long>(rect)), where + ": closed form");
      c.expect(rect == hooks, where + ": " + std::to_string(rect) + " != " + std::to_string(hooks));
    }
  c.note("d, m <= 3");
  return c.done();
}

Outcome antisymmetrizer_trace() {
  Checker c;
  for (int n = 1; n <= 4; ++n) {
    const auto f = partition_oracle(random_model(n, 2, 8000 + static_cast<unsigned>(n)));
    const auto value = tau(f, antisymmetrizer(n + 1));
    c.expect(value.is_zero(), "n=" + std::to_string(n) + ": tau(q) = " + str(value));
  }
  for (int k = 0; k <= 5; ++k) {
    Polynomial falling = Polynomial::constant(1);
    for (int j = 0; j < k; ++j) falling = falling * Polynomial::linear_factor(GaussianRational(j));
    c.expect(signed_orbit_polynomial(k) == falling, "k=" + std::to_string(k) + ": " +
                                                        signed_orbit_polynomial(k).to_string());
  }
  c.note("tau(q) = 0 for n = 1..4; falling factorial for k <= 5");
  return c.done();
}

Outcome criterion_vanishing() {
  Checker c;
  std::mt19937_64 rng(9009);
  const int max_vertices = 5, max_edges = 5;
  struct Case {
    const char* name;
    VertexModel y;
  };
  const Case cases[] = {{"parity", parity_model(2 * (max_edges + 3))}, {"matchings", matchings_model(2 * (max_edges + 3))}};
  for (const auto& [name, y] : cases) {
    const int n = y.colors();
    const auto f = partition_oracle(y);
    for (int t = 0; t < 50; ++t) {
      const auto inst = random_criterion_instance(rng, n + 1, max_vertices, max_edges);
      const auto sum = criterion_sum(f, inst.graph, inst.u_set, inst.targets);
      c.expect(sum.is_zero(), std::string(name) + " instance " + std::to_string(t) + ": " + str(sum));
    }
  }
  // Witness that |U| = n + 1 is needed: one vertex, U = {v}, s(v) = v, matchings.
  const int u[] = {0};
  const auto witness = criterion_sum(brute_force_oracle(matchings_model(2)), MultiGraph(1, {}), u, u);
  c.expect(!witness.is_zero(), "witness with |U| = 1 vanished");
  c.note("100 instances vanish; witness |U|=1 <= n=2 gives " + str(witness));
  return c.done();
}

Outcome gluing_identity() {
  Checker c;
  const auto f = partition_oracle(random_model(2, 12, 10010));
  const int path_labels[] = {0, 1};
  const int rung_labels[] = {0, 1, 2, 3};
  const std::vector<Fragment> fixtures[] = {
      {star(2), Fragment(MultiGraph(4, {{0, 2}, {2, 3}, {3, 3}, {3, 1}}), path_labels)},
      {star(4), Fragment(MultiGraph(6, {{0, 4}, {2, 4}, {1, 5}, {3, 5}, {4, 5}}), rung_labels)}};
  int checks = 0;
  for (int k = 1; k <= 2; ++k)
    for (const auto& x : fixtures[k - 1])
      for (int m = 1; m <= 3; ++m)
        for (const auto& rho : all_permutations(m))
          for (const auto& sigma : all_permutations(m)) {
            const auto r = glue_identity_check(f, x, rho, sigma);
            c.expect(r.holds(), "k=" + std::to_string(k) + " rho=" + rho.to_string_one_based() +
                                    " sigma=" + sigma.to_string_one_based() + ": " + str(r.lhs) + " != " + str(r.rhs));
            ++checks;
          }
  c.note(std::to_string(checks) + " (k, x, rho, sigma) cases, m <= 3");
  return c.done();
}

Outcome kernel_membership() {
  Checker c;
  std::ostringstream summary;
  for (int n = 1; n <= 2; ++n) {
    const int k = n + 1;
    const auto cat = enumerate_fragments(2 * k, {2, 2 * k + 2}, CatalogGuard{4, 8, 8});
    const auto f = partition_oracle(random_model(n, 2 * (2 * k + 2), 11000 + static_cast<unsigned>(n)));
    const KernelReport r = antisym_kernel_check(f, cat.items);
    c.expect(r.passed(), "n=" + std::to_string(n) + ": item " +
                             std::to_string(r.first_violation.value_or(0)) + " gives " + str(r.violation_value));
    summary << "n=" << n << " k=" << k << " coverage " << r.checked << " fragments; ";
  }
  c.note(summary.str());
  return c.done();
}

Outcome evaluator_equivalence() {
  Checker c;
  const auto cat = enumerate_fragments(0, {4, 6});
  for (int n = 1; n <= 3; ++n) {
    const VertexModel y = random_model(n, 12, 12000 + static_cast<unsigned>(n));
    for (std::size_t i = 0; i < cat.items.size(); ++i) {
      const MultiGraph& g = cat.items[i].graph();
      c.expect(partition_function(y, g) == partition_function_contracted(y, g),
               "n=" + std::to_string(n) + " graph " + canonical_form(g));
    }
  }
  const VertexModel matchings = matchings_model(2);
  const auto c5 = partition_function_contracted(matchings, cycle(5));
  std::vector<Edge> p3_edges = {{0, 1}, {1, 2}};
  const auto p3 = partition_function_contracted(matchings, MultiGraph(3, p3_edges));
  c.expect(c5 == GaussianRational(11), "matchings on C5 = " + str(c5));
  c.expect(p3 == GaussianRational(3), "matchings on P3 = " + str(p3));
  c.note(std::to_string(cat.items.size()) + " graphs x 3 models; C5 -> " + str(c5) + ", P3 -> " + str(p3));
  return c.done();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "vertexless loop p_y(O) = n", 1, vertexless_loop},
      {2, "multiplicativity over disjoint union", 10, multiplicativity},
      {3, "Gram factorization and rank(C) <= n^k", 60, gram_necessity},
      {4, "character sum polynomial identity", 30, char_sum_identity},
      {5, "rank of M_n(d) matches formula", 120, m_rank_formula_check},
      {6, "rank M_n(-d) = rank M_n(d)", 60, m_negation_check},
      {7, "rectangular hook formula", 1, hook_formula},
      {8, "tau(q) = 0 and signed orbit sum", 5, antisymmetrizer_trace},
      {9, "signed pinning criterion vanishes", 30, criterion_vanishing},
      {10, "gluing identity for x^(m) P_rho . P_sigma", 30, gluing_identity},
      {11, "antisymmetrizer in connection kernel", 60, kernel_membership},
      {12, "contraction equals brute force", 30, evaluator_equivalence},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < criterion.limit_seconds;
    const bool pass = outcome.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s  [%2d] %-44s %7.2fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", criterion.id, criterion.title,
                seconds, criterion.limit_seconds, outcome.detail.c_str(), in_time ? "" : "  [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}

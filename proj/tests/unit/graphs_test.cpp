#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace vmrank;
using vmrank::testing::bare_edge;
using vmrank::testing::two_stub_star;

namespace {

bool same(const Fragment& a, const Fragment& b) { return canonical_form(a) == canonical_form(b); }
bool same(const MultiGraph& a, const MultiGraph& b) { return canonical_form(a) == canonical_form(b); }

const FragmentCatalog& arity2_catalog() {
  static const FragmentCatalog cat = enumerate_fragments(2, {2, 4});
  return cat;
}

}  // namespace

TEST(Glue, BareEdgesCloseIntoFreeLoop) {
  const MultiGraph g = glue(bare_edge(), bare_edge());
  EXPECT_EQ(g.vertex_count(), 0);
  EXPECT_EQ(g.edge_count(), 0);
  EXPECT_EQ(g.free_loops(), 1);
  EXPECT_EQ(canonical_form(g), canonical_form(MultiGraph::free_loop()));
}

TEST(Glue, StarWithBareEdgeIsOneLoop) {
  const MultiGraph g = glue(two_stub_star(), bare_edge());
  EXPECT_EQ(g.vertex_count(), 1);
  ASSERT_EQ(g.edge_count(), 1);
  EXPECT_TRUE(g.edges()[0].is_loop());
  EXPECT_EQ(g.free_loops(), 0);
}

TEST(Glue, ArityMismatchRejected) {
  EXPECT_THROW(glue(bare_edge(), unit_fragment(2)), InputError);
}

TEST(Glue, PermutationClosureIsOrbitCountLoops) {
  for (int m = 1; m <= 5; ++m)
    for (const auto& pi : all_permutations(m)) {
      const MultiGraph g = glue(r_fragment(pi), unit_fragment(m));
      EXPECT_EQ(g.vertex_count(), 0);
      EXPECT_EQ(g.edge_count(), 0);
      EXPECT_EQ(g.free_loops(), pi.orbit_count()) << pi.to_string_one_based();
    }
}

TEST(Glue, SymmetryOverCatalogPairs) {
  for (int k : {0, 1, 2}) {
    const auto cat = enumerate_fragments(k, {2, 3});
    for (const auto& g : cat.items)
      for (const auto& h : cat.items) ASSERT_TRUE(same(glue(g, h), glue(h, g)));
  }
}

TEST(Glue, HalfEdgeConservation) {
  for (int k : {1, 2, 3}) {
    const auto cat = enumerate_fragments(k, {2, 4});
    for (const auto& g : cat.items)
      for (const auto& h : cat.items) {
        const MultiGraph gh = glue(g, h);
        ASSERT_EQ(gh.total_degree(), g.graph().total_degree() + h.graph().total_degree() - 2 * k);
        ASSERT_EQ(gh.vertex_count(), g.unlabeled_count() + h.unlabeled_count());
      }
  }
}

TEST(FragmentProduct, UnitTimesUnit) {
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(same(fragment_product(unit_fragment(k), unit_fragment(k)), unit_fragment(k)));
}

TEST(FragmentProduct, UnitLawOnCatalog) {
  const Fragment one = unit_fragment(1);
  for (const auto& g : arity2_catalog().items) {
    EXPECT_TRUE(same(fragment_product(g, one), g));
    EXPECT_TRUE(same(fragment_product(one, g), g));
  }
}

TEST(FragmentProduct, OddArityRejected) {
  const int labels[] = {0};
  const Fragment stub(MultiGraph(2, {{0, 1}}), labels);
  EXPECT_THROW(fragment_product(stub, stub), InputError);
  EXPECT_THROW(fragment_product(unit_fragment(1), unit_fragment(2)), InputError);
}

TEST(FragmentProduct, AssociativeOnRandomTriples) {
  std::mt19937_64 rng(21);
  const auto& items = arity2_catalog().items;
  for (int t = 0; t < 200; ++t) {
    const auto& f = vmrank::testing::pick(rng, items);
    const auto& g = vmrank::testing::pick(rng, items);
    const auto& h = vmrank::testing::pick(rng, items);
    ASSERT_TRUE(same(fragment_product(fragment_product(f, g), h), fragment_product(f, fragment_product(g, h))));
  }
}

TEST(FragmentProduct, PermutationFragmentsFormAMonoidImage) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    const auto rho = vmrank::testing::random_permutation(rng, 3);
    const auto sigma = vmrank::testing::random_permutation(rng, 3);
    EXPECT_TRUE(same(fragment_product(r_fragment(rho), r_fragment(sigma)), r_fragment(rho * sigma)))
        << rho.to_string_one_based() << " " << sigma.to_string_one_based();
  }
  for (const auto& rho : all_permutations(4))
    for (const auto& sigma : all_permutations(4))
      ASSERT_TRUE(same(fragment_product(r_fragment(rho), r_fragment(sigma)), r_fragment(rho * sigma)));
}

TEST(FragmentProduct, ProductConventionIsLeftToRight) {
  const Permutation rho({1, 2, 0});
  const Permutation sigma({1, 0, 2});
  EXPECT_EQ((rho * sigma)(0), sigma(rho(0)));
  EXPECT_NE(rho * sigma, sigma * rho);
}

TEST(FragmentProduct, PowerMatchesRepeatedProduct) {
  const Fragment x = two_stub_star();
  EXPECT_TRUE(same(fragment_power(x, 1), x));
  EXPECT_TRUE(same(fragment_power(x, 3), fragment_product(x, fragment_product(x, x))));
  EXPECT_EQ(fragment_power(x, 3).unlabeled_count(), 3);
}

TEST(TensorPower, PowerOneIsIdentity) {
  for (const auto& x : arity2_catalog().items) EXPECT_EQ(tensor_power(x, 1), x);
}

TEST(TensorPower, TwoStubVertexSquared) {
  const Fragment t = tensor_power(two_stub_star(), 2);
  ASSERT_EQ(t.arity(), 4);
  EXPECT_EQ(t.unlabeled_count(), 2);
  const auto vertex_of = [&](int label) {
    const Edge e = t.graph().edges()[static_cast<std::size_t>(t.stub_edge(label))];
    return e.u == label ? e.v : e.u;
  };
  // Copy 1 owns labels 1 (left) and 3 (right); copy 2 owns 2 and 4.
  EXPECT_EQ(vertex_of(0), vertex_of(2));
  EXPECT_EQ(vertex_of(1), vertex_of(3));
  EXPECT_NE(vertex_of(0), vertex_of(1));
}

TEST(TensorPower, VertexCountScales) {
  for (const auto& x : arity2_catalog().items)
    for (int m = 1; m <= 3; ++m) {
      const Fragment t = tensor_power(x, m);
      EXPECT_EQ(t.graph().vertex_count(), m * x.graph().vertex_count());
      EXPECT_EQ(t.arity(), 2 * m);
      EXPECT_EQ(t.graph().free_loops(), m * x.graph().free_loops());
    }
}

TEST(PermFragment, IdentityIsUnit) {
  for (int m = 1; m <= 4; ++m) EXPECT_TRUE(same(perm_fragment(1, Permutation::identity(m)), unit_fragment(m)));
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 3; ++m) EXPECT_TRUE(same(perm_fragment(k, Permutation::identity(m)), unit_fragment(k * m)));
}

TEST(PermFragment, CrossingFragment) {
  const Fragment p = perm_fragment(1, Permutation::transposition(2, 0, 1));
  ASSERT_EQ(p.arity(), 4);
  EXPECT_EQ(p.graph().vertex_count(), 4);
  std::vector<Edge> edges = p.graph().edges();
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  // 0-based {1-4, 2-3}.
  EXPECT_EQ(edges, (std::vector<Edge>{{0, 3}, {1, 2}}));
}

TEST(PermFragment, ShapeCounts) {
  const Permutation pi({2, 0, 1});
  const Fragment p = perm_fragment(2, pi);
  EXPECT_EQ(p.arity(), 12);
  EXPECT_EQ(p.graph().edge_count(), 6);
  EXPECT_EQ(p.unlabeled_count(), 0);
}

TEST(RFragment, IdentityIsUnit) {
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(same(r_fragment(Permutation::identity(k)), unit_fragment(k)));
}

TEST(RFragment, EqualsPermFragmentAtOne) {
  for (const auto& pi : all_permutations(4)) EXPECT_TRUE(same(r_fragment(pi), perm_fragment(1, pi)));
}

TEST(PinEdges, EmptyUSetIsIdentity) {
  const MultiGraph g = vmrank::testing::path_graph(3);
  EXPECT_EQ(pin_edges(g, {}, {}), g);
}

TEST(PinEdges, SelfTargetAddsLoop) {
  const int u[] = {0};
  const MultiGraph g = pin_edges(MultiGraph(1, {}), u, u);
  ASSERT_EQ(g.edge_count(), 1);
  EXPECT_TRUE(g.edges()[0].is_loop());
  EXPECT_EQ(g.degree(0), 2);
}

TEST(PinEdges, EdgeCountGrowsByUSize) {
  const MultiGraph g = vmrank::testing::cycle_graph(4);
  const int u[] = {0, 2, 3};
  const int s[] = {1, 1, 3};
  EXPECT_EQ(pin_edges(g, u, s).edge_count(), g.edge_count() + 3);
}

TEST(PinEdges, OutOfRangeRejected) {
  const MultiGraph g = vmrank::testing::path_graph(2);
  const int u[] = {0};
  const int bad[] = {5};
  EXPECT_THROW(pin_edges(g, u, bad), InputError);
  EXPECT_THROW(pin_edges(g, bad, u), InputError);
}

TEST(DisjointUnion, EmptyIsNeutral) {
  const MultiGraph g = vmrank::testing::cycle_graph(3);
  EXPECT_EQ(disjoint_union(g, MultiGraph()), g);
}

TEST(DisjointUnion, FreeLoopsAdd) {
  EXPECT_EQ(disjoint_union(MultiGraph::free_loop(), MultiGraph::free_loop()).free_loops(), 2);
}

TEST(DisjointUnion, CountsAdd) {
  const MultiGraph a = vmrank::testing::cycle_graph(3), b = vmrank::testing::path_graph(4);
  const MultiGraph u = disjoint_union(a, b);
  EXPECT_EQ(u.vertex_count(), 7);
  EXPECT_EQ(u.edge_count(), 6);
}

TEST(CanonicalForm, TrianglePresentationsAgree) {
  const MultiGraph a(3, {{0, 1}, {1, 2}, {2, 0}});
  const MultiGraph b(3, {{2, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(CanonicalForm, TriangleDiffersFromPath) {
  EXPECT_NE(canonical_form(vmrank::testing::cycle_graph(3)), canonical_form(vmrank::testing::path_graph(3)));
}

TEST(CanonicalForm, EmptyDiffersFromFreeLoop) {
  EXPECT_NE(canonical_form(MultiGraph()), canonical_form(MultiGraph::free_loop()));
}

TEST(CanonicalForm, LabelsAreRespected) {
  // Path stub1 - v - stub2 with an extra pendant edge at v vs. at a second vertex.
  const int labels[] = {0, 1};
  const Fragment a(MultiGraph(4, {{0, 2}, {2, 3}, {3, 1}}), labels);
  const Fragment b(MultiGraph(4, {{1, 2}, {2, 3}, {3, 0}}), labels);
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  const int swapped[] = {1, 0};
  const Fragment c(MultiGraph(4, {{0, 2}, {2, 3}, {3, 3}, {1, 2}}), labels);
  const Fragment d(MultiGraph(4, {{0, 2}, {2, 3}, {3, 3}, {1, 2}}), swapped);
  EXPECT_EQ(canonical_form(c), canonical_form(d));
  const Fragment e(MultiGraph(5, {{0, 2}, {2, 4}, {1, 3}}), labels);
  const Fragment f(MultiGraph(5, {{0, 2}, {1, 3}, {3, 4}}), labels);
  EXPECT_NE(canonical_form(e), canonical_form(f));
}

TEST(CanonicalForm, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int e = 0, count = static_cast<int>(rng() % 10); e < count; ++e)
      edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
    const MultiGraph g(n, edges, static_cast<int>(rng() % 2));
    const Permutation p = vmrank::testing::random_permutation(rng, n);
    std::vector<Edge> moved;
    for (const auto& e : edges) moved.push_back({p(e.v), p(e.u)});
    std::shuffle(moved.begin(), moved.end(), rng);
    ASSERT_EQ(canonical_form(g), canonical_form(MultiGraph(n, moved, g.free_loops())));
  }
}

TEST(CanonicalForm, GuardViolation) {
  EXPECT_THROW(canonical_form(vmrank::testing::cycle_graph(11)), GuardViolation);
  EXPECT_NO_THROW(canonical_form(vmrank::testing::cycle_graph(11), 11));
}

TEST(Fragment, RejectsBadLabels) {
  const MultiGraph g(3, {{0, 2}, {1, 2}});
  const int dup[] = {0, 0};
  const int deg2[] = {0, 2};
  const int out[] = {0, 7};
  EXPECT_THROW(Fragment(g, dup), InputError);
  EXPECT_THROW(Fragment(g, deg2), InputError);
  EXPECT_THROW(Fragment(g, out), InputError);
  const int loop_label[] = {0};
  EXPECT_THROW(Fragment(MultiGraph(1, {{0, 0}}), loop_label), InputError);
}

TEST(Fragment, NormalizesLabelsToLeadingVertices) {
  const int labels[] = {2, 0};
  const Fragment f(MultiGraph(3, {{0, 1}, {1, 2}}), labels);
  EXPECT_EQ(f.arity(), 2);
  EXPECT_EQ(f.graph().degree(0), 1);
  EXPECT_EQ(f.graph().degree(1), 1);
  EXPECT_EQ(f.graph().degree(2), 2);
}

TEST(Permutation, Basics) {
  EXPECT_EQ(Permutation::identity(4).orbit_count(), 4);
  EXPECT_EQ(Permutation::transposition(2, 0, 1).sign(), -1);
  EXPECT_EQ(Permutation({1, 2, 3, 4, 0}).orbit_count(), 1);
  EXPECT_EQ(Permutation({1, 2, 3, 4, 0}).sign(), 1);
  EXPECT_EQ(Permutation::parse_one_based("2,3,1"), Permutation({1, 2, 0}));
  EXPECT_EQ(Permutation({1, 2, 0}).to_string_one_based(), "2,3,1");
  EXPECT_THROW(Permutation({0, 0}), InputError);
  EXPECT_THROW(Permutation::parse_one_based("1,3"), InputError);
  EXPECT_EQ(all_permutations(4).size(), 24u);
  EXPECT_EQ(all_permutations(0).size(), 1u);
}

TEST(Permutation, InverseAndAssociativity) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const auto a = vmrank::testing::random_permutation(rng, 5);
    const auto b = vmrank::testing::random_permutation(rng, 5);
    const auto c = vmrank::testing::random_permutation(rng, 5);
    EXPECT_EQ(a * a.inverse(), Permutation::identity(5));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).sign(), a.sign() * b.sign());
  }
}

#pragma once

#include <vector>

#include "vmrank/graph.hpp"

namespace vmrank {

struct CatalogBounds {
  int max_vertices = 2;  // unlabeled vertices
  int max_edges = 4;     // edges including stubs; free loops are not edges
};

// Enumeration refuses bounds above these limits.
struct CatalogGuard {
  int max_vertices = 4;
  int max_edges = 6;
  int max_arity = 8;
};

/// Finite window into the k-fragments: one representative per isomorphism
/// class with at most max_vertices unlabeled vertices, at most max_edges
/// edges and at most one free loop.
struct FragmentCatalog {
  int arity = 0;
  CatalogBounds bounds;
  std::vector<Fragment> items;
};

// Deterministic: items are sorted by (unlabeled vertex count, edge count,
// canonical form). Throws GuardViolation when bounds or arity exceed the guard.
FragmentCatalog enumerate_fragments(int arity, CatalogBounds bounds, CatalogGuard guard = {});

}  // namespace vmrank

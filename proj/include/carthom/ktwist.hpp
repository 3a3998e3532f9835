#pragma once
// Circle-with-coefficients towers: the two cell levels tensored diagonally
// with a coefficient tower, the cell boundary between them, and the span /
// collapse maps to and from the coefficients. Levelwise these four form an
// exact sequence, the chain homology of a circle.

#include "carthom/cyclic.hpp"

namespace carthom {

struct KTower {
  CycObj e;        // coefficient tower
  CycObj k0, k1;   // vertex cells x e, edge cells x e
  CyclicMapData del;         // k1 -> k0, edge boundary on the cell factor
  CyclicMapData edge_span;   // e -> k1, x -> sum over all edges
  CyclicMapData collapse;    // k0 -> e, forget the vertex
};

// materializes everything through level top and verifies that the three
// maps commute with all structure maps
KTower k_tower(const CycGen& eg, int top);

// levelwise: 0 -> e -> k1 -> k0 -> e -> 0 exact at every node
void verify_k_exactness(const KTower& k);

}  // namespace carthom

#pragma once

// Internal constructors for the three pendant-free bicyclic bases, all
// edges positive. Layouts are fixed so callers can address cycle edges.

#include "sgs/signed_graph.hpp"

namespace sgs::detail {

// Cycles of lengths p and q sharing vertex 0; first cycle on 0..p-1.
SignedGraph make_infinity_base(int p, int q);

// Cycle of length p at anchor 0, path of length l to a second anchor,
// cycle of length q there.
SignedGraph make_dumbbell_base(int p, int l, int q);

// Three internally disjoint paths of lengths k, l, m between anchors 0, 1.
SignedGraph make_theta_base(int k, int l, int m);

}  // namespace sgs::detail

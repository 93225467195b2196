#pragma once

// Internal helpers shared by switching, bicyclic and enumerate: arc
// decomposition of a pendant-free bicyclic base. Anchors are the vertices of
// degree >= 3, arcs the maximal paths with interior degree 2 between them.

#include <vector>

#include "sgs/signed_graph.hpp"

namespace sgs::detail {

struct Arc {
    int from = 0, to = 0;
    std::vector<int> interior;
    int sign = 1;  // product of edge signs along the arc
    int length() const { return static_cast<int>(interior.size()) + 1; }
};

std::vector<int> arc_vertices(const Arc& a);
std::vector<SignedEdge> arc_edges(const SignedGraph& g, const Arc& a);

// g may contain isolated vertices; anchors/arcs are found among the rest.
// Every vertex of positive degree must have degree 2 except the anchors.
std::vector<Arc> base_arcs(const SignedGraph& base);

}  // namespace sgs::detail

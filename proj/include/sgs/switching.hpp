#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgs/bicyclic.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

// Per-vertex sign function; values are +1 or -1.
using SwitchingFunction = std::vector<int>;

// Either a switching function that makes every edge positive, or one
// negative cycle per unbalanced component.
struct BalanceCertificate {
    bool balanced = true;
    SwitchingFunction theta;            // valid when balanced
    std::vector<Cycle> negative_cycles; // nonempty when unbalanced
};

SignedGraph switch_graph(const SignedGraph& g, const SwitchingFunction& theta);

BalanceCertificate is_balanced(const SignedGraph& g);

// Label-preserving switching equivalence: both graphs must share the exact
// underlying edge set. Returns a witness theta or nullopt.
std::optional<SwitchingFunction> switching_equivalent(const SignedGraph& g1,
                                                      const SignedGraph& g2);

// Switching-equivalent normal form of an unbalanced bicyclic graph: all
// edges positive except one negative edge per unbalanced cycle
// (Infinity/Dumbbell) or exactly one negative edge on the base (Theta),
// placed on the lexicographically smallest admissible edge.
SignedGraph normalize_signature(const SignedGraph& g, const BicyclicShape& shape);

std::string theta_to_string(const SwitchingFunction& theta);
SwitchingFunction theta_from_string(const std::string& s);

}  // namespace sgs

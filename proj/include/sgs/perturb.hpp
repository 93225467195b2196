#pragma once

#include <string>
#include <vector>

#include "sgs/signed_graph.hpp"

namespace sgs {

enum class AlphaCase { None, Weak1, Weak2, Strict1, Strict2 };

const char* alpha_case_name(AlphaCase c);

// Move the cut/pendant edges v-t (t in targets) onto u, signs kept.
SignedGraph relocate_edges(const SignedGraph& g, int u, int v,
                           const std::vector<int>& targets);

// sigma(uv) x_u x_v >= -1e-9 for the index eigenvector. uv must be a cut
// edge and the index simple. This always holds; the operation exists as a
// property-test probe.
bool check_cut_edge_sign(const SignedGraph& g, int u, int v);

// Rewire every neighbor of v except u onto u, signs kept; v becomes a
// pendant at u. uv must be a non-pendant edge lying in no triangle.
SignedGraph alpha_transform(const SignedGraph& g, int u, int v);

// Strongest index-monotonicity hypothesis satisfied by the computed index
// eigenvector for the alpha-transform on uv, eigenvector orientation folded
// in. Case 1 applies to positive uv, case 2 to negative uv.
AlphaCase check_alpha_hypotheses(const SignedGraph& g, int u, int v);

// Replace the tree hanging at root (reachable without crossing 2-core
// edges) with a star of positive edges centered at root.
SignedGraph collapse_tree_to_star(const SignedGraph& g, int root);

// Add a new negative edge uv.
SignedGraph add_negative_edge(const SignedGraph& g, int u, int v);

struct PerturbationReport {
    std::string op;
    SignedGraph before, after;
    std::string hypothesis;
    double lambda_before = 0.0, lambda_after = 0.0;
    bool monotone = false;  // lambda_after >= lambda_before - 1e-9
};

PerturbationReport perturb_report(const std::string& op, const SignedGraph& before,
                                  const SignedGraph& after, const std::string& hypothesis);

}  // namespace sgs

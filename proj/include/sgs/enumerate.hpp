#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sgs/bicyclic.hpp"
#include "sgs/catalog.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

// Relabel g by perm (perm[old] = new, a bijection on 0..n-1).
SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm);

// Canonical key of a connected bicyclic signed graph under the combination
// of isomorphism and switching. Signature enters only through cycle signs,
// which is exactly the switching-invariant content. with_signature = false
// keys the underlying graph alone.
std::string bicyclic_canonical_key(const SignedGraph& g, bool with_signature = true);

// True iff some relabeling of g1 is switching equivalent to g2. Connected
// bicyclic pairs use the structural canonical key; other small graphs fall
// back to isomorphism backtracking. n <= 40.
bool switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2);

struct RankedGraph {
    SignedGraph graph;
    double lambda = 0.0;
    std::string key;
};

struct EnumerationReport {
    int n = 0;
    long underlying_graphs = 0;
    long signed_classes = 0;
    long count_infinity = 0, count_dumbbell = 0, count_theta = 0;
    std::vector<RankedGraph> top;
    double seconds = 0.0;
};

// One representative per switching-isomorphism class of unbalanced bicyclic
// graphs on n vertices (5 <= n <= 9), sorted by canonical key.
std::vector<SignedGraph> all_unbalanced_bicyclic(int n, bool parallel = true);

// Independent oracle for small n: the same classes obtained by filtering
// every labeled graph with n + 1 edges and every signature (n <= 6).
std::vector<SignedGraph> all_unbalanced_bicyclic_raw(int n);

EnumerationReport enumerate_unbalanced_bicyclic(int n, int top_k = 10, bool parallel = true);

struct OrderingReport {
    int n_lo = 0, n_hi = 0;
    int first_chain_n = -1;  // smallest n >= 7 where the full strict chain holds
    std::vector<std::array<double, 5>> lambdas;  // indexed by n - n_lo
};

// Checks lambda(G1) > ... > lambda(G5) with margin 1e-9 for every n in
// [n_lo, n_hi]; throws OrderingViolated with the witness n otherwise.
OrderingReport verify_ordering(int n_lo, int n_hi, bool parallel = true);

struct ExclusionReport {
    int n = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    long skipped_family = 0;
    long dumbbell_samples = 0;
    double lambda5 = 0.0;
    double max_lambda_outside = 0.0;
};

// Samples random unbalanced bicyclic graphs, skips the ones switching-
// isomorphic to a family member, and checks lambda < lambda(G5) - 1e-9 for
// the rest; throws ExclusionViolated with a witness otherwise.
ExclusionReport verify_exclusions(int n, long samples, std::uint64_t seed,
                                  bool parallel = true);

struct RowMatch {
    std::string label;
    int match_count = 0;  // distinct switching-isomorphism classes
    std::vector<SignedGraph> examples;
    std::vector<std::string> keys;
};

struct CatalogMatchReport {
    int n = 0;
    bool widened = false;
    long candidates = 0;
    std::vector<RowMatch> rows;
};

// Searches bicyclic graphs (bases on <= 8 vertices, pendant trees of depth
// <= 2 on at most 2 base vertices, all unbalanced switching classes; depth
// <= 3 and 3 attachment vertices when widened) for exact characteristic-
// polynomial matches against every catalog row. 8 <= n <= 12.
CatalogMatchReport match_table1(int n, bool widen = false, bool parallel = true);

}  // namespace sgs

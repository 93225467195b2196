#include "sgs/rng.hpp"

#include "bases.hpp"
#include "sgs/error.hpp"
#include "sgs/switching.hpp"

namespace sgs {

SignedGraph random_signed_tree(Rng& rng, int n) {
    std::vector<SignedEdge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({rng.below(v), v, rng.sign()});
    return SignedGraph(n, std::move(edges));
}

SignedGraph random_connected_signed(Rng& rng, int n, int extra) {
    std::vector<SignedEdge> edges;
    std::vector<std::vector<char>> have(static_cast<size_t>(n),
                                        std::vector<char>(static_cast<size_t>(n), 0));
    for (int v = 1; v < n; ++v) {
        int u = rng.below(v);
        edges.push_back({u, v, rng.sign()});
        have[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        have[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    long max_extra = static_cast<long>(n) * (n - 1) / 2 - (n - 1);
    extra = static_cast<int>(std::min<long>(extra, max_extra));
    int placed = 0, guard = 0;
    while (placed < extra && ++guard < 100000) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v || have[static_cast<size_t>(u)][static_cast<size_t>(v)]) continue;
        edges.push_back({u, v, rng.sign()});
        have[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        have[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
        ++placed;
    }
    return SignedGraph(n, std::move(edges));
}

SignedGraph random_unbalanced_bicyclic(Rng& rng, int n) {
    if (n < 5) raise("TooLarge", "need n >= 5 for an unbalanced bicyclic graph");
    SignedGraph base;
    for (int attempt = 0;; ++attempt) {
        if (attempt > 1000) raise("TooLarge", "could not sample a base");
        int type = rng.below(3);
        if (type == 0) {  // infinity
            int p = 3 + rng.below(n), q = 3 + rng.below(n);
            if (p < q) std::swap(p, q);
            if (p + q - 1 > n) continue;
            base = detail::make_infinity_base(p, q);
        } else if (type == 1) {  // dumbbell
            if (n < 6) continue;
            int p = 3 + rng.below(n), q = 3 + rng.below(n), l = 1 + rng.below(n);
            if (p < q) std::swap(p, q);
            if (p + q + l - 1 > n) continue;
            base = detail::make_dumbbell_base(p, l, q);
        } else {  // theta
            int k = 1 + rng.below(n), l = 1 + rng.below(n), m = 1 + rng.below(n);
            if (k < l) std::swap(k, l);
            if (l < m) std::swap(l, m);
            if (k < l) std::swap(k, l);
            if (m == 1 && l == 1) continue;
            if (k + l + m - 1 > n) continue;
            base = detail::make_theta_base(k, l, m);
        }
        break;
    }
    std::vector<SignedEdge> edges = base.edges();
    for (int v = base.order(); v < n; ++v) edges.push_back({rng.below(v), v, 1});
    // Resample signs until unbalanced; at most 1/4 of signatures of a
    // bicyclic graph are balanced, so this terminates quickly.
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<SignedEdge> signed_edges = edges;
        for (auto& e : signed_edges) e.sign = rng.sign();
        SignedGraph g(n, std::move(signed_edges));
        if (!is_balanced(g).balanced) return g;
    }
    raise("TooLarge", "could not sample an unbalanced signature");
}

}  // namespace sgs

#include "sgs/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "sgs/error.hpp"
#include "sgs/spectra.hpp"

namespace sgs {

const char* alpha_case_name(AlphaCase c) {
    switch (c) {
        case AlphaCase::None: return "none";
        case AlphaCase::Weak1: return "weak-1";
        case AlphaCase::Weak2: return "weak-2";
        case AlphaCase::Strict1: return "strict-1";
        case AlphaCase::Strict2: return "strict-2";
    }
    return "?";
}

SignedGraph relocate_edges(const SignedGraph& g, int u, int v,
                           const std::vector<int>& targets) {
    std::set<int> seen;
    for (int t : targets) {
        if (!g.has_edge(v, t))
            raise("EdgeMissing", "(" + std::to_string(v) + "," + std::to_string(t) + ")");
        if (t == u || g.has_edge(u, t) || !seen.insert(t).second)
            raise("EdgeCollision", "(" + std::to_string(u) + "," + std::to_string(t) + ")");
    }
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges()) {
        int other = -1;
        if (e.u == v && seen.count(e.v))
            other = e.v;
        else if (e.v == v && seen.count(e.u))
            other = e.u;
        if (other >= 0)
            edges.push_back({std::min(u, other), std::max(u, other), e.sign});
        else
            edges.push_back(e);
    }
    return SignedGraph(g.order(), std::move(edges));
}

bool check_cut_edge_sign(const SignedGraph& g, int u, int v) {
    auto bridges = cut_edges(g);
    SignedEdge probe{std::min(u, v), std::max(u, v), g.sign_of(u, v)};
    if (probe.sign == 0 ||
        std::find(bridges.begin(), bridges.end(), probe) == bridges.end())
        raise("NotCutEdge", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    IndexResult ir = index_of(g);
    if (ir.multiple) raise("MultipleIndex", "index eigenvalue is not simple");
    double prod = probe.sign * ir.vec[static_cast<size_t>(u)] * ir.vec[static_cast<size_t>(v)];
    return prod >= -1e-9;
}

namespace {

void check_alpha_eligible(const SignedGraph& g, int u, int v) {
    if (!g.has_edge(u, v))
        raise("EdgeMissing", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (g.degree(u) < 2 || g.degree(v) < 2)
        raise("PendantEdge", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    for (auto [w, s] : g.neighbors(u)) {
        (void)s;
        if (w != v && g.has_edge(v, w))
            raise("EdgeInTriangle", "(" + std::to_string(u) + "," + std::to_string(v) +
                                        ") with " + std::to_string(w));
    }
}

}  // namespace

SignedGraph alpha_transform(const SignedGraph& g, int u, int v) {
    check_alpha_eligible(g, u, v);
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges()) {
        int other = -1;
        if (e.u == v && e.v != u)
            other = e.v;
        else if (e.v == v && e.u != u)
            other = e.u;
        if (other >= 0)
            edges.push_back({std::min(u, other), std::max(u, other), e.sign});
        else
            edges.push_back(e);
    }
    return SignedGraph(g.order(), std::move(edges));
}

AlphaCase check_alpha_hypotheses(const SignedGraph& g, int u, int v) {
    check_alpha_eligible(g, u, v);
    IndexResult ir = index_of(g);
    if (ir.multiple) raise("MultipleIndex", "index eigenvalue is not simple");
    int sigma = g.sign_of(u, v);
    double lam = ir.lambda;
    const double tol = 1e-12, margin = 1e-9;

    bool weak = false, strict = false;
    for (int o : {1, -1}) {
        double xu = o * ir.vec[static_cast<size_t>(u)];
        double xv = o * ir.vec[static_cast<size_t>(v)];
        if (sigma > 0) {
            weak = weak || (xv - tol <= xu && xu <= lam * xv + tol);
            strict = strict || (xv + margin < xu && xu < lam * xv - margin);
        } else {
            weak = weak || (xu >= -tol && xv >= -tol);
            strict = strict ||
                     (xu > margin && xv > margin && std::fabs(xu - xv) > margin);
        }
    }
    if (strict) return sigma > 0 ? AlphaCase::Strict1 : AlphaCase::Strict2;
    if (weak) return sigma > 0 ? AlphaCase::Weak1 : AlphaCase::Weak2;
    return AlphaCase::None;
}

SignedGraph collapse_tree_to_star(const SignedGraph& g, int root) {
    if (root < 0 || root >= g.order())
        raise("VertexOutOfRange", "vertex " + std::to_string(root));
    int n = g.order();
    // 2-core by iterated pendant stripping
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<char> core(static_cast<size_t>(n), 1);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] <= 1) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (!core[static_cast<size_t>(v)]) continue;
        core[static_cast<size_t>(v)] = 0;
        for (auto [w, s] : g.neighbors(v)) {
            (void)s;
            if (core[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] <= 1) q.push(w);
        }
    }
    // vertices reachable from root without crossing core-core edges
    std::vector<char> in_t(static_cast<size_t>(n), 0);
    in_t[static_cast<size_t>(root)] = 1;
    std::queue<int> bfs;
    bfs.push(root);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (auto [w, s] : g.neighbors(x)) {
            (void)s;
            if (core[static_cast<size_t>(x)] && core[static_cast<size_t>(w)]) continue;
            if (!in_t[static_cast<size_t>(w)]) {
                in_t[static_cast<size_t>(w)] = 1;
                bfs.push(w);
            }
        }
    }
    long t_size = std::count(in_t.begin(), in_t.end(), 1);
    if (t_size == 1) return g;
    long t_edges = 0;
    for (const auto& e : g.edges())
        if (in_t[static_cast<size_t>(e.u)] && in_t[static_cast<size_t>(e.v)]) ++t_edges;
    if (t_edges != t_size - 1)
        raise("NotSubtreeRoot", "vertex " + std::to_string(root));

    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges())
        if (!(in_t[static_cast<size_t>(e.u)] && in_t[static_cast<size_t>(e.v)]))
            edges.push_back(e);
    for (int v = 0; v < n; ++v)
        if (v != root && in_t[static_cast<size_t>(v)])
            edges.push_back({std::min(root, v), std::max(root, v), 1});
    return SignedGraph(n, std::move(edges));
}

SignedGraph add_negative_edge(const SignedGraph& g, int u, int v) {
    if (g.has_edge(u, v))
        raise("EdgeCollision", "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    std::vector<SignedEdge> edges = g.edges();
    edges.push_back({std::min(u, v), std::max(u, v), -1});
    return SignedGraph(g.order(), std::move(edges));
}

PerturbationReport perturb_report(const std::string& op, const SignedGraph& before,
                                  const SignedGraph& after, const std::string& hypothesis) {
    PerturbationReport r;
    r.op = op;
    r.before = before;
    r.after = after;
    r.hypothesis = hypothesis;
    r.lambda_before = eigen_sym(before.adjacency()).values[0];
    r.lambda_after = eigen_sym(after.adjacency()).values[0];
    r.monotone = r.lambda_after >= r.lambda_before - 1e-9;
    return r;
}

}  // namespace sgs

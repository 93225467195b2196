#include "sgs/switching.hpp"

#include <algorithm>
#include <queue>

#include "arcs.hpp"
#include "sgs/error.hpp"

namespace sgs {

SignedGraph switch_graph(const SignedGraph& g, const SwitchingFunction& theta) {
    if (static_cast<int>(theta.size()) != g.order())
        raise("VertexOutOfRange", "switching function must cover every vertex");
    for (int t : theta)
        if (t != 1 && t != -1) raise("InvalidSign", "theta values must be +1 or -1");
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges)
        e.sign *= theta[static_cast<size_t>(e.u)] * theta[static_cast<size_t>(e.v)];
    return SignedGraph(g.order(), std::move(edges));
}

namespace {

// BFS tree from each component root with parent pointers; theta set so that
// every tree edge switches positive.
struct BfsLabels {
    SwitchingFunction theta;
    std::vector<int> parent;  // -1 at roots
    std::vector<int> order;   // BFS visit order
};

BfsLabels bfs_label(const SignedGraph& g) {
    int n = g.order();
    BfsLabels r;
    r.theta.assign(static_cast<size_t>(n), 0);
    r.parent.assign(static_cast<size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (r.theta[static_cast<size_t>(s)] != 0) continue;
        r.theta[static_cast<size_t>(s)] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            r.order.push_back(v);
            for (auto [w, sg] : g.neighbors(v)) {
                if (r.theta[static_cast<size_t>(w)] != 0) continue;
                r.theta[static_cast<size_t>(w)] = r.theta[static_cast<size_t>(v)] * sg;
                r.parent[static_cast<size_t>(w)] = v;
                q.push(w);
            }
        }
    }
    return r;
}

// Tree path between u and v through parent pointers (they share a root).
std::vector<int> tree_path(const std::vector<int>& parent, int u, int v) {
    std::vector<int> up{u}, vp{v};
    std::vector<char> on_up;
    for (int x = u; x != -1; x = parent[static_cast<size_t>(x)])
        if (x != u) up.push_back(x);
    auto in_up = [&](int x) {
        return std::find(up.begin(), up.end(), x) != up.end();
    };
    int meet = v;
    while (!in_up(meet)) {
        meet = parent[static_cast<size_t>(meet)];
        vp.push_back(meet);
    }
    // up: u..root, truncate at meet; vp ends at meet.
    std::vector<int> path;
    for (int x : up) {
        path.push_back(x);
        if (x == meet) break;
    }
    for (size_t i = vp.size() - 1; i-- > 0;) path.push_back(vp[i]);
    return path;  // u .. meet .. v
}

}  // namespace

namespace {

// Rotate a cycle so the smallest vertex comes first and its smaller
// neighbor second, matching the simple_cycles convention.
void canonical_rotation(std::vector<int>& c) {
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c.size() >= 3 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
}

}  // namespace

BalanceCertificate is_balanced(const SignedGraph& g) {
    BalanceCertificate cert;
    BfsLabels lab = bfs_label(g);
    cert.theta = lab.theta;
    for (const auto& e : g.edges()) {
        int s = lab.theta[static_cast<size_t>(e.u)] * e.sign *
                lab.theta[static_cast<size_t>(e.v)];
        if (s < 0) {
            // Fundamental cycle of this non-tree edge witnesses unbalance.
            std::vector<int> path = tree_path(lab.parent, e.u, e.v);
            int csign = 1;
            for (size_t i = 0; i + 1 < path.size(); ++i)
                csign *= g.sign_of(path[i], path[i + 1]);
            csign *= e.sign;
            canonical_rotation(path);
            cert.negative_cycles.push_back({path, csign});
        }
    }
    cert.balanced = cert.negative_cycles.empty();
    if (!cert.balanced) cert.theta.clear();
    return cert;
}

std::optional<SwitchingFunction> switching_equivalent(const SignedGraph& g1,
                                                      const SignedGraph& g2) {
    if (g1.order() != g2.order() || g1.size() != g2.size())
        raise("UnderlyingGraphMismatch", "different order or size");
    for (size_t i = 0; i < g1.edges().size(); ++i)
        if (g1.edges()[i].u != g2.edges()[i].u || g1.edges()[i].v != g2.edges()[i].v)
            raise("UnderlyingGraphMismatch", "edge sets differ");

    // Solve sigma2(uv) = theta(u) sigma1(uv) theta(v) on a BFS tree, then
    // check the non-tree edges.
    int n = g1.order();
    SwitchingFunction theta(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        if (theta[static_cast<size_t>(s)] != 0) continue;
        theta[static_cast<size_t>(s)] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [w, sg1] : g1.neighbors(v)) {
                if (theta[static_cast<size_t>(w)] != 0) continue;
                int sg2 = g2.sign_of(v, w);
                theta[static_cast<size_t>(w)] = theta[static_cast<size_t>(v)] * sg1 * sg2;
                q.push(w);
            }
        }
    }
    for (const auto& e : g1.edges()) {
        int want = g2.sign_of(e.u, e.v);
        if (theta[static_cast<size_t>(e.u)] * e.sign * theta[static_cast<size_t>(e.v)] != want)
            return std::nullopt;
    }
    return theta;
}

SignedGraph normalize_signature(const SignedGraph& g, const BicyclicShape& shape) {
    using detail::Arc;
    using detail::arc_edges;
    using detail::base_arcs;
    if (!g.connected() || g.size() != g.order() + 1)
        raise("NotBicyclic", "need a connected graph with m = n + 1");
    BalanceCertificate cert = is_balanced(g);
    if (cert.balanced) raise("Balanced", "graph has no negative cycle");

    // Work on the base: gather its arcs in original labels.
    std::vector<char> in_base(static_cast<size_t>(g.order()), 0);
    for (int v : shape.base_vertices) in_base[static_cast<size_t>(v)] = 1;
    std::vector<int> drop;
    for (int v = 0; v < g.order(); ++v)
        if (!in_base[static_cast<size_t>(v)]) drop.push_back(v);
    // Base subgraph with original labels preserved via a second graph:
    std::vector<SignedEdge> base_edges;
    for (const auto& e : g.edges())
        if (in_base[static_cast<size_t>(e.u)] && in_base[static_cast<size_t>(e.v)])
            base_edges.push_back(e);
    SignedGraph base_same_labels(g.order(), base_edges);  // isolated non-base vertices
    std::vector<Arc> arcs = base_arcs(base_same_labels);

    std::vector<SignedEdge> neg_edges;  // edges to be negative in the target
    if (shape.type == BicyclicType::Theta) {
        if (arcs.size() != 3) raise("NotBicyclic", "theta base must have three arcs");
        // Exactly two of the three cycles are negative; the negative edge
        // goes on the arc shared by both, i.e. the arc not in the positive
        // cycle. Cycle (i,j) has sign s_i * s_j.
        int neg_arc = -1;
        for (int a = 0; a < 3; ++a) {
            int b = (a + 1) % 3, c = (a + 2) % 3;
            if (arcs[static_cast<size_t>(b)].sign * arcs[static_cast<size_t>(c)].sign > 0 &&
                arcs[static_cast<size_t>(a)].sign * arcs[static_cast<size_t>(b)].sign < 0)
                neg_arc = a;
        }
        if (neg_arc < 0) raise("Balanced", "theta cycles are all positive");
        auto es = arc_edges(g, arcs[static_cast<size_t>(neg_arc)]);
        neg_edges.push_back(*std::min_element(es.begin(), es.end()));
    } else {
        // Infinity / Dumbbell: one negative edge on each negative cycle.
        for (const auto& arc : arcs) {
            if (arc.from != arc.to) continue;  // dumbbell joining path
            if (arc.sign < 0) {
                auto es = arc_edges(g, arc);
                neg_edges.push_back(*std::min_element(es.begin(), es.end()));
            }
        }
        if (neg_edges.empty()) raise("Balanced", "both cycles are positive");
    }

    std::vector<SignedEdge> target = g.edges();
    for (auto& e : target) {
        e.sign = 1;
        for (const auto& ne : neg_edges)
            if (ne.u == e.u && ne.v == e.v) e.sign = -1;
    }
    SignedGraph out(g.order(), std::move(target));
    if (!switching_equivalent(g, out))
        raise("NotBicyclic", "normal form is not switching equivalent to input");
    return out;
}

std::string theta_to_string(const SwitchingFunction& theta) {
    std::string s;
    s.reserve(theta.size());
    for (int t : theta) s.push_back(t > 0 ? '+' : '-');
    return s;
}

SwitchingFunction theta_from_string(const std::string& s) {
    SwitchingFunction t;
    t.reserve(s.size());
    for (char c : s) {
        if (c == '+')
            t.push_back(1);
        else if (c == '-')
            t.push_back(-1);
        else
            raise("FormatError", "theta characters must be '+' or '-'");
    }
    return t;
}

}  // namespace sgs

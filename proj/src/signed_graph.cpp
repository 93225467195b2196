#include "sgs/signed_graph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sgs/error.hpp"

namespace sgs {

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n) {
    if (n < 0) raise("VertexOutOfRange", "negative vertex count");
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            raise("VertexOutOfRange",
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside 0.." + std::to_string(n - 1));
        if (e.u == e.v) raise("SelfLoop", "vertex " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1)
            raise("InvalidSign", "sign must be +1 or -1");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            raise("DuplicateEdge", "(" + std::to_string(edges[i].u) + "," +
                                       std::to_string(edges[i].v) + ")");
    edges_ = std::move(edges);
    adj_.assign(static_cast<size_t>(n_), {});
    for (const auto& e : edges_) {
        adj_[static_cast<size_t>(e.u)].emplace_back(e.v, e.sign);
        adj_[static_cast<size_t>(e.v)].emplace_back(e.u, e.sign);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void SignedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) raise("VertexOutOfRange", "vertex " + std::to_string(v));
}

const std::vector<std::pair<int, int>>& SignedGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

int SignedGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

bool SignedGraph::has_edge(int u, int v) const { return sign_of(u, v) != 0; }

int SignedGraph::sign_of(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(v, -2));
    if (it != nb.end() && it->first == v) return it->second;
    return 0;
}

IntMatrix SignedGraph::adjacency() const {
    IntMatrix m(n_);
    for (const auto& e : edges_) {
        m.at(e.u, e.v) = e.sign;
        m.at(e.v, e.u) = e.sign;
    }
    return m;
}

bool SignedGraph::connected() const { return component_count() <= 1; }

int SignedGraph::component_count() const {
    if (n_ == 0) return 0;
    std::vector<int> seen(static_cast<size_t>(n_), 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        ++comps;
        stack.push_back(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, s2] : adj_[static_cast<size_t>(v)]) {
                (void)s2;
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

int SignedGraph::cycle_rank() const { return size() - n_ + component_count(); }

void SignedGraph::write_sg(std::ostream& os) const {
    os << n_ << ' ' << size() << '\n';
    for (const auto& e : edges_)
        os << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
}

SignedGraph SignedGraph::read_sg(std::istream& is) {
    std::string line;
    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(is, line)) {
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) raise("FormatError", "empty input");
    std::istringstream hs(header);
    long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0)
        raise("FormatError", "expected header 'n m'");

    std::vector<SignedEdge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        std::string el;
        if (!next_content_line(el))
            raise("FormatError", "expected " + std::to_string(m) + " edges, got " +
                                     std::to_string(i));
        std::istringstream es(el);
        long u, v;
        std::string c;
        if (!(es >> u >> v >> c) || (c != "+" && c != "-"))
            raise("FormatError", "bad edge line '" + el + "'");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), c == "+" ? 1 : -1});
    }
    return SignedGraph(static_cast<int>(n), std::move(edges));
}

SignedGraph delete_vertices(const SignedGraph& g, const std::vector<int>& drop,
                            std::vector<int>* old_to_new) {
    std::vector<char> dead(static_cast<size_t>(g.order()), 0);
    for (int v : drop) {
        if (v < 0 || v >= g.order())
            raise("VertexOutOfRange", "vertex " + std::to_string(v));
        dead[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> map(static_cast<size_t>(g.order()), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (!dead[static_cast<size_t>(v)]) map[static_cast<size_t>(v)] = next++;
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges()) {
        int u2 = map[static_cast<size_t>(e.u)], v2 = map[static_cast<size_t>(e.v)];
        if (u2 >= 0 && v2 >= 0) edges.push_back({u2, v2, e.sign});
    }
    if (old_to_new) *old_to_new = map;
    return SignedGraph(next, std::move(edges));
}

std::vector<SignedEdge> cut_edges(const SignedGraph& g) {
    int n = g.order();
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<SignedEdge> bridges;
    int timer = 0;

    // Iterative DFS low-link; parent tracked by the edge we entered on.
    struct Frame {
        int v, parent;
        size_t ei;
    };
    std::vector<Frame> stack;
    for (int s = 0; s < n; ++s) {
        if (disc[static_cast<size_t>(s)] != -1) continue;
        stack.push_back({s, -1, 0});
        disc[static_cast<size_t>(s)] = low[static_cast<size_t>(s)] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.ei < nb.size()) {
                int w = nb[f.ei].first;
                ++f.ei;
                if (w == f.parent) {
                    f.parent = -2;  // skip the tree edge back exactly once
                    continue;
                }
                if (disc[static_cast<size_t>(w)] == -1) {
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back({w, f.v, 0});
                } else {
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[static_cast<size_t>(p)] =
                        std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
                    if (low[static_cast<size_t>(v)] > disc[static_cast<size_t>(p)]) {
                        int u = std::min(p, v), w = std::max(p, v);
                        bridges.push_back({u, w, g.sign_of(u, w)});
                    }
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

namespace {

// Canonical simple-cycle enumeration: grow paths from the smallest cycle
// vertex s using only vertices > s, and accept a closure only when the
// second path vertex is smaller than the last, so each cycle appears once.
void cycles_from(const SignedGraph& g, int s, std::vector<Cycle>& out) {
    std::vector<int> path{s};
    std::vector<char> in_path(static_cast<size_t>(g.order()), 0);
    in_path[static_cast<size_t>(s)] = 1;

    std::function<void()> extend = [&]() {
        int v = path.back();
        for (auto [w, sign] : g.neighbors(v)) {
            (void)sign;
            if (w == s && path.size() >= 3 && path[1] < path.back()) {
                int csign = 1;
                for (size_t i = 0; i + 1 < path.size(); ++i)
                    csign *= g.sign_of(path[i], path[i + 1]);
                csign *= g.sign_of(path.back(), s);
                out.push_back({path, csign});
            } else if (w > s && !in_path[static_cast<size_t>(w)]) {
                path.push_back(w);
                in_path[static_cast<size_t>(w)] = 1;
                extend();
                in_path[static_cast<size_t>(w)] = 0;
                path.pop_back();
            }
        }
    };
    extend();
}

}  // namespace

std::vector<Cycle> simple_cycles(const SignedGraph& g) {
    std::vector<Cycle> out;
    for (int s = 0; s < g.order(); ++s) cycles_from(g, s, out);
    return out;
}

std::vector<Cycle> cycles_through(const SignedGraph& g, int v) {
    if (v < 0 || v >= g.order()) raise("VertexOutOfRange", "vertex " + std::to_string(v));
    std::vector<Cycle> out;
    for (const auto& c : simple_cycles(g))
        if (std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end())
            out.push_back(c);
    return out;
}

}  // namespace sgs

#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace sgs {

// One edge of a signed graph, normalized so u < v. sign is +1 or -1.
struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;

    friend bool operator==(const SignedEdge& a, const SignedEdge& b) {
        return a.u == b.u && a.v == b.v && a.sign == b.sign;
    }
    friend bool operator<(const SignedEdge& a, const SignedEdge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.sign < b.sign;
    }
};

// Small dense symmetric integer matrix with entries in {-1, 0, +1}.
struct IntMatrix {
    int n = 0;
    std::vector<int> a;  // row-major

    explicit IntMatrix(int size = 0) : n(size), a(static_cast<size_t>(size) * size, 0) {}
    int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Simple cycle given as its ordered vertex list (closing edge implied);
// sign is the product of its edge signs.
struct Cycle {
    std::vector<int> vertices;
    int sign = 1;

    int length() const { return static_cast<int>(vertices.size()); }
};

// Immutable signed graph on vertices 0..n-1. Construction validates and
// normalizes the edge list; all queries are const.
class SignedGraph {
public:
    SignedGraph() = default;
    SignedGraph(int n, std::vector<SignedEdge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    // (neighbor, sign) pairs sorted by neighbor index.
    const std::vector<std::pair<int, int>>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    int sign_of(int u, int v) const;  // 0 when the edge is absent

    IntMatrix adjacency() const;
    bool connected() const;
    int component_count() const;
    int cycle_rank() const;  // m - n + number of components

    void write_sg(std::ostream& os) const;
    static SignedGraph read_sg(std::istream& is);

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Induced subgraph on the complement of `drop`, relabeled compactly while
// preserving relative vertex order. When `old_to_new` is given it receives
// a size-n map with -1 for deleted vertices.
SignedGraph delete_vertices(const SignedGraph& g, const std::vector<int>& drop,
                            std::vector<int>* old_to_new = nullptr);

// Bridges of the underlying graph.
std::vector<SignedEdge> cut_edges(const SignedGraph& g);

// All simple cycles (each reported once, smallest vertex first). Intended
// for graphs of small cycle rank.
std::vector<Cycle> simple_cycles(const SignedGraph& g);

// The simple cycles passing through v.
std::vector<Cycle> cycles_through(const SignedGraph& g, int v);

}  // namespace sgs

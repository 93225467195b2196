#include "sgs/bicyclic.hpp"

#include <algorithm>
#include <queue>

#include "arcs.hpp"
#include "bases.hpp"
#include "sgs/catalog.hpp"
#include "sgs/error.hpp"
#include "sgs/spectra.hpp"

namespace sgs {

const char* bicyclic_type_name(BicyclicType t) {
    switch (t) {
        case BicyclicType::Infinity: return "infinity";
        case BicyclicType::Dumbbell: return "dumbbell";
        case BicyclicType::Theta: return "theta";
    }
    return "?";
}

std::pair<SignedGraph, BicyclicShape> base_of(const SignedGraph& g) {
    if (!g.connected() || g.size() != g.order() + 1)
        raise("NotBicyclic", "need a connected graph with m = n + 1");
    int n = g.order();
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        alive[static_cast<size_t>(v)] = 0;
        for (auto [w, s] : g.neighbors(v)) {
            (void)s;
            if (!alive[static_cast<size_t>(w)]) continue;
            if (--deg[static_cast<size_t>(w)] == 1) q.push(w);
        }
    }

    BicyclicShape shape;
    std::vector<int> dropped;
    for (int v = 0; v < n; ++v) {
        if (alive[static_cast<size_t>(v)])
            shape.base_vertices.push_back(v);
        else
            dropped.push_back(v);
    }
    std::vector<SignedEdge> base_edges;
    for (const auto& e : g.edges())
        if (alive[static_cast<size_t>(e.u)] && alive[static_cast<size_t>(e.v)])
            base_edges.push_back(e);
    SignedGraph base_same_labels(n, base_edges);
    auto arcs = detail::base_arcs(base_same_labels);

    std::vector<detail::Arc> loops, links;
    for (auto& a : arcs)
        (a.from == a.to ? loops : links).push_back(a);
    auto by_len_sign = [](const detail::Arc& a, const detail::Arc& b) {
        if (a.length() != b.length()) return a.length() > b.length();
        return a.sign > b.sign;
    };
    if (loops.size() == 2 && links.empty()) {
        shape.type = BicyclicType::Infinity;
        std::sort(loops.begin(), loops.end(), by_len_sign);
        shape.params = {loops[0].length(), loops[1].length(), 0};
        shape.cycle_signs = {loops[0].sign, loops[1].sign};
    } else if (loops.size() == 2 && links.size() == 1) {
        shape.type = BicyclicType::Dumbbell;
        std::sort(loops.begin(), loops.end(), by_len_sign);
        shape.params = {loops[0].length(), links[0].length(), loops[1].length()};
        shape.cycle_signs = {loops[0].sign, loops[1].sign};
    } else if (loops.empty() && links.size() == 3) {
        shape.type = BicyclicType::Theta;
        std::sort(links.begin(), links.end(), by_len_sign);
        shape.params = {links[0].length(), links[1].length(), links[2].length()};
        shape.cycle_signs = {links[0].sign * links[1].sign, links[0].sign * links[2].sign,
                             links[1].sign * links[2].sign};
    } else {
        raise("NotBicyclic", "unexpected base structure");
    }
    return {delete_vertices(g, dropped), shape};
}

namespace {

// Star of `count` pendants at `at`, positive edges.
void add_pendants(std::vector<SignedEdge>& edges, int& next, int at, int count) {
    for (int i = 0; i < count; ++i) edges.push_back({at, next++, 1});
}

}  // namespace

// Frozen from the one-shot polynomial-catalog reconstruction at n = 10 and
// n = 12 (see match_table1): each shape below is the unique unbalanced
// bicyclic class whose exact characteristic polynomial matches row Gi.
SignedGraph construct_family(int which, int n) {
    if (n < 7 || n > 2000) raise("UnsupportedN", "families support 7 <= n <= 2000");
    std::vector<SignedEdge> edges;
    int next = 0;
    switch (which) {
        case 1: {
            // Two triangles sharing vertex 0, one triangle negative, all
            // remaining vertices pendant at 0.
            edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}, {0, 3, 1}, {0, 4, 1}, {3, 4, 1}};
            next = 5;
            add_pendants(edges, next, 0, n - 5);
            break;
        }
        case 2: {
            // Theta base on paths (2,2,1) between anchors 0 and 1, one
            // length-2 path negative, pendants at anchor 0.
            edges = {{0, 1, 1}, {0, 2, -1}, {2, 1, 1}, {0, 3, 1}, {3, 1, 1}};
            next = 4;
            add_pendants(edges, next, 0, n - 4);
            break;
        }
        case 3: {
            // Theta base on paths (2,2,1), the length-1 path negative,
            // pendants at anchor 0.
            edges = {{0, 1, -1}, {0, 2, 1}, {2, 1, 1}, {0, 3, 1}, {3, 1, 1}};
            next = 4;
            add_pendants(edges, next, 0, n - 4);
            break;
        }
        case 4: {
            // Two triangles sharing vertex 0, both triangles negative,
            // pendants at 0.
            edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}, {0, 3, 1}, {0, 4, 1}, {3, 4, -1}};
            next = 5;
            add_pendants(edges, next, 0, n - 5);
            break;
        }
        case 5: {
            // Theta base on paths (2,2,1), one length-2 path negative,
            // pendants at the interior vertex of the positive length-2 path.
            edges = {{0, 1, 1}, {0, 2, 1}, {2, 1, 1}, {0, 3, -1}, {3, 1, 1}};
            next = 4;
            add_pendants(edges, next, 2, n - 4);
            break;
        }
        default:
            raise("UnsupportedN", "family index must be 1..5");
    }
    return SignedGraph(n, std::move(edges));
}

Polynomial f_polynomial(int which, int n) {
    if (n < 5) raise("UnsupportedN", "f polynomials need n >= 5");
    long ln = n;
    switch (which) {
        case 1: return Polynomial{ln - 5, 0, -ln, 0, 1};
        case 2: return Polynomial{2 * ln - 4, 0, -(ln + 1), 0, 1};
        case 3: return Polynomial{2 * ln - 8, 4, -(ln + 1), 0, 1};
        case 4: return Polynomial{5 - ln, 1 - ln, 1, 1};
        case 5: return Polynomial{ln - 4, 2 - ln, -1, 1};
        default: raise("UnsupportedN", "family index must be 1..5");
    }
}

Polynomial family_charpoly_formula(int which, int n) {
    if (which < 1 || which > 5) raise("UnsupportedN", "family index must be 1..5");
    return row_polynomial(catalog_row("G" + std::to_string(which)), n);
}

double family_index(int which, int n) {
    if (n < 7) raise("UnsupportedN", "family index needs n >= 7");
    Polynomial p = f_polynomial(which, n);
    double bound = cauchy_root_bound(p);
    return largest_real_root(p, -bound, bound);
}

}  // namespace sgs

#include "arcs.hpp"

#include <algorithm>

namespace sgs::detail {

std::vector<int> arc_vertices(const Arc& a) {
    std::vector<int> vs{a.from};
    vs.insert(vs.end(), a.interior.begin(), a.interior.end());
    vs.push_back(a.to);
    return vs;
}

std::vector<SignedEdge> arc_edges(const SignedGraph& g, const Arc& a) {
    std::vector<int> vs = arc_vertices(a);
    std::vector<SignedEdge> es;
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        int u = std::min(vs[i], vs[i + 1]), v = std::max(vs[i], vs[i + 1]);
        es.push_back({u, v, g.sign_of(u, v)});
    }
    return es;
}

std::vector<Arc> base_arcs(const SignedGraph& base) {
    std::vector<int> anchors;
    for (int v = 0; v < base.order(); ++v)
        if (base.degree(v) >= 3) anchors.push_back(v);
    std::vector<Arc> arcs;
    std::vector<std::vector<char>> used(static_cast<size_t>(base.order()));
    for (int v = 0; v < base.order(); ++v)
        used[static_cast<size_t>(v)].assign(base.neighbors(v).size(), 0);
    auto mark = [&](int v, int w) {
        const auto& nb = base.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            if (nb[i].first == w) used[static_cast<size_t>(v)][i] = 1;
    };
    auto is_used = [&](int v, int w) {
        const auto& nb = base.neighbors(v);
        for (size_t i = 0; i < nb.size(); ++i)
            if (nb[i].first == w) return used[static_cast<size_t>(v)][i] == 1;
        return true;
    };
    for (int a : anchors) {
        for (auto [w0, s0] : base.neighbors(a)) {
            (void)s0;
            if (is_used(a, w0)) continue;
            Arc arc;
            arc.from = a;
            int prev = a, cur = w0;
            mark(prev, cur);
            int sign = base.sign_of(prev, cur);
            while (base.degree(cur) == 2) {
                arc.interior.push_back(cur);
                const auto& nb = base.neighbors(cur);
                int nxt = (nb[0].first == prev) ? nb[1].first : nb[0].first;
                mark(cur, nxt);
                sign *= base.sign_of(cur, nxt);
                prev = cur;
                cur = nxt;
            }
            mark(cur, prev);
            arc.to = cur;
            arc.sign = sign;
            arcs.push_back(std::move(arc));
        }
    }
    return arcs;
}

}  // namespace sgs::detail

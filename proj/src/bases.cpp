#include "bases.hpp"

#include "sgs/error.hpp"

namespace sgs::detail {

SignedGraph make_infinity_base(int p, int q) {
    if (q < 3 || p < q) raise("NotBicyclic", "infinity base needs p >= q >= 3");
    int n = p + q - 1;
    std::vector<SignedEdge> edges;
    for (int i = 0; i + 1 < p; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({0, p - 1, 1});
    for (int i = p; i + 1 < p + q - 1; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({0, p, 1});
    edges.push_back({0, p + q - 2, 1});
    return SignedGraph(n, std::move(edges));
}

SignedGraph make_dumbbell_base(int p, int l, int q) {
    if (p < 3 || q < 3 || l < 1) raise("NotBicyclic", "dumbbell base needs p,q >= 3, l >= 1");
    int n = p + l + q - 1;
    int a2 = p + l - 1;
    std::vector<SignedEdge> edges;
    for (int i = 0; i + 1 < p; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({0, p - 1, 1});
    for (int i = p - 1; i < a2; ++i)
        edges.push_back({i == p - 1 ? 0 : i, i + 1, 1});
    for (int i = a2; i + 1 < a2 + q; ++i) edges.push_back({i, i + 1, 1});
    edges.push_back({a2, a2 + q - 1, 1});
    return SignedGraph(n, std::move(edges));
}

SignedGraph make_theta_base(int k, int l, int m) {
    if (m < 1 || l < m || k < l) raise("NotBicyclic", "theta base needs k >= l >= m >= 1");
    if (m == 1 && l == 1) raise("NotBicyclic", "at most one path of length 1");
    int n = k + l + m - 1;
    std::vector<SignedEdge> edges;
    int next = 2;
    for (int len : {k, l, m}) {
        if (len == 1) {
            edges.push_back({0, 1, 1});
            continue;
        }
        edges.push_back({0, next, 1});
        for (int i = 0; i + 2 < len; ++i) edges.push_back({next + i, next + i + 1, 1});
        edges.push_back({next + len - 2, 1, 1});
        next += len - 1;
    }
    return SignedGraph(n, std::move(edges));
}

}  // namespace sgs::detail

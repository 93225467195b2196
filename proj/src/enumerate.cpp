#include "sgs/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <queue>
#include <set>

#include "arcs.hpp"
#include "bases.hpp"
#include "sgs/error.hpp"
#include "sgs/rng.hpp"
#include "sgs/spectra.hpp"
#include "sgs/switching.hpp"

namespace sgs {

SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm) {
    std::vector<SignedEdge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges())
        edges.push_back({perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)], e.sign});
    return SignedGraph(g.order(), std::move(edges));
}

namespace {

using detail::Arc;

struct BicyclicDecomp {
    std::vector<char> in_base;
    std::vector<std::string> deco;  // AHU code of the hanging tree, per base vertex
    std::vector<Arc> loops, links;
    std::vector<int> anchors;
};

std::string ahu_code(const SignedGraph& g, const std::vector<char>& in_base, int root) {
    std::function<std::string(int, int)> code = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (auto [w, s] : g.neighbors(v)) {
            (void)s;
            if (w == parent || in_base[static_cast<size_t>(w)]) continue;
            kids.push_back(code(w, v));
        }
        std::sort(kids.begin(), kids.end());
        std::string out = "(";
        for (auto& k : kids) out += k;
        out += ")";
        return out;
    };
    return code(root, -1);
}

BicyclicDecomp decompose(const SignedGraph& g) {
    if (!g.connected() || g.size() != g.order() + 1)
        raise("NotBicyclic", "need a connected graph with m = n + 1");
    int n = g.order();
    BicyclicDecomp d;
    d.in_base.assign(static_cast<size_t>(n), 1);
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) q.push(v);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        d.in_base[static_cast<size_t>(v)] = 0;
        for (auto [w, s] : g.neighbors(v)) {
            (void)s;
            if (!d.in_base[static_cast<size_t>(w)]) continue;
            if (--deg[static_cast<size_t>(w)] == 1) q.push(w);
        }
    }
    d.deco.assign(static_cast<size_t>(n), "");
    std::vector<SignedEdge> base_edges;
    for (const auto& e : g.edges())
        if (d.in_base[static_cast<size_t>(e.u)] && d.in_base[static_cast<size_t>(e.v)])
            base_edges.push_back(e);
    SignedGraph base_same(n, base_edges);
    for (int v = 0; v < n; ++v)
        if (d.in_base[static_cast<size_t>(v)]) d.deco[static_cast<size_t>(v)] = ahu_code(g, d.in_base, v);
    for (auto& a : detail::base_arcs(base_same))
        (a.from == a.to ? d.loops : d.links).push_back(a);
    for (int v = 0; v < n; ++v)
        if (d.in_base[static_cast<size_t>(v)] && base_same.degree(v) >= 3) d.anchors.push_back(v);
    return d;
}

std::string seq_string(const BicyclicDecomp& d, const Arc& a, bool forward) {
    std::string s;
    if (forward) {
        for (int v : a.interior) s += d.deco[static_cast<size_t>(v)] + ",";
    } else {
        for (size_t i = a.interior.size(); i-- > 0;)
            s += d.deco[static_cast<size_t>(a.interior[i])] + ",";
    }
    return s;
}

char sign_char(int s) { return s > 0 ? '+' : '-'; }

}  // namespace

std::string bicyclic_canonical_key(const SignedGraph& g, bool with_signature) {
    BicyclicDecomp d = decompose(g);
    std::string best;
    auto consider = [&](const std::string& s) {
        if (best.empty() || s < best) best = s;
    };

    if (d.anchors.size() == 1 && d.loops.size() == 2 && d.links.empty()) {
        int c = d.anchors[0];
        for (int ord = 0; ord < 2; ++ord) {
            const Arc& A = d.loops[static_cast<size_t>(ord)];
            const Arc& B = d.loops[static_cast<size_t>(1 - ord)];
            for (int da = 0; da < 2; ++da) {
                for (int db = 0; db < 2; ++db) {
                    std::string s = "I;";
                    s += std::to_string(A.length()) + "," + std::to_string(B.length()) + ";";
                    if (with_signature) {
                        s += sign_char(A.sign);
                        s += sign_char(B.sign);
                    }
                    s += ";" + d.deco[static_cast<size_t>(c)] + ";" +
                         seq_string(d, A, da == 0) + ";" + seq_string(d, B, db == 0);
                    consider(s);
                }
            }
        }
    } else if (d.anchors.size() == 2 && d.loops.size() == 2 && d.links.size() == 1) {
        const Arc& L = d.links[0];
        for (int ord = 0; ord < 2; ++ord) {
            const Arc& A = d.loops[static_cast<size_t>(ord)];
            const Arc& B = d.loops[static_cast<size_t>(1 - ord)];
            bool link_fwd = (L.from == A.from);
            for (int da = 0; da < 2; ++da) {
                for (int db = 0; db < 2; ++db) {
                    std::string s = "D;";
                    s += std::to_string(A.length()) + "," + std::to_string(L.length()) + "," +
                         std::to_string(B.length()) + ";";
                    if (with_signature) {
                        s += sign_char(A.sign);
                        s += sign_char(B.sign);
                    }
                    s += ";" + d.deco[static_cast<size_t>(A.from)] + ";" +
                         d.deco[static_cast<size_t>(B.from)] + ";" +
                         seq_string(d, A, da == 0) + ";" + seq_string(d, L, link_fwd) + ";" +
                         seq_string(d, B, db == 0);
                    consider(s);
                }
            }
        }
    } else if (d.anchors.size() == 2 && d.loops.empty() && d.links.size() == 3) {
        int perm[3] = {0, 1, 2};
        std::sort(perm, perm + 3);
        for (int which_anchor = 0; which_anchor < 2; ++which_anchor) {
            int x = d.anchors[static_cast<size_t>(which_anchor)];
            int y = d.anchors[static_cast<size_t>(1 - which_anchor)];
            int p[3] = {0, 1, 2};
            do {
                for (int flip : {1, -1}) {
                    if (flip < 0 && !with_signature) continue;
                    std::string s = "T;";
                    for (int j = 0; j < 3; ++j)
                        s += std::to_string(d.links[static_cast<size_t>(p[j])].length()) +
                             (j < 2 ? "," : ";");
                    if (with_signature)
                        for (int j = 0; j < 3; ++j)
                            s += sign_char(flip * d.links[static_cast<size_t>(p[j])].sign);
                    s += ";" + d.deco[static_cast<size_t>(x)] + ";" +
                         d.deco[static_cast<size_t>(y)];
                    for (int j = 0; j < 3; ++j) {
                        const Arc& a = d.links[static_cast<size_t>(p[j])];
                        s += ";" + seq_string(d, a, a.from == x);
                    }
                    consider(s);
                }
            } while (std::next_permutation(p, p + 3));
        }
    } else {
        raise("NotBicyclic", "unexpected base structure");
    }
    return best;
}

namespace {

bool generic_switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
    int n = g1.order();
    std::vector<int> deg1(static_cast<size_t>(n)), deg2(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        deg1[static_cast<size_t>(v)] = g1.degree(v);
        deg2[static_cast<size_t>(v)] = g2.degree(v);
    }
    {
        auto s1 = deg1, s2 = deg2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return false;
    }
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (deg1[static_cast<size_t>(a)] != deg1[static_cast<size_t>(b)])
            return deg1[static_cast<size_t>(a)] > deg1[static_cast<size_t>(b)];
        return a < b;
    });
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);
    long budget = 5'000'000;

    std::function<bool(int)> place = [&](int i) -> bool {
        if (--budget < 0) raise("TooLarge", "isomorphism search budget exceeded");
        if (i == n) return switching_equivalent(relabel(g1, map), g2).has_value();
        int v = order[static_cast<size_t>(i)];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<size_t>(w)] ||
                deg2[static_cast<size_t>(w)] != deg1[static_cast<size_t>(v)])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                int u = order[static_cast<size_t>(j)];
                ok = g1.has_edge(v, u) == g2.has_edge(w, map[static_cast<size_t>(u)]);
            }
            if (!ok) continue;
            map[static_cast<size_t>(v)] = w;
            used[static_cast<size_t>(w)] = 1;
            if (place(i + 1)) return true;
            used[static_cast<size_t>(w)] = 0;
            map[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return place(0);
}

}  // namespace

bool switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2) {
    if (g1.order() > 40 || g2.order() > 40)
        raise("TooLarge", "switching isomorphism supports n <= 40");
    if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
    bool bc1 = g1.connected() && g1.size() == g1.order() + 1;
    bool bc2 = g2.connected() && g2.size() == g2.order() + 1;
    if (bc1 != bc2) return false;
    if (bc1) return bicyclic_canonical_key(g1) == bicyclic_canonical_key(g2);
    return generic_switching_isomorphic(g1, g2);
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

struct BaseSpec {
    BicyclicType type;
    std::array<int, 3> params;
};

std::vector<BaseSpec> list_bases(int max_order) {
    std::vector<BaseSpec> out;
    for (int q = 3; 2 * q - 1 <= max_order; ++q)
        for (int p = q; p + q - 1 <= max_order; ++p)
            out.push_back({BicyclicType::Infinity, {p, q, 0}});
    for (int q = 3; q <= max_order; ++q)
        for (int p = q; p <= max_order; ++p)
            for (int l = 1; p + q + l - 1 <= max_order; ++l)
                out.push_back({BicyclicType::Dumbbell, {p, l, q}});
    for (int m = 1; m <= max_order; ++m)
        for (int l = std::max(m, m == 1 ? 2 : m); l <= max_order; ++l)
            for (int k = l; k + l + m - 1 <= max_order; ++k)
                out.push_back({BicyclicType::Theta, {k, l, m}});
    return out;
}

SignedGraph build_base(const BaseSpec& b) {
    switch (b.type) {
        case BicyclicType::Infinity:
            return detail::make_infinity_base(b.params[0], b.params[1]);
        case BicyclicType::Dumbbell:
            return detail::make_dumbbell_base(b.params[0], b.params[1], b.params[2]);
        case BicyclicType::Theta:
            return detail::make_theta_base(b.params[0], b.params[1], b.params[2]);
    }
    raise("NotBicyclic", "unknown base type");
}

SignedGraph with_pendant(const SignedGraph& g, int at) {
    std::vector<SignedEdge> edges = g.edges();
    edges.push_back({at, g.order(), 1});
    return SignedGraph(g.order() + 1, std::move(edges));
}

// The <= 3 unbalanced switching classes of an underlying bicyclic graph,
// built by flipping the smallest edge of the designated cycles/arcs.
std::vector<SignedGraph> unbalanced_signatures(const SignedGraph& g) {
    BicyclicDecomp d = decompose(g);
    std::vector<SignedEdge> plus = g.edges();
    for (auto& e : plus) e.sign = 1;
    SignedGraph base_pos(g.order(), plus);

    auto flipped = [&](std::vector<const Arc*> arcs) {
        std::vector<SignedEdge> edges = plus;
        for (const Arc* a : arcs) {
            auto es = detail::arc_edges(base_pos, *a);
            auto mn = *std::min_element(es.begin(), es.end());
            for (auto& e : edges)
                if (e.u == mn.u && e.v == mn.v) e.sign = -1;
        }
        return SignedGraph(g.order(), std::move(edges));
    };

    std::vector<SignedGraph> out;
    if (d.links.size() == 3) {
        for (int j = 0; j < 3; ++j) out.push_back(flipped({&d.links[static_cast<size_t>(j)]}));
    } else {
        out.push_back(flipped({&d.loops[0]}));
        out.push_back(flipped({&d.loops[1]}));
        out.push_back(flipped({&d.loops[0], &d.loops[1]}));
    }
    return out;
}

struct GenResult {
    std::vector<SignedGraph> reps;  // sorted by canonical key
    long underlying = 0;
    long count_by_type[3] = {0, 0, 0};
};

GenResult generate_all(int n, bool parallel) {
    if (n < 5 || n > 9) raise("TooLarge", "enumeration supports 5 <= n <= 9");
    std::vector<BaseSpec> bases = list_bases(n);
    std::vector<std::map<std::string, SignedGraph>> per_base(bases.size());
    std::vector<long> per_base_underlying(bases.size(), 0);

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long bi = 0; bi < static_cast<long long>(bases.size()); ++bi) {
        SignedGraph base = build_base(bases[static_cast<size_t>(bi)]);
        std::map<std::string, SignedGraph> level;
        level.emplace(bicyclic_canonical_key(base, false), base);
        for (int sz = base.order(); sz < n; ++sz) {
            std::map<std::string, SignedGraph> next;
            for (const auto& [key, g] : level) {
                (void)key;
                for (int at = 0; at < g.order(); ++at) {
                    SignedGraph g2 = with_pendant(g, at);
                    next.emplace(bicyclic_canonical_key(g2, false), g2);
                }
            }
            level = std::move(next);
        }
        per_base_underlying[static_cast<size_t>(bi)] = static_cast<long>(level.size());
        auto& classes = per_base[static_cast<size_t>(bi)];
        for (const auto& [ukey, g] : level) {
            (void)ukey;
            for (const auto& sg : unbalanced_signatures(g))
                classes.emplace(bicyclic_canonical_key(sg, true), sg);
        }
    }

    GenResult res;
    std::map<std::string, SignedGraph> all;
    for (size_t bi = 0; bi < bases.size(); ++bi) {
        res.underlying += per_base_underlying[bi];
        res.count_by_type[static_cast<int>(bases[bi].type)] +=
            static_cast<long>(per_base[bi].size());
        for (auto& [k, g] : per_base[bi]) all.emplace(k, g);
    }
    res.reps.reserve(all.size());
    for (auto& [k, g] : all) {
        (void)k;
        res.reps.push_back(g);
    }
    return res;
}

}  // namespace

std::vector<SignedGraph> all_unbalanced_bicyclic(int n, bool parallel) {
    return generate_all(n, parallel).reps;
}

std::vector<SignedGraph> all_unbalanced_bicyclic_raw(int n) {
    if (n < 5 || n > 6) raise("TooLarge", "raw enumeration supports n = 5, 6");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int m = n + 1;
    std::vector<char> pick(pairs.size(), 0);
    std::fill(pick.begin(), pick.begin() + m, 1);
    std::map<std::string, SignedGraph> classes;
    do {
        std::vector<SignedEdge> edges;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pick[i]) edges.push_back({pairs[i].first, pairs[i].second, 1});
        SignedGraph g(n, edges);
        if (!g.connected()) continue;
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<SignedEdge> se = edges;
            for (int b = 0; b < m; ++b)
                if (mask & (1 << b)) se[static_cast<size_t>(b)].sign = -1;
            SignedGraph sg(n, se);
            if (is_balanced(sg).balanced) continue;
            classes.emplace(bicyclic_canonical_key(sg, true), sg);
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::vector<SignedGraph> out;
    out.reserve(classes.size());
    for (auto& [k, g] : classes) {
        (void)k;
        out.push_back(g);
    }
    return out;
}

EnumerationReport enumerate_unbalanced_bicyclic(int n, int top_k, bool parallel) {
    auto t0 = std::chrono::steady_clock::now();
    GenResult gen = generate_all(n, parallel);
    std::vector<double> lams = batch_index(gen.reps, parallel);

    EnumerationReport rep;
    rep.n = n;
    rep.underlying_graphs = gen.underlying;
    rep.signed_classes = static_cast<long>(gen.reps.size());
    rep.count_infinity = gen.count_by_type[static_cast<int>(BicyclicType::Infinity)];
    rep.count_dumbbell = gen.count_by_type[static_cast<int>(BicyclicType::Dumbbell)];
    rep.count_theta = gen.count_by_type[static_cast<int>(BicyclicType::Theta)];

    std::vector<size_t> idx(gen.reps.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::string> keys(gen.reps.size());
    for (size_t i = 0; i < keys.size(); ++i) keys[i] = bicyclic_canonical_key(gen.reps[i]);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (lams[a] != lams[b]) return lams[a] > lams[b];
        return keys[a] < keys[b];
    });
    for (size_t r = 0; r < idx.size() && r < static_cast<size_t>(top_k); ++r)
        rep.top.push_back({gen.reps[idx[r]], lams[idx[r]], keys[idx[r]]});
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Ordering and exclusion verification
// ---------------------------------------------------------------------------

OrderingReport verify_ordering(int n_lo, int n_hi, bool parallel) {
    if (n_lo < 36 || n_hi < n_lo || n_hi > 2000)
        raise("UnsupportedN", "require 36 <= n_lo <= n_hi <= 2000");
    OrderingReport rep;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    rep.lambdas.assign(static_cast<size_t>(n_hi - n_lo + 1), {});
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long n = n_lo; n <= n_hi; ++n)
        for (int i = 1; i <= 5; ++i)
            rep.lambdas[static_cast<size_t>(n - n_lo)][static_cast<size_t>(i - 1)] =
                family_index(i, static_cast<int>(n));
    for (int n = n_lo; n <= n_hi; ++n) {
        const auto& l = rep.lambdas[static_cast<size_t>(n - n_lo)];
        for (int i = 0; i < 4; ++i)
            if (!(l[static_cast<size_t>(i)] > l[static_cast<size_t>(i + 1)] + 1e-9))
                raise("OrderingViolated", "chain fails at n = " + std::to_string(n) +
                                              " between positions " + std::to_string(i + 1) +
                                              " and " + std::to_string(i + 2));
    }
    for (int n = 7; n <= n_hi; ++n) {
        bool ok = true;
        for (int i = 1; i < 5 && ok; ++i)
            ok = family_index(i, n) > family_index(i + 1, n) + 1e-9;
        if (ok) {
            rep.first_chain_n = n;
            break;
        }
    }
    return rep;
}

ExclusionReport verify_exclusions(int n, long samples, std::uint64_t seed, bool parallel) {
    if (n < 7 || n > 40) raise("UnsupportedN", "exclusion sampling supports 7 <= n <= 40");
    ExclusionReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.lambda5 = family_index(5, n);
    std::vector<std::string> family_keys;
    for (int i = 1; i <= 5; ++i)
        family_keys.push_back(bicyclic_canonical_key(construct_family(i, n)));

    long skipped = 0, dumbbell = 0;
    double max_out = -1e300;
    long long violation_at = -1;

#pragma omp parallel for schedule(dynamic) reduction(+ : skipped, dumbbell) \
    reduction(max : max_out) if (parallel)
    for (long long i = 0; i < samples; ++i) {
        Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
        SignedGraph g = random_unbalanced_bicyclic(rng, n);
        std::string key = bicyclic_canonical_key(g);
        bool family = false;
        for (const auto& fk : family_keys) family = family || fk == key;
        if (family) {
            ++skipped;
            continue;
        }
        BicyclicDecomp d = decompose(g);
        if (d.loops.size() == 2 && d.links.size() == 1) ++dumbbell;
        double lam = eigen_sym_values(g.adjacency())[0];
        max_out = std::max(max_out, lam);
        if (lam >= rep.lambda5 - 1e-9) {
#pragma omp critical
            {
                if (violation_at < 0 || i < violation_at) violation_at = i;
            }
        }
    }
    if (violation_at >= 0)
        raise("ExclusionViolated",
              "sample " + std::to_string(violation_at) + " reaches lambda5 at n = " +
                  std::to_string(n) + " (seed " + std::to_string(seed) + ")");
    rep.skipped_family = skipped;
    rep.dumbbell_samples = dumbbell;
    rep.max_lambda_outside = max_out;
    return rep;
}

// ---------------------------------------------------------------------------
// Catalog reconstruction
// ---------------------------------------------------------------------------

namespace {

struct TreeShape {
    std::vector<TreeShape> kids;
    int size = 1;  // vertices including the root of this subtree
};

// All rooted trees on `extra` non-root vertices with depth <= depth.
std::vector<TreeShape> shapes_on(int extra, int depth);

void partitions_rec(int left, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(left - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<TreeShape> shapes_on(int extra, int depth) {
    if (extra == 0) return {TreeShape{}};
    if (depth <= 0) return {};
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_rec(extra, extra, cur, parts);
    std::vector<TreeShape> out;
    for (const auto& part : parts) {
        // cartesian product of child options over the parts
        std::vector<std::vector<TreeShape>> opts;
        bool feasible = true;
        for (int p : part) {
            auto o = shapes_on(p - 1, depth - 1);
            if (o.empty()) {
                feasible = false;
                break;
            }
            opts.push_back(std::move(o));
        }
        if (!feasible) continue;
        std::vector<size_t> pick(part.size(), 0);
        while (true) {
            TreeShape t;
            t.size = 1 + extra;
            for (size_t j = 0; j < part.size(); ++j) {
                TreeShape kid = opts[j][pick[j]];
                kid.size = part[j];
                t.kids.push_back(std::move(kid));
            }
            out.push_back(std::move(t));
            size_t j = 0;
            while (j < pick.size() && ++pick[j] == opts[j].size()) pick[j++] = 0;
            if (j == pick.size()) break;
        }
    }
    return out;
}

void attach_shape(std::vector<SignedEdge>& edges, int& next, int root, const TreeShape& t) {
    for (const auto& kid : t.kids) {
        int v = next++;
        edges.push_back({root, v, 1});
        attach_shape(edges, next, v, kid);
    }
}

}  // namespace

CatalogMatchReport match_table1(int n, bool widen, bool parallel) {
    if (n < 8 || n > 12) raise("UnsupportedN", "catalog matching supports 8 <= n <= 12");
    int depth = widen ? 3 : 2;
    int max_spots = widen ? 3 : 2;

    std::map<std::string, SignedGraph> cands;
    auto add_candidate = [&](const SignedGraph& g) {
        for (const auto& sg : unbalanced_signatures(g))
            cands.emplace(bicyclic_canonical_key(sg, true), sg);
    };

    for (const BaseSpec& bs : list_bases(std::min(8, n))) {
        SignedGraph base = build_base(bs);
        int b = base.order();
        int extra = n - b;
        if (extra < 0) continue;
        if (extra == 0) {
            add_candidate(base);
            continue;
        }
        // choose up to max_spots base vertices and a tree shape on each
        std::vector<int> spots;
        std::function<void(int, int)> choose = [&](int from, int left) {
            if (!spots.empty()) {
                // distribute `left` extras among the chosen spots (all > 0
                // except possibly implicit when fewer spots are used)
                std::vector<int> loads(spots.size(), 0);
                std::function<void(size_t, int)> split = [&](size_t j, int rem) {
                    if (j + 1 == loads.size()) {
                        loads[j] = rem;
                        if (rem < 1) return;
                        // build every combination of shapes for these loads
                        std::vector<std::vector<TreeShape>> opts;
                        for (size_t t = 0; t < spots.size(); ++t)
                            opts.push_back(shapes_on(loads[t], depth));
                        std::vector<size_t> pick(spots.size(), 0);
                        bool any = true;
                        for (auto& o : opts) any = any && !o.empty();
                        if (!any) return;
                        while (true) {
                            std::vector<SignedEdge> edges = base.edges();
                            int next = b;
                            for (size_t t = 0; t < spots.size(); ++t)
                                attach_shape(edges, next, spots[t], opts[t][pick[t]]);
                            add_candidate(SignedGraph(n, std::move(edges)));
                            size_t j2 = 0;
                            while (j2 < pick.size() && ++pick[j2] == opts[j2].size())
                                pick[j2++] = 0;
                            if (j2 == pick.size()) break;
                        }
                        return;
                    }
                    for (int take = 1; take <= rem - static_cast<int>(loads.size() - j - 1);
                         ++take) {
                        loads[j] = take;
                        split(j + 1, rem - take);
                    }
                };
                split(0, left);
            }
            if (static_cast<int>(spots.size()) >= max_spots) return;
            for (int v = from; v < b; ++v) {
                spots.push_back(v);
                choose(v + 1, left);
                spots.pop_back();
            }
        };
        choose(0, extra);
    }

    // exact characteristic polynomial per candidate class
    std::vector<const SignedGraph*> list;
    std::vector<std::string> keys;
    for (auto& [k, g] : cands) {
        keys.push_back(k);
        list.push_back(&g);
    }
    std::vector<std::string> polys(list.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < static_cast<long long>(list.size()); ++i)
        polys[static_cast<size_t>(i)] =
            charpoly_exact(*list[static_cast<size_t>(i)]).to_coeff_line();

    std::map<std::string, std::vector<size_t>> by_poly;
    for (size_t i = 0; i < polys.size(); ++i) by_poly[polys[i]].push_back(i);

    CatalogMatchReport rep;
    rep.n = n;
    rep.widened = widen;
    rep.candidates = static_cast<long>(list.size());
    for (const auto& row : polynomial_catalog()) {
        RowMatch m;
        m.label = row.label;
        if (row.min_n <= n) {
            std::string target = row_polynomial(row, n).to_coeff_line();
            auto it = by_poly.find(target);
            if (it != by_poly.end()) {
                for (size_t i : it->second) {
                    m.keys.push_back(keys[i]);
                    m.examples.push_back(*list[i]);
                }
                m.match_count = static_cast<int>(it->second.size());
            }
        }
        rep.rows.push_back(std::move(m));
    }
    return rep;
}

}  // namespace sgs

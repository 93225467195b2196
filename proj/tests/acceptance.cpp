// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Tolerances and budgets are pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sgs/bicyclic.hpp"
#include "sgs/catalog.hpp"
#include "sgs/enumerate.hpp"
#include "sgs/error.hpp"
#include "sgs/perturb.hpp"
#include "sgs/rng.hpp"
#include "sgs/spectra.hpp"
#include "sgs/switching.hpp"

using namespace sgs;

namespace {

int failures = 0;

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void report(int id, const std::string& name, bool ok, double secs, double budget,
            const std::string& detail) {
    bool in_budget = budget <= 0 || secs < budget;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  criterion %2d: %s (%.2fs%s)%s%s\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), secs,
                budget > 0 ? (" / budget " + std::to_string(static_cast<int>(budget)) + "s").c_str()
                           : "",
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

double top(const SignedGraph& g) { return eigen_sym_values(g.adjacency())[0]; }

// ---------------------------------------------------------------- 1
void criterion1() {
    double t0 = now();
    bool ok = true;
    for (int n : {10, 12})
        for (int i = 1; i <= 5; ++i)
            ok = ok && charpoly_exact(construct_family(i, n)) == family_charpoly_formula(i, n);
    report(1, "frozen constructors reproduce the catalog rows exactly at n in {10,12}", ok,
           now() - t0, 1.0, "");
}

// ---------------------------------------------------------------- 2
void criterion2() {
    double t0 = now();
    bool ok = true;
    std::string detail;
    try {
        verify_ordering(36, 200);  // throws on any chain violation (margin 1e-9)
    } catch (const SgError& e) {
        ok = false;
        detail = e.what();
    }
    double max_diff = 0.0;
#pragma omp parallel for schedule(dynamic) reduction(max : max_diff)
    for (int n = 36; n <= 200; ++n)
        for (int i = 1; i <= 5; ++i)
            max_diff = std::max(max_diff,
                                std::fabs(family_index(i, n) - top(construct_family(i, n))));
    if (max_diff > 1e-8) {
        ok = false;
        detail += " root/eigensolver gap " + std::to_string(max_diff);
    }
    report(2, "strict index chain on [36,200]; root finder matches eigensolver to 1e-8", ok,
           now() - t0, 30.0, detail.empty() ? "max gap " + std::to_string(max_diff) : detail);
}

// ---------------------------------------------------------------- 3
void criterion3() {
    double t0 = now();
    bool ok = true;
    for (int n = 7; n <= 60 && ok; ++n) {
        Polynomial p1 = family_charpoly_formula(1, n), p2 = family_charpoly_formula(2, n);
        Polynomial p3 = family_charpoly_formula(3, n), p4 = family_charpoly_formula(4, n);
        Polynomial p5 = family_charpoly_formula(5, n);
        ok = ok && p2 - p1 == (Polynomial{n - 5, 0, 1}).times_power(n - 6);
        ok = ok && p3 - p2 == (Polynomial{-4, 4}).times_power(n - 4);
        ok = ok && p4 - p3 == (Polynomial{5 - n, -4, 3}).times_power(n - 6);
        // factored forms recombined from the low-degree f_i
        Polynomial xm1{-1, 1}, xp1{1, 1}, xp2{2, 1};
        ok = ok && p1 == (Polynomial{-1, 0, 1} * f_polynomial(1, n)).times_power(n - 6);
        ok = ok && p2 == f_polynomial(2, n).times_power(n - 4);
        ok = ok && p3 == f_polynomial(3, n).times_power(n - 4);
        ok = ok && p4 == (xp1 * xm1 * xm1 * f_polynomial(4, n)).times_power(n - 6);
        ok = ok && p5 == (xp2 * xm1 * f_polynomial(5, n)).times_power(n - 5);
    }
    report(3, "difference identities and factored forms exact for n in [7,60]", ok, now() - t0,
           0, "");
}

// ---------------------------------------------------------------- 4
void criterion4() {
    double t0 = now();
    bool ok = true;
    std::string detail;
    for (int n = 36; n <= 500 && ok; ++n) {
        Polynomial f5 = f_polynomial(5, n), f4 = f_polynomial(4, n);
        double r5 = largest_real_root(f5, 0, cauchy_root_bound(f5));
        double bound = (1 + std::sqrt(16.0 * n - 71)) / 4;
        if (!(bound - r5 > 1e-9)) {
            ok = false;
            detail = "root bound fails at n=" + std::to_string(n);
        }
        if (!(f4.eval_double(r5) < -1e-9)) {
            ok = false;
            detail = "f4 sign fails at n=" + std::to_string(n);
        }
        Polynomial g = f4 - f5;
        if (g != Polynomial{9 - 2 * n, -1, 2}) {
            ok = false;
            detail = "difference polynomial mismatch at n=" + std::to_string(n);
        }
        if (std::fabs(g.eval_double(bound)) > 1e-9 * (2.0 * n) || !(4 * bound - 1 > 0)) {
            ok = false;
            detail = "closed-form root of f4-f5 fails at n=" + std::to_string(n);
        }
    }
    report(4, "f5 root below (1+sqrt(16n-71))/4 and f4 negative there for n in [36,500]", ok,
           now() - t0, 0, detail);
}

// ---------------------------------------------------------------- 5
void criterion5() {
    double t0 = now();
    long violations = 0;
    long cut_checks = 0, reloc_checks = 0, strict_checks = 0, alpha_cut_checks = 0,
         alpha_weak = 0, alpha_strict = 0;
    const int graphs = 1200;
    Rng seedgen(20260808);

    for (int t = 0; t < graphs; ++t) {
        Rng rng(1000003ULL * static_cast<std::uint64_t>(t) + 17);
        int n = 4 + rng.below(7);
        SignedGraph g = random_connected_signed(rng, n, rng.below(3));
        IndexResult ir;
        bool simple = true;
        try {
            ir = index_of(g);
            simple = !ir.multiple;
        } catch (const SgError&) {
            continue;
        }
        auto bridges = cut_edges(g);
        double lam = top(g);

        if (simple) {
            for (const auto& e : bridges) {
                ++cut_checks;
                if (!check_cut_edge_sign(g, e.u, e.v)) ++violations;
            }
            // relocation of cut edges under the sign-ordered hypothesis
            for (int rep = 0; rep < 4; ++rep) {
                int u = rng.below(n), v = rng.below(n);
                if (u == v) continue;
                double xu = ir.vec[static_cast<size_t>(u)], xv = ir.vec[static_cast<size_t>(v)];
                if (!((xu >= xv && xv >= 0) || (xu <= xv && xv <= 0))) continue;
                std::vector<int> targets;
                for (const auto& b : bridges) {
                    int w = (b.u == v) ? b.v : (b.v == v ? b.u : -1);
                    if (w >= 0 && w != u && !g.has_edge(u, w)) targets.push_back(w);
                }
                if (targets.empty()) continue;
                ++reloc_checks;
                if (!(top(relocate_edges(g, u, v, targets)) >= lam - 1e-9)) ++violations;
            }
            // pendant relocation, strict hypothesis with a clear margin
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    double xu = ir.vec[static_cast<size_t>(u)],
                           xv = ir.vec[static_cast<size_t>(v)];
                    bool strict = (xu > xv + 1e-6 && xv > 1e-6) || (xu < xv - 1e-6 && xv < -1e-6);
                    if (!strict) continue;
                    std::vector<int> targets;
                    for (auto [w, s] : g.neighbors(v)) {
                        (void)s;
                        if (g.degree(w) == 1 && w != u && !g.has_edge(u, w)) targets.push_back(w);
                    }
                    if (targets.empty()) continue;
                    ++strict_checks;
                    SignedGraph g2 = relocate_edges(g, u, v, targets);
                    double la = top(g2), lb = lam;
                    if (la <= lb + 1e-9) {
                        lb = eigen_sym_jacobi(g.adjacency()).values[0];
                        la = eigen_sym_jacobi(g2.adjacency()).values[0];
                    }
                    if (!(la > lb + 1e-9)) ++violations;
                }
            }
        }
        // alpha on cut edges, no eigenvector conditions, both directions
        for (const auto& e : bridges) {
            if (g.degree(e.u) < 2 || g.degree(e.v) < 2) continue;
            ++alpha_cut_checks;
            if (!(top(alpha_transform(g, e.u, e.v)) >= lam - 1e-9)) ++violations;
            if (!(top(alpha_transform(g, e.v, e.u)) >= lam - 1e-9)) ++violations;
        }
        // alpha under the checked hypotheses
        for (const auto& e : g.edges()) {
            if (g.degree(e.u) < 2 || g.degree(e.v) < 2) continue;
            bool tri = false;
            for (auto [w, s] : g.neighbors(e.u)) {
                (void)s;
                tri = tri || (w != e.v && g.has_edge(e.v, w));
            }
            if (tri) continue;
            AlphaCase c;
            try {
                c = check_alpha_hypotheses(g, e.u, e.v);
            } catch (const SgError&) {
                continue;
            }
            if (c == AlphaCase::None) continue;
            double la = top(alpha_transform(g, e.u, e.v));
            if (c == AlphaCase::Weak1 || c == AlphaCase::Weak2) {
                ++alpha_weak;
                if (!(la >= lam - 1e-9)) ++violations;
            } else {
                ++alpha_strict;
                double lb = lam;
                if (la <= lb + 1e-9) {
                    lb = eigen_sym_jacobi(g.adjacency()).values[0];
                    la = eigen_sym_jacobi(alpha_transform(g, e.u, e.v).adjacency()).values[0];
                }
                if (!(la > lb + 1e-9)) ++violations;
            }
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "graphs=%d cut=%ld reloc=%ld strict=%ld alpha-cut=%ld weak=%ld "
                  "alpha-strict=%ld violations=%ld",
                  graphs, cut_checks, reloc_checks, strict_checks, alpha_cut_checks, alpha_weak,
                  alpha_strict, violations);
    bool covered = cut_checks > 1000 && reloc_checks > 100 && strict_checks > 100 &&
                   alpha_cut_checks > 500 && alpha_weak > 100 && alpha_strict > 100;
    report(5, "perturbation contracts hold over seeded random graphs, n <= 10",
           violations == 0 && covered, now() - t0, 60.0, buf);
}

// ---------------------------------------------------------------- 6
void criterion6() {
    double t0 = now();
    long violations = 0;
    for (int t = 0; t < 500; ++t) {
        Rng rng(777ULL + 31ULL * static_cast<std::uint64_t>(t));
        int n = 2 + rng.below(11);
        SignedGraph g = random_connected_signed(rng, n, rng.below(4));
        auto lam = eigen_sym_values(g.adjacency());
        for (int v = 0; v < n && n > 1; ++v) {
            auto mu = eigen_sym_values(delete_vertices(g, {v}).adjacency());
            for (int i = 0; i + 1 <= n - 1; ++i) {
                if (!(lam[static_cast<size_t>(i)] >= mu[static_cast<size_t>(i)] - 1e-9))
                    ++violations;
                if (!(mu[static_cast<size_t>(i)] >= lam[static_cast<size_t>(i) + 1] - 1e-9))
                    ++violations;
            }
        }
    }
    report(6, "interlacing after every vertex deletion, 500 random graphs, n <= 12",
           violations == 0, now() - t0, 0, "violations=" + std::to_string(violations));
}

// ---------------------------------------------------------------- 7
void criterion7() {
    double t0 = now();
    bool ok = true;
    long checked = 0;
    for (int n = 5; n <= 8; ++n) {
        auto reps = all_unbalanced_bicyclic(n);
        std::vector<char> good(reps.size(), 1);
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(reps.size()); ++i) {
            const auto& g = reps[static_cast<size_t>(i)];
            if (!(charpoly_schwenk(g, 0) == charpoly_exact(g)))
                good[static_cast<size_t>(i)] = 0;
        }
        for (char c : good) ok = ok && c;
        checked += static_cast<long>(reps.size());
    }
    for (int n = 7; n <= 20; ++n)
        for (int i = 1; i <= 5; ++i) {
            SignedGraph g = construct_family(i, n);
            ok = ok && charpoly_schwenk(g, 0) == charpoly_exact(g);
            ++checked;
        }
    report(7, "vertex recursion equals Faddeev-LeVerrier on the whole corpus", ok, now() - t0,
           0, "graphs=" + std::to_string(checked));
}

// ---------------------------------------------------------------- 8
void criterion8() {
    double t0 = now();
    bool ok = true;
    std::string detail;

    for (int n : {5, 6}) {
        auto a = all_unbalanced_bicyclic(n);
        auto b = all_unbalanced_bicyclic_raw(n);
        std::set<std::string> ka, kb;
        for (const auto& g : a) ka.insert(bicyclic_canonical_key(g));
        for (const auto& g : b) kb.insert(bicyclic_canonical_key(g));
        if (ka != kb) {
            ok = false;
            detail += " double-enumeration mismatch at n=" + std::to_string(n);
        }
    }

    // base reductions: every non-minimal base is beaten by a smaller base
    for (int n = 5; n <= 8; ++n) {
        auto reps = all_unbalanced_bicyclic(n);
        std::vector<std::pair<int, double>> inf, theta;  // (base order, lambda)
        for (const auto& g : reps) {
            auto [bs, shape] = base_of(g);
            double lam = top(g);
            if (shape.type == BicyclicType::Infinity)
                inf.emplace_back(static_cast<int>(shape.base_vertices.size()), lam);
            else if (shape.type == BicyclicType::Theta)
                theta.emplace_back(static_cast<int>(shape.base_vertices.size()), lam);
        }
        auto reduction_gap = [](std::vector<std::pair<int, double>>& v, int min_base) {
            double worst = 0.0;  // most positive excess of a larger-base graph
            for (const auto& [b, lam] : v) {
                if (b <= min_base) continue;
                double best_smaller = -1e300;
                for (const auto& [b2, lam2] : v)
                    if (b2 < b) best_smaller = std::max(best_smaller, lam2);
                worst = std::max(worst, lam - best_smaller);
            }
            return worst;
        };
        double gi = reduction_gap(inf, 5), gt = reduction_gap(theta, 4);
        if (gi > 1e-9) {
            ok = false;
            detail += " infinity base reduction fails at n=" + std::to_string(n) +
                      " by " + std::to_string(gi);
        }
        if (gt > 1e-9) {
            ok = false;
            detail += " theta base reduction fails at n=" + std::to_string(n) + " by " +
                      std::to_string(gt);
        }
    }

    // top class at the largest exhaustible order: reported, not asserted
    EnumerationReport rep = enumerate_unbalanced_bicyclic(8, 1);
    std::set<std::string> fam;
    for (int i = 1; i <= 5; ++i) fam.insert(bicyclic_canonical_key(construct_family(i, 8)));
    bool in_family = !rep.top.empty() && fam.count(rep.top[0].key) > 0;
    detail += std::string(" top class at n=8 ") +
              (in_family ? "is one of the five families" : "is outside the five families") +
              " (threshold n >= 36; informational)";

    report(8, "double enumeration agrees; base reductions hold exhaustively to n = 8", ok,
           now() - t0, 0, detail);
}

// ---------------------------------------------------------------- 9
void criterion9() {
    double t0 = now();
    bool ok = true;
    std::string detail;
    try {
        ExclusionReport rep = verify_exclusions(36, 10000, 20260808ULL);
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "samples=%ld skipped-family=%ld dumbbell=%ld max-outside=%.6f lambda5=%.6f",
                      rep.samples, rep.skipped_family, rep.dumbbell_samples,
                      rep.max_lambda_outside, rep.lambda5);
        detail = buf;
    } catch (const SgError& e) {
        ok = false;
        detail = e.what();
    }
    // a disguised family member must be recognized and skipped
    Rng rng(99);
    for (int i = 1; i <= 5 && ok; ++i) {
        SignedGraph fam = construct_family(i, 36);
        SwitchingFunction theta(36);
        for (auto& x : theta) x = rng.sign();
        std::vector<int> perm(36);
        for (int v = 0; v < 36; ++v) perm[static_cast<size_t>(v)] = v;
        for (int v = 35; v > 0; --v)
            std::swap(perm[static_cast<size_t>(v)], perm[static_cast<size_t>(rng.below(v + 1))]);
        SignedGraph disguised = relabel(switch_graph(fam, theta), perm);
        ok = ok && bicyclic_canonical_key(disguised) == bicyclic_canonical_key(fam);
    }
    report(9, "10^4 sampled non-family graphs stay below lambda(G5) at n = 36", ok, now() - t0,
           300.0, detail);
}

// ---------------------------------------------------------------- 10
void criterion10() {
    double t0 = now();
    long poly_bad = 0, spectrum_bad = 0;
    for (int t = 0; t < 1000; ++t) {
        Rng rng(4242ULL + 101ULL * static_cast<std::uint64_t>(t));
        int n = 2 + rng.below(11);
        SignedGraph g = random_connected_signed(rng, n, rng.below(4));
        SwitchingFunction theta(static_cast<size_t>(n));
        for (auto& x : theta) x = rng.sign();
        SignedGraph h = switch_graph(g, theta);
        if (!(charpoly_exact(g) == charpoly_exact(h))) ++poly_bad;
        auto sg = eigen_sym_values(g.adjacency()), sh = eigen_sym_values(h.adjacency());
        for (size_t i = 0; i < sg.size(); ++i)
            if (std::fabs(sg[i] - sh[i]) > 1e-10) ++spectrum_bad;
    }
    report(10, "switching leaves charpoly exactly and spectra within 1e-10, 10^3 pairs",
           poly_bad == 0 && spectrum_bad == 0, now() - t0, 0,
           "poly-mismatch=" + std::to_string(poly_bad) +
               " spectrum-mismatch=" + std::to_string(spectrum_bad));
}

}  // namespace

int main() {
    double t0 = now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("acceptance: %d/10 passed (%.1fs total)\n", 10 - failures, now() - t0);
    return failures;
}

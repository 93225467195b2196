#include "sgs/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "sgs/error.hpp"

namespace sgs {

namespace {

constexpr double kJacobiTol = 1e-10;
constexpr double kMultipleTol = 1e-8;

// Householder reduction to tridiagonal form, optionally accumulating the
// orthogonal transform in `a` (classic tred2, zero-indexed).
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e, bool accumulate) {
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    A(j, i) = A(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    if (!accumulate) {
        for (int i = 0; i < n; ++i) d[i] = A(i, i);
        return;
    }
    for (int i = 0; i < n; ++i) {
        int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
                for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
            }
        }
        d[i] = A(i, i);
        A(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) A(j, i) = A(i, j) = 0.0;
    }
}

// Implicit-shift QL on the tridiagonal (d, e); rotations applied to the
// columns of *z when z is given.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n,
                 std::vector<double>* z) {
    auto Z = [&](int i, int j) -> double& { return (*z)[static_cast<size_t>(i) * n + j]; };
    const double eps = std::numeric_limits<double>::epsilon();
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::fabs(d[i]) + std::fabs(e[i]));
    const double floor_tol = eps * std::max(scale, 1.0);

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd + floor_tol * 1e-3) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    raise("ConvergenceFailure", "QL iteration cap exceeded");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z)
                        for (int k = 0; k < n; ++k) {
                            f = Z(k, i + 1);
                            Z(k, i + 1) = s * Z(k, i) + c * f;
                            Z(k, i) = c * Z(k, i) - s * f;
                        }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

EigenSystem assemble(int n, std::vector<double>& d, std::vector<double>& z) {
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] > d[b]; });
    EigenSystem out;
    out.values.resize(static_cast<size_t>(n));
    out.vectors.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n)));
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<size_t>(k)] = d[idx[static_cast<size_t>(k)]];
        for (int i = 0; i < n; ++i)
            out.vectors[static_cast<size_t>(k)][static_cast<size_t>(i)] =
                z[static_cast<size_t>(i) * n + idx[static_cast<size_t>(k)]];
    }
    return out;
}

}  // namespace

EigenSystem eigen_sym(const IntMatrix& m) {
    int n = m.n;
    if (n == 0) return {};
    if (n == 1) return {{static_cast<double>(m.at(0, 0))}, {{1.0}}};
    std::vector<double> a(m.a.begin(), m.a.end());
    std::vector<double> d(static_cast<size_t>(n), 0.0), e(static_cast<size_t>(n), 0.0);
    tridiagonalize(a, n, d, e, true);
    ql_implicit(d, e, n, &a);
    return assemble(n, d, a);
}

std::vector<double> eigen_sym_values(const IntMatrix& m) {
    int n = m.n;
    if (n == 0) return {};
    if (n == 1) return {static_cast<double>(m.at(0, 0))};
    std::vector<double> a(m.a.begin(), m.a.end());
    std::vector<double> d(static_cast<size_t>(n), 0.0), e(static_cast<size_t>(n), 0.0);
    tridiagonalize(a, n, d, e, false);
    ql_implicit(d, e, n, nullptr);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

EigenSystem eigen_sym_jacobi(const IntMatrix& m) {
    int n = m.n;
    if (n == 0) return {};
    std::vector<double> a(m.a.begin(), m.a.end());
    std::vector<double> z(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) z[static_cast<size_t>(i) * n + i] = 1.0;
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    auto Z = [&](int i, int j) -> double& { return z[static_cast<size_t>(i) * n + j]; };

    double fro = 0.0;
    for (double x : a) fro += x * x;
    fro = std::sqrt(fro);
    const double stop = kJacobiTol * std::max(fro, 1.0);
    const long max_rot = std::max(100L * n * n, 1000L);
    long rot = 0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * A(p, q) * A(p, q);
        if (std::sqrt(off) <= stop) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (A(p, q) == 0.0) continue;
                if (++rot > max_rot)
                    raise("ConvergenceFailure", "Jacobi rotation cap exceeded");
                double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double apq = A(p, q);
                A(p, p) -= t * apq;
                A(q, q) += t * apq;
                A(p, q) = A(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k != p && k != q) {
                        double akp = A(k, p), akq = A(k, q);
                        A(k, p) = A(p, k) = akp - s * (akq + tau * akp);
                        A(k, q) = A(q, k) = akq + s * (akp - tau * akq);
                    }
                    double zkp = Z(k, p), zkq = Z(k, q);
                    Z(k, p) = zkp - s * (zkq + tau * zkp);
                    Z(k, q) = zkq + s * (zkp - tau * zkq);
                }
            }
        }
    }
    std::vector<double> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = A(i, i);
    return assemble(n, d, z);
}

Spectrum eigenvalues(const SignedGraph& g) {
    if (g.order() < 1) raise("VertexOutOfRange", "need at least one vertex");
    return {eigen_sym_values(g.adjacency()), kJacobiTol};
}

IndexResult index_of(const SignedGraph& g) {
    if (g.order() < 1) raise("VertexOutOfRange", "need at least one vertex");
    EigenSystem es = eigen_sym(g.adjacency());
    IndexResult r;
    r.lambda = es.values[0];
    r.vec = es.vectors[0];
    r.multiple = es.values.size() > 1 && es.values[0] - es.values[1] <= kMultipleTol;

    double norm = 0.0;
    for (double x : r.vec) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : r.vec) x /= norm;
    // Sign convention: first coordinate of non-negligible magnitude positive.
    double mx = 0.0;
    for (double x : r.vec) mx = std::max(mx, std::fabs(x));
    for (double x : r.vec) {
        if (std::fabs(x) > 1e-7 * mx) {
            if (x < 0.0)
                for (double& y : r.vec) y = -y;
            break;
        }
    }
    IntMatrix a = g.adjacency();
    double res = 0.0;
    for (int i = 0; i < g.order(); ++i) {
        double ax = 0.0;
        for (int j = 0; j < g.order(); ++j) ax += a.at(i, j) * r.vec[static_cast<size_t>(j)];
        double diff = ax - r.lambda * r.vec[static_cast<size_t>(i)];
        res += diff * diff;
    }
    r.residual = std::sqrt(res);
    return r;
}

Polynomial charpoly_exact(const SignedGraph& g) {
    int n = g.order();
    if (n == 0) return Polynomial::constant(1);
    std::vector<mpz_class> A(static_cast<size_t>(n) * n, 0);
    for (const auto& e : g.edges()) {
        A[static_cast<size_t>(e.u) * n + e.v] = e.sign;
        A[static_cast<size_t>(e.v) * n + e.u] = e.sign;
    }
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = 1;
    std::vector<mpz_class> M = A;  // M_1 = A
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += M[static_cast<size_t>(i) * n + i];
    c[static_cast<size_t>(n - 1)] = -tr;
    std::vector<mpz_class> tmp(static_cast<size_t>(n) * n);
    for (int k = 2; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{n-k+1} I)
        for (int i = 0; i < n; ++i)
            M[static_cast<size_t>(i) * n + i] += c[static_cast<size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                mpz_class acc = 0;
                for (int l = 0; l < n; ++l) {
                    const mpz_class& alv = A[static_cast<size_t>(i) * n + l];
                    if (alv != 0) acc += alv * M[static_cast<size_t>(l) * n + j];
                }
                tmp[static_cast<size_t>(i) * n + j] = acc;
            }
        }
        std::swap(M, tmp);
        tr = 0;
        for (int i = 0; i < n; ++i) tr += M[static_cast<size_t>(i) * n + i];
        mpz_class ck;
        mpz_divexact_ui(ck.get_mpz_t(), mpz_class(-tr).get_mpz_t(), static_cast<unsigned long>(k));
        c[static_cast<size_t>(n - k)] = ck;
    }
    return Polynomial(std::move(c));
}

namespace {

using Mask = std::uint32_t;

struct SchwenkCtx {
    const SignedGraph* g;
    std::unordered_map<Mask, Polynomial> memo;

    std::vector<Mask> components(Mask mask) const {
        std::vector<Mask> comps;
        Mask rest = mask;
        while (rest) {
            int s = __builtin_ctz(rest);
            Mask comp = 0, frontier = Mask{1} << s;
            while (frontier) {
                comp |= frontier;
                Mask next = 0;
                Mask f = frontier;
                while (f) {
                    int v = __builtin_ctz(f);
                    f &= f - 1;
                    for (auto [w, sg] : g->neighbors(v)) {
                        (void)sg;
                        Mask wb = Mask{1} << w;
                        if ((mask & wb) && !(comp & wb)) next |= wb;
                    }
                }
                frontier = next;
            }
            comps.push_back(comp);
            rest &= ~comp;
        }
        return comps;
    }

    // Simple cycles through v inside the induced subgraph `mask`, as masks
    // with their signs.
    void cycles_at(Mask mask, int v, std::vector<std::pair<Mask, int>>& out) const {
        std::vector<int> path{v};
        Mask on_path = Mask{1} << v;
        std::function<void(int, int)> extend = [&](int cur, int sign) {
            for (auto [w, sg] : g->neighbors(cur)) {
                if (!(mask & (Mask{1} << w))) continue;
                if (w == v && path.size() >= 3 && path[1] < path.back())
                    out.emplace_back(on_path, sign * sg);
                else if (w != v && !(on_path & (Mask{1} << w))) {
                    path.push_back(w);
                    on_path |= Mask{1} << w;
                    extend(w, sign * sg);
                    on_path &= ~(Mask{1} << w);
                    path.pop_back();
                }
            }
        };
        extend(v, 1);
    }

    Polynomial expand_at(Mask mask, int v) {
        Polynomial res = poly(mask & ~(Mask{1} << v)).times_power(1);  // x * phi(G - v)
        for (auto [w, sg] : g->neighbors(v)) {
            (void)sg;
            if (mask & (Mask{1} << w))
                res = res - poly(mask & ~(Mask{1} << v) & ~(Mask{1} << w));
        }
        std::vector<std::pair<Mask, int>> cycles;
        cycles_at(mask, v, cycles);
        for (auto& [cm, cs] : cycles)
            res = res - poly(mask & ~cm).scaled(2 * cs);
        return res;
    }

    Polynomial poly(Mask mask) {
        if (mask == 0) return Polynomial::constant(1);
        Polynomial res = Polynomial::constant(1);
        for (Mask comp : components(mask)) res = res * comp_poly(comp);
        return res;
    }

    Polynomial comp_poly(Mask comp) {
        auto it = memo.find(comp);
        if (it != memo.end()) return it->second;
        Polynomial res;
        if ((comp & (comp - 1)) == 0) {
            res = Polynomial::monomial(1);
        } else {
            res = expand_at(comp, __builtin_ctz(comp));
        }
        memo.emplace(comp, res);
        return res;
    }
};

}  // namespace

Polynomial charpoly_schwenk(const SignedGraph& g, int v) {
    if (g.order() > 25) raise("TooLarge", "recursion supports n <= 25");
    if (g.cycle_rank() > 2) raise("CycleRankTooHigh", "cycle rank must be <= 2");
    if (v < 0 || v >= g.order()) raise("VertexOutOfRange", "vertex " + std::to_string(v));
    SchwenkCtx ctx{&g, {}};
    Mask full = (g.order() == 32) ? ~Mask{0} : ((Mask{1} << g.order()) - 1);
    return ctx.expand_at(full, v);
}

double cauchy_root_bound(const Polynomial& p) {
    if (p.degree() < 1) return 1.0;
    double lead = std::fabs(p.leading().get_d());
    double mx = 0.0;
    for (int i = 0; i < p.degree(); ++i)
        mx = std::max(mx, std::fabs(p.coeff(i).get_d()) / lead);
    return 1.0 + mx;
}

namespace {

std::vector<double> scale_unit(std::vector<double> v) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::fabs(x));
    if (mx > 0.0)
        for (double& x : v) x /= mx;
    return v;
}

double eval_at(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Sturm chain with per-step normalization to keep coefficients tame.
std::vector<std::vector<double>> sturm_chain(const std::vector<double>& p0) {
    std::vector<std::vector<double>> chain;
    chain.push_back(scale_unit(p0));
    std::vector<double> d(p0.size() > 1 ? p0.size() - 1 : 0);
    for (size_t i = 1; i < p0.size(); ++i) d[i - 1] = p0[i] * static_cast<double>(i);
    if (d.empty()) return chain;
    chain.push_back(scale_unit(d));
    while (chain.back().size() > 1) {
        const auto& u = chain[chain.size() - 2];
        const auto& v = chain.back();
        std::vector<double> r = u;
        size_t du = u.size() - 1, dv = v.size() - 1;
        for (size_t k = du - dv + 1; k-- > 0;) {
            double q = r[dv + k] / v[dv];
            r[dv + k] = 0.0;
            for (size_t j = 0; j < dv; ++j) r[j + k] -= q * v[j];
        }
        // u and v are unit-scaled, so anything at 1e-12 is division noise
        size_t deg = r.size();
        while (deg > 0 && std::fabs(r[deg - 1]) <= 1e-12) --deg;
        r.resize(deg);
        if (r.empty()) break;  // repeated roots: chain ends at the gcd
        for (double& x : r) x = -x;
        chain.push_back(scale_unit(r));
    }
    return chain;
}

int sign_changes(const std::vector<std::vector<double>>& chain, double x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        double v = eval_at(p, x);
        int s = (v > 0.0) ? 1 : (v < 0.0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::vector<double> poly_quotient(const std::vector<double>& u, const std::vector<double>& v) {
    size_t du = u.size() - 1, dv = v.size() - 1;
    std::vector<double> r = u, q(du - dv + 1, 0.0);
    for (size_t k = du - dv + 1; k-- > 0;) {
        q[k] = r[dv + k] / v[dv];
        for (size_t j = 0; j <= dv; ++j) r[j + k] -= q[k] * v[j];
    }
    return q;
}

}  // namespace

double largest_real_root(const Polynomial& p, double lo, double hi) {
    if (p.is_zero() || p.degree() < 1)
        raise("NoRealRootInInterval", "polynomial has no roots");
    if (!(lo < hi)) raise("NoRealRootInInterval", "empty interval");
    std::vector<double> pc = p.double_coeffs();
    auto chain = sturm_chain(pc);
    // A chain ending in positive degree ends at gcd(p, p'): deflate to the
    // squarefree part so multiple roots bisect cleanly.
    for (int round = 0; round < 4 && chain.back().size() > 1 && pc.size() > chain.back().size();
         ++round) {
        pc = poly_quotient(pc, chain.back());
        chain = sturm_chain(pc);
    }
    auto count_in = [&](double a, double b) {
        return sign_changes(chain, a) - sign_changes(chain, b);
    };
    // Open the interval a hair so boundary roots are not lost.
    double span = hi - lo;
    double a = lo - 1e-12 * std::max(1.0, std::fabs(lo)) - 1e-15 * span;
    double b = hi + 1e-12 * std::max(1.0, std::fabs(hi)) + 1e-15 * span;
    if (count_in(a, b) <= 0)
        raise("NoRealRootInInterval",
              "no real root in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    int right = sign_changes(chain, b);
    for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::fabs(b)); ++it) {
        double mid = 0.5 * (a + b);
        if (sign_changes(chain, mid) - right >= 1)
            a = mid;
        else
            b = mid;
    }
    double x = 0.5 * (a + b);
    // Newton polish on the squarefree part
    std::vector<double> dc(pc.size() > 1 ? pc.size() - 1 : 0);
    for (size_t i = 1; i < pc.size(); ++i) dc[i - 1] = pc[i] * static_cast<double>(i);
    for (int it = 0; it < 6; ++it) {
        double fx = eval_at(pc, x), dfx = eval_at(dc, x);
        if (dfx == 0.0) break;
        double x2 = x - fx / dfx;
        if (x2 < a - 1e-9 || x2 > b + 1e-9) break;
        x = x2;
    }
    return x;
}

std::vector<double> batch_index(const std::vector<SignedGraph>& gs, bool parallel) {
    std::vector<double> out(gs.size(), 0.0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < static_cast<long long>(gs.size()); ++i)
        out[static_cast<size_t>(i)] =
            eigen_sym_values(gs[static_cast<size_t>(i)].adjacency())[0];
    return out;
}

}  // namespace sgs

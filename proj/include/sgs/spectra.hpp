#pragma once

#include <vector>

#include "sgs/polynomial.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

// Eigenvalues in descending order; tol records the off-diagonal tolerance
// the solver converged to.
struct Spectrum {
    std::vector<double> values;
    double tol = 0.0;
};

// Index eigenpair. `multiple` is set when the top two eigenvalues are
// closer than 1e-8; eigenvector-dependent checks should then be skipped.
struct IndexResult {
    double lambda = 0.0;
    std::vector<double> vec;
    double residual = 0.0;
    bool multiple = false;
};

// Full eigensystem, values descending, vectors[k] the unit eigenvector of
// values[k].
struct EigenSystem {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

// Householder tridiagonalization + implicit-shift QL. Production path.
EigenSystem eigen_sym(const IntMatrix& m);

// Same solver, eigenvalues only (descending); skips the transform
// accumulation and rotation replay.
std::vector<double> eigen_sym_values(const IntMatrix& m);

// Cyclic Jacobi rotations. Serial reference implementation kept for testing
// against eigen_sym; off-diagonal tolerance 1e-10, cap 100*n^2 rotations.
EigenSystem eigen_sym_jacobi(const IntMatrix& m);

Spectrum eigenvalues(const SignedGraph& g);
IndexResult index_of(const SignedGraph& g);

// Exact integer characteristic polynomial by the Faddeev-LeVerrier
// recurrence (all divisions exact).
Polynomial charpoly_exact(const SignedGraph& g);

// Same polynomial by the signed vertex recursion
//   phi(G) = x phi(G-v) - sum_{uv} phi(G-u-v) - 2 sum_{C through v} sgn(C) phi(G-C),
// memoized on induced-subgraph vertex sets. Requires cycle rank <= 2 and
// n <= 25.
Polynomial charpoly_schwenk(const SignedGraph& g, int v);

// Largest real root in [lo, hi] to absolute tolerance 1e-12, by Sturm
// isolation plus bisection and a Newton polish.
double largest_real_root(const Polynomial& p, double lo, double hi);

// 1 + max |c_i / c_deg|; every real root lies within this bound.
double cauchy_root_bound(const Polynomial& p);

// Index of every graph in the batch; data-parallel over graphs when
// `parallel` is set, bitwise identical to the serial path.
std::vector<double> batch_index(const std::vector<SignedGraph>& gs, bool parallel = true);

}  // namespace sgs

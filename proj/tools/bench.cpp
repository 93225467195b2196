// Benchmark comparing the serial reference paths against the OpenMP
// drivers, verifying that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "sgs/enumerate.hpp"
#include "sgs/rng.hpp"
#include "sgs/spectra.hpp"

using namespace sgs;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double timed(F&& f) {
    double t0 = now();
    f();
    return now() - t0;
}

}  // namespace

int main(int argc, char** argv) {
    int n = 64, graphs = 400;
    long samples = 4000;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--n") && i + 1 < argc) n = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "--graphs") && i + 1 < argc) graphs = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "--samples") && i + 1 < argc) samples = std::atol(argv[++i]);
    }

    std::printf("workload 1: batch index of %d random bicyclic graphs, n = %d\n", graphs, n);
    Rng rng(5);
    std::vector<SignedGraph> gs;
    gs.reserve(static_cast<size_t>(graphs));
    for (int i = 0; i < graphs; ++i) gs.push_back(random_unbalanced_bicyclic(rng, n));
    std::vector<double> serial, parallel;
    double ts = timed([&] { serial = batch_index(gs, false); });
    double tp = timed([&] { parallel = batch_index(gs, true); });
    bool same = serial == parallel;
    std::printf("  serial %.3fs, openmp %.3fs, speedup %.2fx, identical: %s\n", ts, tp,
                ts / tp, same ? "yes" : "NO");

    std::printf("workload 2: exclusion sampling at n = 36, %ld samples\n", samples);
    ExclusionReport rs, rp;
    double es = timed([&] { rs = verify_exclusions(36, samples, 7, false); });
    double ep = timed([&] { rp = verify_exclusions(36, samples, 7, true); });
    bool agree = rs.skipped_family == rp.skipped_family &&
                 rs.dumbbell_samples == rp.dumbbell_samples &&
                 rs.max_lambda_outside == rp.max_lambda_outside;
    std::printf("  serial %.3fs, openmp %.3fs, speedup %.2fx, identical: %s\n", es, ep,
                es / ep, agree ? "yes" : "NO");

    std::printf("workload 3: exhaustive enumeration at n = 8\n");
    EnumerationReport e1, e2;
    double ns = timed([&] { e1 = enumerate_unbalanced_bicyclic(8, 5, false); });
    double np = timed([&] { e2 = enumerate_unbalanced_bicyclic(8, 5, true); });
    bool eq = e1.signed_classes == e2.signed_classes &&
              e1.top.size() == e2.top.size() &&
              (e1.top.empty() || e1.top[0].key == e2.top[0].key);
    std::printf("  serial %.3fs, openmp %.3fs, speedup %.2fx, identical: %s\n", ns, np,
                ns / np, eq ? "yes" : "NO");

    return (same && agree && eq) ? 0 : 1;
}

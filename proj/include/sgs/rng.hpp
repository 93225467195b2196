#pragma once

#include <cstdint>

#include "sgs/signed_graph.hpp"

namespace sgs {

// splitmix64: tiny, seedable, identical across platforms. Every randomized
// routine takes an explicit seed so runs are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool coin() { return (next() & 1) != 0; }
    int sign() { return coin() ? 1 : -1; }

private:
    std::uint64_t state_;
};

// Connected graph: random spanning tree plus `extra` random chords, signs
// uniform.
SignedGraph random_connected_signed(Rng& rng, int n, int extra);

// Random signed tree on n vertices.
SignedGraph random_signed_tree(Rng& rng, int n);

// Random unbalanced bicyclic graph: random base of a random type, random
// forest attachment, random signature resampled until unbalanced.
SignedGraph random_unbalanced_bicyclic(Rng& rng, int n);

}  // namespace sgs

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sgs/polynomial.hpp"
#include "sgs/signed_graph.hpp"

namespace sgs {

enum class BicyclicType { Infinity, Dumbbell, Theta };

const char* bicyclic_type_name(BicyclicType t);

// Classification record for a connected bicyclic graph.
//   Infinity:  params = (p, q, 0), cycles of lengths p >= q sharing a vertex.
//   Dumbbell:  params = (p, l, q), disjoint cycles joined by a path of length l.
//   Theta:     params = (k, l, m), three internally disjoint paths, k >= l >= m.
// base_vertices are labels in the original graph. cycle_signs lists the signs
// of the distinct simple cycles: two for Infinity/Dumbbell (in params order),
// three for Theta (paths k+l, k+m, l+m).
struct BicyclicShape {
    BicyclicType type = BicyclicType::Infinity;
    std::array<int, 3> params{0, 0, 0};
    std::vector<int> base_vertices;
    std::vector<int> cycle_signs;
};

// Strip pendant vertices down to the minimal bicyclic subgraph and classify
// it. The returned graph is the base relabeled compactly.
std::pair<SignedGraph, BicyclicShape> base_of(const SignedGraph& g);

// The five extremal families, frozen from the polynomial-catalog
// reconstruction (see match_table1). Valid for 7 <= n <= 2000.
SignedGraph construct_family(int which, int n);

// f_1..f_5: the low-degree factors whose largest roots are the family
// indices. Valid for n >= 5.
Polynomial f_polynomial(int which, int n);

// Full degree-n characteristic polynomial formula for family `which`.
Polynomial family_charpoly_formula(int which, int n);

// Largest root of f_polynomial(which, n); agrees with the eigensolver index
// of construct_family(which, n) within 1e-8.
double family_index(int which, int n);

}  // namespace sgs

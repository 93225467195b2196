#pragma once

#include <string>
#include <vector>

#include "sgs/polynomial.hpp"

namespace sgs {

// One row of the characteristic-polynomial catalog used by the family
// constructors and the match-table1 reconstruction: a label, the smallest
// order the formula supports, and the factored formula at a given n.
struct CatalogRow {
    std::string label;
    int min_n = 0;
    std::vector<Polynomial> (*factors)(int n) = nullptr;
};

// All 35 rows (G1..G13, G1^1..G1^6, G2^1..G2^7, G3^1..G3^5, G4^1..G4^4).
const std::vector<CatalogRow>& polynomial_catalog();

// Product of the row's factors: the full degree-n polynomial.
Polynomial row_polynomial(const CatalogRow& row, int n);

const CatalogRow& catalog_row(const std::string& label);

}  // namespace sgs

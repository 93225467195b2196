#include "sgs/catalog.hpp"

#include <utility>

#include "sgs/error.hpp"

namespace sgs {

namespace {

// Polynomial with coefficients affine in n, constant term first:
// each pair (a, b) contributes a + b*n.
Polynomial ap(int n, std::initializer_list<std::pair<long, long>> cs) {
    std::vector<mpz_class> v;
    v.reserve(cs.size());
    for (const auto& [a, b] : cs) v.push_back(mpz_class(a) + mpz_class(b) * n);
    return Polynomial(std::move(v));
}

Polynomial xm1(int) { return Polynomial{-1, 1}; }  // x - 1
Polynomial xp1(int) { return Polynomial{1, 1}; }   // x + 1

using F = std::vector<Polynomial>;

}  // namespace

const std::vector<CatalogRow>& polynomial_catalog() {
    static const std::vector<CatalogRow> rows = {
        {"G1", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), ap(n, {{-1, 0}, {0, 0}, {1, 0}}),
                      ap(n, {{-5, 1}, {0, 0}, {0, -1}, {0, 0}, {1, 0}})};
         }},
        {"G2", 4,
         [](int n) {
             return F{Polynomial::monomial(n - 4),
                      ap(n, {{-4, 2}, {0, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G3", 4,
         [](int n) {
             return F{Polynomial::monomial(n - 4),
                      ap(n, {{-8, 2}, {4, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G4", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xp1(n), xm1(n), xm1(n),
                      ap(n, {{5, -1}, {1, -1}, {1, 0}, {1, 0}})};
         }},
        {"G5", 5,
         [](int n) {
             return F{Polynomial::monomial(n - 5), ap(n, {{2, 0}, {1, 0}}), xm1(n),
                      ap(n, {{-4, 1}, {2, -1}, {-1, 0}, {1, 0}})};
         }},
        {"G6", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xm1(n),
                      ap(n, {{-5, 1}, {-15, 3}, {0, -1}, {0, -1}, {1, 0}, {1, 0}})};
         }},
        {"G7", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xp1(n),
                      ap(n, {{5, -1}, {-15, 3}, {0, 1}, {0, -1}, {-1, 0}, {1, 0}})};
         }},
        {"G8", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xm1(n),
                      ap(n, {{-5, 1}, {-11, 3}, {4, -1}, {0, -1}, {1, 0}, {1, 0}})};
         }},
        {"G9", 5,
         [](int n) {
             return F{Polynomial::monomial(n - 5), xm1(n),
                      ap(n, {{-8, 2}, {4, -1}, {0, -1}, {1, 0}, {1, 0}})};
         }},
        {"G10", 5,
         [](int n) {
             return F{Polynomial::monomial(n - 5), ap(n, {{-2, 0}, {1, 0}}), xp1(n),
                      ap(n, {{4, -1}, {2, -1}, {1, 0}, {1, 0}})};
         }},
        {"G11", 7,
         [](int n) {
             return F{Polynomial::monomial(n - 7), xm1(n), xm1(n), xp1(n),
                      ap(n, {{-12, 2}, {1, -1}, {1, -1}, {1, 0}, {1, 0}})};
         }},
        {"G12", 7,
         [](int n) {
             return F{Polynomial::monomial(n - 7), xm1(n), xp1(n), xp1(n),
                      ap(n, {{-12, 2}, {-1, 1}, {1, -1}, {-1, 0}, {1, 0}})};
         }},
        {"G13", 7,
         [](int n) {
             return F{Polynomial::monomial(n - 7), xm1(n), xm1(n),
                      ap(n, {{-12, 2}, {-3, 1}, {6, -2}, {2, -1}, {2, 0}, {1, 0}})};
         }},
        {"G1^1", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xm1(n),
                      ap(n, {{-11, 2}, {-9, 2}, {0, -1}, {0, -1}, {1, 0}, {1, 0}})};
         }},
        {"G1^2", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xm1(n),
                      ap(n, {{-11, 2}, {-23, 4}, {0, -1}, {0, -1}, {1, 0}, {1, 0}})};
         }},
        {"G1^3", 8,
         [](int n) {
             return F{Polynomial::monomial(n - 8), xm1(n), xm1(n), xp1(n), xp1(n),
                      ap(n, {{-7, 1}, {0, 0}, {1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G1^4", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xp1(n),
                      ap(n, {{11, -2}, {-9, 2}, {0, 1}, {0, -1}, {-1, 0}, {1, 0}})};
         }},
        {"G1^5", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xp1(n),
                      ap(n, {{11, -2}, {-23, 4}, {0, 1}, {0, -1}, {-1, 0}, {1, 0}})};
         }},
        {"G1^6", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xp1(n), xm1(n),
                      ap(n, {{-29, 5}, {0, 0}, {0, -1}, {0, 0}, {1, 0}})};
         }},
        {"G2^1", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{8, -2}, {0, 0}, {-7, 3}, {0, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G2^2", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{5, -1}, {2, 0}, {-8, 3}, {0, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G2^3", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{5, -1}, {-10, 2}, {-14, 4}, {0, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G2^4", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{5, -1}, {-2, 0}, {-8, 3}, {0, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G2^5", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{5, -1}, {10, -2}, {-14, 4}, {0, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G2^6", 4,
         [](int n) {
             return F{Polynomial::monomial(n - 4),
                      ap(n, {{-9, 3}, {0, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G2^7", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{20, -4}, {0, 0}, {-19, 5}, {0, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G3^1", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{12, -2}, {-4, 0}, {-11, 3}, {4, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G3^2", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{6, -1}, {-2, 0}, {-12, 3}, {4, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G3^3", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6),
                      ap(n, {{5, -1}, {10, -2}, {-18, 4}, {4, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G3^4", 4,
         [](int n) {
             return F{Polynomial::monomial(n - 4),
                      ap(n, {{-13, 3}, {4, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G3^5", 5,
         [](int n) {
             return F{Polynomial::monomial(n - 5),
                      ap(n, {{20, -4}, {-23, 5}, {4, 0}, {-1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G4^1", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xm1(n),
                      ap(n, {{-11, 2}, {-5, 2}, {4, -1}, {0, -1}, {1, 0}, {1, 0}})};
         }},
        {"G4^2", 6,
         [](int n) {
             return F{Polynomial::monomial(n - 6), xm1(n),
                      ap(n, {{-11, 2}, {-19, 4}, {4, -1}, {0, -1}, {1, 0}, {1, 0}})};
         }},
        {"G4^3", 8,
         [](int n) {
             return F{Polynomial::monomial(n - 8), xm1(n), xm1(n), xp1(n), xp1(n),
                      ap(n, {{-7, 1}, {4, 0}, {1, -1}, {0, 0}, {1, 0}})};
         }},
        {"G4^4", 7,
         [](int n) {
             return F{Polynomial::monomial(n - 7), xm1(n), xm1(n), xp1(n),
                      ap(n, {{-24, 4}, {5, -1}, {1, -1}, {1, 0}, {1, 0}})};
         }},
    };
    return rows;
}

Polynomial row_polynomial(const CatalogRow& row, int n) {
    if (n < row.min_n)
        raise("UnsupportedN", row.label + " needs n >= " + std::to_string(row.min_n));
    Polynomial p = Polynomial::constant(1);
    for (const auto& f : row.factors(n)) p = p * f;
    return p;
}

const CatalogRow& catalog_row(const std::string& label) {
    for (const auto& r : polynomial_catalog())
        if (r.label == label) return r;
    raise("UnsupportedN", "no catalog row labeled " + label);
}

}  // namespace sgs

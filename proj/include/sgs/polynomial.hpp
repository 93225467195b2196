#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace sgs {

// Dense univariate polynomial over exact integers, coefficients stored
// constant term first. The zero polynomial has an empty coefficient vector;
// otherwise the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(long c);
    static Polynomial monomial(int k, long c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int i) const;  // 0 beyond the stored range
    const mpz_class& leading() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

    Polynomial times_power(int k) const;  // multiply by x^k
    Polynomial scaled(const mpz_class& s) const;
    Polynomial derivative() const;

    mpz_class eval(const mpz_class& x) const;
    double eval_double(double x) const;
    std::vector<double> double_coeffs() const;

    // Serialization: space-separated integers from the constant term upward.
    std::string to_coeff_line() const;
    static Polynomial parse_coeff_line(const std::string& line);

private:
    void normalize();
    std::vector<mpz_class> c_;
};

}  // namespace sgs

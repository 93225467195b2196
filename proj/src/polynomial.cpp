#include "sgs/polynomial.hpp"

#include <sstream>

#include "sgs/error.hpp"

namespace sgs {

namespace {
const mpz_class kZero = 0;
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(long c) { return Polynomial{{c}}; }

Polynomial Polynomial::monomial(int k, long c) {
    std::vector<mpz_class> v(static_cast<size_t>(k) + 1, 0);
    v.back() = c;
    return Polynomial(std::move(v));
}

const mpz_class& Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const mpz_class& Polynomial::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
    std::vector<mpz_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::times_power(int k) const {
    if (is_zero()) return Polynomial();
    std::vector<mpz_class> r(static_cast<size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::scaled(const mpz_class& s) const {
    std::vector<mpz_class> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<mpz_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
}

mpz_class Polynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
    return acc;
}

std::vector<double> Polynomial::double_coeffs() const {
    std::vector<double> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].get_d();
    return r;
}

std::string Polynomial::to_coeff_line() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ' ';
        os << c_[i].get_str();
    }
    return os.str();
}

Polynomial Polynomial::parse_coeff_line(const std::string& line) {
    std::istringstream is(line);
    std::vector<mpz_class> v;
    std::string tok;
    while (is >> tok) {
        try {
            v.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            raise("FormatError", "bad integer coefficient '" + tok + "'");
        }
    }
    return Polynomial(std::move(v));
}

}  // namespace sgs

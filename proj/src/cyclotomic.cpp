#include "ghb/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ghb {

unsigned long euler_phi(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials, remainder known to be zero.
std::vector<mpz_class> exact_div(const std::vector<mpz_class>& num,
                                 const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    std::vector<mpz_class> quot(num.size() - den.size() + 1, 0);
    const mpz_class& lead = den.back();
    for (size_t i = quot.size(); i-- > 0;) {
        mpz_class q = rem[i + den.size() - 1] / lead;
        quot[i] = q;
        for (size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
    }
    return quot;
}

std::map<unsigned long, std::vector<mpz_class>> phi_cache;
std::mutex phi_mutex;

std::vector<mpz_class> cyclo_poly_impl(unsigned long m) {
    if (auto it = phi_cache.find(m); it != phi_cache.end()) return it->second;
    // x^m - 1 divided by Phi_d over proper divisors d of m
    std::vector<mpz_class> poly(m + 1, 0);
    poly[0] = -1;
    poly[m] = 1;
    for (unsigned long d = 1; d < m; ++d) {
        if (m % d == 0) poly = exact_div(poly, cyclo_poly_impl(d));
    }
    phi_cache[m] = poly;
    return poly;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return cyclo_poly_impl(m);
}

namespace {

// Remainder of a rational polynomial modulo the monic integer Phi_m.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, unsigned long m) {
    const std::vector<mpz_class> phi = cyclotomic_polynomial(m);
    const size_t deg = phi.size() - 1;
    for (size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
        poly[i] = Rational(0);
    }
    poly.resize(deg, Rational(0));
    return poly;
}

}  // namespace

Cyclotomic::Cyclotomic(unsigned long m)
    : order_(m), coeffs_(euler_phi(m), Rational(0)) {
    if (m == 0) throw std::invalid_argument("Cyclotomic: order must be positive");
}

Cyclotomic::Cyclotomic(const Rational& q, unsigned long m) : Cyclotomic(m) {
    coeffs_[0] = q;
}

Cyclotomic Cyclotomic::root_power(unsigned long m, long e) {
    if (m == 0) throw std::invalid_argument("Cyclotomic: order must be positive");
    unsigned long exp = static_cast<unsigned long>(((e % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m));
    std::vector<Rational> poly(exp + 1, Rational(0));
    poly[exp] = Rational(1);
    return Cyclotomic(reduce_mod_phi(std::move(poly), m), m);
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclotomic: value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (order_ != o.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("Cyclotomic: order mismatch");
    const size_t n = a.coeffs_.size();
    std::vector<Rational> conv(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Cyclotomic(reduce_mod_phi(std::move(conv), a.order_), a.order_);
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& s) {
    if (s.is_zero()) throw std::invalid_argument("Cyclotomic: division by zero scalar");
    for (auto& c : coeffs_) c /= s;
    return *this;
}

Cyclotomic Cyclotomic::embed(unsigned long m2) const {
    if (m2 % order_ != 0)
        throw std::invalid_argument("Cyclotomic: embed target order not a multiple");
    if (m2 == order_) return *this;
    const unsigned long step = m2 / order_;
    std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) poly[j * step] = coeffs_[j];
    return Cyclotomic(reduce_mod_phi(std::move(poly), m2), m2);
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << " + ";
        os << coeffs_[i].str();
        if (i == 1) os << "*z";
        if (i > 1) os << "*z^" << i;
    }
    os << "; order=" << order_;
    return os.str();
}

}  // namespace ghb

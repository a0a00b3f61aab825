#pragma once

#include <vector>

#include "ghb/cyclotomic.hpp"

namespace ghb {

/// Dense polynomial in x over Q(zeta_m), coefficients lowest power first.
/// The trailing coefficient is nonzero unless the polynomial is zero, so
/// equality is structural.
class GHBPolynomial {
public:
    /// Zero polynomial over Q(zeta_m).
    explicit GHBPolynomial(unsigned long order) : order_(order) {}
    /// Takes ownership of coefficients (all of one order) and normalizes.
    GHBPolynomial(unsigned long order, std::vector<Cyclotomic> coeffs);

    static GHBPolynomial constant(const Cyclotomic& c);
    /// c * x^k
    static GHBPolynomial monomial(const Cyclotomic& c, unsigned k);

    unsigned long order() const { return order_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i (zero beyond the degree).
    Cyclotomic coeff(size_t i) const;

    GHBPolynomial operator-() const;
    GHBPolynomial& operator+=(const GHBPolynomial& o);
    GHBPolynomial& operator-=(const GHBPolynomial& o);
    friend GHBPolynomial operator+(GHBPolynomial a, const GHBPolynomial& b) { return a += b; }
    friend GHBPolynomial operator-(GHBPolynomial a, const GHBPolynomial& b) { return a -= b; }

    GHBPolynomial& operator*=(const Cyclotomic& s);
    GHBPolynomial& operator*=(const Rational& s);
    GHBPolynomial& operator/=(const Rational& s);
    friend GHBPolynomial operator*(GHBPolynomial p, const Rational& s) { return p *= s; }
    friend GHBPolynomial operator*(const Rational& s, GHBPolynomial p) { return p *= s; }
    friend GHBPolynomial operator*(GHBPolynomial p, const Cyclotomic& s) { return p *= s; }
    friend GHBPolynomial operator/(GHBPolynomial p, const Rational& s) { return p /= s; }

    friend bool operator==(const GHBPolynomial& a, const GHBPolynomial& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GHBPolynomial& a, const GHBPolynomial& b) { return !(a == b); }

    Cyclotomic evaluate(const Rational& x) const;

    /// Coefficients of p(x + y).
    GHBPolynomial shifted(const Rational& y) const;

    GHBPolynomial derivative() const;

private:
    void normalize();

    unsigned long order_;
    std::vector<Cyclotomic> coeffs_;
};

}  // namespace ghb

#pragma once

#include <vector>

#include "ghb/rational.hpp"

namespace ghb {

unsigned long euler_phi(unsigned long m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first,
/// degree phi(m), monic with integer coefficients.
std::vector<mpz_class> cyclotomic_polynomial(unsigned long m);

/// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1},
/// always reduced modulo the m-th cyclotomic polynomial.  Equality of two
/// elements of the same order is coefficient-wise.  Immutable after
/// construction; all operations return fresh values.
///
/// Mixing orders throws; callers embed to a common order (an lcm) first.
/// Division is only by nonzero rational scalars.
class Cyclotomic {
public:
    /// Zero element of Q(zeta_m).
    explicit Cyclotomic(unsigned long m);
    /// Constant q in Q(zeta_m).
    Cyclotomic(const Rational& q, unsigned long m);

    /// zeta_m^e, e arbitrary (reduced mod m, then mod Phi_m).
    static Cyclotomic root_power(unsigned long m, long e);

    unsigned long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when all basis coefficients beyond the constant vanish.
    bool is_rational() const;
    /// The constant value; throws when !is_rational().
    Rational rational_value() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic& operator*=(const Rational& s);
    Cyclotomic& operator/=(const Rational& s);
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
    friend Cyclotomic operator/(Cyclotomic a, const Rational& s) { return a /= s; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// The same field element viewed in Q(zeta_{m2}); order() must divide m2.
    Cyclotomic embed(unsigned long m2) const;

    /// "c0 + c1*z + ...; order=m" canonical rendering.
    std::string str() const;

private:
    Cyclotomic(std::vector<Rational> reduced, unsigned long m)
        : order_(m), coeffs_(std::move(reduced)) {}

    unsigned long order_;
    std::vector<Rational> coeffs_;
};

}  // namespace ghb

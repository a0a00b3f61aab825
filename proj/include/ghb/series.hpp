#pragma once

#include <vector>

#include "ghb/cyclotomic.hpp"
#include "ghb/dirichlet.hpp"

namespace ghb {

/// Formal power series over Q(zeta_m) truncated at a fixed order bound K:
/// exactly K+1 coefficients, all of one cyclotomic order.
class TruncatedSeries {
public:
    /// Zero series with bound K over Q(zeta_m).
    TruncatedSeries(unsigned long order, size_t bound)
        : order_(order), coeffs_(bound + 1, Cyclotomic(order)) {}

    /// Truncated exponential of a*t: coefficients a^n/n!.
    static TruncatedSeries exp_linear(const Rational& a, size_t bound, unsigned long order);

    unsigned long order() const { return order_; }
    size_t bound() const { return coeffs_.size() - 1; }

    const Cyclotomic& coeff(size_t n) const { return coeffs_[n]; }
    void set_coeff(size_t n, const Cyclotomic& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

    TruncatedSeries& operator*=(const Rational& s);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Cauchy product truncated at the shared bound.
    friend TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

    /// q with q*den = num + O(t^{K+1}), by forward substitution.  The
    /// denominator's constant term must be a nonzero rational.
    friend TruncatedSeries series_div_unit(const TruncatedSeries& num, const TruncatedSeries& den);

private:
    unsigned long order_;
    std::vector<Cyclotomic> coeffs_;
};

/// B_{N,0,chi} .. B_{N,K,chi} straight from the defining series: numerator
/// sum_a chi(a) e^{at}/N!, denominator (e^{ft} - sum_{n<N} (ft)^n/n!)/t^N
/// with the t^N factor cancelled symbolically.
std::vector<Cyclotomic> oracle_numbers(unsigned N, const DirichletCharacter& chi, size_t K);

/// B_{N,n,chi}(x0) for n = 0..K, using e^{(x0+a)t} in the numerator.
std::vector<Cyclotomic> oracle_poly_eval(unsigned N, const DirichletCharacter& chi,
                                         const Rational& x0, size_t K);

}  // namespace ghb

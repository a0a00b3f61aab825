#include "ghb/series.hpp"

#include <stdexcept>

namespace ghb {

TruncatedSeries TruncatedSeries::exp_linear(const Rational& a, size_t bound, unsigned long order) {
    TruncatedSeries s(order, bound);
    Rational c(1);
    for (size_t n = 0; n <= bound; ++n) {
        s.coeffs_[n] = Cyclotomic(c, order);
        c = c * a / Rational(static_cast<long>(n) + 1);
    }
    return s;
}

void TruncatedSeries::set_coeff(size_t n, const Cyclotomic& c) {
    if (c.order() != order_) throw std::invalid_argument("TruncatedSeries: order mismatch");
    coeffs_[n] = c;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (order_ != o.order_ || coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("TruncatedSeries: bound/order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order_ != b.order_ || a.coeffs_.size() != b.coeffs_.size())
        throw std::invalid_argument("series_mul: bound/order mismatch");
    TruncatedSeries r(a.order_, a.bound());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; i + j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries series_div_unit(const TruncatedSeries& num, const TruncatedSeries& den) {
    if (num.order_ != den.order_ || num.coeffs_.size() != den.coeffs_.size())
        throw std::invalid_argument("series_div_unit: bound/order mismatch");
    if (!den.coeffs_[0].is_rational() || den.coeffs_[0].is_zero())
        throw std::invalid_argument("series_div_unit: constant term must be a nonzero rational");
    const Rational d0 = den.coeffs_[0].rational_value();
    TruncatedSeries q(num.order_, num.bound());
    for (size_t n = 0; n < num.coeffs_.size(); ++n) {
        Cyclotomic acc = num.coeffs_[n];
        for (size_t j = 1; j <= n; ++j) acc -= den.coeffs_[j] * q.coeffs_[n - j];
        q.coeffs_[n] = acc / d0;
    }
    return q;
}

namespace {

std::vector<Cyclotomic> oracle_impl(unsigned N, const DirichletCharacter& chi,
                                    const Rational& x0, size_t K) {
    const unsigned long m = static_cast<unsigned long>(chi.order());
    const long f = chi.modulus();

    TruncatedSeries num(m, K);
    for (long a = 1; a <= f; ++a) {
        const Cyclotomic& v = chi(a);
        if (v.is_zero()) continue;
        TruncatedSeries e = TruncatedSeries::exp_linear(x0 + Rational(a), K, m);
        for (size_t n = 0; n <= K; ++n) num.set_coeff(n, num.coeff(n) + v * e.coeff(n));
    }
    num *= Rational(mpz_class(1), factorial(N));

    // (e^{ft} - sum_{n<N} (ft)^n/n!) / t^N: coefficient of t^j is f^{N+j}/(N+j)!
    TruncatedSeries den(m, K);
    for (size_t j = 0; j <= K; ++j) {
        Rational fp = Rational(f).pow(static_cast<long>(N + j));
        den.set_coeff(j, Cyclotomic(fp / Rational(factorial(N + j)), m));
    }

    TruncatedSeries q = series_div_unit(num, den);
    std::vector<Cyclotomic> out;
    out.reserve(K + 1);
    for (size_t n = 0; n <= K; ++n) out.push_back(q.coeff(n) * Rational(factorial(n)));
    return out;
}

}  // namespace

std::vector<Cyclotomic> oracle_numbers(unsigned N, const DirichletCharacter& chi, size_t K) {
    return oracle_impl(N, chi, Rational(0), K);
}

std::vector<Cyclotomic> oracle_poly_eval(unsigned N, const DirichletCharacter& chi,
                                         const Rational& x0, size_t K) {
    return oracle_impl(N, chi, x0, K);
}

}  // namespace ghb

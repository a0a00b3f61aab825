#include "ghb/polynomial.hpp"

#include <stdexcept>

namespace ghb {

GHBPolynomial::GHBPolynomial(unsigned long order, std::vector<Cyclotomic> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.order() != order_)
            throw std::invalid_argument("GHBPolynomial: coefficient order mismatch");
    normalize();
}

void GHBPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GHBPolynomial GHBPolynomial::constant(const Cyclotomic& c) {
    return GHBPolynomial(c.order(), {c});
}

GHBPolynomial GHBPolynomial::monomial(const Cyclotomic& c, unsigned k) {
    std::vector<Cyclotomic> coeffs(k + 1, Cyclotomic(c.order()));
    coeffs[k] = c;
    return GHBPolynomial(c.order(), std::move(coeffs));
}

Cyclotomic GHBPolynomial::coeff(size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return Cyclotomic(order_);
}

GHBPolynomial GHBPolynomial::operator-() const {
    GHBPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

GHBPolynomial& GHBPolynomial::operator+=(const GHBPolynomial& o) {
    if (order_ != o.order_) throw std::invalid_argument("GHBPolynomial: order mismatch");
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Cyclotomic(order_));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

GHBPolynomial& GHBPolynomial::operator-=(const GHBPolynomial& o) {
    return *this += -o;
}

GHBPolynomial& GHBPolynomial::operator*=(const Cyclotomic& s) {
    if (order_ != s.order()) throw std::invalid_argument("GHBPolynomial: order mismatch");
    for (auto& c : coeffs_) c = c * s;
    normalize();
    return *this;
}

GHBPolynomial& GHBPolynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

GHBPolynomial& GHBPolynomial::operator/=(const Rational& s) {
    for (auto& c : coeffs_) c /= s;
    return *this;
}

Cyclotomic GHBPolynomial::evaluate(const Rational& x) const {
    Cyclotomic acc(order_);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

GHBPolynomial GHBPolynomial::shifted(const Rational& y) const {
    // Horner in (x + y): acc <- acc*(x + y) + c_i
    GHBPolynomial acc(order_);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        std::vector<Cyclotomic> up(acc.coeffs_.size() + 1, Cyclotomic(order_));
        for (size_t j = 0; j < acc.coeffs_.size(); ++j) {
            up[j + 1] += acc.coeffs_[j];
            up[j] += acc.coeffs_[j] * y;
        }
        acc = GHBPolynomial(order_, std::move(up));
        acc += GHBPolynomial::constant(coeffs_[i]);
    }
    return acc;
}

GHBPolynomial GHBPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return GHBPolynomial(order_);
    std::vector<Cyclotomic> d;
    d.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    return GHBPolynomial(order_, std::move(d));
}

}  // namespace ghb

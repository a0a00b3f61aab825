#include "ghb/hyperbernoulli.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace ghb {

namespace {

std::map<unsigned, std::vector<Rational>> hb_cache;
std::mutex hb_mutex;

}  // namespace

Rational hb_number(unsigned N, unsigned n) {
    if (N < 1) throw std::invalid_argument("hb_number: N must be positive");
    std::lock_guard<std::mutex> lock(hb_mutex);
    auto& table = hb_cache[N];
    if (table.empty()) table.push_back(Rational(1));
    while (table.size() <= n) {
        const unsigned k = static_cast<unsigned>(table.size());
        Rational acc(0);
        for (unsigned i = 0; i < k; ++i) {
            Rational coef(factorial(N) * factorial(k), factorial(N + k - i) * factorial(i));
            acc -= coef * table[i];
        }
        table.push_back(acc);
    }
    return table[n];
}

GHBPolynomial hb_polynomial(unsigned N, unsigned n) {
    std::vector<Cyclotomic> coeffs(n + 1, Cyclotomic(1));
    for (unsigned k = 0; k <= n; ++k)
        coeffs[n - k] = Cyclotomic(Rational(binomial(n, k)) * hb_number(N, k), 1);
    return GHBPolynomial(1, std::move(coeffs));
}

mpz_class stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    std::vector<mpz_class> row(k + 1, 0);
    row[0] = 1;  // S(0,0)
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j)
            row[j] = mpz_class(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

Rational falling_factorial(const Rational& x, unsigned l) {
    Rational r(1);
    for (unsigned i = 0; i < l; ++i) r *= x - Rational(static_cast<long>(i));
    return r;
}

}  // namespace ghb

#include "ghb/genbernoulli.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ghb {

namespace {

Rational alpha(unsigned N, unsigned i, long f) {
    // N! f^i / (N+i)!
    return Rational(factorial(N), factorial(N + i)) * Rational(f).pow(static_cast<long>(i));
}

std::map<std::pair<unsigned, bool>, std::vector<std::vector<Rational>>> t_cache;
std::mutex t_mutex;

Rational t_table(unsigned N, unsigned r, unsigned k, bool weak) {
    if (N < 1) throw std::invalid_argument("composition sum: N must be positive");
    std::lock_guard<std::mutex> lock(t_mutex);
    auto& rows = t_cache[{N, weak}];
    if (rows.empty()) rows.push_back({Rational(1)});  // T_0
    // grow row 0 to k
    while (rows[0].size() <= k) rows[0].push_back(Rational(0));
    const Rational neg_nfact = -Rational(factorial(N));
    while (rows.size() <= r) {
        const auto& prev = rows.back();
        std::vector<Rational> row;
        for (unsigned kk = 0; kk < prev.size(); ++kk) {
            Rational acc(0);
            for (unsigned i = weak ? 0 : 1; i <= kk; ++i)
                acc += prev[kk - i] / Rational(factorial(N + i));
            row.push_back(neg_nfact * acc);
        }
        rows.push_back(std::move(row));
    }
    // grow existing rows to k
    for (size_t rr = 1; rr < rows.size(); ++rr) {
        while (rows[rr].size() <= k) {
            const unsigned kk = static_cast<unsigned>(rows[rr].size());
            Rational acc(0);
            for (unsigned i = weak ? 0 : 1; i <= kk; ++i)
                acc += rows[rr - 1][kk - i] / Rational(factorial(N + i));
            rows[rr].push_back(neg_nfact * acc);
        }
    }
    return rows[r][k];
}

std::map<std::tuple<unsigned, long, long>, std::vector<Cyclotomic>> gbn_cache;
std::mutex gbn_mutex;

}  // namespace

Rational t_strict(unsigned N, unsigned r, unsigned k) { return t_table(N, r, k, false); }
Rational t_weak(unsigned N, unsigned r, unsigned k) { return t_table(N, r, k, true); }

Cyclotomic gbn_cor10(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (long a = 1; a <= f; ++a) {
        const Cyclotomic& v = chi(a);
        if (v.is_zero()) continue;
        Rational inner(0);
        for (unsigned k = 0; k <= n; ++k)
            inner += Rational(binomial(n, k)) * hb_number(N, k) *
                     Rational(a).pow(static_cast<long>(n - k)) *
                     Rational(f).pow(static_cast<long>(k) - static_cast<long>(N));
        acc += v * inner;
    }
    return acc;
}

Cyclotomic gbn_recurrence(unsigned N, unsigned n, const DirichletCharacter& chi) {
    std::lock_guard<std::mutex> lock(gbn_mutex);
    auto& table = gbn_cache[{N, chi.modulus(), chi.index()}];
    const long f = chi.modulus();
    const Rational fN = Rational(f).pow(static_cast<long>(N));
    if (table.empty()) table.push_back(power_sum(chi, 0) / fN);
    while (table.size() <= n) {
        const unsigned k = static_cast<unsigned>(table.size());
        Cyclotomic acc = power_sum(chi, k) / fN;
        for (unsigned i = 0; i < k; ++i) {
            Rational coef = Rational(factorial(N) * factorial(k),
                                     factorial(N + k - i) * factorial(i)) *
                            Rational(f).pow(static_cast<long>(k - i));
            acc -= table[i] * coef;
        }
        table.push_back(acc);
    }
    return table[n];
}

Cyclotomic gbn_Tsum(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    if (n == 0) return power_sum(chi, 0) / Rational(f).pow(static_cast<long>(N));
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (unsigned k = 0; k <= n; ++k) {
        Rational tsum(0);
        for (unsigned r = 0; r <= k; ++r) tsum += t_strict(N, r, k);
        Rational coef = Rational(factorial(k)) *
                        Rational(f).pow(static_cast<long>(k) - static_cast<long>(N)) *
                        Rational(binomial(n, k)) * tsum;
        acc += power_sum(chi, n - k) * coef;
    }
    return acc;
}

Cyclotomic gbn_Ttilde(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    if (n == 0) return power_sum(chi, 0) / Rational(f).pow(static_cast<long>(N));
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (unsigned k = 0; k <= n; ++k) {
        Rational tsum(0);
        for (unsigned r = 0; r <= k; ++r)
            tsum += Rational(binomial(k + 1, r + 1)) * t_weak(N, r, k);
        Rational coef = Rational(factorial(k)) *
                        Rational(f).pow(static_cast<long>(k) - static_cast<long>(N)) *
                        Rational(binomial(n, k)) * tsum;
        acc += power_sum(chi, n - k) * coef;
    }
    return acc;
}

Cyclotomic hat_s(unsigned N, unsigned n, const DirichletCharacter& chi) {
    if (n < 1) throw std::invalid_argument("hat_s: n must be >= 1");
    const long f = chi.modulus();
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (long a = 1; a <= f; ++a) {
        const Cyclotomic& v = chi(a);
        if (v.is_zero()) continue;
        Rational term = alpha(N, n, f) - Rational(a).pow(static_cast<long>(n)) / Rational(factorial(n));
        acc += v * term;
    }
    return acc / Rational(f).pow(static_cast<long>(N));
}

GHBPolynomial hat_s_poly(unsigned N, unsigned n, const DirichletCharacter& chi) {
    if (n < 1) throw std::invalid_argument("hat_s_poly: n must be >= 1");
    const long f = chi.modulus();
    GHBPolynomial p = GHBPolynomial::constant(power_sum(chi, 0) * alpha(N, n, f));
    p -= power_sum_poly(chi, n) / Rational(factorial(n));
    p /= Rational(f).pow(static_cast<long>(N));
    return p;
}

Cyclotomic gbn_determinant(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    if (n == 0) return power_sum(chi, 0) / Rational(f).pow(static_cast<long>(N));
    // D_k = sum_{i=1}^{k-1} (-1)^{i+1} alpha_i D_{k-i} + (-1)^{k+1} hat_S_k
    std::vector<Cyclotomic> d;
    d.push_back(Cyclotomic(static_cast<unsigned long>(chi.order())));  // unused slot D_0
    for (unsigned k = 1; k <= n; ++k) {
        Cyclotomic acc = hat_s(N, k, chi) * Rational(k % 2 == 1 ? 1 : -1);
        for (unsigned i = 1; i < k; ++i)
            acc += d[k - i] * (alpha(N, i, f) * Rational(i % 2 == 1 ? 1 : -1));
        d.push_back(acc);
    }
    return d[n] * (Rational(factorial(n)) * Rational(n % 2 == 0 ? 1 : -1));
}

Cyclotomic gbn_via_hbp(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    GHBPolynomial p = hb_polynomial(N, n);
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (long a = 1; a <= f; ++a) {
        const Cyclotomic& v = chi(a);
        if (v.is_zero()) continue;
        acc += v * p.evaluate(Rational(a, f)).rational_value();
    }
    return acc * Rational(f).pow(static_cast<long>(n) - static_cast<long>(N));
}

GHBPolynomial gbp_from_numbers(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const unsigned long m = static_cast<unsigned long>(chi.order());
    std::vector<Cyclotomic> coeffs(n + 1, Cyclotomic(m));
    for (unsigned k = 0; k <= n; ++k)
        coeffs[n - k] = gbn_recurrence(N, k, chi) * Rational(binomial(n, k));
    return GHBPolynomial(m, std::move(coeffs));
}

GHBPolynomial gbp_recurrence_poly(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    const Rational fN = Rational(f).pow(static_cast<long>(N));
    std::vector<GHBPolynomial> table;
    table.push_back(GHBPolynomial::constant(power_sum(chi, 0)) / fN);
    for (unsigned k = 1; k <= n; ++k) {
        GHBPolynomial acc = power_sum_poly(chi, k) / fN;
        for (unsigned i = 0; i < k; ++i) {
            Rational coef = Rational(factorial(N) * factorial(k),
                                     factorial(N + k - i) * factorial(i)) *
                            Rational(f).pow(static_cast<long>(k - i));
            acc -= table[i] * coef;
        }
        table.push_back(acc);
    }
    return table[n];
}

GHBPolynomial gbp_determinant(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    if (n == 0) return GHBPolynomial::constant(power_sum(chi, 0)) / Rational(f).pow(static_cast<long>(N));
    std::vector<GHBPolynomial> d;
    d.push_back(GHBPolynomial(static_cast<unsigned long>(chi.order())));
    for (unsigned k = 1; k <= n; ++k) {
        GHBPolynomial acc = hat_s_poly(N, k, chi) * Rational(k % 2 == 1 ? 1 : -1);
        for (unsigned i = 1; i < k; ++i)
            acc += d[k - i] * (alpha(N, i, f) * Rational(i % 2 == 1 ? 1 : -1));
        d.push_back(acc);
    }
    return d[n] * (Rational(factorial(n)) * Rational(n % 2 == 0 ? 1 : -1));
}

GHBPolynomial gbp_Tsum_poly(unsigned N, unsigned n, const DirichletCharacter& chi, bool weak) {
    if (n < 1) throw std::invalid_argument("gbp_Tsum_poly: n must be >= 1");
    const long f = chi.modulus();
    GHBPolynomial acc(static_cast<unsigned long>(chi.order()));
    for (unsigned k = 0; k <= n; ++k) {
        Rational tsum(0);
        for (unsigned r = 0; r <= k; ++r) {
            if (weak)
                tsum += Rational(binomial(k + 1, r + 1)) * t_weak(N, r, k);
            else
                tsum += t_strict(N, r, k);
        }
        Rational coef = Rational(factorial(k)) *
                        Rational(f).pow(static_cast<long>(k) - static_cast<long>(N)) *
                        Rational(binomial(n, k)) * tsum;
        acc += power_sum_poly(chi, n - k) * coef;
    }
    return acc;
}

GHBPolynomial gbp_shift(const GHBPolynomial& p, const Rational& y) {
    return p.shifted(y);
}

Cyclotomic gbp_stirling(unsigned N, unsigned n, const DirichletCharacter& chi, const Rational& x0) {
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (unsigned k = 0; k <= n; ++k) {
        Rational outer(0);
        for (unsigned l = 0; l <= k; ++l)
            outer += Rational(stirling2(k, l)) * falling_factorial(x0, l);
        acc += gbn_recurrence(N, n - k, chi) * (Rational(binomial(n, k)) * outer);
    }
    return acc;
}

GHBPolynomial gbp_derivative(const GHBPolynomial& p) { return p.derivative(); }

Rational trivial_number_formula(unsigned N, unsigned n) {
    const unsigned top = std::min(N - 1, n);
    Rational acc(0);
    for (unsigned m = 0; m <= top; ++m)
        acc += Rational(binomial(n, m)) * hb_number(N, n - m);
    if (n == N) acc += Rational(1);
    return acc;
}

GHBPolynomial trivial_poly_formula(unsigned N, unsigned n) {
    GHBPolynomial acc(1);
    const unsigned top = std::min(N - 1, n);
    for (unsigned i = 0; i <= top; ++i)
        acc += hb_polynomial(N, n - i) * Rational(binomial(n, i));
    if (n >= N)
        acc += GHBPolynomial::monomial(Cyclotomic(Rational(binomial(n, N)), 1), n - N);
    return acc;
}

Cyclotomic brec_check(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (unsigned i = 0; i <= n; ++i)
        acc += gbn_recurrence(N, i, chi) *
               (Rational(binomial(N + n, i)) * Rational(f).pow(static_cast<long>(N + n - i)));
    return acc / Rational(binomial(N + n, n));
}

}  // namespace ghb

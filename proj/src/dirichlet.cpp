#include "ghb/dirichlet.hpp"

#include <numeric>
#include <stdexcept>

namespace ghb {

namespace {

long mul_mod(long a, long b, long m) {
    return static_cast<long>((static_cast<__int128>(a) * b) % m);
}

long pow_mod(long base, long exp, long m) {
    long r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

long mult_order(long a, long m, long phi) {
    // order divides phi
    long ord = phi;
    for (long d = 1; d * d <= phi; ++d) {
        if (phi % d == 0) {
            if (pow_mod(a, d, m) == 1) return d;
            if (pow_mod(a, phi / d, m) == 1 && phi / d < ord) ord = phi / d;
        }
    }
    return ord;
}

struct Factor {
    long pk;                  // prime power p^k
    std::vector<long> gens;   // local generators mod pk
    std::vector<long> orders; // matching orders
};

std::vector<Factor> factor_units(long f) {
    std::vector<Factor> out;
    long rest = f;
    for (long p = 2; p * p <= rest || (rest > 1 && p <= rest); ++p) {
        if (rest % p != 0) continue;
        long pk = 1;
        int k = 0;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            ++k;
        }
        Factor fac;
        fac.pk = pk;
        if (p == 2) {
            if (k == 2) {
                fac.gens = {3};
                fac.orders = {2};
            } else if (k >= 3) {
                fac.gens = {pk - 1, 5};
                fac.orders = {2, pk / 4};
            }
            // k == 1: trivial local group
        } else {
            long phi = pk - pk / p;
            for (long g = 2; g < pk; ++g) {
                if (g % p == 0) continue;
                if (mult_order(g, pk, phi) == phi) {
                    fac.gens = {g};
                    fac.orders = {phi};
                    break;
                }
            }
        }
        if (!fac.gens.empty()) out.push_back(fac);
        if (rest == 1) break;
    }
    return out;
}

// CRT lift: residue ~ g (mod pk), ~ 1 (mod f/pk)
long crt_lift(long g, long pk, long f) {
    long q = f / pk;
    if (q == 1) return g % f;
    for (long t = 0; t < pk; ++t) {
        long cand = 1 + q * t;
        if (cand % pk == g % pk) return cand % f;
    }
    throw std::logic_error("crt_lift failed");
}

// Discrete log of unit a in one local factor: exponents on fac.gens.
std::vector<long> local_dlog(long a, const Factor& fac) {
    long r = a % fac.pk;
    if (fac.gens.size() == 1) {
        long x = 0, cur = 1;
        for (; x < fac.orders[0]; ++x) {
            if (cur == r) return {x};
            cur = mul_mod(cur, fac.gens[0], fac.pk);
        }
    } else {
        for (long x1 = 0; x1 < fac.orders[0]; ++x1) {
            long base = pow_mod(fac.gens[0], x1, fac.pk);
            long cur = base;
            for (long x2 = 0; x2 < fac.orders[1]; ++x2) {
                if (cur == r) return {x1, x2};
                cur = mul_mod(cur, fac.gens[1], fac.pk);
            }
        }
    }
    throw std::logic_error("local_dlog: not a unit");
}

}  // namespace

UnitGroup unit_group(long f) {
    if (f < 1) throw std::invalid_argument("unit_group: modulus must be positive");
    UnitGroup g;
    g.modulus = f;
    g.exponent = 1;
    for (const Factor& fac : factor_units(f)) {
        for (size_t i = 0; i < fac.gens.size(); ++i) {
            g.generators.push_back({crt_lift(fac.gens[i], fac.pk, f), fac.orders[i]});
            g.exponent = std::lcm(g.exponent, fac.orders[i]);
        }
    }
    return g;
}

std::vector<DirichletCharacter> enumerate_characters(long f) {
    if (f < 1) throw std::invalid_argument("enumerate_characters: modulus must be positive");
    const std::vector<Factor> factors = factor_units(f);

    std::vector<long> orders;  // generator orders, factor by factor
    for (const auto& fac : factors)
        for (long d : fac.orders) orders.push_back(d);
    const size_t ngen = orders.size();

    long M = 1;  // group exponent
    for (long d : orders) M = std::lcm(M, d);

    // Discrete logs of every unit residue, concatenated across factors.
    std::vector<std::vector<long>> dlog(static_cast<size_t>(f));
    std::vector<bool> is_unit(static_cast<size_t>(f), false);
    for (long a = 0; a < f; ++a) {
        if (std::gcd(a, f) != 1 && f > 1) continue;
        is_unit[static_cast<size_t>(a)] = true;
        std::vector<long> xs;
        for (const auto& fac : factors) {
            auto local = local_dlog(a, fac);
            xs.insert(xs.end(), local.begin(), local.end());
        }
        dlog[static_cast<size_t>(a)] = std::move(xs);
    }

    std::vector<DirichletCharacter> result;
    std::vector<long> e(ngen, 0);
    long index = 0;
    while (true) {
        DirichletCharacter chi;
        chi.modulus_ = f;
        chi.index_ = index;

        long m = 1;  // character order
        for (size_t i = 0; i < ngen; ++i)
            m = std::lcm(m, orders[i] / std::gcd(orders[i], e[i]));
        chi.order_ = m;

        chi.values_.assign(static_cast<size_t>(f), Cyclotomic(static_cast<unsigned long>(m)));
        for (long a = 0; a < f; ++a) {
            if (!is_unit[static_cast<size_t>(a)]) continue;
            long E = 0;
            for (size_t i = 0; i < ngen; ++i)
                E = (E + dlog[static_cast<size_t>(a)][i] % orders[i] * (M / orders[i]) % M * e[i]) % M;
            // E is divisible by M/m since chi has order m
            chi.values_[static_cast<size_t>(a)] =
                Cyclotomic::root_power(static_cast<unsigned long>(m), E / (M / m));
        }

        chi.parity_ = 1;
        if (f > 2) {
            const Cyclotomic& v = chi.values_[static_cast<size_t>(f - 1)];
            chi.parity_ = (v.rational_value() == Rational(1)) ? 1 : -1;
        }

        chi.conductor_ = f;
        for (long d = 1; d <= f; ++d) {
            if (f % d != 0) continue;
            bool ok = true;
            for (long a = 0; a < f && ok; ++a) {
                if (!is_unit[static_cast<size_t>(a)]) continue;
                if (a % d == 1 % d && !(chi.values_[static_cast<size_t>(a)] ==
                                        Cyclotomic(Rational(1), static_cast<unsigned long>(m))))
                    ok = false;
            }
            if (ok) {
                chi.conductor_ = d;
                break;
            }
        }

        result.push_back(std::move(chi));
        ++index;

        // next exponent tuple, last position fastest
        size_t pos = ngen;
        while (pos > 0) {
            --pos;
            if (++e[pos] < orders[pos]) break;
            e[pos] = 0;
            if (pos == 0) return result;
        }
        if (ngen == 0) return result;
    }
}

DirichletCharacter character(long f, long index) {
    auto all = enumerate_characters(f);
    if (index < 0 || static_cast<size_t>(index) >= all.size())
        throw std::invalid_argument("character: index out of range");
    return all[static_cast<size_t>(index)];
}

Cyclotomic power_sum(const DirichletCharacter& chi, unsigned n) {
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (long a = 1; a <= chi.modulus(); ++a) {
        const Cyclotomic& v = chi(a);
        if (v.is_zero()) continue;
        mpz_class an;
        mpz_ui_pow_ui(an.get_mpz_t(), static_cast<unsigned long>(a), n);
        acc += v * Rational(an);
    }
    return acc;
}

GHBPolynomial power_sum_poly(const DirichletCharacter& chi, unsigned n) {
    const unsigned long m = static_cast<unsigned long>(chi.order());
    std::vector<Cyclotomic> coeffs(n + 1, Cyclotomic(m));
    for (unsigned k = 0; k <= n; ++k)
        coeffs[n - k] = power_sum(chi, k) * Rational(binomial(n, k));
    return GHBPolynomial(m, std::move(coeffs));
}

}  // namespace ghb

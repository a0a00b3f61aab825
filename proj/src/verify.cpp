#include "ghb/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ghb/genbernoulli.hpp"
#include "ghb/series.hpp"

namespace ghb {

void SuiteReport::check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        if (messages.size() < 10) messages.push_back(what);
    }
}

std::vector<long> moduli_up_to(long maxf) {
    std::vector<long> out;
    for (long f = 1; f <= maxf; ++f) out.push_back(f);
    return out;
}

namespace {

std::string tag(long f, long idx, unsigned N, unsigned n) {
    std::ostringstream os;
    os << "f=" << f << ",idx=" << idx << ",N=" << N << ",n=" << n;
    return os.str();
}

long ipow(long b, unsigned e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

Rational appendix_hb_closed_form(unsigned N, unsigned k) {
    const long M = static_cast<long>(N);
    switch (k) {
        case 0:
            return Rational(1);
        case 1:
            return Rational(-1, M + 1);
        case 2:
            return Rational(2, ipow(M + 1, 2) * (M + 2));
        case 3:
            return Rational(6 * (M - 1), ipow(M + 1, 3) * (M + 2) * (M + 3));
        case 4:
            return Rational(24 * (M * M * M - M * M - 6 * M + 2),
                            ipow(M + 1, 4) * ipow(M + 2, 2) * (M + 3) * (M + 4));
        default:
            throw std::invalid_argument("appendix_hb_closed_form: k must be <= 4");
    }
}

Cyclotomic appendix_gbn(unsigned N, unsigned n, const DirichletCharacter& chi) {
    const long f = chi.modulus();
    Cyclotomic acc(static_cast<unsigned long>(chi.order()));
    for (unsigned k = 0; k <= n; ++k) {
        Rational coef = Rational(binomial(n, k)) * appendix_hb_closed_form(N, k) *
                        Rational(f).pow(static_cast<long>(k) - static_cast<long>(N));
        acc += power_sum(chi, n - k) * coef;
    }
    return acc;
}

SuiteReport verify_five_way(unsigned maxN, unsigned maxn, const std::vector<long>& moduli) {
    SuiteReport rep{"five-way"};
    for (long f : moduli) {
        for (const auto& chi : enumerate_characters(f)) {
            for (unsigned N = 1; N <= maxN; ++N) {
                auto oracle = oracle_numbers(N, chi, maxn);
                for (unsigned n = 0; n <= maxn; ++n) {
                    const Cyclotomic ref = gbn_recurrence(N, n, chi);
                    const std::string t = tag(f, chi.index(), N, n);
                    rep.check(oracle[n] == ref, "oracle vs recurrence " + t);
                    rep.check(gbn_cor10(N, n, chi) == ref, "cor10 vs recurrence " + t);
                    rep.check(gbn_Tsum(N, n, chi) == ref, "Tsum vs recurrence " + t);
                    rep.check(gbn_Ttilde(N, n, chi) == ref, "Ttilde vs recurrence " + t);
                    rep.check(gbn_determinant(N, n, chi) == ref, "determinant vs recurrence " + t);
                    rep.check(gbn_via_hbp(N, n, chi) == ref, "via-hbp vs recurrence " + t);
                }
            }
        }
    }
    return rep;
}

SuiteReport verify_polynomials(unsigned maxN, unsigned maxn, const std::vector<long>& moduli) {
    SuiteReport rep{"polynomials"};
    const std::vector<Rational> points = {Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
    const std::vector<Rational> stirling_points = {Rational(1), Rational(1, 2), Rational(-2)};
    for (long f : moduli) {
        for (const auto& chi : enumerate_characters(f)) {
            for (unsigned N = 1; N <= maxN; ++N) {
                std::vector<std::vector<Cyclotomic>> oracle;
                for (const auto& x0 : points) oracle.push_back(oracle_poly_eval(N, chi, x0, maxn));
                for (unsigned n = 0; n <= maxn; ++n) {
                    const GHBPolynomial ref = gbp_from_numbers(N, n, chi);
                    const std::string t = tag(f, chi.index(), N, n);
                    rep.check(gbp_recurrence_poly(N, n, chi) == ref, "poly recurrence " + t);
                    rep.check(gbp_determinant(N, n, chi) == ref, "poly determinant " + t);
                    if (n >= 1) {
                        rep.check(gbp_Tsum_poly(N, n, chi, false) == ref, "poly Tsum " + t);
                        rep.check(gbp_Tsum_poly(N, n, chi, true) == ref, "poly Ttilde " + t);
                    }
                    for (size_t pi = 0; pi < points.size(); ++pi)
                        rep.check(ref.evaluate(points[pi]) == oracle[pi][n],
                                  "poly oracle point " + t + ",x0=" + points[pi].str());
                    for (const auto& x0 : stirling_points)
                        rep.check(gbp_stirling(N, n, chi, x0) == ref.evaluate(x0),
                                  "stirling " + t + ",x0=" + x0.str());
                }
            }
        }
    }
    return rep;
}

SuiteReport verify_appell(unsigned maxN, unsigned maxn, const std::vector<long>& moduli) {
    SuiteReport rep{"appell"};
    for (long f : moduli) {
        for (const auto& chi : enumerate_characters(f)) {
            for (unsigned N = 1; N <= maxN; ++N) {
                for (unsigned n = 1; n <= maxn; ++n) {
                    GHBPolynomial lhs = gbp_derivative(gbp_from_numbers(N, n, chi));
                    GHBPolynomial rhs =
                        gbp_from_numbers(N, n - 1, chi) * Rational(static_cast<long>(n));
                    rep.check(lhs == rhs, "appell " + tag(f, chi.index(), N, n));
                }
            }
        }
    }
    return rep;
}

SuiteReport verify_addition(unsigned maxN, unsigned maxn, const std::vector<long>& moduli) {
    SuiteReport rep{"addition"};
    const std::vector<Rational> shifts = {Rational(1), Rational(-2), Rational(1, 3)};
    for (long f : moduli) {
        for (const auto& chi : enumerate_characters(f)) {
            for (unsigned N = 1; N <= maxN; ++N) {
                for (unsigned n = 0; n <= maxn; ++n) {
                    const std::string t = tag(f, chi.index(), N, n);
                    for (const auto& y : shifts) {
                        GHBPolynomial lhs = gbp_shift(gbp_from_numbers(N, n, chi), y);
                        GHBPolynomial rhs(static_cast<unsigned long>(chi.order()));
                        for (unsigned k = 0; k <= n; ++k)
                            rhs += gbp_from_numbers(N, k, chi) *
                                   (Rational(binomial(n, k)) *
                                    y.pow(static_cast<long>(n - k)));
                        rep.check(lhs == rhs, "addition " + t + ",y=" + y.str());
                    }
                }
            }
        }
    }
    return rep;
}

SuiteReport verify_brec(unsigned maxN, unsigned maxn, const std::vector<long>& moduli) {
    SuiteReport rep{"brec"};
    for (long f : moduli) {
        for (const auto& chi : enumerate_characters(f)) {
            for (unsigned N = 1; N <= maxN; ++N) {
                for (unsigned n = 1; n <= maxn; ++n) {
                    rep.check(brec_check(N, n, chi) == power_sum(chi, n),
                              "brec " + tag(f, chi.index(), N, n));
                }
            }
        }
    }
    return rep;
}

SuiteReport verify_trivial(unsigned maxN, unsigned maxn) {
    SuiteReport rep{"trivial"};
    const DirichletCharacter one = character(1, 0);
    for (unsigned N = 1; N <= maxN; ++N) {
        for (unsigned n = 0; n <= maxn; ++n) {
            const std::string t = tag(1, 0, N, n);
            rep.check(gbn_recurrence(N, n, one).rational_value() == trivial_number_formula(N, n),
                      "trivial number " + t);
            rep.check(gbp_recurrence_poly(N, n, one) == trivial_poly_formula(N, n),
                      "trivial poly " + t);
        }
    }
    return rep;
}

SuiteReport verify_appendix(unsigned maxN, const std::vector<long>& moduli) {
    SuiteReport rep{"appendix"};
    for (long f : moduli) {
        for (const auto& chi : enumerate_characters(f)) {
            for (unsigned N = 1; N <= maxN; ++N) {
                auto oracle = oracle_numbers(N, chi, 4);
                for (unsigned n = 0; n <= 4; ++n) {
                    const Cyclotomic ref = appendix_gbn(N, n, chi);
                    const std::string t = tag(f, chi.index(), N, n);
                    rep.check(oracle[n] == ref, "appendix vs oracle " + t);
                    rep.check(gbn_recurrence(N, n, chi) == ref, "appendix vs recurrence " + t);
                    rep.check(gbn_cor10(N, n, chi) == ref, "appendix vs cor10 " + t);
                    rep.check(gbn_Tsum(N, n, chi) == ref, "appendix vs Tsum " + t);
                    rep.check(gbn_Ttilde(N, n, chi) == ref, "appendix vs Ttilde " + t);
                    rep.check(gbn_determinant(N, n, chi) == ref, "appendix vs determinant " + t);
                    rep.check(gbn_via_hbp(N, n, chi) == ref, "appendix vs via-hbp " + t);
                }
            }
        }
    }
    return rep;
}

SuiteReport verify_characters(long maxf) {
    SuiteReport rep{"characters"};
    for (long f = 1; f <= maxf; ++f) {
        auto chars = enumerate_characters(f);
        rep.check(chars.size() == euler_phi(static_cast<unsigned long>(f)),
                  "count mismatch at f=" + std::to_string(f));
        std::vector<long> units;
        for (long a = 1; a <= f; ++a)
            if (std::gcd(a, f) == 1) units.push_back(a);
        for (const auto& chi : chars) {
            const unsigned long m = static_cast<unsigned long>(chi.order());
            const Cyclotomic one(Rational(1), m);
            const std::string t = "f=" + std::to_string(f) + ",idx=" + std::to_string(chi.index());
            rep.check(chi(1) == one, "chi(1) != 1 " + t);
            for (long a : units) {
                Cyclotomic p = one;
                for (long e = 0; e < chi.order(); ++e) p = p * chi(a);
                rep.check(p == one, "value not a root of unity " + t);
                for (long b : units)
                    rep.check(chi(a * b) == chi(a) * chi(b), "multiplicativity " + t);
            }
            Cyclotomic sum(m);
            for (long a = 1; a <= f; ++a) sum += chi(a);
            rep.check(sum.is_zero() == !chi.trivial(), "orthogonality " + t);
            rep.check(f % chi.conductor() == 0, "conductor " + t);
            if (f > 2)
                rep.check(chi(f - 1) == Cyclotomic(Rational(chi.parity()), m), "parity " + t);
        }
        for (size_t i = 0; i < chars.size(); ++i)
            for (size_t j = i + 1; j < chars.size(); ++j) {
                bool same = chars[i].order() == chars[j].order() &&
                            chars[i].values() == chars[j].values();
                rep.check(!same, "duplicate characters at f=" + std::to_string(f));
            }
    }
    return rep;
}

std::vector<SuiteReport> verify_all(unsigned maxN, unsigned maxn, long maxf) {
    const auto moduli = moduli_up_to(maxf);
    std::vector<SuiteReport> out;
    out.push_back(verify_five_way(maxN, maxn, moduli));
    out.push_back(verify_polynomials(std::min(maxN, 2u), std::min(maxn, 10u), moduli));
    out.push_back(verify_appell(maxN, maxn, moduli));
    out.push_back(verify_addition(std::min(maxN, 2u), std::min(maxn, 10u), moduli));
    out.push_back(verify_brec(maxN, maxn, moduli));
    out.push_back(verify_trivial(maxN, maxn));
    out.push_back(verify_appendix(maxN, moduli));
    out.push_back(verify_characters(maxf));
    return out;
}

}  // namespace ghb

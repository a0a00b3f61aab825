#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghb/hyperbernoulli.hpp"
#include "ghb/series.hpp"

using namespace ghb;

TEST_CASE("hb_number fixtures") {
    CHECK(hb_number(1, 0) == Rational(1));
    CHECK(hb_number(2, 1) == Rational(-1, 3));
    CHECK(hb_number(1, 2) == Rational(1, 6));
    CHECK(hb_number(2, 3) == Rational(1, 90));
    CHECK(hb_number(1, 4) == Rational(-1, 30));
    for (unsigned N = 1; N <= 6; ++N) {
        CHECK(hb_number(N, 0) == Rational(1));
        CHECK(hb_number(N, 1) == Rational(-1, static_cast<long>(N) + 1));
    }
}

TEST_CASE("appendix closed forms for B_{N,n}, N = 1..6") {
    for (long M = 1; M <= 6; ++M) {
        const unsigned N = static_cast<unsigned>(M);
        CHECK(hb_number(N, 2) == Rational(2, (M + 1) * (M + 1) * (M + 2)));
        CHECK(hb_number(N, 3) ==
              Rational(6 * (M - 1), (M + 1) * (M + 1) * (M + 1) * (M + 2) * (M + 3)));
        CHECK(hb_number(N, 4) ==
              Rational(24 * (M * M * M - M * M - 6 * M + 2),
                       (M + 1) * (M + 1) * (M + 1) * (M + 1) * (M + 2) * (M + 2) * (M + 3) *
                           (M + 4)));
    }
}

TEST_CASE("generating-function consistency, N <= 4, n <= 20") {
    // independent route: divide 1 by the series N!/(N+j)! and read off n! q_n
    const size_t K = 20;
    for (unsigned N = 1; N <= 4; ++N) {
        TruncatedSeries num(1, K), den(1, K);
        num.set_coeff(0, Cyclotomic(Rational(1), 1));
        for (size_t j = 0; j <= K; ++j)
            den.set_coeff(j, Cyclotomic(Rational(factorial(N), factorial(N + j)), 1));
        auto q = series_div_unit(num, den);
        for (size_t n = 0; n <= K; ++n)
            CHECK(q.coeff(n).rational_value() * Rational(factorial(n)) == hb_number(N, static_cast<unsigned>(n)));
    }
}

TEST_CASE("N = 1 gives classical Bernoulli numbers") {
    const size_t K = 20;
    TruncatedSeries num(1, K), den(1, K);
    num.set_coeff(0, Cyclotomic(Rational(1), 1));
    for (size_t j = 0; j <= K; ++j)
        den.set_coeff(j, Cyclotomic(Rational(mpz_class(1), factorial(j + 1)), 1));
    auto q = series_div_unit(num, den);
    for (size_t n = 0; n <= K; ++n)
        CHECK(hb_number(1, static_cast<unsigned>(n)) ==
              q.coeff(n).rational_value() * Rational(factorial(n)));
}

TEST_CASE("hb_polynomial") {
    auto b11 = hb_polynomial(1, 1);
    CHECK(b11.degree() == 1);
    CHECK(b11.coeff(1) == Cyclotomic(Rational(1), 1));
    CHECK(b11.coeff(0) == Cyclotomic(Rational(-1, 2), 1));

    auto b22 = hb_polynomial(2, 2);
    CHECK(b22.coeff(2) == Cyclotomic(Rational(1), 1));
    CHECK(b22.coeff(1) == Cyclotomic(Rational(-2, 3), 1));
    CHECK(b22.coeff(0) == Cyclotomic(Rational(1, 18), 1));

    for (unsigned N = 1; N <= 3; ++N)
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(hb_polynomial(N, n).evaluate(Rational(0)).rational_value() == hb_number(N, n));
            CHECK(hb_polynomial(N, n).degree() == static_cast<long>(n));
        }
}

TEST_CASE("stirling2") {
    for (unsigned n = 0; n <= 8; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(2, 5) == 0);
    CHECK(stirling2(4, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
}

TEST_CASE("stirling generating function") {
    // sum_n S(n,l) t^n/n! = (e^t - 1)^l / l!, truncated at K = 12
    const size_t K = 12;
    for (unsigned l = 0; l <= 5; ++l) {
        TruncatedSeries em1 = TruncatedSeries::exp_linear(Rational(1), K, 1);
        em1.set_coeff(0, Cyclotomic(1));
        TruncatedSeries pow(1, K);
        pow.set_coeff(0, Cyclotomic(Rational(1), 1));
        for (unsigned i = 0; i < l; ++i) pow = series_mul(pow, em1);
        pow *= Rational(mpz_class(1), factorial(l));
        for (size_t n = 0; n <= K; ++n)
            CHECK(pow.coeff(n).rational_value() * Rational(factorial(n)) ==
                  Rational(stirling2(static_cast<unsigned>(n), l)));
    }
}

TEST_CASE("falling_factorial") {
    CHECK(falling_factorial(Rational(5), 0) == Rational(1));
    CHECK(falling_factorial(Rational(5), 3) == Rational(60));
    CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
}

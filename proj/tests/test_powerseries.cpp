#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ghb/series.hpp"

using namespace ghb;

namespace {

TruncatedSeries from_rationals(std::initializer_list<Rational> cs, unsigned long m = 1) {
    TruncatedSeries s(m, cs.size() - 1);
    size_t i = 0;
    for (const auto& c : cs) s.set_coeff(i++, Cyclotomic(c, m));
    return s;
}

}  // namespace

TEST_CASE("series_mul basics") {
    auto a = from_rationals({Rational(1), Rational(1), Rational(0)});
    auto b = from_rationals({Rational(1), Rational(-1), Rational(0)});
    CHECK(series_mul(a, b) == from_rationals({Rational(1), Rational(0), Rational(-1)}));

    const size_t K = 8;
    auto e = TruncatedSeries::exp_linear(Rational(1), K, 1);
    auto einv = TruncatedSeries::exp_linear(Rational(-1), K, 1);
    auto prod = series_mul(e, einv);
    CHECK(prod.coeff(0) == Cyclotomic(Rational(1), 1));
    for (size_t n = 1; n <= K; ++n) CHECK(prod.coeff(n).is_zero());

    auto one = from_rationals({Rational(1), Rational(0), Rational(0)});
    CHECK(series_mul(a, one) == a);

    TruncatedSeries wrong(1, 5);
    CHECK_THROWS_AS(series_mul(a, wrong), std::invalid_argument);
}

TEST_CASE("series_div_unit basics") {
    auto one = from_rationals({Rational(1), Rational(0), Rational(0), Rational(0)});
    auto geom = from_rationals({Rational(1), Rational(-1), Rational(0), Rational(0)});
    CHECK(series_div_unit(one, geom) ==
          from_rationals({Rational(1), Rational(1), Rational(1), Rational(1)}));

    // t/(e^t - 1) with the t cancelled: denominator coefficients 1/(j+1)!
    const size_t K = 4;
    TruncatedSeries num(1, K), den(1, K);
    num.set_coeff(0, Cyclotomic(Rational(1), 1));
    for (size_t j = 0; j <= K; ++j)
        den.set_coeff(j, Cyclotomic(Rational(mpz_class(1), factorial(j + 1)), 1));
    auto q = series_div_unit(num, den);
    CHECK(q.coeff(0) == Cyclotomic(Rational(1), 1));
    CHECK(q.coeff(1) == Cyclotomic(Rational(-1, 2), 1));
    CHECK(q.coeff(2) == Cyclotomic(Rational(1, 12), 1));
    CHECK(q.coeff(3).is_zero());
    CHECK(q.coeff(4) == Cyclotomic(Rational(-1, 720), 1));

    auto a = from_rationals({Rational(3), Rational(1, 2), Rational(-2), Rational(7)});
    CHECK(series_div_unit(a, one) == a);

    auto bad = from_rationals({Rational(0), Rational(1), Rational(0), Rational(0)});
    CHECK_THROWS_AS(series_div_unit(a, bad), std::invalid_argument);
}

TEST_CASE("series_div_unit inverts series_mul") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 6);
    const size_t K = 20;
    for (int rep = 0; rep < 20; ++rep) {
        TruncatedSeries a(1, K), b(1, K);
        for (size_t j = 0; j <= K; ++j) {
            a.set_coeff(j, Cyclotomic(Rational(num(rng), den(rng)), 1));
            b.set_coeff(j, Cyclotomic(Rational(num(rng), den(rng)), 1));
        }
        if (b.coeff(0).is_zero()) b.set_coeff(0, Cyclotomic(Rational(1), 1));
        CHECK(series_div_unit(series_mul(a, b), b) == a);
    }
}

TEST_CASE("series_exp_linear") {
    auto z = TruncatedSeries::exp_linear(Rational(0), 3, 1);
    CHECK(z.coeff(0) == Cyclotomic(Rational(1), 1));
    for (size_t n = 1; n <= 3; ++n) CHECK(z.coeff(n).is_zero());

    auto e1 = TruncatedSeries::exp_linear(Rational(1), 3, 1);
    CHECK(e1.coeff(2) == Cyclotomic(Rational(1, 2), 1));
    CHECK(e1.coeff(3) == Cyclotomic(Rational(1, 6), 1));

    auto e2 = TruncatedSeries::exp_linear(Rational(2), 2, 1);
    CHECK(e2.coeff(1) == Cyclotomic(Rational(2), 1));
    CHECK(e2.coeff(2) == Cyclotomic(Rational(2), 1));
}

TEST_CASE("oracle_numbers fixtures") {
    auto one = character(1, 0);
    auto b = oracle_numbers(1, one, 2);
    CHECK(b[0] == Cyclotomic(Rational(1), 1));
    CHECK(b[1] == Cyclotomic(Rational(1, 2), 1));
    CHECK(b[2] == Cyclotomic(Rational(1, 6), 1));

    auto chi4 = character(4, 1);
    auto c = oracle_numbers(1, chi4, 1);
    CHECK(c[0].is_zero());
    CHECK(c[1] == Cyclotomic(Rational(-1, 2), 2));

    auto d = oracle_numbers(2, chi4, 1);
    CHECK(d[0].is_zero());
    CHECK(d[1] == Cyclotomic(Rational(-1, 8), 2));
}

TEST_CASE("oracle output independent of truncation bound") {
    auto chi = character(5, 1);
    for (unsigned N : {1u, 2u}) {
        auto a = oracle_numbers(N, chi, 8);
        auto b = oracle_numbers(N, chi, 13);
        for (size_t n = 0; n <= 8; ++n) CHECK(a[n] == b[n]);
    }
}

TEST_CASE("oracle_poly_eval fixtures") {
    auto one = character(1, 0);
    CHECK(oracle_poly_eval(1, one, Rational(0), 4) == oracle_numbers(1, one, 4));
    CHECK(oracle_poly_eval(1, one, Rational(1), 1)[1] == Cyclotomic(Rational(3, 2), 1));

    auto chi4 = character(4, 1);
    CHECK(oracle_poly_eval(1, chi4, Rational(1), 1)[1] == Cyclotomic(Rational(-1, 2), 2));
}

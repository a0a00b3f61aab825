#pragma once

#include "ghb/polynomial.hpp"
#include "ghb/rational.hpp"

namespace ghb {

/// Hypergeometric Bernoulli number B_{N,n}.  B_{N,0} = 1 and for n >= 1
/// B_{N,n} = -sum_{i<n} N! n! / ((N+n-i)! i!) B_{N,i}, the f = 1 form of
/// the twisted recurrence.  Memoized per N.
Rational hb_number(unsigned N, unsigned n);

/// B_{N,n}(x) = sum_k binom(n,k) B_{N,k} x^{n-k}, monic of degree n,
/// rational coefficients (returned over Q(zeta_1)).
GHBPolynomial hb_polynomial(unsigned N, unsigned n);

/// Stirling partition number S(n,k), triangle recurrence.
mpz_class stirling2(unsigned n, unsigned k);

/// x(x-1)...(x-l+1), 1 for l = 0.
Rational falling_factorial(const Rational& x, unsigned l);

}  // namespace ghb

#pragma once

#include "ghb/dirichlet.hpp"
#include "ghb/hyperbernoulli.hpp"
#include "ghb/polynomial.hpp"

namespace ghb {

/// T_r(k) = (-N!)^r sum over compositions i_1+...+i_r = k with parts >= 1
/// of prod 1/(N+i_j)!, built by the convolution recurrence.  T_0(0) = 1,
/// T_0(k) = 0 for k >= 1.
Rational t_strict(unsigned N, unsigned r, unsigned k);

/// Same with parts >= 0 allowed.
Rational t_weak(unsigned N, unsigned r, unsigned k);

// B_{N,n,chi} by the independent routes; all agree exactly.

/// sum_a chi(a) sum_k binom(n,k) B_{N,k} a^{n-k} f^{k-N}.
Cyclotomic gbn_cor10(unsigned N, unsigned n, const DirichletCharacter& chi);

/// S_n/f^N - sum_{i<n} N!n!f^{n-i}/((N+n-i)! i!) B_{N,i,chi}; memoized.
Cyclotomic gbn_recurrence(unsigned N, unsigned n, const DirichletCharacter& chi);

/// sum_k (k!/f^{N-k}) binom(n,k) (sum_r T_r(k)) S_{n-k}, n >= 1.
Cyclotomic gbn_Tsum(unsigned N, unsigned n, const DirichletCharacter& chi);

/// sum_k (k!/f^{N-k}) binom(n,k) sum_r binom(k+1,r+1) T~_r(k) S_{n-k}.
Cyclotomic gbn_Ttilde(unsigned N, unsigned n, const DirichletCharacter& chi);

/// (-1)^n n! times the n-by-n lower-Hessenberg determinant with first
/// column N!f^i/(N+i)! and last row hat_s values, evaluated by the
/// first-row cofactor recurrence.
Cyclotomic gbn_determinant(unsigned N, unsigned n, const DirichletCharacter& chi);

/// f^{n-N} sum_a chi(a) B_{N,n}(a/f).
Cyclotomic gbn_via_hbp(unsigned N, unsigned n, const DirichletCharacter& chi);

/// hat_S_n = (1/f^N) sum_a chi(a) (N!f^n/(N+n)! - a^n/n!), n >= 1.
Cyclotomic hat_s(unsigned N, unsigned n, const DirichletCharacter& chi);

/// Polynomial variant with (x+a)^n in place of a^n.
GHBPolynomial hat_s_poly(unsigned N, unsigned n, const DirichletCharacter& chi);

// B_{N,n,chi}(x) routes.

/// sum_k binom(n,k) B_{N,k,chi} x^{n-k}.
GHBPolynomial gbp_from_numbers(unsigned N, unsigned n, const DirichletCharacter& chi);

/// Recurrence over the polynomial ring, S_n(x) in place of S_n.
GHBPolynomial gbp_recurrence_poly(unsigned N, unsigned n, const DirichletCharacter& chi);

/// Hessenberg cofactor recurrence over the polynomial ring.
GHBPolynomial gbp_determinant(unsigned N, unsigned n, const DirichletCharacter& chi);

/// T-sum route with S_{n-k}(x); weak selects the T~ variant.
GHBPolynomial gbp_Tsum_poly(unsigned N, unsigned n, const DirichletCharacter& chi, bool weak);

/// Coefficients of p(x + y).
GHBPolynomial gbp_shift(const GHBPolynomial& p, const Rational& y);

/// Stirling-number expansion evaluated at x0:
/// sum_k sum_l binom(n,k) S(k,l) (x0)_l B_{N,n-k,chi}.
Cyclotomic gbp_stirling(unsigned N, unsigned n, const DirichletCharacter& chi, const Rational& x0);

/// Formal derivative (the Appell identity check lives in tests).
GHBPolynomial gbp_derivative(const GHBPolynomial& p);

/// Right-hand side of the trivial-character reduction for numbers:
/// sum_{m<=min(N-1,n)} binom(n,m) B_{N,n-m}, plus 1 when n = N.
Rational trivial_number_formula(unsigned N, unsigned n);

/// Trivial-character reduction for polynomials: binom(n,N) x^{n-N} (when
/// n >= N) plus sum binom(n,i) B_{N,n-i}(x).
GHBPolynomial trivial_poly_formula(unsigned N, unsigned n);

/// binom(N+n,n)^{-1} sum_{i=0}^n binom(N+n,i) B_{N,i,chi} f^{N+n-i};
/// equals S_n.
Cyclotomic brec_check(unsigned N, unsigned n, const DirichletCharacter& chi);

}  // namespace ghb

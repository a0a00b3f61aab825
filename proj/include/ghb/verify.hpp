#pragma once

#include <string>
#include <vector>

#include "ghb/dirichlet.hpp"

namespace ghb {

struct SuiteReport {
    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> messages;

    bool passed() const { return failures == 0; }
    void check(bool ok, const std::string& what);
};

std::vector<long> moduli_up_to(long maxf);

/// Appendix closed form for B_{N,k} as an explicit rational function of N,
/// k <= 4.  Independent of hb_number.
Rational appendix_hb_closed_form(unsigned N, unsigned k);

/// Appendix value of B_{N,n,chi} assembled from the closed forms and the
/// twisted power sums, n <= 4.
Cyclotomic appendix_gbn(unsigned N, unsigned n, const DirichletCharacter& chi);

/// Cross-method equality of all seven number routes.
SuiteReport verify_five_way(unsigned maxN, unsigned maxn, const std::vector<long>& moduli);

/// Polynomial route agreement, oracle point checks, Stirling expansion.
SuiteReport verify_polynomials(unsigned maxN, unsigned maxn, const std::vector<long>& moduli);

/// d/dx B_{N,n,chi}(x) = n B_{N,n-1,chi}(x).
SuiteReport verify_appell(unsigned maxN, unsigned maxn, const std::vector<long>& moduli);

/// B_{N,n,chi}(x+y) = sum_k binom(n,k) B_{N,k,chi}(x) y^{n-k}.
SuiteReport verify_addition(unsigned maxN, unsigned maxn, const std::vector<long>& moduli);

/// brec_check equals S_n.
SuiteReport verify_brec(unsigned maxN, unsigned maxn, const std::vector<long>& moduli);

/// Trivial character mod 1 reductions for numbers and polynomials.
SuiteReport verify_trivial(unsigned maxN, unsigned maxn);

/// Appendix fixtures (n <= 4) against every number route.
SuiteReport verify_appendix(unsigned maxN, const std::vector<long>& moduli);

/// Character-layer invariants for every modulus up to maxf.
SuiteReport verify_characters(long maxf);

/// Every suite at the given bounds.
std::vector<SuiteReport> verify_all(unsigned maxN, unsigned maxn, long maxf);

}  // namespace ghb

#pragma once

#include <vector>

#include "ghb/cyclotomic.hpp"
#include "ghb/polynomial.hpp"

namespace ghb {

/// (Z/fZ)^* as a product of cyclic groups via CRT over prime powers.
/// Generators are residues mod f; the product of their orders is phi(f).
struct UnitGroup {
    struct Generator {
        long residue;
        long order;
    };
    long modulus;
    std::vector<Generator> generators;
    long exponent;  // lcm of generator orders
};

UnitGroup unit_group(long f);

/// Dirichlet character mod f with values in Q(zeta_m), m the character's
/// order.  The full value table is precomputed; non-units map to the exact
/// zero element.  Immutable.
class DirichletCharacter {
public:
    long modulus() const { return modulus_; }
    /// Position in the deterministic enumeration of characters mod f.
    long index() const { return index_; }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    bool primitive() const { return conductor_ == modulus_; }
    bool trivial() const { return order_ == 1; }
    /// chi(-1) as +1 or -1; defined as +1 for f <= 2.
    int parity() const { return parity_; }

    /// chi(a mod f); the zero element when gcd(a, f) > 1.
    const Cyclotomic& operator()(long a) const {
        long r = a % modulus_;
        if (r < 0) r += modulus_;
        return values_[static_cast<size_t>(r)];
    }

    const std::vector<Cyclotomic>& values() const { return values_; }

    friend std::vector<DirichletCharacter> enumerate_characters(long f);

private:
    DirichletCharacter() = default;

    long modulus_ = 1;
    long index_ = 0;
    long order_ = 1;
    long conductor_ = 1;
    int parity_ = 1;
    std::vector<Cyclotomic> values_;
};

/// All phi(f) characters mod f, in lexicographic order of the exponent
/// tuples on the unit-group generators.
std::vector<DirichletCharacter> enumerate_characters(long f);

/// Single character by enumeration index.
DirichletCharacter character(long f, long index);

/// S_n = sum_{a=1}^{f} chi(a) a^n.
Cyclotomic power_sum(const DirichletCharacter& chi, unsigned n);

/// S_n(x) = sum_{a=1}^{f} chi(a) (x+a)^n, as a polynomial in x.
GHBPolynomial power_sum_poly(const DirichletCharacter& chi, unsigned n);

}  // namespace ghb

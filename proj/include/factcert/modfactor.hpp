#ifndef FACTCERT_MODFACTOR_HPP
#define FACTCERT_MODFACTOR_HPP

#include <cstdint>
#include <vector>

#include "factcert/mod_poly.hpp"

namespace factcert {

// One distinct-degree class: product is the u_j whose irreducible factors
// all have degree exactly degree_class, and factors lists them after
// equal-degree splitting. product = prod(factors) mod p.
struct DegreePart {
    int degree_class = 0;
    ModPoly product;
    std::vector<ModPoly> factors;
};

// True iff gcd(f, f') = 1 over Z/p. Prime modulus, f nonzero.
bool squarefree_mod_p(const ModPoly& f);

// Distinct-degree factorization of a square-free f (monicized first):
// u_j = gcd(f_j, x^(p^j) - x mod f_j), f_{j+1} = f_j / u_j, stopping when
// f_{j+1} is constant. Parts with u_j = 1 are omitted; each part's factors
// come from equal-degree splitting with rng_seed.
std::vector<DegreePart> distinct_degree_split(const ModPoly& f, std::uint64_t rng_seed = 0);

// Cantor-Zassenhaus equal-degree splitting: u must be a square-free product
// of irreducibles all of degree degree_class. Deterministic for a fixed
// seed; factors returned in canonical order.
std::vector<ModPoly> equal_degree_split(const ModPoly& u, int degree_class,
                                        std::uint64_t rng_seed);

// Irreducibility over Z/p without any square-freeness hypothesis:
// gcd(f, x^(p^j) - x mod f) = 1 for 1 <= j <= floor(deg f / 2).
// Degree-1 input is vacuously irreducible.
bool irreducible_mod_p(const ModPoly& f);

struct ModFactor {
    ModPoly poly;
    unsigned multiplicity = 1;
};

// unit * prod(factors[i].poly ^ factors[i].multiplicity) = f (mod p).
struct ModFactorization {
    Int unit;
    std::vector<ModFactor> factors;
};

// Complete factorization over Z/p into monic irreducibles with
// multiplicities; total for any nonzero f. Canonically ordered and
// deterministic for a fixed seed.
ModFactorization factor_mod_p(const ModPoly& f, std::uint64_t rng_seed);

}  // namespace factcert

#endif

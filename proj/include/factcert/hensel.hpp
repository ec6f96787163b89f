#ifndef FACTCERT_HENSEL_HPP
#define FACTCERT_HENSEL_HPP

#include <utility>
#include <vector>

#include "factcert/mod_poly.hpp"

namespace factcert {

// A factorization of f mod p^n obtained by lifting one mod p.
// Invariants: leading_unit * prod(factors) = f (mod p^n); factors[i] is
// monic and reduces mod p to base_factors[i]; base_factors are monic and
// pairwise coprime mod p.
struct LiftedFactorization {
    Modulus modulus;
    std::vector<ModPoly> factors;
    std::vector<ModPoly> base_factors;
    Int leading_unit;
};

// Quadratic Hensel lifting of a coprime pair: given f = g*h (mod p) with
// gcd(g, h) = 1 mod p and p not dividing lc(f), returns (G, H) mod
// p^target_n with f = G*H, G = g and H = h (mod p). Precision doubles each
// step, clamped to the target.
std::pair<ModPoly, ModPoly> hensel_lift_pair(const IntPoly& f, const ModPoly& g,
                                             const ModPoly& h, unsigned target_n);

// Multi-factor lift through a balanced product tree of pair lifts. base must
// be monic, pairwise coprime mod p, with lc(f) * prod(base) = f (mod p).
// Factors come back in canonical order.
LiftedFactorization hensel_lift_multi(const IntPoly& f, std::vector<ModPoly> base,
                                      unsigned target_n);

}  // namespace factcert

#endif

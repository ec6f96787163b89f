#ifndef FACTCERT_MOD_POLY_HPP
#define FACTCERT_MOD_POLY_HPP

#include <utility>
#include <vector>

#include "factcert/int_poly.hpp"

namespace factcert {

// q = p^n for a prime p. Primality of p is trusted input; the constructor
// only runs trial division up to `trial_limit` as a sanity guard.
class Modulus {
public:
    explicit Modulus(Int p, unsigned n = 1, unsigned long trial_limit = 10000);

    const Int& p() const { return p_; }
    unsigned n() const { return n_; }
    const Int& q() const { return q_; }
    bool is_prime_field() const { return n_ == 1; }

    bool operator==(const Modulus&) const = default;

private:
    Int p_;
    unsigned n_;
    Int q_;  // p^n, cached
};

// Polynomial over Z/q, every coefficient reduced into [0, q). Canonical form
// as IntPoly (leading coefficient nonzero mod q). The symmetric-range view
// exists only through symmetric_lift.
class ModPoly {
public:
    explicit ModPoly(Modulus m) : mod_(std::move(m)) {}
    ModPoly(Modulus m, std::vector<Int> coeffs);

    static ModPoly constant(const Modulus& m, const Int& c);
    static ModPoly x(const Modulus& m);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    const Int& coeff(int i) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Modulus& modulus() const { return mod_; }

    bool operator==(const ModPoly&) const = default;

    ModPoly operator-() const;
    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const Int& c, const ModPoly& a);

private:
    Modulus mod_;
    std::vector<Int> coeffs_;
    void reduce_and_trim();
};

// f mod q, coefficients into [0, q).
ModPoly reduce(const IntPoly& f, const Modulus& m);

// Representative of each coefficient in (-q/2, q/2]; for even q the boundary
// q/2 maps to +q/2.
IntPoly symmetric_lift(const ModPoly& f);

// Plain representative in [0, q).
IntPoly plain_lift(const ModPoly& f);

ModPoly derivative(const ModPoly& f);

// a^-1 mod q; throws when not invertible.
Int inv_mod(const Int& a, const Modulus& m);

// f scaled monic; requires an invertible leading coefficient.
ModPoly monic(const ModPoly& f);

// Division with remainder; requires an invertible leading coefficient of b.
std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b);

// Monic gcd over the field Z/p (prime modulus only).
ModPoly poly_gcd_mod(const ModPoly& a, const ModPoly& b);

// s*a + t*b = g with g the monic gcd, deg s < deg b - deg g,
// deg t < deg a - deg g (when a, b nonzero). Prime modulus only.
struct ModExtGcd {
    ModPoly g, s, t;
};
ModExtGcd ext_gcd_mod(const ModPoly& a, const ModPoly& b);

// base^e mod f over Z/p, square-and-reduce after every multiplication.
ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& f);

// x^(p^j) mod f; never materializes x^(p^j) densely. Prime modulus, deg f >= 1.
ModPoly powmod_x(const Int& p, unsigned j, const ModPoly& f);

// Canonical ordering: degree, then coefficient sequence from x^0 upward.
bool poly_less(const ModPoly& a, const ModPoly& b);

}  // namespace factcert

#endif

#ifndef FACTCERT_RAT_POLY_HPP
#define FACTCERT_RAT_POLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "factcert/int_poly.hpp"

namespace factcert {

// Dense polynomial over Q, canonical form as IntPoly. mpq_class keeps each
// coefficient in lowest terms with a positive denominator.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    explicit RatPoly(const IntPoly& f);

    static RatPoly constant(Rat c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    const Rat& coeff(int i) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Present iff every coefficient is an integer.
    std::optional<IntPoly> to_int_poly() const;

    bool operator==(const RatPoly&) const = default;

    RatPoly operator-() const;
    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rat& c, const RatPoly& a);

private:
    std::vector<Rat> coeffs_;
    void trim();
};

RatPoly derivative(const RatPoly& f);

// Division with remainder over Q: a = quotient*b + remainder,
// deg remainder < deg b. Throws on b = 0.
struct RatDivRem {
    RatPoly quotient;
    RatPoly remainder;
};
RatDivRem divrem(const RatPoly& a, const RatPoly& b);

// Integer-polynomial division: performed over Q, then checked for
// integrality. `divides` is the step-H test: remainder zero AND quotient in
// Z[x].
struct PolyDivRem {
    RatPoly quotient;
    RatPoly remainder;
    bool quotient_integral = false;
    bool remainder_zero = false;
    bool divides = false;
    IntPoly int_quotient() const;  // requires quotient_integral
};
PolyDivRem poly_divrem(const IntPoly& a, const IntPoly& b);

// Quotient a/b when b | a in Z[x].
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

// Extended Euclid over Q: s*a + t*b = g with g monic (or zero).
struct RatExtGcd {
    RatPoly g, s, t;
};
RatExtGcd ext_gcd(const RatPoly& a, const RatPoly& b);

// gcd in Z[x] (content included, positive leading coefficient).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// True iff lam*f + mu*f' = 1 exactly over Q.
bool bezout_check(const IntPoly& f, const RatPoly& lam, const RatPoly& mu);

// (lam, mu) with lam*f + mu*f' = 1; empty when f is not square-free.
std::optional<std::pair<RatPoly, RatPoly>> squarefree_witness(const IntPoly& f);

}  // namespace factcert

#endif

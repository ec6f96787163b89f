#ifndef FACTCERT_INT_POLY_HPP
#define FACTCERT_INT_POLY_HPP

#include <compare>
#include <vector>

#include "factcert/arith.hpp"

namespace factcert {

// Dense univariate polynomial over Z; coeffs[i] is the coefficient of x^i.
// Canonical form: the highest stored coefficient is nonzero. The zero
// polynomial stores nothing and reports degree -1 (a sentinel, never an
// index).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int k);
    static IntPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    // Coefficient of x^i; zero outside the stored range.
    const Int& coeff(int i) const;
    const Int& leading() const;  // nonzero polynomial only
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int eval(const Int& at) const;

    bool operator==(const IntPoly&) const = default;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& c, const IntPoly& a);

private:
    std::vector<Int> coeffs_;
    void trim();
};

IntPoly derivative(const IntPoly& f);

// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Int content(const IntPoly& f);

// f / content(f), normalized to a positive leading coefficient; zero for 0.
IntPoly primitive_part(const IntPoly& f);

// Total order used wherever factor lists need a canonical arrangement:
// degree first, then the coefficient sequence from x^0 upward.
bool poly_less(const IntPoly& a, const IntPoly& b);

}  // namespace factcert

#endif

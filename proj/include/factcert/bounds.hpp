#ifndef FACTCERT_BOUNDS_HPP
#define FACTCERT_BOUNDS_HPP

#include <string>
#include <vector>

#include "factcert/int_poly.hpp"

namespace factcert {

// Exact complex arithmetic on the Gaussian-rational subfield, enough to run
// the norm identity with zero tolerance.
struct GaussianRational {
    Rat re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    Rat norm_sq() const { return re * re + im * im; }
    GaussianRational inverse() const;

    bool operator==(const GaussianRational&) const = default;
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

class GaussianRationalPoly {
public:
    GaussianRationalPoly() = default;
    explicit GaussianRationalPoly(std::vector<GaussianRational> coeffs)
        : coeffs_(std::move(coeffs)) {
        trim();
    }
    explicit GaussianRationalPoly(const IntPoly& f);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of x^i, zero outside range (the a_{-1} = a_{m+1} = 0 rule).
    const GaussianRational& coeff(int i) const;
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }

    bool operator==(const GaussianRationalPoly&) const = default;
    friend GaussianRationalPoly operator*(const GaussianRationalPoly& a,
                                          const GaussianRationalPoly& b);

private:
    std::vector<GaussianRational> coeffs_;
    void trim();
};

// (x + c) * P.
GaussianRationalPoly shift_mul(const GaussianRationalPoly& p, const GaussianRational& c);

// Sum of squared coefficient magnitudes, exact.
Int l2_norm_sq(const IntPoly& f);
Rat l2_norm_sq(const GaussianRationalPoly& f);

// The norm identity ||(X+a)P|| = |a| ||(X + conj(a)^-1)P||, checked in the
// squared form ||Q||^2 = |a|^2 ||R||^2 with exact arithmetic. Always true by
// the lemma; exists as an executable witness. a must be nonzero.
bool mignotte_identity_check(const GaussianRationalPoly& p, const GaussianRational& alpha);

// The two naive expansions of ||Q||^2 and |a|^2 ||R||^2. The totals always
// agree; the index-k summands agree only in special cases (|a|^2 = 1, or
// matching adjacent coefficient magnitudes).
struct L1Expansion {
    Rat sum_a;
    Rat sum_b;
    bool termwise_equal = false;
};
L1Expansion expand_L1a_terms(const GaussianRationalPoly& p, const GaussianRational& alpha);

inline constexpr const char* kBoundFormulaId = "mignotte-2^m-l2-v1";

// B bounding the coefficient magnitude of every Z[x] divisor of f.
struct FactorBound {
    Int B;
    std::string formula_id;
    int degree_cap = 0;  // the m in the formula
};

// Smallest integer B with B^2 > 4^m * ||f||^2, m = deg f - 1. Covers all
// proper divisors via |g_i| <= C(m,i) M(g) <= 2^m M(f) <= 2^m ||f||_2.
// Integer square root only, no floating point. deg f >= 1.
FactorBound factor_coeff_bound(const IntPoly& f);

// Smallest n with p^n >= 2B.
unsigned choose_lift_exponent(const Int& p, const Int& B);
unsigned choose_lift_exponent(const Int& p, const FactorBound& bound);

}  // namespace factcert

#endif

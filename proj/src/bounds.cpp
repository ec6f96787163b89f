#include "factcert/bounds.hpp"

#include <stdexcept>

namespace factcert {

namespace {
const GaussianRational kZeroG{};
}

GaussianRational GaussianRational::inverse() const {
    Rat n = norm_sq();
    if (n == 0) throw std::invalid_argument("inverse of zero");
    return {re / n, -im / n};
}

void GaussianRationalPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRationalPoly::GaussianRationalPoly(const IntPoly& f) {
    coeffs_.reserve(f.coeffs().size());
    for (const Int& c : f.coeffs()) coeffs_.push_back({Rat(c), Rat(0)});
}

const GaussianRational& GaussianRationalPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZeroG;
    return coeffs_[static_cast<std::size_t>(i)];
}

GaussianRationalPoly operator*(const GaussianRationalPoly& a, const GaussianRationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return GaussianRationalPoly();
    std::vector<GaussianRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return GaussianRationalPoly(std::move(v));
}

GaussianRationalPoly shift_mul(const GaussianRationalPoly& p, const GaussianRational& c) {
    // Coefficient k of (x+c)P is a_{k-1} + c a_k.
    std::vector<GaussianRational> v(p.coeffs().size() + 1);
    for (int k = 0; k <= p.degree() + 1; ++k)
        v[static_cast<std::size_t>(k)] = p.coeff(k - 1) + c * p.coeff(k);
    return GaussianRationalPoly(std::move(v));
}

Int l2_norm_sq(const IntPoly& f) {
    Int s = 0;
    for (const Int& c : f.coeffs()) s += c * c;
    return s;
}

Rat l2_norm_sq(const GaussianRationalPoly& f) {
    Rat s = 0;
    for (const GaussianRational& c : f.coeffs()) s += c.norm_sq();
    return s;
}

bool mignotte_identity_check(const GaussianRationalPoly& p, const GaussianRational& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("mignotte_identity_check: alpha must be nonzero");
    GaussianRationalPoly q = shift_mul(p, alpha);
    GaussianRationalPoly r = shift_mul(p, alpha.conj().inverse());
    return l2_norm_sq(q) == alpha.norm_sq() * l2_norm_sq(r);
}

L1Expansion expand_L1a_terms(const GaussianRationalPoly& p, const GaussianRational& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("expand_L1a_terms: alpha must be nonzero");
    const Rat anorm = alpha.norm_sq();
    L1Expansion out;
    out.sum_a = 0;
    out.sum_b = 0;
    out.termwise_equal = true;
    const int m = p.degree();
    for (int k = 0; k <= m + 1; ++k) {
        const GaussianRational& prev = p.coeff(k - 1);
        const GaussianRational& cur = p.coeff(k);
        // alpha a_k conj(a_{k-1}) + conj(alpha) a_{k-1} conj(a_k) is real.
        GaussianRational cross = alpha * cur * prev.conj() + alpha.conj() * prev * cur.conj();
        if (cross.im != 0) throw std::logic_error("expand_L1a_terms: cross term not real");
        Rat term_a = prev.norm_sq() + cross.re + anorm * cur.norm_sq();
        Rat term_b = anorm * prev.norm_sq() + cross.re + cur.norm_sq();
        if (term_a != term_b) out.termwise_equal = false;
        out.sum_a += term_a;
        out.sum_b += term_b;
    }
    return out;
}

FactorBound factor_coeff_bound(const IntPoly& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("factor_coeff_bound: constant input");
    const int m = f.degree() - 1;
    Int target = int_pow(4, static_cast<unsigned>(m)) * l2_norm_sq(f);
    // Smallest B with B^2 > target.
    Int b = isqrt(target) + 1;
    return {std::move(b), kBoundFormulaId, m};
}

unsigned choose_lift_exponent(const Int& p, const Int& B) {
    if (p < 2 || B < 1) throw std::invalid_argument("choose_lift_exponent: need p >= 2, B >= 1");
    unsigned n = 1;
    Int q = p;
    const Int twoB = 2 * B;
    while (q < twoB) {
        q *= p;
        ++n;
    }
    return n;
}

unsigned choose_lift_exponent(const Int& p, const FactorBound& bound) {
    return choose_lift_exponent(p, bound.B);
}

}  // namespace factcert

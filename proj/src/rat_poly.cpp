#include "factcert/rat_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace factcert {

namespace {
const Rat kZeroQ = 0;
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly::RatPoly(const IntPoly& f) {
    coeffs_.reserve(f.coeffs().size());
    for (const Int& c : f.coeffs()) coeffs_.emplace_back(c);
}

RatPoly RatPoly::constant(Rat c) {
    std::vector<Rat> v;
    if (c != 0) v.push_back(std::move(c));
    return RatPoly(std::move(v));
}

const Rat& RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZeroQ;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& RatPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

std::optional<IntPoly> RatPoly::to_int_poly() const {
    std::vector<Int> v;
    v.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) {
        if (c.get_den() != 1) return std::nullopt;
        v.push_back(c.get_num());
    }
    return IntPoly(std::move(v));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rat> v(coeffs_);
    for (auto& c : v) c = -c;
    return RatPoly(std::move(v));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPoly(std::move(v));
}

RatPoly operator*(const Rat& c, const RatPoly& a) {
    std::vector<Rat> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return RatPoly(std::move(v));
}

RatPoly derivative(const RatPoly& f) {
    if (f.degree() < 1) return RatPoly();
    std::vector<Rat> v(static_cast<std::size_t>(f.degree()), Rat(0));
    for (int i = 1; i <= f.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = Rat(i) * f.coeff(i);
    return RatPoly(std::move(v));
}

RatDivRem divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {RatPoly(), a};
    std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
    const Rat& lb = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rat c = rem[static_cast<std::size_t>(i)] / lb;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

IntPoly PolyDivRem::int_quotient() const {
    auto q = quotient.to_int_poly();
    if (!q) throw std::logic_error("quotient is not integral");
    return *q;
}

PolyDivRem poly_divrem(const IntPoly& a, const IntPoly& b) {
    auto [q, r] = divrem(RatPoly(a), RatPoly(b));
    PolyDivRem out;
    out.quotient = std::move(q);
    out.remainder = std::move(r);
    out.quotient_integral = out.quotient.to_int_poly().has_value();
    out.remainder_zero = out.remainder.is_zero();
    out.divides = out.quotient_integral && out.remainder_zero;
    return out;
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
    auto dr = poly_divrem(a, b);
    if (!dr.divides) return std::nullopt;
    return dr.int_quotient();
}

RatExtGcd ext_gcd(const RatPoly& a, const RatPoly& b) {
    // Invariant: s*a + t*b = r for each row.
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {RatPoly(), RatPoly(), RatPoly()};
    Rat inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.leading() > 0 ? b : -b;
    if (b.is_zero()) return a.leading() > 0 ? a : -a;
    Int c;
    mpz_gcd(c.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    auto g = ext_gcd(RatPoly(primitive_part(a)), RatPoly(primitive_part(b))).g;
    // g is monic over Q; scale to the primitive integer polynomial.
    Int den = 1;
    for (const Rat& x : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Int> v;
    v.reserve(g.coeffs().size());
    for (const Rat& x : g.coeffs()) v.push_back(Int(x * den));
    return c * primitive_part(IntPoly(std::move(v)));
}

bool bezout_check(const IntPoly& f, const RatPoly& lam, const RatPoly& mu) {
    RatPoly sum = lam * RatPoly(f) + mu * RatPoly(derivative(f));
    return sum.is_one();
}

std::optional<std::pair<RatPoly, RatPoly>> squarefree_witness(const IntPoly& f) {
    auto e = ext_gcd(RatPoly(f), RatPoly(derivative(f)));
    if (e.g.degree() != 0) return std::nullopt;
    return std::make_pair(e.s, e.t);
}

}  // namespace factcert

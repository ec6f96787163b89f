#include "factcert/int_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace factcert {

namespace {
const Int kZero = 0;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    std::vector<Int> v;
    if (c != 0) v.push_back(std::move(c));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(Int c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    if (c == 0) return IntPoly();
    std::vector<Int> v(static_cast<std::size_t>(k) + 1, Int(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int IntPoly::eval(const Int& at) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return IntPoly(std::move(v));
}

// Schoolbook product; asymptotically fast multiplication is out of scope.
IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(v));
}

IntPoly operator*(const Int& c, const IntPoly& a) {
    std::vector<Int> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return IntPoly(std::move(v));
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1) return IntPoly();
    std::vector<Int> v(static_cast<std::size_t>(f.degree()), Int(0));
    for (int i = 1; i <= f.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = Int(i) * f.coeff(i);
    return IntPoly(std::move(v));
}

Int content(const IntPoly& f) {
    Int g = 0;
    for (const Int& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return IntPoly();
    Int c = content(f);
    if (f.leading() < 0) c = -c;
    std::vector<Int> v(f.coeffs());
    for (auto& x : v) x /= c;
    return IntPoly(std::move(v));
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace factcert

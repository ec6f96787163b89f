#include "factcert/mod_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace factcert {

namespace {
const Int kZero = 0;

Int mod_reduce(const Int& a, const Int& q) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());  // r in [0, q)
    return r;
}

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
    if (!(a.modulus() == b.modulus()))
        throw std::invalid_argument("modulus mismatch");
}

void require_prime_field(const ModPoly& f, const char* what) {
    if (!f.modulus().is_prime_field())
        throw std::invalid_argument(std::string(what) + ": modulus must be a prime, not a prime power");
}
}  // namespace

Modulus::Modulus(Int p, unsigned n, unsigned long trial_limit) : p_(std::move(p)), n_(n) {
    if (p_ < 2) throw std::invalid_argument("modulus: p must be > 1");
    if (n_ < 1) throw std::invalid_argument("modulus: exponent must be >= 1");
    if (!passes_trial_division(p_, trial_limit))
        throw std::invalid_argument("modulus: p has a small factor, not a prime");
    q_ = int_pow(p_, n_);
}

void ModPoly::reduce_and_trim() {
    for (auto& c : coeffs_) {
        if (c < 0 || c >= mod_.q()) c = mod_reduce(c, mod_.q());
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPoly::ModPoly(Modulus m, std::vector<Int> coeffs)
    : mod_(std::move(m)), coeffs_(std::move(coeffs)) {
    reduce_and_trim();
}

ModPoly ModPoly::constant(const Modulus& m, const Int& c) {
    return ModPoly(m, std::vector<Int>{c});
}

ModPoly ModPoly::x(const Modulus& m) {
    return ModPoly(m, std::vector<Int>{0, 1});
}

const Int& ModPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Int& ModPoly::leading() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

ModPoly ModPoly::operator-() const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c = -c;
    return ModPoly(mod_, std::move(v));
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return ModPoly(a.mod_, std::move(v));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return ModPoly(a.mod_, std::move(v));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.mod_);
    std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ModPoly(a.mod_, std::move(v));
}

ModPoly operator*(const Int& c, const ModPoly& a) {
    std::vector<Int> v(a.coeffs_);
    for (auto& x : v) x *= c;
    return ModPoly(a.mod_, std::move(v));
}

ModPoly reduce(const IntPoly& f, const Modulus& m) {
    return ModPoly(m, f.coeffs());
}

IntPoly symmetric_lift(const ModPoly& f) {
    const Int& q = f.modulus().q();
    std::vector<Int> v(f.coeffs());
    for (auto& c : v) {
        if (2 * c > q) c -= q;
    }
    return IntPoly(std::move(v));
}

IntPoly plain_lift(const ModPoly& f) {
    return IntPoly(std::vector<Int>(f.coeffs()));
}

ModPoly derivative(const ModPoly& f) {
    if (f.degree() < 1) return ModPoly(f.modulus());
    std::vector<Int> v(static_cast<std::size_t>(f.degree()), Int(0));
    for (int i = 1; i <= f.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = Int(i) * f.coeff(i);
    return ModPoly(f.modulus(), std::move(v));
}

Int inv_mod(const Int& a, const Modulus& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.q().get_mpz_t()))
        throw std::invalid_argument("inv_mod: not invertible");
    return r;
}

ModPoly monic(const ModPoly& f) {
    if (f.is_zero()) return f;
    if (f.is_monic()) return f;
    return inv_mod(f.leading(), f.modulus()) * f;
}

std::pair<ModPoly, ModPoly> divrem(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Modulus& m = a.modulus();
    const Int lb_inv = inv_mod(b.leading(), m);
    const int db = b.degree();
    if (a.degree() < db) return {ModPoly(m), a};
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quo(static_cast<std::size_t>(a.degree() - db) + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
        Int c = mod_reduce(rem[static_cast<std::size_t>(i)] * lb_inv, m.q());
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            Int& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = mod_reduce(slot - c * b.coeff(j), m.q());
        }
    }
    return {ModPoly(m, std::move(quo)), ModPoly(m, std::move(rem))};
}

ModPoly poly_gcd_mod(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    if (!a.modulus().is_prime_field())
        throw std::invalid_argument("poly_gcd_mod: composite modulus");
    ModPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        ModPoly r = divrem(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return monic(r0);
}

ModExtGcd ext_gcd_mod(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    if (!a.modulus().is_prime_field())
        throw std::invalid_argument("ext_gcd_mod: composite modulus");
    const Modulus& m = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(m, 1), s1(m);
    ModPoly t0(m), t1 = ModPoly::constant(m, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        ModPoly s2 = s0 - q * s1;
        ModPoly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Int inv = inv_mod(r0.leading(), m);
    return {inv * r0, inv * s0, inv * t0};
}

ModPoly powmod(const ModPoly& base, const Int& e, const ModPoly& f) {
    require_same_modulus(base, f);
    require_prime_field(f, "powmod");
    if (f.degree() < 1) throw std::invalid_argument("powmod: deg f must be >= 1");
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    ModPoly result = ModPoly::constant(f.modulus(), 1);
    ModPoly b = divrem(base, f).second;
    const std::size_t bits = (e == 0) ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = divrem(result * result, f).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = divrem(result * b, f).second;
    }
    return result;
}

ModPoly powmod_x(const Int& p, unsigned j, const ModPoly& f) {
    require_prime_field(f, "powmod_x");
    if (f.degree() < 1) throw std::invalid_argument("powmod_x: deg f must be >= 1");
    if (p != f.modulus().p()) throw std::invalid_argument("powmod_x: p differs from the modulus");
    return powmod(ModPoly::x(f.modulus()), int_pow(p, j), f);
}

bool poly_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        int c = cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace factcert

#include "factcert/hensel.hpp"

#include <algorithm>
#include <stdexcept>

namespace factcert {

namespace {

// Reinterpret canonical coefficients at another modulus of the same p.
ModPoly rebase(const ModPoly& f, const Modulus& m) {
    return ModPoly(m, f.coeffs());
}

// Bezout pair for monic coprime g, h mod p, normalized so that
// s*g + t*h = 1 with deg s < deg h and deg t < deg g.
std::pair<ModPoly, ModPoly> normalized_bezout(const ModPoly& g, const ModPoly& h) {
    auto e = ext_gcd_mod(g, h);
    if (!e.g.is_one()) throw std::invalid_argument("hensel: factors not coprime mod p");
    ModPoly s = divrem(e.s, h).second;
    auto [t, r] = divrem(ModPoly::constant(g.modulus(), 1) - s * g, h);
    if (!r.is_zero()) throw std::logic_error("hensel: bezout normalization failed");
    return {std::move(s), std::move(t)};
}

// Core quadratic lift: target is monic mod p^n; g, h are monic mod p with
// g*h = target (mod p). Returns monic (G, H) mod p^n.
std::pair<ModPoly, ModPoly> lift_monic_pair(const ModPoly& target, const ModPoly& g,
                                            const ModPoly& h) {
    const Int& p = g.modulus().p();
    const unsigned n = target.modulus().n();
    auto [s, t] = normalized_bezout(g, h);
    ModPoly G = g, H = h, S = s, T = t;
    unsigned k = 1;
    while (k < n) {
        const unsigned k2 = std::min(2 * k, n);
        Modulus mk(p, k2);
        ModPoly Fk = rebase(target, mk);
        G = rebase(G, mk);
        H = rebase(H, mk);
        S = rebase(S, mk);
        T = rebase(T, mk);
        ModPoly e = Fk - G * H;
        auto [q, r] = divrem(S * e, H);
        ModPoly G1 = G + T * e + q * G;
        ModPoly H1 = H + r;
        ModPoly b = S * G1 + T * H1 - ModPoly::constant(mk, 1);
        auto [c, d] = divrem(S * b, H1);
        S = S - d;
        T = T - T * b - c * G1;
        G = std::move(G1);
        H = std::move(H1);
        if (G.degree() != g.degree() || H.degree() != h.degree() || !G.is_monic() ||
            !H.is_monic())
            throw std::logic_error("hensel: lift step lost degree or monicity");
        k = k2;
    }
    return {std::move(G), std::move(H)};
}

void lift_tree(const ModPoly& target, const std::vector<ModPoly>& base, std::size_t lo,
               std::size_t hi, std::vector<ModPoly>& out) {
    if (hi - lo == 1) {
        out[lo] = target;
        return;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    const Modulus& mp = base[lo].modulus();
    ModPoly left = ModPoly::constant(mp, 1);
    for (std::size_t i = lo; i < mid; ++i) left = left * base[i];
    ModPoly right = ModPoly::constant(mp, 1);
    for (std::size_t i = mid; i < hi; ++i) right = right * base[i];
    auto [lp, rp] = lift_monic_pair(target, left, right);
    lift_tree(lp, base, lo, mid, out);
    lift_tree(rp, base, mid, hi, out);
}

}  // namespace

std::pair<ModPoly, ModPoly> hensel_lift_pair(const IntPoly& f, const ModPoly& g,
                                             const ModPoly& h, unsigned target_n) {
    if (!(g.modulus() == h.modulus()) || !g.modulus().is_prime_field())
        throw std::invalid_argument("hensel_lift_pair: g, h must share a prime modulus");
    if (g.degree() < 1 || h.degree() < 1)
        throw std::invalid_argument("hensel_lift_pair: factors must be nonconstant");
    if (target_n < 1) throw std::invalid_argument("hensel_lift_pair: target exponent must be >= 1");
    const Modulus& mp = g.modulus();
    const Int& p = mp.p();
    if (f.is_zero() || f.leading() % p == 0)
        throw std::invalid_argument("hensel_lift_pair: p divides the leading coefficient of f");
    if (!(reduce(f, mp) == g * h))
        throw std::invalid_argument("hensel_lift_pair: f != g*h (mod p)");

    Modulus mt(p, target_n);
    ModPoly F = monic(reduce(f, mt));
    auto [G, H] = lift_monic_pair(F, monic(g), monic(h));
    // Distribute the unit so G = g and H = h persist mod p.
    Int a = g.leading();  // in [0, p), invertible
    Int b;
    {
        ModPoly fa = reduce(f, mt);
        b = fa.leading() * inv_mod(a, mt);
    }
    return {a * G, b * H};
}

LiftedFactorization hensel_lift_multi(const IntPoly& f, std::vector<ModPoly> base,
                                      unsigned target_n) {
    if (base.empty()) throw std::invalid_argument("hensel_lift_multi: empty base");
    const Modulus mp = base.front().modulus();
    if (!mp.is_prime_field())
        throw std::invalid_argument("hensel_lift_multi: base must live mod a prime");
    for (const ModPoly& b : base) {
        if (!(b.modulus() == mp)) throw std::invalid_argument("hensel_lift_multi: modulus mismatch");
        if (!b.is_monic() || b.degree() < 1)
            throw std::invalid_argument("hensel_lift_multi: base factors must be monic and nonconstant");
    }
    if (target_n < 1) throw std::invalid_argument("hensel_lift_multi: target exponent must be >= 1");
    const Int& p = mp.p();
    if (f.is_zero() || f.leading() % p == 0)
        throw std::invalid_argument("hensel_lift_multi: p divides the leading coefficient of f");

    std::sort(base.begin(), base.end(),
              [](const ModPoly& a, const ModPoly& b) { return poly_less(a, b); });
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            if (!poly_gcd_mod(base[i], base[j]).is_one())
                throw std::invalid_argument("hensel_lift_multi: base factors not pairwise coprime");

    ModPoly prod = ModPoly::constant(mp, 1);
    for (const ModPoly& b : base) prod = prod * b;
    ModPoly fp = reduce(f, mp);
    if (!(fp == fp.leading() * prod))
        throw std::invalid_argument("hensel_lift_multi: unit * prod(base) != f (mod p)");

    Modulus mt(p, target_n);
    ModPoly F = monic(reduce(f, mt));
    LiftedFactorization out{mt, {}, {}, reduce(f, mt).leading()};
    out.factors.assign(base.size(), ModPoly(mt));
    lift_tree(F, base, 0, base.size(), out.factors);
    out.base_factors = std::move(base);
    return out;
}

}  // namespace factcert

#include "factcert/modfactor.hpp"

#include <algorithm>
#include <stdexcept>

namespace factcert {

namespace {

constexpr int kSplitRetryLimit = 64;

void require_prime_field(const ModPoly& f, const char* what) {
    if (!f.modulus().is_prime_field())
        throw std::invalid_argument(std::string(what) + ": composite modulus");
}

ModPoly random_poly_below(Rng& rng, const Modulus& m, int degree_bound) {
    // Uniform polynomial of degree < degree_bound (possibly zero).
    std::vector<Int> v;
    v.reserve(static_cast<std::size_t>(degree_bound));
    for (int i = 0; i < degree_bound; ++i) v.push_back(rng.below(m.p()));
    return ModPoly(m, std::move(v));
}

// One nontrivial split attempt on v (a product of >= 2 irreducibles of
// degree j). Returns a proper monic divisor, or zero on a failed attempt.
ModPoly split_attempt(const ModPoly& v, int j, Rng& rng) {
    const Modulus& m = v.modulus();
    ModPoly r = random_poly_below(rng, m, v.degree());
    if (r.degree() < 1) return ModPoly(m);
    ModPoly g = poly_gcd_mod(v, r);
    if (g.degree() > 0 && g.degree() < v.degree()) return g;
    if (m.p() == 2) {
        // Additive trace map T(r) = r + r^2 + ... + r^(2^(j-1)) mod v.
        ModPoly acc = r, t = r;
        for (int i = 1; i < j; ++i) {
            acc = divrem(acc * acc, v).second;
            t = t + acc;
        }
        g = poly_gcd_mod(v, t);
    } else {
        Int e = (int_pow(m.p(), static_cast<unsigned>(j)) - 1) / 2;
        ModPoly w = powmod(r, e, v) - ModPoly::constant(m, 1);
        g = poly_gcd_mod(v, w);
    }
    if (g.degree() > 0 && g.degree() < v.degree()) return g;
    return ModPoly(m);
}

std::vector<ModPoly> equal_degree_split_rng(const ModPoly& u, int j, Rng& rng) {
    const Modulus& m = u.modulus();
    std::vector<ModPoly> done;
    std::vector<ModPoly> pending;
    ModPoly start = monic(u);
    if (start.degree() > 0) pending.push_back(std::move(start));
    while (!pending.empty()) {
        ModPoly v = std::move(pending.back());
        pending.pop_back();
        if (v.degree() == j) {
            done.push_back(std::move(v));
            continue;
        }
        if (v.degree() % j != 0)
            throw std::invalid_argument("equal_degree_split: degree not a multiple of the class");
        ModPoly g(m);
        for (int attempt = 0; attempt < kSplitRetryLimit; ++attempt) {
            g = split_attempt(v, j, rng);
            if (!g.is_zero()) break;
        }
        if (g.is_zero())
            throw std::invalid_argument(
                "equal_degree_split: no split found; input is not a square-free "
                "product of degree-j irreducibles");
        pending.push_back(divrem(v, g).first);
        pending.push_back(std::move(g));
    }
    std::sort(done.begin(), done.end(),
              [](const ModPoly& a, const ModPoly& b) { return poly_less(a, b); });
    return done;
}

// Distinct-degree classes only: pairs (j, u_j) with u_j != 1, for monic
// square-free f.
std::vector<std::pair<int, ModPoly>> ddf_classes(const ModPoly& f) {
    const Modulus& m = f.modulus();
    std::vector<std::pair<int, ModPoly>> parts;
    ModPoly fj = f;
    for (int j = 1; fj.degree() >= 1; ++j) {
        ModPoly h = powmod_x(m.p(), static_cast<unsigned>(j), fj);
        ModPoly u = poly_gcd_mod(fj, h - ModPoly::x(m));
        if (u.degree() >= 1) {
            fj = divrem(fj, u).first;
            parts.emplace_back(j, std::move(u));
        }
    }
    return parts;
}

// Square-free decomposition over Z/p for monic f: pairwise-coprime
// square-free monic parts with multiplicities. Handles vanishing derivative
// via p-th roots.
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(ModPoly f) {
    const Modulus& m = f.modulus();
    const Int& p = m.p();
    std::vector<std::pair<ModPoly, unsigned>> out;
    unsigned pe = 1;
    while (f.degree() >= 1) {
        ModPoly c = poly_gcd_mod(f, derivative(f));
        ModPoly w = divrem(f, c).first;
        unsigned i = 1;
        while (!w.is_one()) {
            ModPoly y = poly_gcd_mod(w, c);
            ModPoly z = divrem(w, y).first;
            if (!z.is_one()) out.emplace_back(std::move(z), i * pe);
            w = std::move(y);
            c = divrem(c, w).first;
            ++i;
        }
        if (c.degree() >= 1) {
            // c(x) = g(x^p); over the prime field the p-th root just
            // contracts exponents (a^p = a).
            if (!p.fits_ulong_p())
                throw std::invalid_argument("squarefree decomposition: p too large for p-th root step");
            unsigned long pl = p.get_ui();
            std::vector<Int> root((static_cast<unsigned long>(c.degree()) / pl) + 1, Int(0));
            for (int k = 0; k <= c.degree(); ++k) {
                if (c.coeff(k) == 0) continue;
                if (static_cast<unsigned long>(k) % pl != 0)
                    throw std::logic_error("squarefree decomposition: derivative-free part is not a p-th power");
                root[static_cast<unsigned long>(k) / pl] = c.coeff(k);
            }
            f = ModPoly(m, std::move(root));
            pe *= static_cast<unsigned>(pl);
        } else {
            break;
        }
    }
    return out;
}

}  // namespace

bool squarefree_mod_p(const ModPoly& f) {
    require_prime_field(f, "squarefree_mod_p");
    if (f.is_zero()) throw std::invalid_argument("squarefree_mod_p: zero polynomial");
    return poly_gcd_mod(f, derivative(f)).is_one();
}

std::vector<DegreePart> distinct_degree_split(const ModPoly& f, std::uint64_t rng_seed) {
    require_prime_field(f, "distinct_degree_split");
    if (f.degree() < 1) throw std::invalid_argument("distinct_degree_split: deg f must be >= 1");
    if (!squarefree_mod_p(f))
        throw std::invalid_argument("distinct_degree_split: input is not square-free");
    Rng rng(rng_seed);
    std::vector<DegreePart> parts;
    for (auto& [j, u] : ddf_classes(monic(f))) {
        DegreePart part{j, u, equal_degree_split_rng(u, j, rng)};
        parts.push_back(std::move(part));
    }
    return parts;
}

std::vector<ModPoly> equal_degree_split(const ModPoly& u, int degree_class,
                                        std::uint64_t rng_seed) {
    require_prime_field(u, "equal_degree_split");
    if (degree_class < 1) throw std::invalid_argument("equal_degree_split: degree class must be >= 1");
    Rng rng(rng_seed);
    return equal_degree_split_rng(u, degree_class, rng);
}

bool irreducible_mod_p(const ModPoly& f) {
    require_prime_field(f, "irreducible_mod_p");
    if (f.degree() < 1) throw std::invalid_argument("irreducible_mod_p: deg f must be >= 1");
    const Modulus& m = f.modulus();
    ModPoly g = monic(f);
    for (int j = 1; j <= g.degree() / 2; ++j) {
        ModPoly h = powmod_x(m.p(), static_cast<unsigned>(j), g);
        if (!poly_gcd_mod(g, h - ModPoly::x(m)).is_one()) return false;
    }
    return true;
}

ModFactorization factor_mod_p(const ModPoly& f, std::uint64_t rng_seed) {
    require_prime_field(f, "factor_mod_p");
    if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
    ModFactorization out;
    out.unit = f.leading();
    if (f.degree() < 1) return out;
    Rng rng(rng_seed);
    for (auto& [part, mult] : squarefree_decomposition(monic(f))) {
        for (auto& [j, u] : ddf_classes(part)) {
            for (auto& irr : equal_degree_split_rng(u, j, rng))
                out.factors.push_back({std::move(irr), mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const ModFactor& a, const ModFactor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

}  // namespace factcert

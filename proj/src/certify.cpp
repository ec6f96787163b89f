#include "factcert/certify.hpp"

#include <algorithm>
#include <numeric>

#include "factcert/bounds.hpp"
#include "factcert/hensel.hpp"
#include "factcert/modfactor.hpp"

namespace factcert {

namespace {

// Enumerates proper nonempty subsets of {0..count-1} by cardinality
// ascending, then lexicographically, calling visit(indices) until it
// returns false.
template <typename Visit>
void for_each_proper_subset(std::size_t count, Visit&& visit) {
    for (std::size_t size = 1; size + 1 <= count; ++size) {
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (;;) {
            if (!visit(idx)) return;
            // Next combination in lexicographic order.
            std::size_t i = size;
            bool advanced = false;
            while (i-- > 0) {
                if (idx[i] + (size - i) < count) {
                    ++idx[i];
                    for (std::size_t k = i + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
}

// Candidate integer divisor for a subset of lifted factors: the symmetric
// lift of lc(f) * prod(subset) mod p^n, taken primitive.
IntPoly subset_candidate(const IntPoly& f, const std::vector<ModPoly>& lifted,
                         const std::vector<std::size_t>& subset) {
    const Modulus& m = lifted.front().modulus();
    ModPoly prod = ModPoly::constant(m, f.leading());
    for (std::size_t i : subset) prod = prod * lifted[i];
    return primitive_part(symmetric_lift(prod));
}

struct PreMusserBuild {
    PreMusserCert cert;
    std::vector<ModPoly> lifted;  // mod p^n, canonical order
};

// Shared machinery for pre-Musser and complex builds. When
// residual_degrees is null every proper subset is scanned (P.4); otherwise
// only subsets whose degrees sum into the residual set (C.1).
PreMusserBuild build_lift_and_scan(const IntPoly& f, const Int& p,
                                   const std::set<int>* residual_degrees,
                                   std::uint64_t seed) {
    if (f.degree() < 1) throw std::invalid_argument("certificate build: constant polynomial");
    Modulus mp(p);
    if (f.leading() % p == 0)
        throw std::invalid_argument("certificate build: p divides the leading coefficient");
    ModPoly fp = reduce(f, mp);
    if (!squarefree_mod_p(fp))
        throw std::invalid_argument("certificate build: f is not square-free mod p");

    auto fac = factor_mod_p(fp, seed);
    std::vector<ModPoly> base;
    base.reserve(fac.factors.size());
    for (auto& mf : fac.factors) base.push_back(std::move(mf.poly));

    FactorBound bound = factor_coeff_bound(f);
    unsigned n = choose_lift_exponent(p, bound);
    LiftedFactorization lift = hensel_lift_multi(f, std::move(base), n);

    const IntPoly fpp = primitive_part(f);
    for_each_proper_subset(lift.factors.size(), [&](const std::vector<std::size_t>& subset) {
        if (residual_degrees) {
            int total = 0;
            for (std::size_t i : subset) total += lift.factors[i].degree();
            if (!residual_degrees->contains(total)) return true;
        }
        IntPoly cand = subset_candidate(f, lift.factors, subset);
        if (cand.degree() >= 1 && poly_divrem(fpp, cand).divides)
            throw FoundFactor(std::move(cand));
        return true;
    });

    PreMusserBuild out;
    out.cert.p = p;
    out.cert.n = n;
    out.cert.formula_id = bound.formula_id;
    for (const ModPoly& g : lift.factors) out.cert.lifted_factors.push_back(symmetric_lift(g));
    out.lifted = std::move(lift.factors);
    return out;
}

// Trial index with the fewest factors, ties to the smallest prime.
std::size_t fewest_factors_trial(const std::vector<PrimeTrial>& trials) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < trials.size(); ++i) {
        if (trials[i].factors.size() < trials[best].factors.size() ||
            (trials[i].factors.size() == trials[best].factors.size() &&
             trials[i].p < trials[best].p))
            best = i;
    }
    return best;
}

std::set<int> intersect_degree_sets(const std::vector<PrimeTrial>& trials) {
    std::set<int> inter;
    bool first = true;
    for (const PrimeTrial& t : trials) {
        std::vector<int> degs;
        degs.reserve(t.factors.size());
        for (const ModPoly& g : t.factors) degs.push_back(g.degree());
        DegreeSet ds = degree_compat_set(degs);
        if (first) {
            inter = std::move(ds.achievable);
            first = false;
        } else {
            std::set<int> merged;
            for (int k : inter)
                if (ds.achievable.contains(k)) merged.insert(k);
            inter = std::move(merged);
        }
    }
    return inter;
}

// Irreducible factors of a square-free primitive g (positive leading
// coefficient), via Zassenhaus steps 1-H.
std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& g, std::uint64_t seed) {
    std::vector<IntPoly> out;
    if (g.degree() == 1) {
        out.push_back(g);
        return out;
    }
    // Step 1: a prime preserving degree and square-freeness.
    Int p = 1;
    std::optional<Modulus> mp;
    for (;;) {
        p = next_prime(p);
        if (g.leading() % p == 0) continue;
        Modulus m(p);
        if (squarefree_mod_p(reduce(g, m))) {
            mp = m;
            break;
        }
    }
    auto fac = factor_mod_p(reduce(g, *mp), seed);
    if (fac.factors.size() == 1) {
        out.push_back(g);
        return out;
    }
    std::vector<ModPoly> base;
    base.reserve(fac.factors.size());
    for (auto& mf : fac.factors) base.push_back(std::move(mf.poly));

    FactorBound bound = factor_coeff_bound(g);
    unsigned n = choose_lift_exponent(p, bound);
    LiftedFactorization lift = hensel_lift_multi(g, std::move(base), n);

    // Step H: subsets by cardinality, removing true factors as found.
    std::vector<std::size_t> remaining(lift.factors.size());
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    IntPoly cur = g;
    std::size_t size = 1;
    while (2 * size <= remaining.size()) {
        bool removed = false;
        for_each_proper_subset(remaining.size(), [&](const std::vector<std::size_t>& subset) {
            if (subset.size() < size) return true;
            if (subset.size() > size) return false;  // sizes are ascending; stop
            std::vector<std::size_t> chosen;
            chosen.reserve(subset.size());
            for (std::size_t i : subset) chosen.push_back(remaining[i]);
            ModPoly prod = ModPoly::constant(lift.modulus, cur.leading());
            for (std::size_t i : chosen) prod = prod * lift.factors[i];
            IntPoly cand = primitive_part(symmetric_lift(prod));
            if (cand.degree() < 1) return true;
            auto dr = poly_divrem(cur, cand);
            if (!dr.divides) return true;
            out.push_back(cand);
            cur = dr.int_quotient();
            std::vector<std::size_t> next;
            for (std::size_t i : remaining)
                if (std::find(chosen.begin(), chosen.end(), i) == chosen.end())
                    next.push_back(i);
            remaining = std::move(next);
            removed = true;
            return false;  // restart the scan against the reduced cur
        });
        if (!removed) ++size;
        if (remaining.empty()) break;
    }
    if (cur.degree() >= 1) out.push_back(primitive_part(cur));
    return out;
}

Certificate certify_irreducible(const IntPoly& g, const CertifyOptions& options) {
    if (auto simple = try_simple(g, first_primes(options.prime_budget))) return *simple;
    PostMusserSearch search = try_post_musser(g, options.trials, options.seed);
    if (search.cert) return *search.cert;
    std::set<int> inter = intersect_degree_sets(search.trials);
    std::set<int> residual;
    for (int k : inter)
        if (k != 0 && k != g.degree()) residual.insert(k);
    // Complex pays off only when the trials ruled out at least one degree;
    // otherwise plain pre-Musser with the best trial prime.
    bool ruled_out_some = static_cast<int>(residual.size()) < g.degree() - 1;
    if (ruled_out_some) return build_complex(g, search.trials, options.seed);
    return build_pre_musser(g, search.trials[fewest_factors_trial(search.trials)].p,
                            options.seed);
}

}  // namespace

DegreeSet degree_compat_set(const std::vector<int>& factor_degrees) {
    int total = 0;
    for (int d : factor_degrees) {
        if (d < 1) throw std::invalid_argument("degree_compat_set: degrees must be >= 1");
        total += d;
    }
    std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
    reach[0] = 1;
    for (int d : factor_degrees)
        for (int s = total; s >= d; --s)
            if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = 1;
    DegreeSet out;
    for (int s = 0; s <= total; ++s)
        if (reach[static_cast<std::size_t>(s)]) out.achievable.insert(s);
    return out;
}

std::vector<Int> first_primes(int count) {
    std::vector<Int> out;
    Int p = 1;
    for (int i = 0; i < count; ++i) {
        p = next_prime(p);
        out.push_back(p);
    }
    return out;
}

std::optional<Certificate> try_simple(const IntPoly& f, const std::vector<Int>& prime_budget) {
    if (f.degree() < 1) throw std::invalid_argument("try_simple: constant polynomial");
    for (const Int& p : prime_budget) {
        if (f.leading() % p == 0) continue;
        if (irreducible_mod_p(reduce(f, Modulus(p)))) return Certificate{SimpleCert{p}};
    }
    return std::nullopt;
}

PostMusserSearch try_post_musser(const IntPoly& f, int trial_count, std::uint64_t seed) {
    if (f.degree() < 1) throw std::invalid_argument("try_post_musser: constant polynomial");
    if (poly_gcd(f, derivative(f)).degree() >= 1)
        throw std::invalid_argument("try_post_musser: f is not square-free over Z");
    PostMusserSearch out;
    std::set<int> inter;
    Int p = 1;
    while (static_cast<int>(out.trials.size()) < trial_count) {
        p = next_prime(p);
        if (f.leading() % p == 0) continue;
        Modulus mp(p);
        ModPoly fp = reduce(f, mp);
        if (!squarefree_mod_p(fp)) continue;
        auto fac = factor_mod_p(fp, seed);
        PrimeTrial trial;
        trial.p = p;
        std::vector<int> degs;
        for (auto& mf : fac.factors) {
            degs.push_back(mf.poly.degree());
            trial.factors.push_back(std::move(mf.poly));
        }
        out.trials.push_back(std::move(trial));
        DegreeSet ds = degree_compat_set(degs);
        if (out.trials.size() == 1) {
            inter = std::move(ds.achievable);
        } else {
            std::set<int> merged;
            for (int k : inter)
                if (ds.achievable.contains(k)) merged.insert(k);
            inter = std::move(merged);
        }
        if (inter == std::set<int>{0, f.degree()}) {
            out.cert = Certificate{PostMusserCert{out.trials}};
            return out;
        }
    }
    return out;
}

Certificate build_pre_musser(const IntPoly& f, const Int& p, std::uint64_t seed) {
    return Certificate{build_lift_and_scan(f, p, nullptr, seed).cert};
}

Certificate build_complex(const IntPoly& f, const std::vector<PrimeTrial>& trials,
                          std::uint64_t seed) {
    if (trials.empty()) throw std::invalid_argument("build_complex: no trials");
    std::set<int> inter = intersect_degree_sets(trials);
    ComplexCert cert;
    for (int k : inter)
        if (k != 0 && k != f.degree()) cert.residual_degrees.insert(k);
    const Int& p = trials[fewest_factors_trial(trials)].p;
    cert.pre = build_lift_and_scan(f, p, &cert.residual_degrees, seed).cert;
    cert.post.trials = trials;
    return Certificate{cert};
}

ZFactorization factor_over_z(const IntPoly& f, std::uint64_t seed) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("factor_over_z: input must be nonconstant");
    ZFactorization out;
    out.content = content(f);
    if (f.leading() < 0) out.content = -out.content;
    IntPoly fp = primitive_part(f);

    // Yun's algorithm over Z groups repeated factors.
    IntPoly d = poly_gcd(fp, derivative(fp));
    std::vector<std::pair<IntPoly, unsigned>> squarefree_parts;
    if (d.degree() < 1) {
        squarefree_parts.emplace_back(fp, 1);
    } else {
        IntPoly w = exact_quotient(fp, d).value();
        IntPoly y = exact_quotient(derivative(fp), d).value();
        IntPoly z = y - derivative(w);
        unsigned i = 1;
        while (w.degree() >= 1) {
            IntPoly h = poly_gcd(w, z);
            if (h.degree() >= 1) squarefree_parts.emplace_back(h, i);
            w = exact_quotient(w, h).value();
            y = exact_quotient(z, h).value();
            z = y - derivative(w);
            ++i;
        }
    }

    for (auto& [part, mult] : squarefree_parts) {
        for (IntPoly& irr : factor_squarefree_primitive(part, seed))
            out.factors.push_back({std::move(irr), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const ZFactor& a, const ZFactor& b) { return poly_less(a.poly, b.poly); });
    return out;
}

FactorisationResult factor_and_certify(const IntPoly& f, const CertifyOptions& options) {
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("factor_and_certify: input must be nonconstant");
    FactorisationResult out;
    out.f = f;
    out.squarefree_witness = squarefree_witness(f);

    ZFactorization fac = factor_over_z(f, options.seed);
    out.content = fac.content;
    for (ZFactor& zf : fac.factors) {
        CertifiedFactor cf;
        cf.cert = certify_irreducible(zf.poly, options);
        cf.poly = std::move(zf.poly);
        cf.multiplicity = zf.multiplicity;
        out.factors.push_back(std::move(cf));
    }
    return out;
}

}  // namespace factcert

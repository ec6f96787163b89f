#include "factcert/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "factcert/bounds.hpp"
#include "factcert/modfactor.hpp"
#include "factcert/parallel.hpp"

// The verifier re-establishes every assertion from f and the certificate
// alone. It deliberately shares no computation with the generator: degree
// sets are recomputed locally, gcd loops are re-run, and the bound is
// re-derived from the formula_id. Lifting and factor search never run here.

namespace factcert {

namespace {

const std::vector<std::string> kTrustedBase = {
    "primality of listed primes (trial division sanity check only)",
    std::string("soundness of bound formula ") + kBoundFormulaId,
};

std::string join_indices(const std::vector<std::size_t>& idx) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "}";
    return os.str();
}

// Local subset-sum closure of the listed factor degrees.
std::set<int> subset_sums(const std::vector<int>& degrees) {
    int total = 0;
    for (int d : degrees) total += d;
    std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
    reach[0] = 1;
    for (int d : degrees)
        for (int s = total; s >= d; --s)
            if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = 1;
    std::set<int> out;
    for (int s = 0; s <= total; ++s)
        if (reach[static_cast<std::size_t>(s)]) out.insert(s);
    return out;
}

bool in_symmetric_range(const Int& c, const Int& q) {
    return 2 * c > -q && 2 * c <= q;
}

// Canonical enumeration (cardinality ascending, then lexicographic) of
// proper nonempty subsets as index vectors.
std::vector<std::vector<std::size_t>> proper_subsets(std::size_t count) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t size = 1; size + 1 <= count; ++size) {
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (;;) {
            out.push_back(idx);
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
    return out;
}

// Subset-product divisibility scan shared by P.4 and C.1. The factors are
// the certificate's lifted polynomials reduced back mod p^n; a subset
// "hits" when primitive_part(symmetric_lift(lc(f) * prod)) divides the
// primitive part of f over Z.
CheckResult subset_scan(const char* assertion_id, const IntPoly& f, const Modulus& mq,
                        const std::vector<IntPoly>& lifted_factors,
                        const std::set<int>* wanted_degrees, const VerifyOptions& options) {
    CheckResult r{assertion_id, false, ""};
    const std::size_t k = lifted_factors.size();
    if (k >= 63 || ((std::uint64_t{1} << k) - 2) > options.max_subsets) {
        r.witness = "subset budget exceeded";
        return r;
    }
    std::vector<ModPoly> reduced;
    reduced.reserve(k);
    for (const IntPoly& g : lifted_factors) reduced.push_back(reduce(g, mq));
    const IntPoly fpp = primitive_part(f);
    const Int lc = f.leading();

    std::vector<std::vector<std::size_t>> subsets = proper_subsets(k);
    if (wanted_degrees) {
        std::erase_if(subsets, [&](const std::vector<std::size_t>& s) {
            int total = 0;
            for (std::size_t i : s) total += lifted_factors[i].degree();
            return !wanted_degrees->contains(total);
        });
    }
    std::vector<char> divides_flag(subsets.size(), 0);
    parallel_for(subsets.size(), options.threads, [&](std::size_t si) {
        ModPoly prod = ModPoly::constant(mq, lc);
        for (std::size_t i : subsets[si]) prod = prod * reduced[i];
        IntPoly cand = primitive_part(symmetric_lift(prod));
        if (cand.degree() >= 1 && poly_divrem(fpp, cand).divides) divides_flag[si] = 1;
    });
    for (std::size_t si = 0; si < subsets.size(); ++si) {
        if (divides_flag[si]) {
            r.witness = "subset " + join_indices(subsets[si]) + " divides f";
            return r;
        }
    }
    r.passed = true;
    return r;
}

// P.1, P.2, BOUND-RECOMPUTE, P.3, and optionally P.4. Every check runs.
std::vector<CheckResult> pre_musser_checks(const IntPoly& f, const PreMusserCert& cert,
                                           const VerifyOptions& options, bool include_p4) {
    std::vector<CheckResult> checks;

    std::optional<Modulus> mq, mp;
    std::string modulus_error;
    try {
        mp = Modulus(cert.p);
        mq = Modulus(cert.p, cert.n);
    } catch (const std::exception& e) {
        modulus_error = e.what();
    }
    if (!mq) {
        checks.push_back({"P.1", false, "bad modulus: " + modulus_error});
        checks.push_back({"P.2", false, "bad modulus"});
        checks.push_back({"BOUND-RECOMPUTE", false, "bad modulus"});
        checks.push_back({"P.3", false, "bad modulus"});
        if (include_p4) checks.push_back({"P.4", false, "bad modulus"});
        return checks;
    }

    // P.1: the factors, reduced mod p^n with the leading unit, multiply to f.
    {
        CheckResult r{"P.1", false, ""};
        if (f.is_zero() || f.degree() < 1) {
            r.witness = "f is constant";
        } else if (f.leading() % cert.p == 0) {
            r.witness = "p divides the leading coefficient of f";
        } else {
            bool shape_ok = true;
            for (std::size_t j = 0; j < cert.lifted_factors.size() && shape_ok; ++j) {
                const IntPoly& g = cert.lifted_factors[j];
                if (g.degree() < 1 || g.leading() != 1) {
                    r.witness = "factor " + std::to_string(j) + " is not monic nonconstant";
                    shape_ok = false;
                    break;
                }
                for (const Int& c : g.coeffs()) {
                    if (!in_symmetric_range(c, mq->q())) {
                        r.witness = "factor " + std::to_string(j) +
                                    " has a coefficient outside (-p^n/2, p^n/2]";
                        shape_ok = false;
                        break;
                    }
                }
            }
            if (shape_ok) {
                ModPoly prod = ModPoly::constant(*mq, f.leading());
                for (const IntPoly& g : cert.lifted_factors) prod = prod * reduce(g, *mq);
                if (prod == reduce(f, *mq)) {
                    r.passed = true;
                } else {
                    r.witness = "lc(f) * prod(f_j) != f (mod p^n)";
                }
            }
        }
        checks.push_back(std::move(r));
    }

    // P.2: each listed factor is irreducible mod p.
    {
        CheckResult r{"P.2", true, ""};
        for (std::size_t j = 0; j < cert.lifted_factors.size(); ++j) {
            try {
                ModPoly gj = reduce(cert.lifted_factors[j], *mp);
                if (gj.degree() != cert.lifted_factors[j].degree() || !irreducible_mod_p(gj)) {
                    r.passed = false;
                    r.witness = "factor " + std::to_string(j) + " is reducible mod p";
                    break;
                }
            } catch (const std::exception& e) {
                r.passed = false;
                r.witness = "factor " + std::to_string(j) + ": " + e.what();
                break;
            }
        }
        checks.push_back(std::move(r));
    }

    // BOUND-RECOMPUTE: the bound must be re-derivable from the formula_id.
    std::optional<FactorBound> bound;
    {
        CheckResult r{"BOUND-RECOMPUTE", false, ""};
        if (cert.formula_id != kBoundFormulaId) {
            r.witness = "unknown formula_id: " + cert.formula_id;
        } else if (f.degree() < 1) {
            r.witness = "f is constant";
        } else {
            bound = factor_coeff_bound(f);
            r.passed = true;
        }
        checks.push_back(std::move(r));
    }

    // P.3: p^n >= 2B, so any integer factor coefficient fits the symmetric
    // range.
    {
        CheckResult r{"P.3", false, ""};
        if (!bound) {
            r.witness = "cannot re-derive the bound";
        } else if (mq->q() >= 2 * bound->B) {
            r.passed = true;
        } else {
            r.witness = "p^n < 2B (B = " + bound->B.get_str() + ")";
        }
        checks.push_back(std::move(r));
    }

    if (include_p4) {
        if (f.is_zero() || f.degree() < 1) {
            checks.push_back({"P.4", false, "f is constant"});
        } else {
            checks.push_back(subset_scan("P.4", f, *mq, cert.lifted_factors, nullptr, options));
        }
    }
    return checks;
}

// S.1 and S.2 across trials; S.3 optionally (the complex certificate drops
// it in favor of C.1).
std::vector<CheckResult> post_musser_checks(const IntPoly& f, const PostMusserCert& cert,
                                            bool include_s3) {
    CheckResult s1{"S.1", true, ""};
    CheckResult s2{"S.2", true, ""};
    std::vector<std::set<int>> degree_sets;

    if (f.is_zero() || f.degree() < 1) {
        s1.passed = false;
        s1.witness = "f is constant";
    }
    for (std::size_t i = 0; i < cert.trials.size() && s1.passed; ++i) {
        const PrimeTrial& t = cert.trials[i];
        const std::string tag = "trial " + std::to_string(i);
        try {
            Modulus mp(t.p);
            if (f.leading() % t.p == 0) {
                s1.passed = false;
                s1.witness = tag + ": p divides the leading coefficient of f";
                break;
            }
            std::vector<int> degs;
            ModPoly prod = ModPoly::constant(mp, f.leading());
            for (std::size_t j = 0; j < t.factors.size(); ++j) {
                const ModPoly& g = t.factors[j];
                if (g.degree() < 1 || !g.is_monic()) {
                    s1.passed = false;
                    s1.witness = tag + ": factor " + std::to_string(j) + " not monic nonconstant";
                    break;
                }
                degs.push_back(g.degree());
                prod = prod * g;
            }
            if (!s1.passed) break;
            if (!(prod == reduce(f, mp))) {
                s1.passed = false;
                s1.witness = tag + ": lc(f) * prod(factors) != f (mod p)";
                break;
            }
            degree_sets.push_back(subset_sums(degs));
            for (std::size_t j = 0; j < t.factors.size() && s2.passed; ++j) {
                if (!irreducible_mod_p(t.factors[j])) {
                    s2.passed = false;
                    s2.witness = tag + ": factor " + std::to_string(j) + " is reducible mod p";
                }
            }
        } catch (const std::exception& e) {
            s1.passed = false;
            s1.witness = tag + ": " + e.what();
        }
    }
    if (!s1.passed && s2.passed) {
        s2.passed = false;
        s2.witness = "not evaluated: S.1 failed";
    }

    std::vector<CheckResult> checks;
    checks.push_back(std::move(s1));
    checks.push_back(std::move(s2));
    if (include_s3) {
        CheckResult s3{"S.3", false, ""};
        if (degree_sets.size() != cert.trials.size()) {
            s3.witness = "not evaluated: S.1 failed";
        } else {
            std::set<int> inter = degree_sets.front();
            for (const auto& ds : degree_sets) {
                std::set<int> merged;
                for (int k : inter)
                    if (ds.contains(k)) merged.insert(k);
                inter = std::move(merged);
            }
            std::set<int> goal{0, f.degree()};
            if (inter == goal) {
                s3.passed = true;
            } else {
                for (int k : inter)
                    if (k != 0 && k != f.degree()) {
                        s3.witness = "degree " + std::to_string(k) + " never ruled out";
                        break;
                    }
            }
        }
        checks.push_back(std::move(s3));
    }
    return checks;
}

// Recomputed residual degrees from the trial data; never trusts the
// certificate's own residual set.
std::optional<std::set<int>> recompute_residual(const IntPoly& f, const PostMusserCert& cert) {
    std::set<int> inter;
    bool first = true;
    for (const PrimeTrial& t : cert.trials) {
        try {
            Modulus mp(t.p);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        std::vector<int> degs;
        for (const ModPoly& g : t.factors) {
            if (g.degree() < 1) return std::nullopt;
            degs.push_back(g.degree());
        }
        std::set<int> ds = subset_sums(degs);
        if (first) {
            inter = std::move(ds);
            first = false;
        } else {
            std::set<int> merged;
            for (int k : inter)
                if (ds.contains(k)) merged.insert(k);
            inter = std::move(merged);
        }
    }
    std::set<int> residual;
    for (int k : inter)
        if (k != 0 && k != f.degree()) residual.insert(k);
    return residual;
}

VerificationReport assemble(std::vector<CheckResult> checks) {
    VerificationReport report;
    report.checks = std::move(checks);
    report.trusted = kTrustedBase;
    report.accepted = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const CheckResult& c) { return c.passed; });
    return report;
}

}  // namespace

CheckResult verify_simple(const IntPoly& f, const Int& p) {
    CheckResult r{"SIMPLE", false, ""};
    try {
        Modulus mp(p);
        if (f.is_zero() || f.degree() < 1) {
            r.witness = "f is constant";
        } else if (f.leading() % p == 0) {
            r.witness = "p divides the leading coefficient of f";
        } else if (!irreducible_mod_p(reduce(f, mp))) {
            r.witness = "f is reducible mod p";
        } else {
            r.passed = true;
        }
    } catch (const std::exception& e) {
        r.witness = e.what();
    }
    return r;
}

std::vector<CheckResult> verify_pre_musser(const IntPoly& f, const PreMusserCert& cert,
                                           const VerifyOptions& options) {
    return pre_musser_checks(f, cert, options, /*include_p4=*/true);
}

std::vector<CheckResult> verify_post_musser(const IntPoly& f, const PostMusserCert& cert) {
    return post_musser_checks(f, cert, /*include_s3=*/true);
}

std::vector<CheckResult> verify_complex(const IntPoly& f, const ComplexCert& cert,
                                        const VerifyOptions& options) {
    std::vector<CheckResult> checks = post_musser_checks(f, cert.post, /*include_s3=*/false);
    std::vector<CheckResult> pre = pre_musser_checks(f, cert.pre, options, /*include_p4=*/false);
    checks.insert(checks.end(), std::make_move_iterator(pre.begin()),
                  std::make_move_iterator(pre.end()));

    CheckResult c1{"C.1", false, ""};
    auto residual = recompute_residual(f, cert.post);
    if (!residual) {
        c1.witness = "cannot recompute residual degrees from the trials";
        checks.push_back(std::move(c1));
        return checks;
    }
    // Extra claimed degrees only add checks; missing ones lose coverage.
    std::vector<int> missing;
    for (int k : *residual)
        if (!cert.residual_degrees.contains(k)) missing.push_back(k);
    if (!missing.empty()) {
        c1.witness = "certificate residual set omits degree " + std::to_string(missing.front());
        checks.push_back(std::move(c1));
        return checks;
    }
    if (f.is_zero() || f.degree() < 1) {
        c1.witness = "f is constant";
        checks.push_back(std::move(c1));
        return checks;
    }
    try {
        Modulus mq(cert.pre.p, cert.pre.n);
        c1 = subset_scan("C.1", f, mq, cert.pre.lifted_factors, &*residual, options);
    } catch (const std::exception& e) {
        c1.witness = e.what();
    }
    checks.push_back(std::move(c1));
    return checks;
}

VerificationReport verify_certificate(const IntPoly& f, const Certificate& cert,
                                      const VerifyOptions& options) {
    std::vector<CheckResult> checks = std::visit(
        [&](const auto& c) -> std::vector<CheckResult> {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SimpleCert>) {
                return {verify_simple(f, c.p)};
            } else if constexpr (std::is_same_v<T, PostMusserCert>) {
                return verify_post_musser(f, c);
            } else if constexpr (std::is_same_v<T, PreMusserCert>) {
                return verify_pre_musser(f, c, options);
            } else {
                return verify_complex(f, c, options);
            }
        },
        cert);
    return assemble(std::move(checks));
}

VerificationReport verify_factorisation(const FactorisationResult& result,
                                        const VerifyOptions& options) {
    std::vector<CheckResult> checks;
    {
        CheckResult r{"PRODUCT", false, ""};
        if (result.f.is_zero() || result.f.degree() < 1) {
            r.witness = "f is constant";
        } else {
            IntPoly prod = IntPoly::constant(result.content);
            for (const CertifiedFactor& cf : result.factors)
                for (unsigned e = 0; e < cf.multiplicity; ++e) prod = prod * cf.poly;
            if (prod == result.f) {
                r.passed = true;
            } else {
                r.witness = "content * prod(factors) != f";
            }
        }
        checks.push_back(std::move(r));
    }
    if (result.squarefree_witness) {
        CheckResult r{"BEZOUT", false, ""};
        if (bezout_check(result.f, result.squarefree_witness->first,
                         result.squarefree_witness->second)) {
            r.passed = true;
        } else {
            r.witness = "lambda*f + mu*f' != 1";
        }
        checks.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < result.factors.size(); ++i) {
        VerificationReport sub = verify_certificate(result.factors[i].poly,
                                                    result.factors[i].cert, options);
        for (CheckResult& c : sub.checks) {
            c.witness = c.passed ? c.witness : ("factor " + std::to_string(i) + ": " + c.witness);
            checks.push_back(std::move(c));
        }
    }
    return assemble(std::move(checks));
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        checks.push_back(nlohmann::json{
            {"assertion", c.assertion_id}, {"passed", c.passed}, {"witness", c.witness}});
    }
    return nlohmann::json{{"verdict", report.accepted ? "accepted" : "rejected"},
                          {"trusted", report.trusted},
                          {"checks", std::move(checks)}};
}

}  // namespace factcert

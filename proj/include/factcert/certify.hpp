#ifndef FACTCERT_CERTIFY_HPP
#define FACTCERT_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "factcert/certificate.hpp"

namespace factcert {

// Achievable factor degrees: all subset sums of the modular factor degrees.
// 0 and the total are always present, and the set is closed under
// k -> total - k.
struct DegreeSet {
    std::set<int> achievable;
};
DegreeSet degree_compat_set(const std::vector<int>& factor_degrees);

// Thrown when a certificate build discovers that f is actually reducible;
// carries a genuine proper factor as evidence.
struct FoundFactor : std::runtime_error {
    explicit FoundFactor(IntPoly g)
        : std::runtime_error("polynomial is reducible"), factor(std::move(g)) {}
    IntPoly factor;
};

struct CertifyOptions {
    int prime_budget = 25;  // primes tried for a Simple certificate
    int trials = 5;         // factoring trials for a post-Musser certificate
    std::uint64_t seed = 0;
};

// First prime in the budget with p not dividing lc(f) and f irreducible
// mod p. Cheap when the Galois group cooperates; hopeless for
// Swinnerton-Dyer polynomials.
std::optional<Certificate> try_simple(const IntPoly& f, const std::vector<Int>& prime_budget);

// First `count` primes, starting from 2.
std::vector<Int> first_primes(int count);

// Factor f modulo successive usable primes (p not dividing lc(f), f
// square-free mod p) until the degree-set intersection collapses to
// {0, deg f} or trial_count trials are spent. The gathered trials are
// returned either way for reuse by the heavier certificates.
struct PostMusserSearch {
    std::optional<Certificate> cert;
    std::vector<PrimeTrial> trials;
};
PostMusserSearch try_post_musser(const IntPoly& f, int trial_count = 5, std::uint64_t seed = 0);

// Full pre-Musser build for an irreducible f: factor mod p, bound, lift to
// p^n >= 2B, store symmetric lifts, and scan every proper subset product for
// divisibility. Throws FoundFactor when a subset divides (f was reducible).
Certificate build_pre_musser(const IntPoly& f, const Int& p, std::uint64_t seed = 0);

// Complex certificate from failed post-Musser trials: keeps the trial data,
// restricts the subset scan to degrees the trials could not rule out, and
// uses the trial prime with fewest factors for the lift.
Certificate build_complex(const IntPoly& f, const std::vector<PrimeTrial>& trials,
                          std::uint64_t seed = 0);

// Plain factorization over Z (content + irreducible factors with
// multiplicities), no certificates.
struct ZFactor {
    IntPoly poly;
    unsigned multiplicity = 1;
};
struct ZFactorization {
    Int content;
    std::vector<ZFactor> factors;
};
ZFactorization factor_over_z(const IntPoly& f, std::uint64_t seed = 0);

// The full pipeline: content/primitive split, square-free grouping,
// Zassenhaus factorization, a certificate per irreducible factor (Simple,
// then post-Musser, then pre-Musser/Complex), and a Bezout witness when f
// is square-free.
FactorisationResult factor_and_certify(const IntPoly& f, const CertifyOptions& options = {});

}  // namespace factcert

#endif

#ifndef FACTCERT_VERIFY_HPP
#define FACTCERT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "factcert/certificate.hpp"

namespace factcert {

// One recomputed assertion. assertion_id is SIMPLE, P.1..P.4, S.1..S.3,
// C.1, BOUND-RECOMPUTE, or the parse/product-level ids of the
// factorisation wrapper. witness explains a failure (offending index,
// subset, or degree).
struct CheckResult {
    std::string assertion_id;
    bool passed = false;
    std::string witness;
};

struct VerificationReport {
    bool accepted = false;
    std::vector<CheckResult> checks;
    std::vector<std::string> trusted;  // assumptions the verdict rests on
};

nlohmann::json to_json(const VerificationReport& report);

struct VerifyOptions {
    // Ceiling on subset products examined by P.4/C.1; keeps verification
    // terminating on adversarial certificates.
    std::uint64_t max_subsets = std::uint64_t{1} << 20;
    int threads = 1;
};

// Re-establishes every assertion of the certificate from f and the
// certificate alone. Hostile input is tolerated: malformed values become
// failed checks, never crashes, and all checks run even after a failure.
VerificationReport verify_certificate(const IntPoly& f, const Certificate& cert,
                                      const VerifyOptions& options = {});

// The SIMPLE check: p does not divide lc(f) and f mod p passes the
// gcd(f, x^(p^j) - x) loop.
CheckResult verify_simple(const IntPoly& f, const Int& p);

// P.1-P.4 plus BOUND-RECOMPUTE.
std::vector<CheckResult> verify_pre_musser(const IntPoly& f, const PreMusserCert& cert,
                                           const VerifyOptions& options = {});

// S.1-S.3.
std::vector<CheckResult> verify_post_musser(const IntPoly& f, const PostMusserCert& cert);

// S.1-S.2, P.1-P.3 (with BOUND-RECOMPUTE) and C.1 with an independently
// recomputed residual degree set.
std::vector<CheckResult> verify_complex(const IntPoly& f, const ComplexCert& cert,
                                        const VerifyOptions& options = {});

// Checks content * prod(factors^multiplicity) = f, every factor's
// certificate, and the Bezout witness when present.
VerificationReport verify_factorisation(const FactorisationResult& result,
                                        const VerifyOptions& options = {});

}  // namespace factcert

#endif

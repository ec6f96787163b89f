#ifndef FACTCERT_CERTIFICATE_HPP
#define FACTCERT_CERTIFICATE_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "factcert/mod_poly.hpp"
#include "factcert/rat_poly.hpp"

namespace factcert {

inline constexpr const char* kSchemaVersion = "factcert-v1";

// The four certificate formats. Every big integer serializes as a decimal
// string; polynomials as little-endian coefficient arrays.

// A prime p with the assertion that f is irreducible modulo p.
struct SimpleCert {
    Int p;
};

// p, n, and monic factors of f mod p^n given as integer polynomials with
// coefficients in the symmetric range (-p^n/2, p^n/2].
struct PreMusserCert {
    Int p;
    unsigned n = 1;
    std::vector<IntPoly> lifted_factors;
    std::string formula_id;
};

// One factoring trial: the full list of monic irreducible factors of f
// modulo p (square-free there, so multiplicities are 1).
struct PrimeTrial {
    Int p;
    std::vector<ModPoly> factors;
};

// Several trials whose factor-degree patterns jointly rule out every proper
// factor degree.
struct PostMusserCert {
    std::vector<PrimeTrial> trials;
};

// Union of the two previous formats: the trials rule out most factor
// degrees, and subset products are checked only for the residual ones.
struct ComplexCert {
    PostMusserCert post;
    PreMusserCert pre;
    std::set<int> residual_degrees;
};

using Certificate = std::variant<SimpleCert, PostMusserCert, PreMusserCert, ComplexCert>;

struct CertifiedFactor {
    IntPoly poly;
    unsigned multiplicity = 1;
    Certificate cert;
};

// content * prod(factors[i].poly ^ multiplicity) = f exactly.
struct FactorisationResult {
    IntPoly f;
    Int content;
    std::vector<CertifiedFactor> factors;
    // (lambda, mu) with lambda*f + mu*f' = 1; present when f is square-free.
    std::optional<std::pair<RatPoly, RatPoly>> squarefree_witness;
};

// Raised on any structural defect while reading certificate JSON.
struct MalformedCertificate : std::runtime_error {
    explicit MalformedCertificate(const std::string& what) : std::runtime_error(what) {}
};

nlohmann::json to_json(const IntPoly& f);
nlohmann::json to_json(const RatPoly& f);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const FactorisationResult& result);

IntPoly int_poly_from_json(const nlohmann::json& j);
RatPoly rat_poly_from_json(const nlohmann::json& j);
Certificate certificate_from_json(const nlohmann::json& j);
FactorisationResult result_from_json(const nlohmann::json& j);

}  // namespace factcert

#endif

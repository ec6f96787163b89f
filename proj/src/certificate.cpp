#include "factcert/certificate.hpp"

namespace factcert {

namespace {

using nlohmann::json;

// Guards against absurd sizes in hostile files; generous for desk scale.
constexpr unsigned kMaxExponent = 4096;
constexpr std::size_t kMaxCoeffs = 1u << 20;
constexpr unsigned kMaxMultiplicity = 1u << 20;

Int int_from_string(const std::string& s) {
    if (s.empty()) throw MalformedCertificate("empty integer literal");
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw MalformedCertificate("bad integer literal: " + s);
    }
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw MalformedCertificate("empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw MalformedCertificate("bad rational literal: " + s);
    }
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw MalformedCertificate(std::string("missing field: ") + name);
    return *it;
}

std::string string_field(const json& j, const char* name) {
    const json& v = field(j, name);
    if (!v.is_string()) throw MalformedCertificate(std::string("field must be a string: ") + name);
    return v.get<std::string>();
}

unsigned uint_field(const json& j, const char* name, unsigned max) {
    const json& v = field(j, name);
    if (!v.is_number_unsigned()) throw MalformedCertificate(std::string("field must be a nonnegative integer: ") + name);
    auto u = v.get<std::uint64_t>();
    if (u < 1 || u > max) throw MalformedCertificate(std::string("field out of range: ") + name);
    return static_cast<unsigned>(u);
}

std::vector<Int> coeffs_from_json(const json& j) {
    if (!j.is_object()) throw MalformedCertificate("polynomial must be an object");
    const json& arr = field(j, "coeffs");
    if (!arr.is_array()) throw MalformedCertificate("coeffs must be an array");
    if (arr.size() > kMaxCoeffs) throw MalformedCertificate("coefficient array too long");
    std::vector<Int> v;
    v.reserve(arr.size());
    for (const auto& e : arr) {
        if (!e.is_string()) throw MalformedCertificate("coefficients must be decimal strings");
        v.push_back(int_from_string(e.get<std::string>()));
    }
    if (!v.empty() && v.back() == 0)
        throw MalformedCertificate("non-canonical polynomial: trailing zero coefficient");
    return v;
}

json coeffs_to_json(const std::vector<Int>& coeffs) {
    json arr = json::array();
    for (const Int& c : coeffs) arr.push_back(c.get_str());
    return json{{"coeffs", std::move(arr)}};
}

// ModPoly factor lists of a trial: coefficients must already lie in [0, p).
ModPoly mod_poly_from_json(const json& j, const Modulus& m) {
    std::vector<Int> v = coeffs_from_json(j);
    for (const Int& c : v)
        if (c < 0 || c >= m.q())
            throw MalformedCertificate("trial factor coefficient out of [0, p)");
    return ModPoly(m, std::move(v));
}

PreMusserCert pre_musser_from_json(const json& j) {
    PreMusserCert c;
    c.p = int_from_string(string_field(j, "p"));
    c.n = uint_field(j, "n", kMaxExponent);
    c.formula_id = string_field(j, "formula_id");
    const json& arr = field(j, "lifted_factors");
    if (!arr.is_array() || arr.empty())
        throw MalformedCertificate("lifted_factors must be a nonempty array");
    for (const auto& e : arr) c.lifted_factors.push_back(IntPoly(coeffs_from_json(e)));
    return c;
}

json pre_musser_to_json(const PreMusserCert& c) {
    json arr = json::array();
    for (const IntPoly& f : c.lifted_factors) arr.push_back(coeffs_to_json(f.coeffs()));
    return json{{"p", c.p.get_str()},
                {"n", c.n},
                {"lifted_factors", std::move(arr)},
                {"formula_id", c.formula_id}};
}

PostMusserCert post_musser_from_json(const json& j) {
    PostMusserCert c;
    const json& arr = field(j, "trials");
    if (!arr.is_array() || arr.empty())
        throw MalformedCertificate("trials must be a nonempty array");
    for (const auto& t : arr) {
        PrimeTrial trial;
        trial.p = int_from_string(string_field(t, "p"));
        Modulus m = [&] {
            try {
                return Modulus(trial.p);
            } catch (const std::invalid_argument& e) {
                throw MalformedCertificate(std::string("bad trial prime: ") + e.what());
            }
        }();
        const json& fs = field(t, "factors");
        if (!fs.is_array() || fs.empty())
            throw MalformedCertificate("trial factors must be a nonempty array");
        for (const auto& e : fs) trial.factors.push_back(mod_poly_from_json(e, m));
        c.trials.push_back(std::move(trial));
    }
    return c;
}

json post_musser_to_json(const PostMusserCert& c) {
    json trials = json::array();
    for (const PrimeTrial& t : c.trials) {
        json fs = json::array();
        for (const ModPoly& f : t.factors) fs.push_back(coeffs_to_json(f.coeffs()));
        trials.push_back(json{{"p", t.p.get_str()}, {"factors", std::move(fs)}});
    }
    return json{{"trials", std::move(trials)}};
}

}  // namespace

json to_json(const IntPoly& f) { return coeffs_to_json(f.coeffs()); }

json to_json(const RatPoly& f) {
    json arr = json::array();
    for (const Rat& c : f.coeffs()) arr.push_back(c.get_str());
    return json{{"coeffs", std::move(arr)}};
}

IntPoly int_poly_from_json(const json& j) { return IntPoly(coeffs_from_json(j)); }

RatPoly rat_poly_from_json(const json& j) {
    if (!j.is_object()) throw MalformedCertificate("polynomial must be an object");
    const json& arr = field(j, "coeffs");
    if (!arr.is_array()) throw MalformedCertificate("coeffs must be an array");
    if (arr.size() > kMaxCoeffs) throw MalformedCertificate("coefficient array too long");
    std::vector<Rat> v;
    for (const auto& e : arr) {
        if (!e.is_string()) throw MalformedCertificate("coefficients must be strings");
        v.push_back(rat_from_string(e.get<std::string>()));
    }
    if (!v.empty() && v.back() == 0)
        throw MalformedCertificate("non-canonical polynomial: trailing zero coefficient");
    return RatPoly(std::move(v));
}

json to_json(const Certificate& cert) {
    return std::visit(
        [](const auto& c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, SimpleCert>) {
                return json{{"kind", "simple"}, {"p", c.p.get_str()}};
            } else if constexpr (std::is_same_v<T, PostMusserCert>) {
                json j = post_musser_to_json(c);
                j["kind"] = "post_musser";
                return j;
            } else if constexpr (std::is_same_v<T, PreMusserCert>) {
                json j = pre_musser_to_json(c);
                j["kind"] = "pre_musser";
                return j;
            } else {
                json j;
                j["kind"] = "complex";
                j["post"] = post_musser_to_json(c.post);
                j["pre"] = pre_musser_to_json(c.pre);
                json rd = json::array();
                for (int k : c.residual_degrees) rd.push_back(k);
                j["residual_degrees"] = std::move(rd);
                return j;
            }
        },
        cert);
}

Certificate certificate_from_json(const json& j) {
    if (!j.is_object()) throw MalformedCertificate("certificate must be an object");
    const std::string kind = string_field(j, "kind");
    if (kind == "simple") {
        return SimpleCert{int_from_string(string_field(j, "p"))};
    }
    if (kind == "pre_musser") {
        return pre_musser_from_json(j);
    }
    if (kind == "post_musser") {
        return post_musser_from_json(j);
    }
    if (kind == "complex") {
        ComplexCert c;
        c.post = post_musser_from_json(field(j, "post"));
        c.pre = pre_musser_from_json(field(j, "pre"));
        const json& rd = field(j, "residual_degrees");
        if (!rd.is_array()) throw MalformedCertificate("residual_degrees must be an array");
        for (const auto& e : rd) {
            if (!e.is_number_integer()) throw MalformedCertificate("residual degree must be an integer");
            auto k = e.get<std::int64_t>();
            if (k < 0 || k > static_cast<std::int64_t>(kMaxCoeffs))
                throw MalformedCertificate("residual degree out of range");
            c.residual_degrees.insert(static_cast<int>(k));
        }
        return c;
    }
    throw MalformedCertificate("unknown certificate kind: " + kind);
}

json to_json(const FactorisationResult& result) {
    json factors = json::array();
    for (const CertifiedFactor& f : result.factors) {
        factors.push_back(json{{"poly", to_json(f.poly)},
                               {"multiplicity", f.multiplicity},
                               {"certificate", to_json(f.cert)}});
    }
    json j{{"schema", kSchemaVersion},
           {"f", to_json(result.f)},
           {"content", result.content.get_str()},
           {"factors", std::move(factors)}};
    if (result.squarefree_witness) {
        j["squarefree_witness"] = json{{"lambda", to_json(result.squarefree_witness->first)},
                                       {"mu", to_json(result.squarefree_witness->second)}};
    }
    return j;
}

FactorisationResult result_from_json(const json& j) {
    if (!j.is_object()) throw MalformedCertificate("document must be an object");
    if (string_field(j, "schema") != kSchemaVersion)
        throw MalformedCertificate("unsupported schema version");
    FactorisationResult out;
    out.f = int_poly_from_json(field(j, "f"));
    out.content = int_from_string(string_field(j, "content"));
    const json& arr = field(j, "factors");
    if (!arr.is_array()) throw MalformedCertificate("factors must be an array");
    for (const auto& e : arr) {
        CertifiedFactor f;
        f.poly = int_poly_from_json(field(e, "poly"));
        f.multiplicity = uint_field(e, "multiplicity", kMaxMultiplicity);
        f.cert = certificate_from_json(field(e, "certificate"));
        out.factors.push_back(std::move(f));
    }
    if (auto it = j.find("squarefree_witness"); it != j.end()) {
        out.squarefree_witness =
            std::make_pair(rat_poly_from_json(field(*it, "lambda")),
                           rat_poly_from_json(field(*it, "mu")));
    }
    return out;
}

}  // namespace factcert

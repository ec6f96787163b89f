// factcert: factor integer polynomials, emit irreducibility certificates,
// and verify them independently.
//
// Exit codes: 0 success/accepted, 1 certificate rejected, 2 bad input or
// malformed file, 3 internal invariant failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "factcert/certify.hpp"
#include "factcert/parse.hpp"
#include "factcert/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;

struct Args {
    std::string poly_text;
    std::string out_path;
    std::string cert_path;
    std::string prime_text = "3";
    bool json_output = false;
    int primes_budget = 25;
    int trials = 5;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = all cores
};

int resolved_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

factcert::VerifyOptions verify_options(const Args& args) {
    factcert::VerifyOptions opts;
    opts.threads = resolved_threads(args.threads);
    if (const char* env = std::getenv("FACTCERT_MAX_SUBSETS")) {
        try {
            opts.max_subsets = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("FACTCERT_MAX_SUBSETS is not a number");
        }
    }
    return opts;
}

factcert::IntPoly parse_or_fail(const std::string& text) {
    return factcert::parse_poly(text);
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << data << "\n";
}

int cmd_certify(const Args& args) {
    factcert::IntPoly f = parse_or_fail(args.poly_text);
    if (f.degree() < 1) {
        std::cerr << "error: constant polynomial\n";
        return kExitBadInput;
    }
    factcert::CertifyOptions opts;
    opts.prime_budget = args.primes_budget;
    opts.trials = args.trials;
    opts.seed = args.seed;
    factcert::FactorisationResult result = factcert::factor_and_certify(f, opts);
    write_output(args.out_path, to_json(result).dump(2));
    return kExitOk;
}

int cmd_verify(const Args& args) {
    factcert::IntPoly f = parse_or_fail(args.poly_text);
    std::ifstream in(args.cert_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open certificate file: " << args.cert_path << "\n";
        return kExitBadInput;
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return kExitBadInput;
    }
    factcert::FactorisationResult result = factcert::result_from_json(doc);
    factcert::VerificationReport report;
    if (!(result.f == f)) {
        report.accepted = false;
        report.checks.push_back(
            {"PRODUCT", false, "certificate is about a different polynomial"});
    } else {
        report = factcert::verify_factorisation(result, verify_options(args));
    }
    std::cout << to_json(report).dump(2) << "\n";
    return report.accepted ? kExitOk : kExitRejected;
}

int cmd_factor(const Args& args) {
    factcert::IntPoly f = parse_or_fail(args.poly_text);
    if (f.degree() < 1) {
        std::cerr << "error: constant polynomial\n";
        return kExitBadInput;
    }
    factcert::ZFactorization fac = factcert::factor_over_z(f, args.seed);
    if (args.json_output) {
        json factors = json::array();
        for (const auto& zf : fac.factors)
            factors.push_back(json{{"poly", to_json(zf.poly)}, {"multiplicity", zf.multiplicity}});
        std::cout << json{{"content", fac.content.get_str()}, {"factors", std::move(factors)}}.dump(2)
                  << "\n";
    } else {
        if (fac.content != 1) std::cout << fac.content.get_str() << " * ";
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            if (i) std::cout << " * ";
            std::cout << "(" << factcert::format_poly(fac.factors[i].poly) << ")";
            if (fac.factors[i].multiplicity > 1) std::cout << "^" << fac.factors[i].multiplicity;
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_modfactor(const Args& args) {
    factcert::IntPoly f = parse_or_fail(args.poly_text);
    factcert::Int p(args.prime_text);
    factcert::Modulus mp(p);
    factcert::ModPoly fp = reduce(f, mp);
    if (fp.is_zero()) {
        std::cerr << "error: f vanishes mod p\n";
        return kExitBadInput;
    }
    factcert::ModFactorization fac = factcert::factor_mod_p(fp, args.seed);
    if (args.json_output) {
        json factors = json::array();
        for (const auto& mf : fac.factors)
            factors.push_back(json{{"poly", to_json(factcert::plain_lift(mf.poly))},
                                   {"multiplicity", mf.multiplicity}});
        std::cout << json{{"p", p.get_str()},
                          {"unit", fac.unit.get_str()},
                          {"factors", std::move(factors)}}.dump(2)
                  << "\n";
    } else {
        std::cout << "mod " << p.get_str() << ": ";
        if (fac.unit != 1) std::cout << fac.unit.get_str() << " * ";
        if (fac.factors.empty()) std::cout << "1";
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            if (i) std::cout << " * ";
            std::cout << "(" << factcert::format_poly(factcert::plain_lift(fac.factors[i].poly))
                      << ")";
            if (fac.factors[i].multiplicity > 1) std::cout << "^" << fac.factors[i].multiplicity;
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_bound(const Args& args) {
    factcert::IntPoly f = parse_or_fail(args.poly_text);
    if (f.degree() < 1) {
        std::cerr << "error: constant polynomial\n";
        return kExitBadInput;
    }
    factcert::FactorBound b = factcert::factor_coeff_bound(f);
    if (args.json_output) {
        std::cout << json{{"B", b.B.get_str()},
                          {"formula_id", b.formula_id},
                          {"degree_cap", b.degree_cap}}.dump(2)
                  << "\n";
    } else {
        std::cout << "B = " << b.B.get_str() << "  (" << b.formula_id << ", m = " << b.degree_cap
                  << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial factorization with irreducibility certificates"};
    app.require_subcommand(1);
    Args args;

    auto add_common = [&](CLI::App* cmd, bool with_seed) {
        cmd->add_option("poly", args.poly_text, "polynomial, e.g. \"x^4+1\"")->required();
        cmd->add_flag("--json", args.json_output, "machine-readable output");
        cmd->add_option("--threads", args.threads, "worker threads (default: all cores)");
        if (with_seed) cmd->add_option("--seed", args.seed, "random seed for splitting");
    };

    CLI::App* certify = app.add_subcommand("certify", "factor and emit certificates");
    add_common(certify, true);
    certify->add_option("-o,--out", args.out_path, "output file (default: stdout)");
    certify->add_option("--primes-budget", args.primes_budget,
                        "primes tried for a Simple certificate");
    certify->add_option("--trials", args.trials, "post-Musser factoring trials");

    CLI::App* verify = app.add_subcommand("verify", "verify a certificate file");
    add_common(verify, false);
    verify->add_option("cert", args.cert_path, "certificate JSON file")->required();

    CLI::App* factor = app.add_subcommand("factor", "factor over Z");
    add_common(factor, true);

    CLI::App* modfactor = app.add_subcommand("modfactor", "factor modulo a prime");
    add_common(modfactor, true);
    modfactor->add_option("-p,--prime", args.prime_text, "prime modulus")->required();

    CLI::App* bound = app.add_subcommand("bound", "factor coefficient bound");
    add_common(bound, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(certify)) return cmd_certify(args);
        if (app.got_subcommand(verify)) return cmd_verify(args);
        if (app.got_subcommand(factor)) return cmd_factor(args);
        if (app.got_subcommand(modfactor)) return cmd_modfactor(args);
        if (app.got_subcommand(bound)) return cmd_bound(args);
    } catch (const factcert::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const factcert::MalformedCertificate& e) {
        std::cerr << "malformed certificate: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}

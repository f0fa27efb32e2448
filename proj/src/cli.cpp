#include "lrs/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "lrs/arith.hpp"
#include "lrs/error.hpp"
#include "lrs/expr.hpp"
#include "lrs/json_io.hpp"
#include "lrs/lambert.hpp"
#include "lrs/zeros.hpp"

namespace lrs {

namespace {

// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
Json load_json(const std::string& arg) {
    std::string text = arg;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
        std::ifstream in(arg);
        if (!in)
            throw Error(ErrorKind::parse, "cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("malformed JSON: ") + e.what());
    }
}

struct Inputs {
    std::string expr, rf, rec, gamma, candidate, cert, terms;
    std::size_t count = 20;
    std::uint64_t bound = 1000;
    std::uint64_t prime_bound = 10000;
    unsigned precision_bits = 0;
    std::uint64_t cap = 256;
    std::uint64_t p_floor = 2;
    std::size_t from_prefix = 0;
    std::int64_t first_index = 0;
};

RationalFunction function_input(const Inputs& in) {
    const int given = !in.expr.empty() + !in.rf.empty() + !in.rec.empty();
    if (given != 1)
        throw CLI::ValidationError("exactly one of --expr, --rf, --rec is required");
    if (!in.expr.empty())
        return parse_expr(in.expr);
    if (!in.rf.empty())
        return rational_function_from_json(load_json(in.rf));
    return to_rational(recurrence_from_json(load_json(in.rec)));
}

GammaSpec gamma_input(const Inputs& in) {
    if (in.gamma.empty())
        throw CLI::ValidationError("--gamma is required");
    return gamma_from_json(load_json(in.gamma));
}

LinearRecurrence candidate_input(const Inputs& in, const GammaSpec& gamma, const Json* embedded = nullptr) {
    if (!in.candidate.empty() && in.from_prefix)
        throw CLI::ValidationError("--candidate and --candidate-from-prefix are exclusive");
    if (!in.candidate.empty())
        return recurrence_from_json(load_json(in.candidate));
    if (in.from_prefix)
        return candidate_from_prefix(gamma, in.from_prefix);
    if (embedded)
        return recurrence_from_json(*embedded);
    throw CLI::ValidationError("a candidate is required: --candidate or --candidate-from-prefix");
}

std::vector<Rational> terms_input(const Inputs& in) {
    const Json j = load_json(in.terms);
    if (!j.is_array() || j.empty())
        throw Error(ErrorKind::parse, "--terms must be a nonempty JSON array");
    std::vector<Rational> out;
    for (const auto& x : j)
        out.push_back(rational_from_json(x));
    return out;
}

Json rationals(const std::vector<Rational>& xs) {
    Json a = Json::array();
    for (const auto& x : xs)
        a.push_back(to_json(x));
    return a;
}

Json error_json(const Error& e) {
    Json out = {{"v", 1}, {"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    const std::string& w = e.witness();
    if (w.empty()) {
        out["witness"] = nullptr;
    } else if (w.find_first_not_of("0123456789") == std::string::npos && w.size() < 19) {
        out["witness"] = std::stoull(w);
    } else {
        out["witness"] = w;
    }
    return out;
}

bool is_usage_error(ErrorKind k) { return k == ErrorKind::parse; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear recurrences, their zero sets, and Lambert series over the rationals", "lrs"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    Inputs in;
    Json result;

    auto function_flags = [&](CLI::App* sub) {
        sub->add_option("--expr", in.expr, "Rational function in z, e.g. \"1/(1-z-z^2)\"");
        sub->add_option("--rf", in.rf, "RationalFunction JSON (inline or file)");
        sub->add_option("--rec", in.rec, "LinearRecurrence JSON (inline or file)");
    };
    auto gamma_flag = [&](CLI::App* sub) {
        sub->add_option("--gamma", in.gamma, "Gamma JSON: recurrence or {\"support\":{...}}")->required();
    };
    auto candidate_flags = [&](CLI::App* sub) {
        sub->add_option("--candidate", in.candidate, "Candidate recurrence for the divisor sums");
        sub->add_option("--candidate-from-prefix", in.from_prefix,
                        "Candidate from Berlekamp-Massey on the first L divisor sums")
            ->check(CLI::PositiveNumber);
    };

    auto* expand_cmd = app.add_subcommand("expand", "Terms of a recurrence or power-series coefficients");
    function_flags(expand_cmd);
    expand_cmd->add_option("--count", in.count, "Number of terms")->check(CLI::Range(1, 1 << 22));
    expand_cmd->callback([&] {
        if (!in.rec.empty() && in.expr.empty() && in.rf.empty()) {
            auto rec = recurrence_from_json(load_json(in.rec));
            result = {{"v", 1}, {"first_index", rec.first_index}, {"terms", rationals(expand(rec, in.count))}};
        } else {
            result = {{"v", 1}, {"first_index", 0}, {"terms", rationals(expand(function_input(in), in.count))}};
        }
    });

    auto* bm_cmd = app.add_subcommand("bm", "Shortest recurrence generating a prefix (Berlekamp-Massey)");
    bm_cmd->add_option("--terms", in.terms, "JSON array of rationals")->required();
    bm_cmd->add_option("--first-index", in.first_index, "Index of the first term");
    bm_cmd->callback([&] { result = to_json(berlekamp_massey(terms_input(in), in.first_index)); });

    auto* to_rf_cmd = app.add_subcommand("to-rational", "Generating function of a recurrence");
    to_rf_cmd->add_option("--rec", in.rec, "LinearRecurrence JSON")->required();
    to_rf_cmd->callback([&] {
        result = to_json(to_rational(recurrence_from_json(load_json(in.rec))));
        result["v"] = 1;
    });

    auto* from_rf_cmd = app.add_subcommand("from-rational", "Recurrence for the coefficients of a rational function");
    from_rf_cmd->add_option("--expr", in.expr, "Rational function in z");
    from_rf_cmd->add_option("--rf", in.rf, "RationalFunction JSON");
    from_rf_cmd->callback([&] {
        result = to_json(from_rational(function_input(in)));
        result["v"] = 1;
    });

    auto* zeros_cmd = app.add_subcommand("zeros", "Zero set of the coefficient sequence");
    function_flags(zeros_cmd);
    zeros_cmd->add_option("--bound", in.bound, "Index bound for the sporadic scan");
    zeros_cmd->callback([&] { result = to_json(zero_set(function_input(in), in.bound)); });

    auto* decompose_cmd = app.add_subcommand("decompose", "P(z) + sum H_j(z^d_j) when prime-index coefficients vanish");
    function_flags(decompose_cmd);
    decompose_cmd->add_option("--prime-bound", in.prime_bound, "Primes checked for vanishing coefficients");
    decompose_cmd->callback([&] { result = to_json(proper_power_decompose(function_input(in), in.prime_bound)); });

    auto* dominant_cmd = app.add_subcommand("dominant", "Root-of-unity ratios among dominant poles");
    function_flags(dominant_cmd);
    dominant_cmd->add_option("--precision-bits", in.precision_bits, "Starting precision (default LRS_PRECISION_BITS or 64)");
    dominant_cmd->callback([&] {
        const unsigned bits = in.precision_bits ? in.precision_bits : default_precision_bits();
        result = to_json(dominant_relations(function_input(in), bits));
    });

    auto* lambert_cmd = app.add_subcommand("lambert", "Divisor sums b_1..b_count of gamma");
    gamma_flag(lambert_cmd);
    lambert_cmd->add_option("--count", in.count, "Number of terms")->check(CLI::Range(1, 1 << 22));
    lambert_cmd->callback([&] { result = {{"v", 1}, {"b", rationals(lambert_expand(gamma_input(in), in.count))}}; });

    auto* invert_cmd = app.add_subcommand("invert", "Moebius inversion of divisor sums");
    invert_cmd->add_option("--terms", in.terms, "JSON array b_1, b_2, ...")->required();
    invert_cmd->callback([&] { result = {{"v", 1}, {"gamma", rationals(moebius_invert(terms_input(in)))}}; });

    auto* witness_cmd = app.add_subcommand("witness", "Smallest m with a nonzero divisor sum");
    gamma_flag(witness_cmd);
    witness_cmd->add_option("--cap", in.cap, "Largest m tried")->check(CLI::PositiveNumber);
    witness_cmd->callback([&] {
        auto w = find_witness(gamma_input(in), in.cap);
        result = {{"v", 1}, {"m", w.m}, {"S", to_json(w.S)}};
    });

    auto* prime_cmd = app.add_subcommand("prime-square", "gamma at primes and b_p = gamma_1 + gamma_p");
    gamma_flag(prime_cmd);
    prime_cmd->add_option("--bound", in.bound, "Largest prime checked");
    prime_cmd->callback([&] { result = to_json(prime_square_scan(gamma_input(in), in.bound)); });

    auto* refute_cmd = app.add_subcommand("refute", "Certificate that a candidate recurrence does not fit the divisor sums");
    gamma_flag(refute_cmd);
    candidate_flags(refute_cmd);
    refute_cmd->add_option("--p-floor", in.p_floor, "Smallest prime considered");
    refute_cmd->add_option("--cap", in.cap, "Witness search cap")->check(CLI::PositiveNumber);
    refute_cmd->callback([&] {
        const GammaSpec gamma = gamma_input(in);
        const LinearRecurrence cand = candidate_input(in, gamma);
        RefuteOptions opts;
        opts.prime_floor = in.p_floor;
        opts.witness_cap = in.cap;
        const RefutationCertificate cert = refute(gamma, cand, opts);
        result = to_json(cert);
        result["candidate"] = to_json(cand);
        result["b_period"] = to_json(PeriodReport{cert.N0, cert.T_b});
    });

    auto* verify_cmd = app.add_subcommand("verify", "Independent check of a refutation certificate");
    gamma_flag(verify_cmd);
    candidate_flags(verify_cmd);
    verify_cmd->add_option("--cert", in.cert, "Certificate JSON")->required();
    verify_cmd->callback([&] {
        const GammaSpec gamma = gamma_input(in);
        const Json cj = load_json(in.cert);
        const RefutationCertificate cert = certificate_from_json(cj);
        const Json* embedded = cj.contains("candidate") ? &cj["candidate"] : nullptr;
        const LinearRecurrence cand = candidate_input(in, gamma, embedded);
        Verdict v = verify_certificate(gamma, cand, cert);
        if (v.accepted && cj.contains("b_period")) {
            const Json& bp = cj["b_period"];
            if (!bp.is_object() || bp.value("preperiod", Json()) != Json(cert.N0.get_str()) ||
                bp.value("period", Json()) != Json(cert.T_b.get_str()))
                v = {false, "period report mismatch"};
        }
        result = {{"v", 1}, {"accepted", v.accepted}};
        result["reason"] = v.accepted ? Json(nullptr) : Json(v.reason);
        if (!v.accepted)
            throw Error(ErrorKind::invalid_argument, "certificate rejected: " + v.reason, v.reason);
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "lrs: " << e.what() << "\n";
        out << Json{{"v", 1}, {"error", "usage error"}, {"message", e.what()}, {"witness", nullptr}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "lrs: " << e.what() << "\n";
        if (!result.is_null() && result.contains("accepted")) {
            out << result.dump() << "\n";
            return 1;
        }
        out << error_json(e).dump() << "\n";
        return is_usage_error(e.kind()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "lrs: " << e.what() << "\n";
        out << Json{{"v", 1}, {"error", "internal error"}, {"message", e.what()}, {"witness", nullptr}}.dump() << "\n";
        return 1;
    }
    out << result.dump() << "\n";
    return 0;
}

} // namespace lrs

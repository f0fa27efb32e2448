#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "lrs/cli.hpp"
#include "lrs/expr.hpp"
#include "lrs/error.hpp"
#include "lrs/json_io.hpp"

using namespace lrs;

namespace {

const std::string fixtures = LRS_FIXTURE_DIR;

struct Outcome {
    int code;
    std::string out;
    Json json() const { return Json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str()};
}

} // namespace

TEST_CASE("expression parser") {
    auto f = parse_expr("z^4/(1-z^2) + z^9/(1-z^3)");
    auto direct = expand(f, 40);
    for (std::size_t n = 0; n < 40; ++n) {
        Rational expect = (n >= 4 && n % 2 == 0 ? 1 : 0) + (n >= 9 && n % 3 == 0 ? 1 : 0);
        CHECK(direct[n] == expect);
    }
    CHECK(f.den()[0] == 1);
    auto one = parse_expr("1");
    CHECK(one.num() == Poly{1});
    CHECK(one.den() == Poly{1});
    CHECK(parse_expr("-z^2") == parse_expr("0-(z^2)"));
    CHECK(parse_expr("(1-z)*(1+z)") == parse_expr("1 - z^2"));
    CHECK(parse_expr("(z-z^2)/(z*(1-z))") == parse_expr("1"));
    CHECK(parse_expr("3/6*z") == parse_expr("z/2"));
    try {
        parse_expr("1/(1-z");
        FAIL("no syntax error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
        CHECK(e.witness() == "6");
    }
    CHECK_THROWS_AS(parse_expr(""), Error);
    CHECK_THROWS_AS(parse_expr("1/z"), Error);
    CHECK_THROWS_AS(parse_expr("z^-1"), Error);
    CHECK_THROWS_AS(parse_expr("1/(z-z)"), Error);
    CHECK_THROWS_AS(parse_expr("2 3"), Error);
}

TEST_CASE("exit codes and error documents") {
    auto r = call({"zeros", "--expr", "1/(1-z^2)", "--bound", "100"});
    CHECK(r.code == 0);
    CHECK(r.json()["sporadic"].empty());
    CHECK(r.json()["modulus"] == 2);
    CHECK(r.json()["zero_residues"] == Json::array({1}));

    r = call({"decompose", "--expr", "1/(1-z)", "--prime-bound", "100"});
    CHECK(r.code == 1);
    CHECK(r.json()["error"] == "hypothesis violated");
    CHECK(r.json()["witness"] == 2);

    CHECK(call({"zeros", "--expr", "1/(1-z"}).code == 2);
    CHECK(call({"zeros", "--expr", "1/(1-z)", "--bogus"}).code == 2);
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"zeros", "--expr", "1/(1-z)", "--rf", "{}"}).code == 2);
    CHECK(call({"lambert", "--gamma", "{\"coeffs\": [1"}).code == 2);
    CHECK(call({"lambert", "--gamma", fixtures + "/missing.json"}).code == 2);

    r = call({"refute", "--gamma", fixtures + "/delta1.json", "--candidate", fixtures + "/delta1_true_b.json"});
    CHECK(r.code == 1);
    CHECK(r.json()["error"] == "candidate not refuted");
}

TEST_CASE("refute output verifies") {
    for (std::string g : {"all_ones", "fibonacci", "periodic"}) {
        CAPTURE(g);
        const std::string gamma = fixtures + "/" + g + ".json";
        auto r = call({"refute", "--gamma", gamma, "--candidate-from-prefix", "32"});
        REQUIRE(r.code == 0);
        auto v = call({"verify", "--gamma", gamma, "--cert", r.out});
        CHECK(v.code == 0);
        CHECK(v.json()["accepted"] == true);

        Json tampered = r.json();
        tampered["b_period"]["period"] = "7";
        v = call({"verify", "--gamma", gamma, "--cert", tampered.dump()});
        CHECK(v.code == 1);
        CHECK(v.json()["reason"] == "period report mismatch");

        tampered = r.json();
        tampered["S_modp"] = "0";
        v = call({"verify", "--gamma", gamma, "--cert", tampered.dump()});
        CHECK(v.json()["reason"] == "S reduces to zero");
    }
}

TEST_CASE("deterministic output") {
    std::vector<std::vector<std::string>> cmds = {
        {"refute", "--gamma", fixtures + "/fibonacci.json", "--candidate-from-prefix", "16"},
        {"zeros", "--rf", fixtures + "/two_progressions.json", "--bound", "300"},
        {"dominant", "--expr", "1/(1-z^2)/(1-2*z^3)"},
        {"decompose", "--rf", fixtures + "/two_progressions.json"},
    };
    for (const auto& c : cmds) {
        auto a = call(c), b = call(c);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("documents round-trip through their schemas") {
    auto rf = call({"to-rational", "--rec", fixtures + "/fibonacci.json"}).json();
    rf.erase("v");
    CHECK(to_json(rational_function_from_json(rf)) == rf);

    auto rec = call({"from-rational", "--rf", fixtures + "/two_progressions.json"}).json();
    rec.erase("v");
    CHECK(to_json(recurrence_from_json(rec)) == rec);

    auto zs = call({"zeros", "--rf", fixtures + "/two_progressions.json", "--bound", "100"}).json();
    CHECK(to_json(zero_set_from_json(zs)) == zs);
    CHECK(zs["sporadic"] == Json::array({0, 2, 3}));
    CHECK(zs["zero_residues"] == Json::array({1, 5}));

    auto dec = call({"decompose", "--rf", fixtures + "/two_progressions.json"}).json();
    CHECK(to_json(decomposition_from_json(dec)) == dec);

    auto ps = call({"prime-square", "--gamma", fixtures + "/fibonacci.json", "--bound", "30"}).json();
    CHECK(to_json(prime_square_from_json(ps)) == ps);

    auto cert = call({"refute", "--gamma", fixtures + "/all_ones.json", "--candidate-from-prefix", "32"}).json();
    Json bare = cert;
    bare.erase("candidate");
    bare.erase("b_period");
    CHECK(to_json(certificate_from_json(cert)) == bare);

    auto bm = call({"bm", "--terms", "[\"1\",\"1\",\"2\",\"3\",\"5\",\"8\"]"}).json();
    CHECK(bm["linear_complexity"] == 2);
    CHECK(bm["recurrence"]["coeffs"] == Json::array({"1", "1"}));
}

TEST_CASE("sequence subcommands") {
    auto b = call({"lambert", "--gamma", fixtures + "/fibonacci.json", "--count", "6"}).json();
    CHECK(b["b"] == Json::array({"1", "2", "3", "5", "6", "12"}));
    auto g = call({"invert", "--terms", "[1,2,3,5,6,12]"}).json();
    CHECK(g["gamma"] == Json::array({"1", "1", "2", "3", "5", "8"}));
    auto w = call({"witness", "--gamma", "{\"support\":{\"2\":\"1\"}}"}).json();
    CHECK(w["m"] == 2);
    auto e = call({"expand", "--expr", "1/(1-z-z^2)", "--count", "6"}).json();
    CHECK(e["terms"] == Json::array({"1", "1", "2", "3", "5", "8"}));
    auto r = call({"expand", "--rec", fixtures + "/fibonacci.json", "--count", "5"}).json();
    CHECK(r["terms"] == Json::array({"1", "1", "2", "3", "5"}));
    CHECK(r["first_index"] == 1);
    auto d = call({"dominant", "--expr", "1/(1-z^2)"}).json();
    CHECK(d["relation_orders"] == Json::array({2}));
}

#include "lrs/json_io.hpp"

#include "lrs/arith.hpp"
#include "lrs/error.hpp"

namespace lrs {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::parse, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object())
        bad(std::string("expected an object holding \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing field \"") + key + "\"");
    return *it;
}

Integer integer_from_json(const Json& j) {
    Rational r = rational_from_json(j);
    if (!r.is_integer())
        bad("expected an integer, got " + r.str());
    return r.num();
}

std::uint64_t u64_from_json(const Json& j) {
    Integer v = integer_from_json(j);
    if (v < 0 || !fits_u64(v))
        bad("integer out of range: " + v.get_str());
    return to_u64(v);
}

std::int64_t i64_from_json(const Json& j) {
    Integer v = integer_from_json(j);
    if (!v.fits_slong_p())
        bad("integer out of range: " + v.get_str());
    return v.get_si();
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array())
        bad("expected an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : j)
        out.push_back(rational_from_json(x));
    return out;
}

Json rationals_to_json(const std::vector<Rational>& xs) {
    Json out = Json::array();
    for (const auto& x : xs)
        out.push_back(to_json(x));
    return out;
}

template <class Range>
Json u64s_to_json(const Range& xs) {
    Json out = Json::array();
    for (auto x : xs)
        out.push_back(x);
    return out;
}

std::vector<std::uint64_t> u64s_from_json(const Json& j) {
    if (!j.is_array())
        bad("expected an array of integers");
    std::vector<std::uint64_t> out;
    for (const auto& x : j)
        out.push_back(u64_from_json(x));
    return out;
}

Json big(const Integer& v) { return v.get_str(); }

Json big(std::uint64_t v) { return std::to_string(v); }

} // namespace

Json to_json(const Rational& x) { return x.str(); }

Json to_json(const Poly& p) { return rationals_to_json(p.coeffs()); }

Json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const LinearRecurrence& rec) {
    return {{"coeffs", rationals_to_json(rec.coeffs)},
            {"initial", rationals_to_json(rec.initial)},
            {"start_index", rec.start_index},
            {"first_index", rec.first_index}};
}

Json to_json(const GammaSpec& gamma) {
    if (const auto* rec = std::get_if<LinearRecurrence>(&gamma.data))
        return to_json(*rec);
    Json support = Json::object();
    for (const auto& [k, v] : std::get<SupportMap>(gamma.data))
        support[std::to_string(k)] = to_json(v);
    return {{"support", support}};
}

Json to_json(const RatioAnalysis& ra) {
    Json mult = Json::object();
    for (const auto& [d, e] : ra.multiplicity)
        mult[std::to_string(d)] = e;
    return {{"v", 1},
            {"orders", u64s_to_json(ra.orders)},
            {"multiplicity", mult},
            {"modulus", ra.modulus},
            {"ratio_polynomial", to_json(ra.ratio_polynomial)}};
}

Json to_json(const ZeroSetDescription& zs) {
    return {{"v", 1},
            {"sporadic", u64s_to_json(zs.sporadic)},
            {"sporadic_complete", zs.sporadic_complete},
            {"modulus", zs.modulus},
            {"zero_residues", u64s_to_json(zs.zero_residues)},
            {"checked_bound", zs.checked_bound}};
}

Json to_json(const DominantGroup& g) {
    Json roots = Json::array();
    for (std::size_t i : g.dominant_root_indices) {
        const RootDisk& r = g.isolation.roots[i];
        roots.push_back({{"re", to_json(r.re)},
                         {"im", to_json(r.im)},
                         {"radius", to_json(r.radius)},
                         {"modulus_lo", to_json(r.modulus_lo)},
                         {"modulus_hi", to_json(r.modulus_hi)}});
    }
    return {{"v", 1},
            {"precision_bits", g.precision_bits},
            {"dominant_roots", roots},
            {"relation_orders", u64s_to_json(g.relation_orders)},
            {"root_count", g.isolation.roots.size()}};
}

Json to_json(const ProperPowerDecomposition& dec) {
    Json parts = Json::array();
    for (const auto& part : dec.parts)
        parts.push_back({{"d", part.d}, {"H", to_json(part.H)}});
    return {{"v", 1}, {"P", to_json(dec.P)}, {"parts", parts}};
}

Json to_json(const PrimeSquareReport& report) {
    Json out = {{"v", 1},
                {"checked_bound", report.checked_bound},
                {"violations", u64s_to_json(report.violations)},
                {"b_p_witnesses", u64s_to_json(report.b_p_witnesses)}};
    out["b_p_constant_value"] = report.b_p_constant_value ? to_json(*report.b_p_constant_value) : Json(nullptr);
    return out;
}

Json to_json(const PeriodReport& period) {
    return {{"preperiod", big(period.preperiod)}, {"period", big(period.period)}};
}

Json to_json(const RefutationCertificate& c) {
    return {{"v", 1},
            {"m", big(c.m)},
            {"S", to_json(c.S)},
            {"p", big(c.p)},
            {"T_gamma", big(c.T_gamma)},
            {"N0", big(c.N0)},
            {"T_b", big(c.T_b)},
            {"T", big(c.T)},
            {"q", big(c.q)},
            {"b_mq_modp", big(c.b_mq_modp)},
            {"b_mq2_modp", big(c.b_mq2_modp)},
            {"S_modp", big(c.S_modp)},
            {"candidate_fingerprint", c.candidate_fingerprint}};
}

Json to_json(const BerlekampMassey& bm) {
    Json out = {{"v", 1}, {"zero", bm.zero}, {"linear_complexity", bm.linear_complexity}};
    if (!bm.zero)
        out["recurrence"] = to_json(bm.recurrence);
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                      : Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (!j.is_string())
        bad("expected a rational string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error&) {
        bad("malformed rational \"" + j.get<std::string>() + "\"");
    }
}

Poly poly_from_json(const Json& j) { return Poly(rationals_from_json(j)); }

RationalFunction rational_function_from_json(const Json& j) {
    Poly num = poly_from_json(field(j, "num"));
    Poly den = poly_from_json(field(j, "den"));
    try {
        return RationalFunction(num, den);
    } catch (const Error& e) {
        bad(e.what());
    }
}

LinearRecurrence recurrence_from_json(const Json& j) {
    LinearRecurrence rec;
    rec.coeffs = rationals_from_json(field(j, "coeffs"));
    rec.initial = rationals_from_json(field(j, "initial"));
    rec.start_index = i64_from_json(field(j, "start_index"));
    rec.first_index = j.contains("first_index") ? i64_from_json(j["first_index"]) : rec.start_index;
    try {
        rec.validate();
    } catch (const Error& e) {
        bad(e.what());
    }
    return rec;
}

GammaSpec gamma_from_json(const Json& j) {
    GammaSpec g;
    if (j.is_object() && j.contains("support")) {
        const Json& s = j["support"];
        if (!s.is_object())
            bad("support must map indices to rationals");
        SupportMap map;
        for (auto it = s.begin(); it != s.end(); ++it) {
            std::uint64_t k = u64_from_json(Json(it.key()));
            Rational v = rational_from_json(it.value());
            if (!v.is_zero())
                map[k] = v;
        }
        g.data = std::move(map);
    } else {
        g.data = recurrence_from_json(j);
    }
    try {
        g.validate();
    } catch (const Error& e) {
        bad(e.what());
    }
    return g;
}

ZeroSetDescription zero_set_from_json(const Json& j) {
    ZeroSetDescription zs;
    zs.sporadic = u64s_from_json(field(j, "sporadic"));
    const Json& complete = field(j, "sporadic_complete");
    if (!complete.is_boolean())
        bad("sporadic_complete must be a boolean");
    zs.sporadic_complete = complete.get<bool>();
    zs.modulus = u64_from_json(field(j, "modulus"));
    zs.zero_residues = u64s_from_json(field(j, "zero_residues"));
    zs.checked_bound = u64_from_json(field(j, "checked_bound"));
    return zs;
}

ProperPowerDecomposition decomposition_from_json(const Json& j) {
    ProperPowerDecomposition dec;
    dec.P = poly_from_json(field(j, "P"));
    const Json& parts = field(j, "parts");
    if (!parts.is_array())
        bad("parts must be an array");
    for (const auto& part : parts)
        dec.parts.push_back({u64_from_json(field(part, "d")), rational_function_from_json(field(part, "H"))});
    return dec;
}

PrimeSquareReport prime_square_from_json(const Json& j) {
    PrimeSquareReport r;
    r.checked_bound = u64_from_json(field(j, "checked_bound"));
    r.violations = u64s_from_json(field(j, "violations"));
    r.b_p_witnesses = u64s_from_json(field(j, "b_p_witnesses"));
    const Json& c = field(j, "b_p_constant_value");
    if (!c.is_null())
        r.b_p_constant_value = rational_from_json(c);
    return r;
}

RefutationCertificate certificate_from_json(const Json& j) {
    if (j.contains("v") && j["v"] != 1)
        bad("unsupported certificate version " + j["v"].dump());
    RefutationCertificate c;
    c.m = u64_from_json(field(j, "m"));
    c.S = rational_from_json(field(j, "S"));
    c.p = u64_from_json(field(j, "p"));
    c.T_gamma = integer_from_json(field(j, "T_gamma"));
    c.N0 = integer_from_json(field(j, "N0"));
    c.T_b = integer_from_json(field(j, "T_b"));
    c.T = integer_from_json(field(j, "T"));
    c.q = integer_from_json(field(j, "q"));
    c.b_mq_modp = u64_from_json(field(j, "b_mq_modp"));
    c.b_mq2_modp = u64_from_json(field(j, "b_mq2_modp"));
    c.S_modp = u64_from_json(field(j, "S_modp"));
    const Json& fp = field(j, "candidate_fingerprint");
    if (!fp.is_string())
        bad("candidate_fingerprint must be a string");
    c.candidate_fingerprint = fp.get<std::string>();
    return c;
}

} // namespace lrs

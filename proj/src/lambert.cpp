#include "lrs/lambert.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "lrs/arith.hpp"
#include "lrs/error.hpp"
#include "lrs/json_io.hpp"

namespace lrs {

namespace {

using u64 = std::uint64_t;

// gamma mod p at arbitrary positive indices through its own recurrence.
class GammaModP {
public:
    GammaModP(const LinearRecurrence& rec, u64 p) : red_(reduce_recurrence(rec, p)) {
        const std::size_t r = red_.coeffs.size();
        lead_ = static_cast<std::size_t>(red_.start_index - red_.first_index);
        window_.assign(red_.initial.begin() + static_cast<std::ptrdiff_t>(lead_),
                       red_.initial.begin() + static_cast<std::ptrdiff_t>(lead_ + r));
        step_ = MatrixFp::companion(red_.coeffs, p);
    }

    u64 at(const Integer& n) const {
        const Integer local = n - red_.first_index;
        if (local < 0)
            return 0;
        if (fits_u64(local) && to_u64(local) < red_.initial.size())
            return red_.initial[to_u64(local)];
        return step_.pow(local - static_cast<unsigned long>(lead_)).apply(window_)[0];
    }

private:
    RecurrenceModP red_;
    std::size_t lead_ = 0;
    std::vector<u64> window_;
    MatrixFp step_;
};

// b mod p at m q and m q^2 for a prime q not dividing m: the divisors are
// e, e q, e q^2 over e | m.
std::pair<u64, u64> probe_b(const GammaModP& g, u64 m, const Integer& q, u64 p) {
    u64 b1 = 0, b2 = 0;
    const Integer q2 = q * q;
    for (u64 e : divisors(m)) {
        const Integer ei = to_integer(e);
        const u64 base = (g.at(ei) + g.at(ei * q)) % p;
        b1 = (b1 + base) % p;
        b2 = (b2 + base + g.at(ei * q2)) % p;
    }
    return {b1, b2};
}

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

void check_candidate(const LinearRecurrence& candidate) {
    candidate.validate();
    if (candidate.first_index < 1)
        throw Error(ErrorKind::invalid_argument, "candidate for b must start at index 1 or later");
}

std::vector<Rational> rational_data(const LinearRecurrence& rec) {
    std::vector<Rational> out = rec.coeffs;
    out.insert(out.end(), rec.initial.begin(), rec.initial.end());
    return out;
}

// b mod p on indices n .. n + len - 1, exactly over Q then reduced.
std::vector<u64> true_window(const GammaSpec& gamma, std::int64_t n, std::size_t len, u64 p) {
    auto b = divisor_transform(gamma, static_cast<std::size_t>(n) + len - 1);
    std::vector<u64> out;
    for (std::size_t i = 0; i < len; ++i)
        out.push_back(reduce_mod(b[static_cast<std::size_t>(n) - 1 + i], p));
    return out;
}

std::vector<u64> reduce_all(const std::vector<Rational>& xs, u64 p) {
    std::vector<u64> out;
    for (const auto& x : xs)
        out.push_back(reduce_mod(x, p));
    return out;
}

Verdict verify_checks(const GammaSpec& gamma, const LinearRecurrence& candidate, const RefutationCertificate& cert);

} // namespace

void GammaSpec::validate() const {
    if (const auto* rec = std::get_if<LinearRecurrence>(&data)) {
        rec->validate();
        if (rec->first_index != 1)
            throw Error(ErrorKind::invalid_argument, "gamma recurrence must have first_index 1");
    } else if (std::get<SupportMap>(data).count(0)) {
        throw Error(ErrorKind::invalid_argument, "gamma is indexed from 1");
    }
}

std::vector<Rational> GammaSpec::prefix(std::size_t count) const {
    validate();
    if (const auto* rec = std::get_if<LinearRecurrence>(&data))
        return expand(*rec, count);
    std::vector<Rational> out(count);
    for (const auto& [k, v] : std::get<SupportMap>(data))
        if (k <= count)
            out[k - 1] = v;
    return out;
}

LinearRecurrence GammaSpec::as_recurrence() const {
    validate();
    if (const auto* rec = std::get_if<LinearRecurrence>(&data))
        return *rec;
    const auto& support = std::get<SupportMap>(data);
    const u64 last = support.empty() ? 0 : support.rbegin()->first;
    LinearRecurrence rec;
    rec.coeffs = {Rational(1)};
    rec.first_index = 1;
    rec.start_index = static_cast<std::int64_t>(last) + 1;
    rec.initial = prefix(last + 1);
    return rec;
}

std::vector<Rational> divisor_transform(const std::vector<Rational>& gamma) {
    const std::size_t n = gamma.size();
    std::vector<Rational> b(n);
    for (std::size_t d = 1; d <= n; ++d) {
        if (gamma[d - 1].is_zero())
            continue;
        for (std::size_t k = d; k <= n; k += d)
            b[k - 1] += gamma[d - 1];
    }
    return b;
}

std::vector<Rational> divisor_transform(const GammaSpec& gamma, std::size_t count) {
    return divisor_transform(gamma.prefix(count));
}

std::vector<Rational> lambert_expand(const GammaSpec& gamma, std::size_t count) {
    return divisor_transform(gamma, count);
}

std::vector<Rational> moebius_invert(const std::vector<Rational>& b) {
    if (b.empty())
        throw Error(ErrorKind::invalid_argument, "nothing to invert");
    const std::size_t n = b.size();
    const auto mu = moebius_table(n);
    std::vector<Rational> g(n);
    for (std::size_t d = 1; d <= n; ++d) {
        if (b[d - 1].is_zero())
            continue;
        for (std::size_t k = 1; d * k <= n; ++k) {
            if (mu[k] == 1)
                g[d * k - 1] += b[d - 1];
            else if (mu[k] == -1)
                g[d * k - 1] -= b[d - 1];
        }
    }
    return g;
}

Witness find_witness(const GammaSpec& gamma, std::uint64_t cap) {
    if (cap < 1)
        throw Error(ErrorKind::invalid_argument, "witness cap must be positive");
    const auto g = gamma.prefix(cap);
    const auto b = divisor_transform(g);
    for (std::size_t m = 1; m <= cap; ++m)
        if (!b[m - 1].is_zero())
            return {m, b[m - 1]};
    if (std::all_of(g.begin(), g.end(), [](const Rational& v) { return v.is_zero(); }))
        throw Error(ErrorKind::no_witness, "gamma is zero up to inversion depth " + std::to_string(cap));
    throw Error(ErrorKind::no_witness, "no witness below cap " + std::to_string(cap));
}

PrimeSquareReport prime_square_scan(const GammaSpec& gamma, std::uint64_t bound) {
    if (bound < 2)
        throw Error(ErrorKind::invalid_argument, "prime scan needs bound >= 2");
    const auto g = gamma.prefix(bound);
    PrimeSquareReport out;
    out.checked_bound = bound;
    std::optional<std::pair<u64, Rational>> first;
    for (u64 p : primes_up_to(bound)) {
        const Rational& gp = g[p - 1];
        if (!gp.is_zero())
            out.violations.push_back(p);
        Rational bp = g[0] + gp;
        if (!first) {
            first = {p, bp};
        } else if (out.b_p_witnesses.empty() && bp != first->second) {
            out.b_p_witnesses = {first->first, p};
        }
    }
    if (out.b_p_witnesses.empty())
        out.b_p_constant_value = first->second;
    return out;
}

std::string candidate_fingerprint(const LinearRecurrence& candidate) {
    const std::string text = to_json(candidate).dump();
    u64 h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

LinearRecurrence candidate_from_prefix(const GammaSpec& gamma, std::size_t length) {
    auto bm = berlekamp_massey(divisor_transform(gamma, length), 1);
    if (bm.zero)
        throw Error(ErrorKind::invalid_argument, "divisor sums vanish on the whole prefix");
    return bm.recurrence;
}

RefutationCertificate refute(const GammaSpec& gamma, const LinearRecurrence& candidate, const RefuteOptions& options) {
    gamma.validate();
    check_candidate(candidate);
    const LinearRecurrence full = gamma.as_recurrence();
    const Normalized norm = normalize_from_start(full);
    const LinearRecurrence& eta = norm.recurrence;
    const bool eta_zero =
        std::all_of(eta.initial.begin(), eta.initial.end(), [](const Rational& v) { return v.is_zero(); });
    if (eta_zero)
        throw Error(ErrorKind::not_refuted,
                    "candidate not refuted: gamma is eventually zero, so its divisor sums are eventually periodic");
    const Witness w = find_witness(GammaSpec{eta}, options.witness_cap);
    const u64 support_max = norm.correction.empty() ? 0 : static_cast<u64>(norm.correction.rbegin()->first);

    std::vector<Rational> integral = rational_data(full);
    for (const auto& x : rational_data(eta))
        integral.push_back(x);
    for (const auto& x : rational_data(candidate))
        integral.push_back(x);
    const std::size_t s = candidate.order();
    for (const auto& x : divisor_transform(gamma, static_cast<std::size_t>(candidate.start_index) + s - 1))
        integral.push_back(x);

    u64 floor = options.prime_floor;
    for (unsigned attempt = 0; attempt < options.prime_attempts; ++attempt) {
        const u64 p = good_prime({eta.coeffs.back(), w.S}, floor, integral);
        floor = p + 1;
        try {
            RefutationCertificate cert;
            cert.m = w.m;
            cert.S = w.S;
            cert.p = p;
            cert.S_modp = reduce_mod(w.S, p);
            cert.T_gamma = matrix_order(MatrixFp::companion(reduce_recurrence(eta, p).coeffs, p));
            const auto window = true_window(gamma, candidate.start_index, s, p);
            const PeriodReport period = linear_eventual_period(reduce_all(candidate.coeffs, p), window, p);
            cert.N0 = period.preperiod + candidate.start_index;
            cert.T_b = period.period;
            cert.T = lcm(cert.T_gamma, cert.T_b);
            const Integer m = to_integer(w.m);
            Integer q_floor = std::max(ceil_div(cert.N0, m), Integer(isqrt(to_integer(support_max)) + 1));
            q_floor = std::max(q_floor, Integer(2));
            cert.q = prime_in_progression(cert.T, q_floor, m, options.q_search_cap);
            const auto [b1, b2] = probe_b(GammaModP(full, p), w.m, cert.q, p);
            cert.b_mq_modp = b1;
            cert.b_mq2_modp = b2;
            cert.candidate_fingerprint = candidate_fingerprint(candidate);
            if ((b2 + p - b1) % p != cert.S_modp)
                throw Error(ErrorKind::not_refuted, "candidate not refuted: b(mq^2) - b(mq) differs from S mod p");
            return cert;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::unsupported && e.kind() != ErrorKind::search_cap_exceeded)
                throw;
        }
    }
    throw Error(ErrorKind::search_cap_exceeded,
                "no prime among " + std::to_string(options.prime_attempts) + " attempts gave a tractable certificate");
}

Verdict verify_certificate(const GammaSpec& gamma, const LinearRecurrence& candidate, const RefutationCertificate& cert) {
    try {
        return verify_checks(gamma, candidate, cert);
    } catch (const Error& e) {
        return {false, std::string("check failed: ") + e.what()};
    }
}

namespace {

Verdict verify_checks(const GammaSpec& gamma, const LinearRecurrence& candidate, const RefutationCertificate& cert) {
    auto reject = [](std::string reason) { return Verdict{false, std::move(reason)}; };
    try {
        gamma.validate();
        check_candidate(candidate);
    } catch (const Error& e) {
        return reject(std::string("invalid input: ") + e.what());
    }
    if (candidate_fingerprint(candidate) != cert.candidate_fingerprint)
        return reject("candidate fingerprint mismatch");

    const LinearRecurrence full = gamma.as_recurrence();
    const Normalized norm = normalize_from_start(full);
    const LinearRecurrence& eta = norm.recurrence;
    if (cert.m == 0)
        return reject("m must be positive");
    {
        Rational s;
        const auto g = expand(eta, static_cast<std::size_t>(cert.m));
        for (u64 e : divisors(cert.m))
            s += g[e - 1];
        if (s != cert.S)
            return reject("S mismatch");
        if (s.is_zero())
            return reject("S is zero");
    }
    const u64 p = cert.p;
    if (!is_prime(p))
        return reject("p not prime");
    auto divides = [p](const Integer& v) { return mpz_divisible_ui_p(v.get_mpz_t(), p) != 0; };
    if (divides(eta.coeffs.back().num()) || divides(cert.S.num()) || divides(cert.S.den()))
        return reject("p not good");
    for (const auto* rec : {&full, &eta, &candidate})
        for (const auto& x : rational_data(*rec))
            if (divides(x.den()))
                return reject("p not good");
    if (cert.S_modp == 0)
        return reject("S reduces to zero");
    if (cert.S_modp != reduce_mod(cert.S, p))
        return reject("S_modp mismatch");

    // T_gamma: definitional check M^T = I and M^{T/l} != I.
    const MatrixFp eta_step = MatrixFp::companion(reduce_recurrence(eta, p).coeffs, p);
    if (cert.T_gamma <= 0 || !eta_step.pow(cert.T_gamma).is_identity())
        return reject("T_gamma mismatch");
    for (const auto& f : factorize(cert.T_gamma).factors)
        if (eta_step.pow(cert.T_gamma / f.first).is_identity())
            return reject("T_gamma mismatch");

    // (N0, T_b): periodicity of the candidate orbit seeded with the true b window.
    const std::size_t s = candidate.order();
    std::vector<u64> window;
    {
        const GammaModP g(full, p);
        for (std::size_t i = 0; i < s; ++i) {
            const u64 n = static_cast<u64>(candidate.start_index) + i;
            u64 acc = 0;
            for (u64 d : divisors(n))
                acc = (acc + g.at(to_integer(d))) % p;
            window.push_back(acc);
        }
    }
    const MatrixFp cand_step = MatrixFp::companion(reduce_all(candidate.coeffs, p), p);
    auto state = [&](const Integer& k) { return cand_step.pow(k).apply(window); };
    const Integer mu = cert.N0 - candidate.start_index;
    if (mu < 0)
        return reject("N0 mismatch");
    if (cert.T_b <= 0)
        return reject("T_b mismatch");
    if (state(mu) != state(mu + cert.T_b)) {
        // The preperiod of a linear orbit is at most the dimension.
        const Integer late = std::max(mu, to_integer(s));
        return reject(state(late) == state(late + cert.T_b) ? "N0 mismatch" : "T_b mismatch");
    }
    if (mu > 0 && state(mu - 1) == state(mu - 1 + cert.T_b))
        return reject("N0 mismatch");
    for (const auto& f : factorize(cert.T_b).factors)
        if (state(mu) == state(mu + cert.T_b / f.first))
            return reject("T_b mismatch");
    if (cert.N0 + cert.T_b <= (1u << 16) && s > 0) {
        // Small orbits are also walked explicitly.
        StateMap step = [&](const std::vector<u64>& st) { return cand_step.apply(st); };
        const PeriodReport walked = eventual_period(step, window, 1u << 18);
        if (walked.period != cert.T_b)
            return reject("T_b mismatch");
        if (walked.preperiod != mu)
            return reject("N0 mismatch");
    }

    if (cert.T != lcm(cert.T_gamma, cert.T_b))
        return reject("T not lcm(T_gamma, T_b)");
    if (!is_probable_prime(cert.q))
        return reject("q not prime");
    if (cert.T <= 0 || mpz_divisible_p(Integer(cert.q - 1).get_mpz_t(), cert.T.get_mpz_t()) == 0)
        return reject("q not ≡ 1 mod T");
    const Integer m = to_integer(cert.m);
    if (m % cert.q == 0)
        return reject("q divides m");
    if (m * cert.q < cert.N0)
        return reject("mq < N0");
    const u64 support_max = norm.correction.empty() ? 0 : static_cast<u64>(norm.correction.rbegin()->first);
    if (cert.q * cert.q <= to_integer(support_max))
        return reject("q^2 within the correction support");

    const auto [b1, b2] = probe_b(GammaModP(full, p), cert.m, cert.q, p);
    if (b1 != cert.b_mq_modp)
        return reject("b_mq mismatch");
    if (b2 != cert.b_mq2_modp)
        return reject("b_mq2 mismatch");
    if ((b2 + p - b1) % p != cert.S_modp)
        return reject("difference != S_modp");
    return {true, {}};
}

} // namespace

} // namespace lrs

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lrs/modp.hpp"
#include "lrs/recurrence.hpp"

namespace lrs {

using SupportMap = std::map<std::uint64_t, Rational>;

// gamma_1, gamma_2, ... given by a recurrence with first_index 1, or by a
// finitely supported map from positive indices.
struct GammaSpec {
    std::variant<LinearRecurrence, SupportMap> data;

    // Throws invalid_argument on a recurrence with first_index != 1 or a
    // support index of 0.
    void validate() const;
    // gamma_1 .. gamma_count.
    std::vector<Rational> prefix(std::size_t count) const;
    // Same sequence as a recurrence; a support map becomes an eventually zero one.
    LinearRecurrence as_recurrence() const;
};

// b_1 .. b_count with b_n = sum over d | n of gamma_d.
std::vector<Rational> divisor_transform(const GammaSpec& gamma, std::size_t count);
std::vector<Rational> divisor_transform(const std::vector<Rational>& gamma_prefix);
// Coefficients of sum gamma_n z^n / (1 - z^n); the same numbers as divisor_transform.
std::vector<Rational> lambert_expand(const GammaSpec& gamma, std::size_t count);
// gamma_n = sum over d | n of mu(n/d) b_d.
std::vector<Rational> moebius_invert(const std::vector<Rational>& b);

struct Witness {
    std::uint64_t m = 0;
    Rational S;
};
// Smallest m <= cap with sum_{d | m} gamma_d != 0; throws no_witness.
Witness find_witness(const GammaSpec& gamma, std::uint64_t cap = 256);

struct PrimeSquareReport {
    std::uint64_t checked_bound = 0;
    std::vector<std::uint64_t> violations;       // primes p with gamma_p != 0
    std::optional<Rational> b_p_constant_value;  // empty when b_p varies
    std::vector<std::uint64_t> b_p_witnesses;    // two primes with different b_p
};
PrimeSquareReport prime_square_scan(const GammaSpec& gamma, std::uint64_t bound);

struct RefutationCertificate {
    std::uint64_t m = 0;
    Rational S;
    std::uint64_t p = 0;
    Integer T_gamma, N0, T_b, T, q;
    std::uint64_t b_mq_modp = 0, b_mq2_modp = 0, S_modp = 0;
    std::string candidate_fingerprint;

    friend bool operator==(const RefutationCertificate&, const RefutationCertificate&) = default;
};

struct RefuteOptions {
    std::uint64_t prime_floor = 2;
    std::uint64_t witness_cap = 256;
    // Primes tried when factoring or the q search stalls for one prime.
    unsigned prime_attempts = 32;
    std::uint64_t q_search_cap = 200000;
};

// Certificate that `candidate` cannot describe the divisor sums of gamma from
// its start index on. Throws not_refuted when gamma is eventually zero.
RefutationCertificate refute(const GammaSpec& gamma, const LinearRecurrence& candidate,
                             const RefuteOptions& options = {});

struct Verdict {
    bool accepted = false;
    std::string reason; // first failing check, empty on acceptance
};
Verdict verify_certificate(const GammaSpec& gamma, const LinearRecurrence& candidate,
                           const RefutationCertificate& cert);

// FNV-1a (64-bit, hex) of the canonical JSON of the candidate.
std::string candidate_fingerprint(const LinearRecurrence& candidate);

// Candidate for b from Berlekamp-Massey on b_1 .. b_length.
LinearRecurrence candidate_from_prefix(const GammaSpec& gamma, std::size_t length);

} // namespace lrs

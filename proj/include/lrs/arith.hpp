#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lrs/rational.hpp"

namespace lrs {

// Prime-exponent pairs, primes strictly increasing.
struct Factorization {
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    std::uint64_t value() const;
};

struct BigFactorization {
    std::vector<std::pair<Integer, unsigned>> factors;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);
// Deterministic below 2^64; Miller-Rabin with the first 24 prime bases beyond.
bool is_probable_prime(const Integer& n);

Factorization factorize(std::uint64_t n);
// Trial division plus Pollard-Brent rho; throws unsupported when a composite
// cofactor resists `rho_iterations` steps.
BigFactorization factorize(const Integer& n, std::uint64_t rho_iterations = 1u << 22);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(const Factorization& f);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
// mu(0..n); entry 0 is unused.
std::vector<int> moebius_table(std::uint64_t n);
std::vector<std::uint64_t> phi_table(std::uint64_t n);

// Smallest prime q >= floor with q = 1 (mod T) and q not dividing `avoid`,
// searching no further than `cap`.
std::uint64_t prime_in_progression(std::uint64_t modulus, std::uint64_t floor,
                                   std::uint64_t avoid, std::uint64_t cap);
// Same search in arbitrary precision; `cap` bounds the number of candidates tried.
Integer prime_in_progression(const Integer& modulus, const Integer& floor,
                             const Integer& avoid, std::uint64_t cap);

std::uint64_t to_u64(const Integer& v);
bool fits_u64(const Integer& v);
Integer to_integer(std::uint64_t v);

} // namespace lrs

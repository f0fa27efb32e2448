#include "lrs/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "lrs/error.hpp"

namespace lrs {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

namespace {

bool mr_witness_passes(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

constexpr std::array<unsigned, 24> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                                   41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

u64 pollard_rho(u64 n) {
    if (n % 2 == 0)
        return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n)
            return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

bool big_rho(const Integer& n, std::uint64_t budget, Integer& factor) {
    // Brent's variant with batched gcds.
    for (unsigned long c = 1; c < 16; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        std::uint64_t r = 1, spent = 0;
        const std::uint64_t m = 128;
        auto f = [&](Integer& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        while (g == 1 && spent < budget) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                f(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    f(y);
                    Integer diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
                spent += lim;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                f(ys);
                Integer diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) {
            factor = g;
            return true;
        }
        if (spent >= budget)
            return false;
    }
    return false;
}

void big_factor_rec(const Integer& n, std::uint64_t budget, std::vector<Integer>& out) {
    if (n == 1)
        return;
    if (fits_u64(n)) {
        std::vector<u64> small;
        factor_rec(to_u64(n), small);
        for (auto p : small)
            out.push_back(to_integer(p));
        return;
    }
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d;
    if (!big_rho(n, budget, d))
        throw Error(ErrorKind::unsupported, "could not factor " + n.get_str(), n.get_str());
    big_factor_rec(d, budget, out);
    big_factor_rec(Integer(n / d), budget, out);
}

} // namespace

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (auto [p, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            v *= p;
    return v;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is deterministic below 3.3 * 10^24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!mr_witness_passes(n, a, d, s))
            return false;
    return true;
}

bool is_probable_prime(const Integer& n) {
    if (n < 2)
        return false;
    if (fits_u64(n))
        return is_prime(to_u64(n));
    for (unsigned p : kSmallPrimes)
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    Integer d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    Integer nm1 = n - 1;
    for (unsigned a : kSmallPrimes) {
        Integer x;
        Integer base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1)
            continue;
        bool passed = false;
        for (unsigned i = 1; i < s && !passed; ++i) {
            x = x * x;
            mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
            passed = x == nm1;
        }
        if (!passed)
            return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0)
        throw Error(ErrorKind::invalid_argument, "cannot factor zero");
    std::vector<u64> primes;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p)
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    Factorization f;
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

BigFactorization factorize(const Integer& n, std::uint64_t rho_iterations) {
    if (n <= 0)
        throw Error(ErrorKind::invalid_argument, "cannot factor a non-positive integer");
    Integer rest = n;
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 20000; ++p) {
        if (rest == 1)
            break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.emplace_back(p);
            rest /= p;
        }
    }
    big_factor_rec(rest, rho_iterations, primes);
    std::sort(primes.begin(), primes.end());
    BigFactorization f;
    for (auto& p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0)
        throw Error(ErrorKind::invalid_argument, "euler_phi(0) is undefined");
    u64 r = n;
    for (auto [p, e] : factorize(n).factors)
        r = r / p * (p - 1);
    return r;
}

int moebius(std::uint64_t n) {
    if (n == 0)
        throw Error(ErrorKind::invalid_argument, "moebius(0) is undefined");
    int r = 1;
    for (auto [p, e] : factorize(n).factors) {
        if (e > 1)
            return 0;
        r = -r;
    }
    return r;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<u64> out{1};
    for (auto [p, e] : f.factors) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0)
        throw Error(ErrorKind::invalid_argument, "divisors(0) is undefined");
    return divisors(factorize(n));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<u64> out;
    if (n < 2)
        return out;
    std::vector<bool> composite(n + 1);
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (u64 j = i * i; j <= n; j += i)
            composite[j] = true;
    }
    return out;
}

std::vector<int> moebius_table(std::uint64_t n) {
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> composite(n + 1);
    mu[0] = 0;
    for (u64 i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        for (u64 j = i; j <= n; j += i) {
            if (j > i)
                composite[j] = true;
            mu[j] = -mu[j];
        }
        if (i <= n / i)
            for (u64 j = i * i; j <= n; j += i * i)
                mu[j] = 0;
    }
    return mu;
}

std::vector<std::uint64_t> phi_table(std::uint64_t n) {
    std::vector<u64> phi(n + 1);
    std::iota(phi.begin(), phi.end(), u64{0});
    for (u64 i = 2; i <= n; ++i)
        if (phi[i] == i)
            for (u64 j = i; j <= n; j += i)
                phi[j] -= phi[j] / i;
    return phi;
}

std::uint64_t prime_in_progression(std::uint64_t modulus, std::uint64_t floor,
                                   std::uint64_t avoid, std::uint64_t cap) {
    if (modulus == 0)
        throw Error(ErrorKind::invalid_argument, "modulus must be positive");
    u64 start = std::max<u64>(floor, 2);
    // First candidate >= start congruent to 1 mod T.
    u64 rem = (start - 1) % modulus;
    u64 q = rem == 0 ? start : start + (modulus - rem);
    for (; q <= cap; ) {
        if (is_prime(q) && (avoid == 0 || avoid % q != 0))
            return q;
        if (q > cap - modulus)
            break;
        q += modulus;
    }
    throw Error(ErrorKind::search_cap_exceeded,
                "no prime = 1 mod " + std::to_string(modulus) + " below cap " + std::to_string(cap),
                std::to_string(cap));
}

Integer prime_in_progression(const Integer& modulus, const Integer& floor, const Integer& avoid,
                             std::uint64_t cap) {
    if (modulus <= 0)
        throw Error(ErrorKind::invalid_argument, "modulus must be positive");
    Integer start = floor < 2 ? Integer(2) : floor;
    Integer rem = (start - 1) % modulus;
    Integer q = rem == 0 ? start : Integer(start + (modulus - rem));
    for (std::uint64_t tried = 0; tried < cap; ++tried, q += modulus) {
        if (avoid != 0 && mpz_divisible_p(avoid.get_mpz_t(), q.get_mpz_t()))
            continue;
        if (is_probable_prime(q))
            return q;
    }
    throw Error(ErrorKind::search_cap_exceeded,
                "no prime = 1 mod " + modulus.get_str() + " within " + std::to_string(cap) +
                    " candidates",
                std::to_string(cap));
}

std::uint64_t to_u64(const Integer& v) {
    if (!fits_u64(v))
        throw Error(ErrorKind::unsupported, "integer exceeds 64 bits", v.get_str());
    return mpz_get_ui(v.get_mpz_t());
}

bool fits_u64(const Integer& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

Integer to_integer(std::uint64_t v) {
    Integer r;
    mpz_set_ui(r.get_mpz_t(), v);
    return r;
}

} // namespace lrs

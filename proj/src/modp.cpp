#include "lrs/modp.hpp"

#include <mutex>

#include "lrs/arith.hpp"
#include "lrs/cyclotomic.hpp"
#include "lrs/error.hpp"

namespace lrs {

namespace {

using u64 = std::uint64_t;
using PolyP = std::vector<u64>; // low to high, monic modulus where used

template <typename IsOne>
Integer descend_order(const std::map<Integer, unsigned>& exponent, IsOne is_one) {
    Integer order = 1;
    for (const auto& [l, a] : exponent)
        for (unsigned i = 0; i < a; ++i)
            order *= l;
    if (!is_one(order))
        throw Error(ErrorKind::invalid_argument, "element is not invertible");
    for (const auto& [l, a] : exponent)
        for (unsigned i = 0; i < a; ++i) {
            Integer smaller = order / l;
            if (!is_one(smaller))
                break;
            order = smaller;
        }
    return order;
}

std::map<Integer, unsigned> factor_cyclotomic_value(std::uint64_t e, std::uint64_t p) {
    static std::mutex mu;
    static std::map<std::pair<u64, u64>, std::map<Integer, unsigned>> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find({e, p}); it != memo.end())
            return it->second;
    }
    const Integer v = cyclotomic(e).eval(Rational(static_cast<unsigned long>(p))).num();
    std::map<Integer, unsigned> f;
    if (v > 1)
        for (auto& [q, k] : factorize(v).factors)
            f[q] += k;
    std::lock_guard lock(mu);
    memo.emplace(std::make_pair(e, p), f);
    return f;
}

// Factored multiple of the order of every element of GL_r(F_p):
// p^t prod_{e <= r} Phi_e(p), where p^t >= r bounds nilpotent parts.
std::map<Integer, unsigned> order_exponent(std::size_t r, u64 p) {
    std::map<Integer, unsigned> out;
    unsigned t = 0;
    for (u64 pt = 1; pt < r; pt *= p)
        ++t;
    if (t)
        out[Integer(static_cast<unsigned long>(p))] += t;
    for (u64 e = 1; e <= r; ++e)
        for (auto& [q, k] : factor_cyclotomic_value(e, p))
            out[q] += k;
    return out;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& h, u64 p) {
    const std::size_t d = h.size() - 1;
    std::vector<u64> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
    for (std::size_t k = prod.size(); k-- > d;) {
        u64 c = prod[k];
        if (!c)
            continue;
        for (std::size_t i = 0; i < d; ++i)
            prod[k - d + i] = (prod[k - d + i] + p - mul_mod(c, h[i], p)) % p;
        prod[k] = 0;
    }
    prod.resize(d);
    return prod;
}

// x^e mod h for monic h of degree >= 1.
PolyP x_pow_mod(const Integer& e, const PolyP& h, u64 p) {
    const std::size_t d = h.size() - 1;
    PolyP result(d, 0), base(d, 0);
    result[0] = 1 % p;
    if (d == 1)
        base[0] = (p - h[0]) % p; // x = -h_0 mod (x + h_0)
    else
        base[1] = 1;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mulmod(result, result, h, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = poly_mulmod(result, base, h, p);
    }
    return result;
}

} // namespace

std::uint64_t reduce_mod(const Rational& x, std::uint64_t p) {
    const u64 den = mpz_fdiv_ui(x.den().get_mpz_t(), p);
    if (den == 0)
        throw Error(ErrorKind::invalid_argument,
                    "value " + x.str() + " has a denominator divisible by " + std::to_string(p), x.str());
    const u64 num = mpz_fdiv_ui(x.num().get_mpz_t(), p);
    return mul_mod(num, inv_mod(den, p), p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0)
        throw Error(ErrorKind::division_by_zero, "zero has no inverse mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

std::uint64_t good_prime(const std::vector<Rational>& protect, std::uint64_t floor,
                         const std::vector<Rational>& integral, std::uint64_t cap) {
    for (const auto& v : protect)
        if (v.is_zero())
            throw Error(ErrorKind::invalid_argument, "zero cannot be protected");
    u64 n = std::max<u64>(floor, 2);
    for (u64 tried = 0; tried < cap; ++n) {
        if (!is_prime(n))
            continue;
        ++tried;
        bool ok = true;
        for (const auto& v : protect)
            ok = ok && !mpz_divisible_ui_p(v.num().get_mpz_t(), n) && !mpz_divisible_ui_p(v.den().get_mpz_t(), n);
        for (const auto& v : integral)
            ok = ok && !mpz_divisible_ui_p(v.den().get_mpz_t(), n);
        if (ok)
            return n;
    }
    throw Error(ErrorKind::search_cap_exceeded, "no good prime among " + std::to_string(cap) + " candidates");
}

RecurrenceModP reduce_recurrence(const LinearRecurrence& rec, std::uint64_t p) {
    rec.validate();
    if (!is_prime(p))
        throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime", std::to_string(p));
    RecurrenceModP out;
    out.p = p;
    out.start_index = rec.start_index;
    out.first_index = rec.first_index;
    for (const auto& c : rec.coeffs)
        out.coeffs.push_back(reduce_mod(c, p));
    if (out.coeffs.back() == 0)
        throw Error(ErrorKind::invalid_argument,
                    "trailing coefficient " + rec.coeffs.back().str() + " vanishes mod " + std::to_string(p),
                    rec.coeffs.back().str());
    for (const auto& v : rec.initial)
        out.initial.push_back(reduce_mod(v, p));
    return out;
}

std::vector<std::uint64_t> expand(const RecurrenceModP& rec, std::size_t count) {
    const std::size_t r = rec.coeffs.size();
    std::vector<u64> t(rec.initial.begin(), rec.initial.begin() + static_cast<std::ptrdiff_t>(std::min(count, rec.initial.size())));
    while (t.size() < count) {
        const std::size_t j = t.size();
        u64 acc = 0;
        for (std::size_t i = 1; i <= r; ++i)
            acc = (acc + mul_mod(rec.coeffs[i - 1], t[j - i], rec.p)) % rec.p;
        t.push_back(acc);
    }
    return t;
}

MatrixFp MatrixFp::identity(std::size_t n, std::uint64_t p) {
    MatrixFp m(n, p);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1 % p;
    return m;
}

MatrixFp MatrixFp::companion(const std::vector<std::uint64_t>& coeffs, std::uint64_t p) {
    const std::size_t r = coeffs.size();
    MatrixFp m(r, p);
    for (std::size_t i = 0; i + 1 < r; ++i)
        m(i, i + 1) = 1;
    for (std::size_t j = 0; j < r; ++j)
        m(r - 1, j) = coeffs[r - 1 - j] % p;
    return m;
}

MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
    const std::size_t n = a.n_;
    const u64 p = a.p_;
    MatrixFp c(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const u64 aik = a(i, k);
            if (!aik)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c(i, j) = (c(i, j) + mul_mod(aik, b(k, j), p)) % p;
        }
    return c;
}

MatrixFp MatrixFp::pow(const Integer& e) const {
    if (e < 0)
        throw Error(ErrorKind::invalid_argument, "negative matrix power");
    MatrixFp result = identity(n_, p_);
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = result * *this;
    }
    return result;
}

bool MatrixFp::is_identity() const { return *this == identity(n_, p_); }

std::uint64_t MatrixFp::determinant() const {
    MatrixFp a = *this;
    u64 det = 1 % p_;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (piv < n_ && a(piv, col) == 0)
            ++piv;
        if (piv == n_)
            return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(a(piv, j), a(col, j));
            det = (p_ - det) % p_;
        }
        det = mul_mod(det, a(col, col), p_);
        const u64 inv = inv_mod(a(col, col), p_);
        for (std::size_t row = col + 1; row < n_; ++row) {
            const u64 f = mul_mod(a(row, col), inv, p_);
            if (!f)
                continue;
            for (std::size_t j = col; j < n_; ++j)
                a(row, j) = (a(row, j) + p_ - mul_mod(f, a(col, j), p_)) % p_;
        }
    }
    return det;
}

std::vector<std::uint64_t> MatrixFp::apply(const std::vector<std::uint64_t>& v) const {
    if (v.size() != n_)
        throw Error(ErrorKind::invalid_argument, "matrix/vector size mismatch");
    std::vector<u64> out(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out[i] = (out[i] + mul_mod((*this)(i, j), v[j], p_)) % p_;
    return out;
}

Integer gl_order(std::size_t r, std::uint64_t p) {
    Integer pp = static_cast<unsigned long>(p);
    Integer pr, result = 1;
    mpz_pow_ui(pr.get_mpz_t(), pp.get_mpz_t(), r);
    Integer pi = 1;
    for (std::size_t i = 0; i < r; ++i) {
        result *= pr - pi;
        pi *= pp;
    }
    return result;
}

Integer matrix_order(const MatrixFp& m) {
    if (m.size() == 0)
        return 1;
    if (m.determinant() == 0)
        throw Error(ErrorKind::invalid_argument, "singular matrix has no multiplicative order");
    return descend_order(order_exponent(m.size(), m.modulus()),
                         [&](const Integer& e) { return m.pow(e).is_identity(); });
}

PeriodReport eventual_period(const StateMap& step, const std::vector<std::uint64_t>& initial, std::uint64_t cap) {
    if (initial.empty())
        throw Error(ErrorKind::invalid_argument, "state must be nonempty");
    u64 power = 1, lambda = 1, steps = 0;
    auto tortoise = initial;
    auto hare = step(initial);
    while (tortoise != hare) {
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        hare = step(hare);
        ++lambda;
        if (++steps > cap)
            throw Error(ErrorKind::search_cap_exceeded, "cycle not found within " + std::to_string(cap) + " steps");
    }
    tortoise = hare = initial;
    for (u64 i = 0; i < lambda; ++i)
        hare = step(hare);
    u64 mu = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++mu;
    }
    return {Integer(static_cast<unsigned long>(mu)), Integer(static_cast<unsigned long>(lambda))};
}

BerlekampMasseyModP berlekamp_massey_mod(const std::vector<std::uint64_t>& s, std::uint64_t p) {
    std::vector<u64> c{1 % p}, b{1 % p};
    std::size_t len = 0, m = 1;
    u64 bd = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        u64 d = s[n] % p;
        for (std::size_t i = 1; i <= len && i < c.size(); ++i)
            d = (d + mul_mod(c[i], s[n - i], p)) % p;
        if (d == 0) {
            ++m;
            continue;
        }
        const u64 f = mul_mod(d, inv_mod(bd, p), p);
        std::vector<u64> next = c;
        if (next.size() < b.size() + m)
            next.resize(b.size() + m, 0);
        for (std::size_t i = 0; i < b.size(); ++i)
            next[i + m] = (next[i + m] + p - mul_mod(f, b[i], p)) % p;
        if (2 * len <= n) {
            b = std::move(c);
            len = n + 1 - len;
            bd = d;
            m = 1;
        } else {
            ++m;
        }
        c = std::move(next);
    }
    c.resize(len + 1, 0);
    return {c, len};
}

PeriodReport linear_eventual_period(const std::vector<std::uint64_t>& coeffs,
                                    const std::vector<std::uint64_t>& initial, std::uint64_t p) {
    const std::size_t s = coeffs.size();
    if (s == 0 || initial.size() != s)
        throw Error(ErrorKind::invalid_argument, "state window must match the recurrence order");
    RecurrenceModP rec{p, coeffs, initial, 0, 0};
    const auto w = expand(rec, 2 * s);
    const auto bm = berlekamp_massey_mod(w, p);
    const std::size_t len = bm.linear_complexity;
    std::size_t dc = len;
    while (dc > 0 && bm.connection[dc] == 0)
        --dc;
    PeriodReport out{Integer(static_cast<unsigned long>(len - dc)), Integer(1)};
    if (dc == 0)
        return out;
    // h(x) = x^dc + C_1 x^{dc-1} + ... + C_dc, stored low to high.
    PolyP h(dc + 1);
    for (std::size_t i = 0; i <= dc; ++i)
        h[dc - i] = bm.connection[i];
    out.period = descend_order(order_exponent(dc, p), [&](const Integer& e) {
        auto v = x_pow_mod(e, h, p);
        if (v[0] != 1 % p)
            return false;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i])
                return false;
        return true;
    });
    return out;
}

} // namespace lrs

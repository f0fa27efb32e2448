#include "lrs/poly.hpp"

#include <algorithm>
#include <sstream>

#include "lrs/error.hpp"

namespace lrs {

namespace {
const Rational kZero;
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::x_pow_minus_one(std::size_t n) {
    std::vector<Rational> v(n + 1);
    v[0] = -1;
    v[n] += 1;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

const Rational& Poly::operator[](std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rational& Poly::lc() const {
    return c_.empty() ? kZero : c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero())
        return {};
    Rational inv = lc().inverse();
    return *this * inv;
}

Poly Poly::primitive() const {
    if (is_zero())
        return {};
    Integer l = 1;
    for (const auto& c : c_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(c_.size());
    Integer g = 0;
    for (const auto& c : c_) {
        Integer v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (ints.back() < 0)
        g = -g;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& v : ints)
        out.emplace_back(Integer(v / g));
    return Poly(std::move(out));
}

Poly Poly::inflate(std::size_t k) const {
    if (k == 1 || is_zero())
        return *this;
    std::vector<Rational> v((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i * k] = c_[i];
    return Poly(std::move(v));
}

Poly Poly::scale_var(const Rational& c) const {
    std::vector<Rational> v(c_);
    Rational pw = 1;
    for (auto& x : v) {
        x *= pw;
        pw *= c;
    }
    return Poly(std::move(v));
}

Poly Poly::shift(std::size_t k) const {
    if (is_zero())
        return {};
    std::vector<Rational> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

Poly Poly::truncate(std::size_t n) const {
    if (c_.size() <= n)
        return *this;
    return Poly(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = Poly::constant(1);
    Poly base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

Poly operator-(const Poly& a) {
    std::vector<Rational> v(a.c_);
    for (auto& c : v)
        c = -c;
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            acc[i + j] += a.c_[i].value() * b.c_[j].value();
    }
    std::vector<Rational> v;
    v.reserve(acc.size());
    for (auto& x : acc)
        v.emplace_back(x);
    return Poly(std::move(v));
}

std::string Poly::str(char var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const auto& c = c_[i];
        if (c.is_zero())
            continue;
        bool neg = c.sign() < 0;
        Rational mag = c.abs();
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0 || !mag.is_one())
            os << mag;
        if (i > 0) {
            if (!mag.is_one())
                os << '*';
            os << var;
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

DivRem divrem(const Poly& p, const Poly& q) {
    if (q.is_zero())
        throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
    if (p.degree() < q.degree())
        return {Poly{}, p};
    std::vector<Rational> r(p.coeffs());
    const int dq = q.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dq + 1));
    Rational inv = q.lc().inverse();
    for (int i = p.degree(); i >= dq; --i) {
        const Rational& top = r[static_cast<std::size_t>(i)];
        if (top.is_zero())
            continue;
        Rational f = top * inv;
        std::size_t shift = static_cast<std::size_t>(i - dq);
        quo[shift] = f;
        for (int j = 0; j <= dq; ++j)
            r[shift + static_cast<std::size_t>(j)] -= f * q[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(dq));
    return {Poly(std::move(quo)), Poly(std::move(r))};
}

Poly exact_div(const Poly& p, const Poly& q) {
    auto [quo, rem] = divrem(p, q);
    if (!rem.is_zero())
        throw Error(ErrorKind::invalid_argument, "inexact polynomial division");
    return quo;
}

Poly gcd(const Poly& a, const Poly& b) {
    // Primitive PRS keeps coefficients integral and small.
    Poly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        Rational scale = y.lc().pow(static_cast<std::uint64_t>(x.degree() - y.degree() + 1));
        Poly r = divrem(x * scale, y).remainder.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

SquarefreeSplit squarefree(const Poly& p) {
    if (p.is_zero())
        throw Error(ErrorKind::invalid_argument, "squarefree part of the zero polynomial");
    if (p.degree() == 0)
        return {Poly::constant(1), Poly::constant(1)};
    Poly g = gcd(p, p.derivative());
    return {g, exact_div(p, g).monic()};
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.is_zero())
        throw Error(ErrorKind::invalid_argument, "squarefree decomposition of zero");
    std::vector<Poly> out;
    if (p.degree() == 0)
        return out;
    Poly f = p.monic();
    Poly a = gcd(f, f.derivative());
    Poly b = exact_div(f, a);
    Poly c = exact_div(f.derivative(), a);
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        out.push_back(g);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

std::vector<Rational> series_divide(const Poly& num, const Poly& den, std::size_t n) {
    if (den[0].is_zero())
        throw Error(ErrorKind::invalid_argument, "series division needs den(0) != 0");
    std::vector<Rational> out(n);
    Rational inv = den[0].inverse();
    const std::size_t dd = den.size();
    for (std::size_t k = 0; k < n; ++k) {
        mpq_class acc = num[k].value();
        std::size_t lim = std::min(k, dd - 1);
        for (std::size_t j = 1; j <= lim; ++j)
            if (!den[j].is_zero())
                acc -= den[j].value() * out[k - j].value();
        out[k] = Rational(acc) * inv;
    }
    return out;
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size())
        throw Error(ErrorKind::invalid_argument, "interpolation size mismatch");
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j)
                break;
        }
    // Horner on the Newton form.
    Poly result;
    for (std::size_t i = n; i-- > 0;) {
        result = result * Poly{-xs[i], Rational(1)};
        result += Poly::constant(dd[i]);
    }
    return result;
}

} // namespace lrs

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrs/rational.hpp"

namespace lrs {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
    // c * x^k
    static Poly monomial(const Rational& c, std::size_t k);
    // x^n - 1
    static Poly x_pow_minus_one(std::size_t n);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    std::size_t size() const { return c_.size(); }

    // Coefficient of x^i, zero beyond the degree.
    const Rational& operator[](std::size_t i) const;
    const Rational& lc() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const;
    // Integer coefficients with gcd 1 and positive leading coefficient.
    Poly primitive() const;
    // p(x^k)
    Poly inflate(std::size_t k) const;
    // p(c x)
    Poly scale_var(const Rational& c) const;
    // x^k p(x)
    Poly shift(std::size_t k) const;
    // p mod x^n
    Poly truncate(std::size_t n) const;
    Poly pow(std::uint64_t e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

// Throws division_by_zero when q is the zero polynomial.
DivRem divrem(const Poly& p, const Poly& q);
// Quotient of an exact division; throws invalid_argument if q does not divide p.
Poly exact_div(const Poly& p, const Poly& q);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct SquarefreeSplit {
    Poly gcd;             // gcd(p, p'), monic
    Poly squarefree_part; // p / gcd(p, p'), monic
};
SquarefreeSplit squarefree(const Poly& p);

// Yun decomposition: p = lc * prod_i factors[i]^(i+1), each factor monic and squarefree.
std::vector<Poly> squarefree_decomposition(const Poly& p);

// Power-series quotient num/den mod x^n; requires den(0) != 0.
std::vector<Rational> series_divide(const Poly& num, const Poly& den, std::size_t n);

// Interpolate the unique polynomial of degree < xs.size() through (xs[i], ys[i]).
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

} // namespace lrs

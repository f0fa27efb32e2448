#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "lrs/recurrence.hpp"

namespace lrs {

// x mod p; throws invalid_argument naming x when p divides its denominator.
std::uint64_t reduce_mod(const Rational& x, std::uint64_t p);
// Throws division_by_zero for a = 0 mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// Smallest prime p >= floor dividing no numerator or denominator of
// `protect` and no denominator of `integral`. Protected values must be
// nonzero. At most `cap` candidates are examined.
std::uint64_t good_prime(const std::vector<Rational>& protect, std::uint64_t floor,
                         const std::vector<Rational>& integral = {}, std::uint64_t cap = 1000000);

struct RecurrenceModP {
    std::uint64_t p = 2;
    std::vector<std::uint64_t> coeffs;
    std::vector<std::uint64_t> initial;
    std::int64_t start_index = 0;
    std::int64_t first_index = 0;
};

RecurrenceModP reduce_recurrence(const LinearRecurrence& rec, std::uint64_t p);
std::vector<std::uint64_t> expand(const RecurrenceModP& rec, std::size_t count);

class MatrixFp {
public:
    MatrixFp() = default;
    MatrixFp(std::size_t n, std::uint64_t p) : n_(n), p_(p), a_(n * n, 0) {}

    static MatrixFp identity(std::size_t n, std::uint64_t p);
    // Rows shift the window; last row (c_r, ..., c_1).
    static MatrixFp companion(const std::vector<std::uint64_t>& coeffs, std::uint64_t p);

    std::size_t size() const { return n_; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    MatrixFp pow(const Integer& e) const;
    bool is_identity() const;
    std::uint64_t determinant() const;
    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;

    friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b);
    friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

private:
    std::size_t n_ = 0;
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> a_;
};

// |GL_r(F_p)| = prod_{i<r} (p^r - p^i).
Integer gl_order(std::size_t r, std::uint64_t p);

// Exact multiplicative order; throws invalid_argument for a singular matrix.
Integer matrix_order(const MatrixFp& m);

struct PeriodReport {
    Integer preperiod;
    Integer period;
};

using StateMap = std::function<std::vector<std::uint64_t>(const std::vector<std::uint64_t>&)>;

// Brent cycle detection on the orbit of `initial`; throws search_cap_exceeded
// after `cap` steps.
PeriodReport eventual_period(const StateMap& step, const std::vector<std::uint64_t>& initial,
                             std::uint64_t cap = std::uint64_t{1} << 26);

// Orbit of the state window under the companion map of coeffs over F_p,
// solved algebraically: with minimal polynomial x^k h(x), h(0) != 0, the
// preperiod is k and the period is the order of x modulo h.
PeriodReport linear_eventual_period(const std::vector<std::uint64_t>& coeffs,
                                    const std::vector<std::uint64_t>& initial, std::uint64_t p);

// Connection polynomial C (C[0] = 1) of the shortest recurrence over F_p
// generating s; its length is the linear complexity.
struct BerlekampMasseyModP {
    std::vector<std::uint64_t> connection;
    std::size_t linear_complexity = 0;
};
BerlekampMasseyModP berlekamp_massey_mod(const std::vector<std::uint64_t>& s, std::uint64_t p);

} // namespace lrs

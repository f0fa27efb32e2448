#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lrs/matrix.hpp"
#include "lrs/poly.hpp"
#include "lrs/rational.hpp"

namespace lrs {

// u_{n+r} = c_1 u_{n+r-1} + ... + c_r u_n for every n >= start_index.
// initial[0] is u_{first_index}; the initial terms reach at least index
// start_index + r - 1, so every term is determined.
struct LinearRecurrence {
    std::vector<Rational> coeffs;
    std::vector<Rational> initial;
    std::int64_t start_index = 0;
    std::int64_t first_index = 0;

    std::size_t order() const { return coeffs.size(); }
    // Number of initial terms the invariants require.
    std::size_t required_terms() const;
    // Throws invalid_argument on a violated invariant.
    void validate() const;

    friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

// Coprime num/den with den(0) = 1.
class RationalFunction {
public:
    RationalFunction() : den_(Poly::constant(1)) {}
    // Reduces to lowest terms and scales den(0) to 1. Throws division_by_zero
    // for a zero denominator and invalid_argument when den(0) = 0 after reduction.
    RationalFunction(Poly num, Poly den);
    static RationalFunction polynomial(Poly p) { return {std::move(p), Poly::constant(1)}; }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero() const { return num_.is_zero(); }

    // F(w^k)
    RationalFunction inflate(std::size_t k) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Poly num_;
    Poly den_;
};

using FiniteCorrection = std::map<std::int64_t, Rational>;

// State U_n = (u_n, ..., u_{n+r-1}) advances by U_{n+1} = A U_n, and
// u_n = functional . A^n v.
struct CompanionForm {
    MatrixQ matrix;
    std::vector<Rational> vector;
    std::vector<Rational> functional;
};

struct Normalized {
    LinearRecurrence recurrence; // start_index == first_index
    FiniteCorrection correction; // supported below the original start_index
};

struct BerlekampMassey {
    bool zero = false;               // the whole prefix vanished
    std::size_t linear_complexity = 0;
    LinearRecurrence recurrence;     // meaningful when !zero
};

// Companion matrix with rows shifting the window and last row (c_r, ..., c_1).
MatrixQ companion_matrix(const std::vector<Rational>& coeffs);

std::vector<Rational> expand(const LinearRecurrence& rec, std::size_t count);
std::vector<Rational> expand(const RationalFunction& rf, std::size_t count);

Normalized normalize_from_start(const LinearRecurrence& rec);
CompanionForm companion_form(const LinearRecurrence& from_start);

RationalFunction to_rational(const LinearRecurrence& rec);
LinearRecurrence from_rational(const RationalFunction& rf);

BerlekampMassey berlekamp_massey(const std::vector<Rational>& prefix, std::int64_t first_index = 0);

// Recurrence generating (a_{M n + r})_{n >= 0}, where a_n is the sequence with
// zeros below first_index (the generating-function convention).
LinearRecurrence section(const LinearRecurrence& rec, std::uint64_t modulus, std::uint64_t residue);

} // namespace lrs

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrs/poly.hpp"
#include "lrs/rational.hpp"

namespace lrs {

// Small dense square matrix over Q.
class MatrixQ {
public:
    MatrixQ() = default;
    explicit MatrixQ(std::size_t n) : n_(n), a_(n * n) {}

    static MatrixQ identity(std::size_t n);

    std::size_t size() const { return n_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    MatrixQ pow(std::uint64_t e) const;
    Rational trace() const;
    Rational determinant() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    // det(xI - A), monic of degree n (Faddeev-LeVerrier).
    Poly characteristic_polynomial() const;

    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
    friend bool operator==(const MatrixQ& a, const MatrixQ& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> a_;
};

} // namespace lrs

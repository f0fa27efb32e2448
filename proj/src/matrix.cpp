#include "lrs/matrix.hpp"

#include "lrs/error.hpp"

namespace lrs {

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    const std::size_t n = a.n_;
    MatrixQ c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

MatrixQ MatrixQ::pow(std::uint64_t e) const {
    MatrixQ result = identity(n_);
    MatrixQ base = *this;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Rational MatrixQ::trace() const {
    Rational t;
    for (std::size_t i = 0; i < n_; ++i)
        t += (*this)(i, i);
    return t;
}

Rational MatrixQ::determinant() const {
    MatrixQ a = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == n_)
            return Rational{};
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        Rational inv = a(col, col).inverse();
        for (std::size_t row = col + 1; row < n_; ++row) {
            if (a(row, col).is_zero())
                continue;
            Rational f = a(row, col) * inv;
            for (std::size_t j = col; j < n_; ++j)
                a(row, j) -= f * a(col, j);
        }
    }
    return det;
}

std::vector<Rational> MatrixQ::apply(const std::vector<Rational>& v) const {
    if (v.size() != n_)
        throw Error(ErrorKind::invalid_argument, "matrix/vector size mismatch");
    std::vector<Rational> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

Poly MatrixQ::characteristic_polynomial() const {
    const std::size_t n = n_;
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    MatrixQ mk(n);
    for (std::size_t k = 1; k <= n; ++k) {
        MatrixQ next = *this * mk;
        for (std::size_t i = 0; i < n; ++i)
            next(i, i) += c[n - k + 1];
        mk = std::move(next);
        c[n - k] = -(*this * mk).trace() / Rational(static_cast<long>(k));
    }
    return Poly(std::move(c));
}

} // namespace lrs

#include "lrs/resultant.hpp"

#include <algorithm>

#include "lrs/error.hpp"

namespace lrs {

namespace {

void require_nonzero(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero())
        throw Error(ErrorKind::invalid_argument, "resultant of a zero polynomial");
}

Rational determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return Rational{};
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].inverse();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero())
                continue;
            Rational f = a[row][col] * inv;
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
    auto scale = b.lc().pow(static_cast<std::uint64_t>(a.degree() - b.degree() + 1));
    return divrem(a * scale, b).remainder;
}

Rational power(const Rational& base, long e) {
    if (e >= 0)
        return base.pow(static_cast<std::uint64_t>(e));
    return base.inverse().pow(static_cast<std::uint64_t>(-e));
}

} // namespace

Rational sylvester_resultant(const Poly& p, const Poly& q) {
    require_nonzero(p, q);
    const std::size_t m = static_cast<std::size_t>(p.degree());
    const std::size_t n = static_cast<std::size_t>(q.degree());
    const std::size_t size = m + n;
    if (size == 0)
        return Rational(1);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    // Rows hold coefficients from the leading term down.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j)
            s[r][r + j] = p[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j)
            s[n + r][r + j] = q[n - j];
    return determinant(std::move(s));
}

Rational subresultant_resultant(const Poly& p, const Poly& q) {
    require_nonzero(p, q);
    Poly a = p, b = q;
    Rational s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1)
            s = -s;
    }
    if (b.degree() == 0)
        return s * b.lc().pow(static_cast<std::uint64_t>(a.degree()));
    Rational g = 1, h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1)
            s = -s;
        Poly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r * (g * power(h, delta)).inverse();
        g = a.lc();
        h = power(h, 1 - delta) * power(g, delta);
        if (b.is_zero())
            return Rational{};
        if (b.degree() == 0)
            break;
    }
    h = power(h, 1 - a.degree()) * power(b.lc(), a.degree());
    return s * h;
}

Rational resultant(const Poly& p, const Poly& q) {
    require_nonzero(p, q);
    if (std::max(p.degree(), q.degree()) > 8)
        return subresultant_resultant(p, q);
    return sylvester_resultant(p, q);
}

} // namespace lrs

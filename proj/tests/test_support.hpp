#pragma once

#include <random>
#include <vector>

#include "lrs/poly.hpp"
#include "lrs/recurrence.hpp"

namespace lrs::test {

inline Rational small_int(std::mt19937_64& rng, int bound) {
    return Rational(static_cast<long>(rng() % (2 * bound + 1)) - bound);
}

inline Poly random_poly(std::mt19937_64& rng, int degree, int bound) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i)
        c.push_back(small_int(rng, bound));
    if (c.back().is_zero())
        c.back() = 1;
    return Poly(std::move(c));
}

// Order 1..max_order, nonzero trailing coefficient, occasionally rational.
inline LinearRecurrence random_recurrence(std::mt19937_64& rng, std::size_t max_order,
                                          bool shifted = true) {
    LinearRecurrence rec;
    const std::size_t r = 1 + rng() % max_order;
    for (std::size_t i = 0; i < r; ++i) {
        Rational c = small_int(rng, 3);
        if (rng() % 8 == 0)
            c /= Rational(2);
        rec.coeffs.push_back(c);
    }
    if (rec.coeffs.back().is_zero())
        rec.coeffs.back() = rng() % 2 ? 1 : -1;
    if (shifted) {
        rec.first_index = static_cast<std::int64_t>(rng() % 3);
        rec.start_index = rec.first_index + static_cast<std::int64_t>(rng() % 4);
    }
    for (std::size_t i = 0; i < rec.required_terms(); ++i)
        rec.initial.push_back(small_int(rng, 5));
    return rec;
}

} // namespace lrs::test

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lrs/error.hpp"
#include "lrs/recurrence.hpp"
#include "test_support.hpp"

using namespace lrs;

namespace {

LinearRecurrence fibonacci() {
    return {{1, 1}, {0, 1}, 0, 0};
}

// Terms a_0..a_{count-1}, zero below first_index.
std::vector<Rational> padded(const LinearRecurrence& rec, std::size_t count) {
    auto body = expand(rec, count);
    std::vector<Rational> out(static_cast<std::size_t>(rec.first_index), Rational{});
    out.insert(out.end(), body.begin(), body.end());
    out.resize(count);
    return out;
}

// Smallest L admitting c_1..c_L with s_n = sum c_i s_{n-i} for L <= n < N,
// found by checking consistency of each linear system directly.
std::size_t linear_complexity_oracle(const std::vector<Rational>& s) {
    const std::size_t n = s.size();
    for (std::size_t len = 0; len <= n; ++len) {
        // Augmented rows [s_{k-1} ... s_{k-len} | s_k] for k = len..n-1.
        std::vector<std::vector<Rational>> rows;
        for (std::size_t k = len; k < n; ++k) {
            std::vector<Rational> row;
            for (std::size_t i = 1; i <= len; ++i)
                row.push_back(s[k - i]);
            row.push_back(s[k]);
            rows.push_back(row);
        }
        std::size_t rank_row = 0;
        bool consistent = true;
        for (std::size_t col = 0; col <= len && rank_row < rows.size(); ++col) {
            std::size_t piv = rank_row;
            while (piv < rows.size() && rows[piv][col].is_zero())
                ++piv;
            if (piv == rows.size())
                continue;
            if (col == len) {
                consistent = false;
                break;
            }
            std::swap(rows[piv], rows[rank_row]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank_row || rows[r][col].is_zero())
                    continue;
                Rational f = rows[r][col] / rows[rank_row][col];
                for (std::size_t j = col; j <= len; ++j)
                    rows[r][j] -= f * rows[rank_row][j];
            }
            ++rank_row;
        }
        if (consistent)
            return len;
    }
    return n;
}

} // namespace

TEST_CASE("expand fibonacci and validation errors") {
    auto t = expand(fibonacci(), 12);
    CHECK(t[11] == Rational(89));
    LinearRecurrence bad = fibonacci();
    bad.coeffs.back() = 0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = fibonacci();
    bad.initial.pop_back();
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = fibonacci();
    bad.initial.push_back(7); // u_2 should be 1
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = fibonacci();
    bad.start_index = -1;
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("rational function normalization") {
    RationalFunction f(Poly{2, 2}, Poly{2, 0, -2}); // 2(1+z)/(2(1-z)(1+z))
    CHECK(f.num() == Poly{1});
    CHECK(f.den() == Poly{1, -1});
    CHECK_THROWS_AS(RationalFunction(Poly{1}, Poly{}), Error);
    CHECK_THROWS_AS(RationalFunction(Poly{1}, Poly{0, 1}), Error);
    CHECK(RationalFunction(Poly{0, 1}, Poly{0, 1, 1}) == RationalFunction(Poly{1}, Poly{1, 1}));
    CHECK(RationalFunction(Poly{}, Poly{3, 1}).den() == Poly{1});
}

TEST_CASE("to_rational gives the generating function") {
    auto f = to_rational(fibonacci());
    CHECK(f.num() == Poly{0, 1});
    CHECK(f.den() == Poly{1, -1, -1});
    // u_0 = 5 then u_{n+1} = 2 u_n from n = 1: 5 + z/(1-2z)
    LinearRecurrence shifted{{2}, {5, 1}, 1, 0};
    CHECK(expand(to_rational(shifted), 6) == expand(shifted, 6));
}

TEST_CASE("roundtrip through generating functions") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        auto rec = test::random_recurrence(rng, 5);
        auto f = to_rational(rec);
        auto back = from_rational(f);
        CHECK(padded(rec, 80) == padded(back, 80));
        CHECK(expand(f, 80) == padded(rec, 80));
        CHECK(to_rational(back) == f);
    }
    // Polynomial generating functions become eventually zero sequences.
    auto poly = from_rational(RationalFunction::polynomial(Poly{1, 0, 3}));
    CHECK(expand(poly, 6) == std::vector<Rational>{1, 0, 3, 0, 0, 0});
}

TEST_CASE("normalize_from_start splits into recurrence plus correction") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        auto rec = test::random_recurrence(rng, 4);
        auto norm = normalize_from_start(rec);
        CHECK(norm.recurrence.start_index == norm.recurrence.first_index);
        auto u = expand(rec, 60);
        auto v = expand(norm.recurrence, 60);
        for (std::size_t n = 0; n < 60; ++n) {
            auto idx = rec.first_index + static_cast<std::int64_t>(n);
            Rational f;
            if (auto it = norm.correction.find(idx); it != norm.correction.end()) {
                CHECK(idx < rec.start_index);
                f = it->second;
            }
            CHECK(u[n] == v[n] + f);
        }
    }
}

TEST_CASE("companion form reproduces the sequence") {
    auto cf = companion_form(fibonacci());
    auto state = cf.vector;
    for (int n = 0; n < 10; ++n)
        state = cf.matrix.apply(state);
    CHECK(state[0] == Rational(55));
    CHECK(cf.matrix.characteristic_polynomial() == Poly{-1, -1, 1});
    CHECK(cf.matrix.determinant() == Rational(-1));
}

TEST_CASE("Berlekamp-Massey recovers recurrences and is minimal") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        auto rec = test::random_recurrence(rng, 4, trial % 2 == 0);
        auto u = padded(rec, 24);
        auto bm = berlekamp_massey(u);
        CHECK(bm.linear_complexity == linear_complexity_oracle(u));
        if (bm.zero)
            continue;
        CHECK(padded(bm.recurrence, 24) == u);
        CHECK(padded(bm.recurrence, 60) == padded(rec, 60));
    }
}

TEST_CASE("Berlekamp-Massey on degenerate prefixes") {
    auto zero = berlekamp_massey({0, 0, 0});
    CHECK(zero.zero);
    CHECK(zero.linear_complexity == 0);
    auto spike = berlekamp_massey({1, 0, 0, 0, 0});
    CHECK(spike.linear_complexity == 1);
    CHECK(expand(spike.recurrence, 5) == std::vector<Rational>{1, 0, 0, 0, 0});
    auto late = berlekamp_massey({0, 0, 1, 1, 2, 3, 5, 8}, 3);
    CHECK(late.recurrence.first_index == 3);
    CHECK(expand(late.recurrence, 8) == std::vector<Rational>{0, 0, 1, 1, 2, 3, 5, 8});
    CHECK_THROWS_AS(berlekamp_massey({}), Error);
}

TEST_CASE("sections match decimation of the expansion") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 120; ++trial) {
        auto rec = test::random_recurrence(rng, 4);
        const std::uint64_t m = 1 + rng() % 6;
        auto full = padded(rec, 40 * m + 8);
        for (std::uint64_t r = 0; r < m; ++r) {
            auto sec = section(rec, m, r);
            CHECK(sec.order() == rec.order());
            auto got = expand(sec, 40);
            for (std::size_t n = 0; n < 40; ++n)
                CHECK(got[n] == full[m * n + r]);
        }
    }
    CHECK_THROWS_AS(section(fibonacci(), 3, 3), Error);
}

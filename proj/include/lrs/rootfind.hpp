#pragma once

#include <optional>
#include <vector>

#include "lrs/poly.hpp"
#include "lrs/rational.hpp"

namespace lrs {

// Closed disk known to contain exactly one root. All bounds are exact
// rationals; modulus_lo <= |root| <= modulus_hi.
struct RootDisk {
    Rational re, im;
    Rational radius;
    Rational modulus_lo, modulus_hi;
};

struct RootIsolation {
    unsigned precision_bits = 0;
    std::vector<RootDisk> roots;
};

// Pairwise disjoint inclusion disks for the roots of a squarefree polynomial,
// approximated by Aberth iteration at `bits` of precision. Returns nullopt
// when the disks do not yet separate at that precision.
std::optional<RootIsolation> isolate_roots(const Poly& squarefree, unsigned bits,
                                           const std::vector<RootDisk>* hint = nullptr);

// Exact tests on closed disks.
bool disks_intersect(const Rational& re1, const Rational& im1, const Rational& r1,
                     const Rational& re2, const Rational& im2, const Rational& r2);

// Rational enclosures of sqrt(x) for x >= 0, at `bits` of precision.
Rational sqrt_down(const Rational& x, unsigned bits);
Rational sqrt_up(const Rational& x, unsigned bits);

struct UnitRoot {
    Rational re, im;
    Rational error; // |exact - (re + i im)| <= error
};
// exp(2 pi i k / d) to about `bits` bits.
UnitRoot unit_root(std::uint64_t k, std::uint64_t d, unsigned bits);

} // namespace lrs

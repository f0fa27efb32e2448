#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lrs/poly.hpp"
#include "lrs/recurrence.hpp"
#include "lrs/rootfind.hpp"

namespace lrs {

struct RatioAnalysis {
    // d >= 2 such that two distinct roots of the denominator have ratio a
    // primitive d-th root of unity.
    std::set<std::uint64_t> orders;
    // Multiplicity of Phi_d in the ratio polynomial; phi(d) times this counts
    // the ordered root pairs with ratio of exact order d.
    std::map<std::uint64_t, unsigned> multiplicity;
    std::uint64_t modulus = 1;
    // Res_y(D(y), D(xy)) / (x - 1)^deg D for the squarefree part D.
    Poly ratio_polynomial;
};

struct ZeroSetDescription {
    std::vector<std::uint64_t> sporadic;
    bool sporadic_complete = false;
    std::uint64_t modulus = 1;
    std::vector<std::uint64_t> zero_residues;
    std::uint64_t checked_bound = 0;
};

struct DominantGroup {
    unsigned precision_bits = 0;
    // Indices into isolation.roots, the roots of the squarefree denominator.
    std::vector<std::size_t> dominant_root_indices;
    std::set<std::uint64_t> relation_orders;
    RootIsolation isolation;
};

struct ProperPowerPart {
    std::uint64_t d = 0;
    RationalFunction H;
};

struct ProperPowerDecomposition {
    Poly P;
    std::vector<ProperPowerPart> parts; // sorted by d
};

// Squarefree part of den with integer coefficients.
Poly squarefree_denominator(const Poly& den);

RatioAnalysis ratio_orders(const Poly& den);

ZeroSetDescription zero_set(const RationalFunction& rf, std::uint64_t bound);

DominantGroup dominant_relations(const RationalFunction& rf, unsigned precision_bits = 64);

ProperPowerDecomposition proper_power_decompose(const RationalFunction& rf,
                                                std::uint64_t prime_check_bound = 10000);

// P(z) + sum_j H_j(z^{d_j}) as a single rational function.
RationalFunction recombine(const ProperPowerDecomposition& dec);

// Precision used when the caller leaves it unspecified: LRS_PRECISION_BITS or 64.
unsigned default_precision_bits();

} // namespace lrs

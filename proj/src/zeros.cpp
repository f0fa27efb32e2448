#include "lrs/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "lrs/arith.hpp"
#include "lrs/cyclotomic.hpp"
#include "lrs/error.hpp"
#include "lrs/modp.hpp"
#include "lrs/resultant.hpp"

namespace lrs {

namespace {

constexpr unsigned kMaxPrecisionBits = 4096;

// Res_y(D(y), D(xy)) has degree n^2 in x; recover it from n^2 + 1 values.
Poly full_ratio_polynomial(const Poly& d) {
    const auto n = static_cast<std::size_t>(d.degree());
    std::vector<Rational> xs, ys;
    for (std::size_t k = 1; k <= n * n + 1; ++k) {
        Rational x(static_cast<long>(k));
        xs.push_back(x);
        ys.push_back(resultant(d, d.scale_var(x)));
    }
    return interpolate(xs, ys);
}

std::uint64_t order_mod_root(std::uint64_t d, std::uint64_t p, const Factorization& fd) {
    // Element of exact multiplicative order d in F_p, with d | p - 1.
    for (std::uint64_t h = 2;; ++h) {
        std::uint64_t z = pow_mod(h, (p - 1) / d, p);
        bool primitive = true;
        for (auto [q, e] : fd.factors)
            if (pow_mod(z, d / q, p) == 1) {
                primitive = false;
                break;
            }
        if (primitive)
            return z;
    }
}

bool vanishes_at_unit_root_mod_p(const Poly& r, std::uint64_t d) {
    // Phi_d | r forces r(zeta) = 0 mod p for every p = 1 (mod d) not dividing
    // the leading coefficient; the converse is then settled exactly.
    const Integer lc = r.lc().num();
    std::uint64_t floor = std::uint64_t{1} << 40;
    for (;;) {
        std::uint64_t p = prime_in_progression(d, floor, 1, ~std::uint64_t{0});
        floor = p + 1;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), p))
            continue;
        std::uint64_t z = order_mod_root(d, p, factorize(d));
        std::uint64_t acc = 0;
        for (std::size_t k = r.size(); k-- > 0;) {
            Integer c = r[k].num();
            std::uint64_t ck = mpz_fdiv_ui(c.get_mpz_t(), p);
            acc = (mul_mod(acc, z, p) + ck) % p;
        }
        return acc == 0;
    }
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

Rational abs_bound(const Rational& re, const Rational& im) { return re.abs() + im.abs(); }

// Dominant (minimum-modulus) cluster of the roots of the squarefree
// denominator, with every member certified to share one modulus. Returns
// nullopt when the current precision leaves this ambiguous.
std::optional<DominantGroup> classify(const RatioAnalysis& ra, RootIsolation iso) {
    const auto& roots = iso.roots;
    const std::size_t n = roots.size();
    DominantGroup g;
    g.precision_bits = iso.precision_bits;
    if (n == 0) {
        g.isolation = std::move(iso);
        return g;
    }

    std::size_t lowest = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (roots[i].modulus_hi < roots[lowest].modulus_hi)
            lowest = i;
    std::vector<bool> in(n, false);
    in[lowest] = true;
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (in[j])
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (in[k] && roots[j].modulus_lo <= roots[k].modulus_hi &&
                    roots[k].modulus_lo <= roots[j].modulus_hi) {
                    in[j] = grew = true;
                    break;
                }
        }
    }

    UnionFind uf(n);
    // Conjugation: the polynomial is real, so a conjugated disk meeting a
    // single disk pins down the conjugate root.
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t hits = 0, partner = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (disks_intersect(roots[i].re, -roots[i].im, roots[i].radius, roots[j].re, roots[j].im,
                                roots[j].radius)) {
                ++hits;
                partner = j;
            }
        if (hits == 1)
            uf.unite(i, partner);
    }

    // Rotation by primitive d-th roots of unity: true pairs always meet, and
    // their exact count comes from the ratio polynomial, so a matching count
    // of meeting pairs certifies each of them.
    for (std::uint64_t d : ra.orders) {
        const std::uint64_t expected = euler_phi(d) * ra.multiplicity.at(d);
        std::vector<std::pair<std::size_t, std::size_t>> hits;
        for (std::uint64_t k = 1; k < d; ++k) {
            if (std::gcd(k, d) != 1)
                continue;
            UnitRoot z = unit_root(k, d, iso.precision_bits);
            for (std::size_t i = 0; i < n; ++i) {
                Rational re = z.re * roots[i].re - z.im * roots[i].im;
                Rational im = z.re * roots[i].im + z.im * roots[i].re;
                Rational rad = roots[i].radius + z.error * (abs_bound(roots[i].re, roots[i].im) + roots[i].radius);
                for (std::size_t j = 0; j < n; ++j)
                    if (j != i && disks_intersect(re, im, rad, roots[j].re, roots[j].im, roots[j].radius))
                        hits.emplace_back(i, j);
            }
        }
        if (hits.size() == expected) {
            for (auto [i, j] : hits) {
                uf.unite(i, j);
                if (in[i])
                    g.relation_orders.insert(d);
            }
        } else {
            for (auto [i, j] : hits)
                if (in[i] || in[j])
                    return std::nullopt;
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        if (in[i]) {
            if (uf.find(i) != uf.find(lowest))
                return std::nullopt;
            g.dominant_root_indices.push_back(i);
        }
    g.isolation = std::move(iso);
    return g;
}

DominantGroup dominant_group(const Poly& d, const RatioAnalysis& ra, unsigned precision_bits) {
    for (unsigned bits = std::max(precision_bits, 64u); bits <= kMaxPrecisionBits; bits *= 2) {
        auto iso = isolate_roots(d, bits);
        if (!iso)
            continue;
        if (auto g = classify(ra, std::move(*iso)))
            return std::move(*g);
    }
    throw Error(ErrorKind::precision_exhausted,
                "dominant root moduli still ambiguous at " + std::to_string(kMaxPrecisionBits) + " bits");
}

// Exact rational root of the primitive polynomial d inside a real-centred disk, if any.
std::optional<Rational> rational_root_in(const Poly& d, const RootDisk& disk) {
    const Rational& x = disk.re;
    const Integer lc = abs(d.lc().num());
    if (!fits_u64(lc))
        return std::nullopt;
    for (std::uint64_t q : divisors(to_u64(lc))) {
        Integer scaled = x.num() * q;
        Integer p;
        mpz_fdiv_q(p.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
        for (Integer cand : {Integer(p), Integer(p + 1)}) {
            Rational rho(cand, to_integer(q));
            const Rational dist = rho - x;
            if (!rho.is_zero() && dist * dist + disk.im * disk.im <= disk.radius * disk.radius &&
                d.eval(rho).is_zero())
                return rho;
        }
    }
    return std::nullopt;
}

// First index from which a unique simple rational dominant root forces
// a_n != 0, or nullopt when that argument does not apply.
std::optional<std::uint64_t> nonvanishing_from(const RationalFunction& rf, const DominantGroup& g,
                                               std::uint64_t bound) {
    if (g.dominant_root_indices.size() != 1)
        return std::nullopt;
    const auto& roots = g.isolation.roots;
    const std::size_t i = g.dominant_root_indices[0];
    const Poly d = squarefree_denominator(rf.den());
    auto rho = rational_root_in(d, roots[i]);
    if (!rho)
        return std::nullopt;
    const Poly& den = rf.den();
    if (den.derivative().eval(*rho).is_zero())
        return std::nullopt;

    // F = c / (1 - z/rho) + N_G / Q with Q holding every other pole.
    const Poly linear{Rational(1), -rho->inverse()};
    const Poly q = exact_div(den, linear);
    const Rational c = rf.num().eval(*rho) / q.eval(*rho);
    const Poly ng = exact_div(rf.num() - q * c, linear);
    const Rational abs_rho = rho->abs();

    if (q.degree() == 0) {
        // Only the polynomial part N_G / Q competes.
        auto n0 = static_cast<std::uint64_t>(std::max(ng.degree() + 1, 0));
        return n0 <= bound ? std::optional(n0) : std::nullopt;
    }
    std::optional<Rational> lower;
    for (std::size_t j = 0; j < roots.size(); ++j)
        if (j != i && (!lower || roots[j].modulus_lo < *lower))
            lower = roots[j].modulus_lo;
    if (!lower || *lower <= abs_rho)
        return std::nullopt;
    // Cauchy estimate on |z| = R strictly between |rho| and every other pole.
    const Rational radius = (abs_rho + *lower) / Rational(2);
    Rational numer_max;
    Rational power = 1;
    for (std::size_t k = 0; k < ng.size(); ++k) {
        numer_max += ng[k].abs() * power;
        power *= radius;
    }
    const Rational q_min = q.lc().abs() * (*lower - radius).pow(static_cast<std::uint64_t>(q.degree()));
    const Rational target = numer_max / q_min / c.abs();
    const Rational growth = radius / abs_rho;
    // Smallest n with growth^n > target.
    double estimate = (std::log(mpq_class(target.value()).get_d()) ) / std::log(growth.value().get_d());
    if (!std::isfinite(estimate))
        return std::nullopt;
    std::uint64_t n0 = estimate < 0 ? 0 : static_cast<std::uint64_t>(estimate);
    if (n0 > bound)
        return std::nullopt;
    while (!(growth.pow(n0) > target)) {
        if (++n0 > bound)
            return std::nullopt;
    }
    while (n0 > 0 && growth.pow(n0 - 1) > target)
        --n0;
    return n0;
}

} // namespace

unsigned default_precision_bits() {
    if (const char* env = std::getenv("LRS_PRECISION_BITS")) {
        try {
            unsigned long v = std::stoul(env);
            if (v >= 64 && v <= kMaxPrecisionBits)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 64;
}

Poly squarefree_denominator(const Poly& den) {
    if (den.is_zero())
        throw Error(ErrorKind::invalid_argument, "zero denominator");
    return squarefree(den).squarefree_part.primitive();
}

RatioAnalysis ratio_orders(const Poly& den) {
    if (den.is_zero() || den[0].is_zero())
        throw Error(ErrorKind::invalid_argument, "denominator must be nonzero with nonzero constant term");
    const Poly d = squarefree_denominator(den);
    RatioAnalysis out;
    const int n = d.degree();
    if (n <= 1) {
        out.ratio_polynomial = Poly::constant(1);
        return out;
    }
    Poly r = exact_div(full_ratio_polynomial(d), Poly{-1, 1}.pow(static_cast<std::uint64_t>(n))).primitive();
    if (r.eval(Rational(1)).is_zero())
        throw std::logic_error("ratio polynomial keeps a diagonal factor after squarefree reduction");
    out.ratio_polynomial = r;
    const auto m = static_cast<std::uint64_t>(r.degree());
    // phi(d) >= sqrt(d / 2), so no d beyond 2 m^2 can qualify.
    const auto phi = phi_table(2 * m * m + 2);
    for (std::uint64_t k = 2; k < phi.size(); ++k) {
        if (phi[k] > m || !vanishes_at_unit_root_mod_p(r, k))
            continue;
        const Poly& cyc = cyclotomic(k);
        unsigned mult = 0;
        Poly rest = r;
        for (;;) {
            auto [quo, rem] = divrem(rest, cyc);
            if (!rem.is_zero())
                break;
            rest = std::move(quo);
            ++mult;
        }
        if (mult == 0)
            continue;
        out.orders.insert(k);
        out.multiplicity[k] = mult;
        out.modulus = std::lcm(out.modulus, k);
    }
    return out;
}

ZeroSetDescription zero_set(const RationalFunction& rf, std::uint64_t bound) {
    const RatioAnalysis ra = ratio_orders(rf.den());
    ZeroSetDescription out;
    out.modulus = ra.modulus;
    out.checked_bound = bound;
    if (bound < ra.modulus)
        throw Error(ErrorKind::bound_too_small,
                    "bound " + std::to_string(bound) + " is below the modulus " + std::to_string(ra.modulus),
                    std::to_string(ra.modulus));
    const LinearRecurrence rec = from_rational(rf);
    const std::uint64_t m = ra.modulus;
    // Every initial term of a section has index below `reach`. A class with a
    // term that is nonzero mod a large prime is nonzero; the rest are settled
    // exactly.
    const std::uint64_t reach = m * (static_cast<std::uint64_t>(rec.start_index) / m + rec.order() + 2);
    std::vector<Rational> integral = rec.coeffs;
    integral.insert(integral.end(), rec.initial.begin(), rec.initial.end());
    const std::uint64_t p = good_prime({}, std::uint64_t{1} << 61, integral);
    const auto screen = expand(reduce_recurrence(rec, p), static_cast<std::size_t>(reach));
    std::vector<bool> zero_class(m, true);
    for (std::uint64_t n = 0; n < reach; ++n)
        if (screen[n] != 0)
            zero_class[n % m] = false;
    for (std::uint64_t r = 0; r < m; ++r) {
        if (!zero_class[r])
            continue;
        const auto sec = section(rec, m, r);
        zero_class[r] = std::all_of(sec.initial.begin(), sec.initial.end(),
                                    [](const Rational& v) { return v.is_zero(); });
        if (zero_class[r])
            out.zero_residues.push_back(r);
    }
    const auto terms = expand(rf, static_cast<std::size_t>(bound) + 1);
    for (std::uint64_t k = 0; k <= bound; ++k)
        if (terms[k].is_zero() && !zero_class[k % ra.modulus])
            out.sporadic.push_back(k);

    if (out.zero_residues.size() == ra.modulus) {
        out.sporadic_complete = true;
    } else if (rf.den().degree() > 0) {
        try {
            const DominantGroup g = dominant_group(squarefree_denominator(rf.den()), ra, default_precision_bits());
            out.sporadic_complete = nonvanishing_from(rf, g, bound).has_value();
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::precision_exhausted)
                throw;
        }
    }
    return out;
}

DominantGroup dominant_relations(const RationalFunction& rf, unsigned precision_bits) {
    if (precision_bits < 64)
        throw Error(ErrorKind::invalid_argument, "precision must be at least 64 bits");
    const Poly d = squarefree_denominator(rf.den());
    return dominant_group(d, ratio_orders(rf.den()), precision_bits);
}

ProperPowerDecomposition proper_power_decompose(const RationalFunction& rf, std::uint64_t prime_check_bound) {
    const LinearRecurrence rec = from_rational(rf);
    const std::uint64_t m = ratio_orders(rf.den()).modulus;
    // Primes dividing the modulus sit in non-coprime classes and may carry
    // nonzero terms; so may the finitely many indices below start_index.
    const auto terms = expand(rf, static_cast<std::size_t>(prime_check_bound) + 1);
    for (std::uint64_t p : primes_up_to(prime_check_bound))
        if (m % p != 0 && static_cast<std::int64_t>(p) >= rec.start_index && !terms[p].is_zero())
            throw Error(ErrorKind::hypothesis_violated,
                        "coefficient at prime index " + std::to_string(p) + " is nonzero", std::to_string(p));

    ProperPowerDecomposition out;
    std::map<std::uint64_t, RationalFunction> by_d;
    for (std::uint64_t r = 0; r < m; ++r) {
        const RationalFunction g = to_rational(section(rec, m, r));
        if (g.is_zero())
            continue;
        if (g.is_polynomial()) {
            out.P += g.num().inflate(m).shift(r);
            continue;
        }
        const std::uint64_t d = std::gcd(r, m);
        if (d == 1)
            throw Error(ErrorKind::coprime_support_class,
                        "residue class " + std::to_string(r) + " mod " + std::to_string(m) +
                            " has infinite support but is coprime to the modulus; the prime check bound " +
                            std::to_string(prime_check_bound) + " may be too small",
                        std::to_string(r));
        const std::uint64_t inner = m / d;
        RationalFunction h(g.num().inflate(inner).shift(r / d), g.den().inflate(inner));
        auto [it, fresh] = by_d.try_emplace(d, h);
        if (!fresh)
            it->second = it->second + h;
    }
    // A part whose d is a multiple of another part's d is absorbed into the
    // smallest such divisor, so only divisibility-minimal exponents remain.
    std::map<std::uint64_t, RationalFunction> minimal;
    for (auto& [d, h] : by_d) {
        auto target = std::find_if(minimal.begin(), minimal.end(), [d = d](const auto& kv) { return d % kv.first == 0; });
        if (target == minimal.end())
            minimal.emplace(d, h);
        else
            target->second = target->second + h.inflate(d / target->first);
    }
    for (auto& [d, h] : minimal)
        if (!h.is_zero())
            out.parts.push_back({d, h});
    return out;
}

RationalFunction recombine(const ProperPowerDecomposition& dec) {
    RationalFunction total = RationalFunction::polynomial(dec.P);
    for (const auto& part : dec.parts)
        total = total + part.H.inflate(part.d);
    return total;
}

} // namespace lrs

#include "lrs/rootfind.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <mpfr.h>

#include <cmath>

#include "lrs/error.hpp"

namespace lrs {

namespace {

using Real = boost::multiprecision::mpfr_float;

// Boost sizes new mpfr_float values from a decimal default; keep it scoped.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision()) {
        Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

struct Cx {
    Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cx operator/(const Cx& a, const Cx& b) {
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
Real norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.value().get_mpq_t(), MPFR_RNDN);
    return r;
}

Rational to_rational(const Real& r) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), r.backend().data());
    return Rational(q);
}

struct CxQ {
    Rational re, im;
};
CxQ mul(const CxQ& a, const CxQ& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const CxQ& a) { return a.re * a.re + a.im * a.im; }

Rational sqrt_rounded(const Rational& x, unsigned bits, mpfr_rnd_t rnd) {
    mpfr_t t;
    mpfr_init2(t, bits);
    mpfr_set_q(t, x.value().get_mpq_t(), rnd);
    mpfr_sqrt(t, t, rnd);
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), t);
    mpfr_clear(t);
    return Rational(q);
}

std::vector<Cx> aberth(const std::vector<Real>& a, std::vector<Cx> z, unsigned bits) {
    const std::size_t n = a.size() - 1;
    std::vector<Real> da(n);
    for (std::size_t k = 1; k <= n; ++k)
        da[k - 1] = a[k] * static_cast<unsigned>(k);
    const Real tol = boost::multiprecision::ldexp(Real(1), -static_cast<int>(bits) + 6);
    const int max_iter = 100 + 4 * static_cast<int>(bits);
    std::vector<bool> done(n, false);
    for (int it = 0; it < max_iter; ++it) {
        bool all = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i])
                continue;
            Cx p{a[n], Real(0)}, dp{da[n - 1], Real(0)};
            for (std::size_t k = n; k-- > 0;)
                p = p * z[i] + Cx{a[k], Real(0)};
            for (std::size_t k = n - 1; k-- > 0;)
                dp = dp * z[i] + Cx{da[k], Real(0)};
            if (norm2(p) == 0) {
                done[i] = true;
                continue;
            }
            Cx ratio = p / dp;
            Cx sum{Real(0), Real(0)};
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    sum = sum + Cx{Real(1), Real(0)} / (z[i] - z[j]);
            Cx w = ratio / (Cx{Real(1), Real(0)} - ratio * sum);
            z[i] = z[i] - w;
            Real scale = norm2(z[i]);
            if (scale < 1)
                scale = 1;
            if (norm2(w) <= tol * tol * scale)
                done[i] = true;
            else
                all = false;
        }
        if (all)
            break;
    }
    return z;
}

} // namespace

Rational sqrt_down(const Rational& x, unsigned bits) { return sqrt_rounded(x, bits, MPFR_RNDD); }
Rational sqrt_up(const Rational& x, unsigned bits) { return sqrt_rounded(x, bits, MPFR_RNDU); }

bool disks_intersect(const Rational& re1, const Rational& im1, const Rational& r1,
                     const Rational& re2, const Rational& im2, const Rational& r2) {
    Rational dr = re1 - re2, di = im1 - im2, s = r1 + r2;
    return dr * dr + di * di <= s * s;
}

UnitRoot unit_root(std::uint64_t k, std::uint64_t d, unsigned bits) {
    PrecisionScope scope(bits + 16);
    Real angle = boost::multiprecision::atan(Real(1)) * 8 * Real(static_cast<unsigned long>(k % d)) /
                 Real(static_cast<unsigned long>(d));
    UnitRoot u{to_rational(cos(angle)), to_rational(sin(angle)), Rational{}};
    // A few ulps of the working precision cover pi, the division and cos/sin.
    u.error = Rational(Integer(1), Integer(1) << (bits + 8));
    return u;
}

std::optional<RootIsolation> isolate_roots(const Poly& p, unsigned bits,
                                           const std::vector<RootDisk>* hint) {
    const int deg = p.degree();
    if (deg < 0)
        throw Error(ErrorKind::invalid_argument, "cannot isolate roots of the zero polynomial");
    RootIsolation out;
    out.precision_bits = bits;
    if (deg == 0)
        return out;
    const std::size_t n = static_cast<std::size_t>(deg);

    std::vector<Cx> z;
    {
        PrecisionScope scope(bits);
        std::vector<Real> a;
        for (const auto& c : p.coeffs())
            a.push_back(to_real(c));
        if (hint && hint->size() == n) {
            for (const auto& h : *hint)
                z.push_back({to_real(h.re), to_real(h.im)});
        } else {
            // Start on a circle whose radius is the geometric mean of the root moduli.
            Real rad = pow(abs(a[0] / a[n]), Real(1) / Real(static_cast<unsigned>(n)));
            Real two_pi = boost::multiprecision::atan(Real(1)) * 8;
            for (std::size_t k = 0; k < n; ++k) {
                Real t = two_pi * Real(static_cast<unsigned>(k)) / Real(static_cast<unsigned>(n)) + Real(0.4);
                z.push_back({rad * cos(t), rad * sin(t)});
            }
        }
        z = aberth(a, std::move(z), bits);
    }

    // Certification is exact: centres are dyadic rationals and the
    // Weierstrass radius n |p(c_i)| / |lc prod (c_i - c_j)| is bounded above
    // from exact squared moduli. Any connected union of k such disks holds k
    // roots, so pairwise disjoint disks each hold exactly one.
    std::vector<CxQ> c;
    for (auto& zi : z) {
        if (!isfinite(zi.re) || !isfinite(zi.im))
            return std::nullopt;
        c.push_back({to_rational(zi.re), to_rational(zi.im)});
    }
    const Rational lc2 = p.lc() * p.lc();
    const Rational n2 = Rational(static_cast<long>(n * n));
    for (std::size_t i = 0; i < n; ++i) {
        CxQ v{p.lc(), Rational{}};
        for (std::size_t k = n; k-- > 0;) {
            v = mul(v, c[i]);
            v.re += p[k];
        }
        Rational den = lc2;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i)
                continue;
            Rational d2 = norm2(CxQ{c[i].re - c[j].re, c[i].im - c[j].im});
            if (d2.is_zero())
                return std::nullopt;
            den *= d2;
        }
        RootDisk disk;
        disk.re = c[i].re;
        disk.im = c[i].im;
        disk.radius = sqrt_up(n2 * norm2(v) / den, bits);
        Rational m2 = norm2(c[i]);
        disk.modulus_hi = sqrt_up(m2, bits) + disk.radius;
        disk.modulus_lo = sqrt_down(m2, bits) - disk.radius;
        out.roots.push_back(std::move(disk));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (disks_intersect(out.roots[i].re, out.roots[i].im, out.roots[i].radius,
                                out.roots[j].re, out.roots[j].im, out.roots[j].radius))
                return std::nullopt;
    return out;
}

} // namespace lrs

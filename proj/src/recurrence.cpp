#include "lrs/recurrence.hpp"

#include <algorithm>

#include "lrs/error.hpp"

namespace lrs {

std::size_t LinearRecurrence::required_terms() const {
    return static_cast<std::size_t>(start_index - first_index) + order();
}

void LinearRecurrence::validate() const {
    if (coeffs.empty())
        throw Error(ErrorKind::invalid_argument, "recurrence order must be positive");
    if (coeffs.back().is_zero())
        throw Error(ErrorKind::invalid_argument, "trailing coefficient c_r must be nonzero");
    if (first_index < 0 || start_index < first_index)
        throw Error(ErrorKind::invalid_argument, "need 0 <= first_index <= start_index");
    const std::size_t need = required_terms();
    if (initial.size() < need)
        throw Error(ErrorKind::invalid_argument,
                    "recurrence needs " + std::to_string(need) + " initial terms, got " +
                        std::to_string(initial.size()));
    const std::size_t r = order();
    for (std::size_t j = need; j < initial.size(); ++j) {
        Rational acc;
        for (std::size_t i = 1; i <= r; ++i)
            acc += coeffs[i - 1] * initial[j - i];
        if (acc != initial[j])
            throw Error(ErrorKind::invalid_argument,
                        "initial term at index " + std::to_string(first_index + static_cast<std::int64_t>(j)) +
                            " contradicts the recurrence");
    }
}

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero())
        throw Error(ErrorKind::division_by_zero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    if (den[0].is_zero())
        throw Error(ErrorKind::invalid_argument, "denominator vanishes at 0: no power series expansion");
    Rational s = den[0].inverse();
    num_ = num * s;
    den_ = den * s;
}

RationalFunction RationalFunction::inflate(std::size_t k) const {
    return {num_.inflate(k), den_.inflate(k)};
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_)
        return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

MatrixQ companion_matrix(const std::vector<Rational>& coeffs) {
    const std::size_t r = coeffs.size();
    MatrixQ a(r);
    for (std::size_t i = 0; i + 1 < r; ++i)
        a(i, i + 1) = 1;
    for (std::size_t j = 0; j < r; ++j)
        a(r - 1, j) = coeffs[r - 1 - j];
    return a;
}

std::vector<Rational> expand(const LinearRecurrence& rec, std::size_t count) {
    rec.validate();
    const std::size_t r = rec.order();
    std::vector<Rational> t(rec.initial.begin(),
                            rec.initial.begin() + static_cast<std::ptrdiff_t>(std::min(count, rec.initial.size())));
    t.reserve(count);
    while (t.size() < count) {
        const std::size_t j = t.size();
        mpq_class acc;
        for (std::size_t i = 1; i <= r; ++i)
            if (!rec.coeffs[i - 1].is_zero())
                acc += rec.coeffs[i - 1].value() * t[j - i].value();
        t.emplace_back(acc);
    }
    return t;
}

std::vector<Rational> expand(const RationalFunction& rf, std::size_t count) {
    return series_divide(rf.num(), rf.den(), count);
}

Normalized normalize_from_start(const LinearRecurrence& rec) {
    rec.validate();
    Normalized out;
    const std::size_t r = rec.order();
    const std::size_t need = rec.required_terms();
    std::vector<Rational> u(rec.initial.begin(), rec.initial.begin() + static_cast<std::ptrdiff_t>(need));
    std::vector<Rational> v = u;
    const std::size_t lead = static_cast<std::size_t>(rec.start_index - rec.first_index);
    const Rational inv_cr = rec.coeffs.back().inverse();
    // Solve backward: v_n = (v_{n+r} - c_1 v_{n+r-1} - ... - c_{r-1} v_{n+1}) / c_r.
    for (std::size_t n = lead; n-- > 0;) {
        Rational acc = v[n + r];
        for (std::size_t i = 1; i < r; ++i)
            acc -= rec.coeffs[i - 1] * v[n + r - i];
        v[n] = acc * inv_cr;
    }
    for (std::size_t n = 0; n < lead; ++n)
        if (u[n] != v[n])
            out.correction.emplace(rec.first_index + static_cast<std::int64_t>(n), u[n] - v[n]);
    out.recurrence.coeffs = rec.coeffs;
    out.recurrence.initial.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
    out.recurrence.first_index = rec.first_index;
    out.recurrence.start_index = rec.first_index;
    return out;
}

CompanionForm companion_form(const LinearRecurrence& from_start) {
    from_start.validate();
    if (from_start.start_index != from_start.first_index)
        throw Error(ErrorKind::invalid_argument, "companion form needs a recurrence valid from the start");
    const std::size_t r = from_start.order();
    CompanionForm cf;
    cf.matrix = companion_matrix(from_start.coeffs);
    cf.vector.assign(from_start.initial.begin(), from_start.initial.begin() + static_cast<std::ptrdiff_t>(r));
    cf.functional.assign(r, Rational{});
    cf.functional[0] = 1;
    return cf;
}

RationalFunction to_rational(const LinearRecurrence& rec) {
    rec.validate();
    const std::size_t r = rec.order();
    std::vector<Rational> den(r + 1);
    den[0] = 1;
    for (std::size_t i = 1; i <= r; ++i)
        den[i] = -rec.coeffs[i - 1];
    const std::size_t upto = static_cast<std::size_t>(rec.start_index) + r;
    std::vector<Rational> series(upto);
    for (std::size_t j = 0; j < rec.required_terms(); ++j)
        series[static_cast<std::size_t>(rec.first_index) + j] = rec.initial[j];
    Poly d(std::move(den));
    Poly num = (Poly(std::move(series)) * d).truncate(upto);
    return {std::move(num), std::move(d)};
}

LinearRecurrence from_rational(const RationalFunction& rf) {
    LinearRecurrence rec;
    const int r = rf.den().degree();
    if (r == 0) {
        // Finitely supported: an all-zero tail u_{n+1} = u_n after the polynomial.
        rec.coeffs = {Rational(1)};
        rec.start_index = rf.num().degree() + 1;
        rec.initial = expand(rf, static_cast<std::size_t>(rec.start_index) + 1);
        return rec;
    }
    for (int i = 1; i <= r; ++i)
        rec.coeffs.push_back(-rf.den()[static_cast<std::size_t>(i)]);
    rec.start_index = std::max(rf.num().degree() - r + 1, 0);
    rec.initial = expand(rf, static_cast<std::size_t>(rec.start_index + r));
    return rec;
}

BerlekampMassey berlekamp_massey(const std::vector<Rational>& prefix, std::int64_t first_index) {
    if (prefix.empty())
        throw Error(ErrorKind::invalid_argument, "Berlekamp-Massey needs a nonempty prefix");
    std::vector<Rational> c{Rational(1)}, b{Rational(1)};
    std::size_t len = 0, m = 1;
    Rational bd = 1;
    for (std::size_t n = 0; n < prefix.size(); ++n) {
        mpq_class acc = prefix[n].value();
        for (std::size_t i = 1; i <= len && i < c.size(); ++i)
            acc += c[i].value() * prefix[n - i].value();
        Rational d(acc);
        if (d.is_zero()) {
            ++m;
            continue;
        }
        Rational f = d / bd;
        std::vector<Rational> next = c;
        if (next.size() < b.size() + m)
            next.resize(b.size() + m);
        for (std::size_t i = 0; i < b.size(); ++i)
            next[i + m] -= f * b[i];
        if (2 * len <= n) {
            b = std::move(c);
            len = n + 1 - len;
            bd = d;
            m = 1;
        } else {
            ++m;
        }
        c = std::move(next);
    }
    BerlekampMassey out;
    out.linear_complexity = len;
    if (len == 0) {
        out.zero = true;
        return out;
    }
    // Strip trailing zero coefficients: characteristic roots at 0 become a shifted start.
    std::size_t k = std::min(len, c.size() - 1);
    while (k > 0 && c[k].is_zero())
        --k;
    auto& rec = out.recurrence;
    rec.first_index = first_index;
    rec.initial.assign(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(len));
    if (k == 0) {
        rec.coeffs = {Rational(1)};
        rec.start_index = first_index + static_cast<std::int64_t>(len);
        rec.initial.emplace_back();
        return out;
    }
    for (std::size_t i = 1; i <= k; ++i)
        rec.coeffs.push_back(-c[i]);
    rec.start_index = first_index + static_cast<std::int64_t>(len - k);
    return out;
}

LinearRecurrence section(const LinearRecurrence& rec, std::uint64_t modulus, std::uint64_t residue) {
    rec.validate();
    if (modulus == 0 || residue >= modulus)
        throw Error(ErrorKind::invalid_argument, "section needs 0 <= residue < modulus");
    LinearRecurrence base = rec;
    if (base.first_index > 0) {
        base.initial.insert(base.initial.begin(), static_cast<std::size_t>(base.first_index), Rational{});
        base.first_index = 0;
    }
    Normalized norm = normalize_from_start(base);
    const auto& v = norm.recurrence;
    const std::size_t r = v.order();

    Poly chi = companion_matrix(v.coeffs).pow(modulus).characteristic_polynomial();
    LinearRecurrence out;
    for (std::size_t i = 1; i <= r; ++i)
        out.coeffs.push_back(-chi[r - i]);

    std::uint64_t lead = 0;
    for (const auto& [idx, val] : norm.correction) {
        auto i = static_cast<std::uint64_t>(idx);
        if (i >= residue && (i - residue) % modulus == 0)
            lead = std::max(lead, (i - residue) / modulus + 1);
    }
    const std::uint64_t terms = lead + r;
    auto full = expand(v, static_cast<std::size_t>(modulus * (terms - 1) + residue + 1));
    out.initial.reserve(terms);
    for (std::uint64_t n = 0; n < terms; ++n) {
        auto idx = static_cast<std::int64_t>(modulus * n + residue);
        Rational w = full[static_cast<std::size_t>(idx)];
        if (auto it = norm.correction.find(idx); it != norm.correction.end())
            w += it->second;
        out.initial.push_back(std::move(w));
    }
    out.start_index = static_cast<std::int64_t>(lead);
    out.first_index = 0;
    return out;
}

} // namespace lrs

#include "lrs/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "lrs/arith.hpp"
#include "lrs/error.hpp"

namespace lrs {

namespace {

// Phi_d(x) = prod_{e | d} (1 - x^e)^{mu(d/e)} for d > 1, evaluated as a
// power series truncated after degree phi(d).
Poly compute_cyclotomic(std::uint64_t d) {
    if (d == 1)
        return Poly{Rational(-1), Rational(1)};
    const std::size_t n = euler_phi(d) + 1;
    std::vector<Integer> s(n);
    s[0] = 1;
    std::vector<std::uint64_t> dividing, multiplying;
    for (auto e : divisors(d)) {
        int mu = moebius(d / e);
        if (mu == 1)
            multiplying.push_back(e);
        else if (mu == -1)
            dividing.push_back(e);
    }
    for (auto e : multiplying)
        for (std::size_t i = n; i-- > e;)
            s[i] -= s[i - e];
    for (auto e : dividing)
        for (std::size_t i = e; i < n; ++i)
            s[i] += s[i - e];
    std::vector<Rational> coeffs;
    coeffs.reserve(n);
    for (auto& v : s)
        coeffs.emplace_back(v);
    return Poly(std::move(coeffs));
}

struct Memo {
    std::shared_mutex mutex;
    std::map<std::uint64_t, Poly> table;
};

Memo& memo() {
    static Memo m;
    return m;
}

} // namespace

const Poly& cyclotomic(std::uint64_t d) {
    if (d == 0)
        throw Error(ErrorKind::invalid_argument, "cyclotomic(0) is undefined");
    auto& m = memo();
    {
        std::shared_lock lock(m.mutex);
        if (auto it = m.table.find(d); it != m.table.end())
            return it->second;
    }
    Poly p = compute_cyclotomic(d);
    std::unique_lock lock(m.mutex);
    // std::map nodes are stable, so references handed out stay valid.
    return m.table.try_emplace(d, std::move(p)).first->second;
}

} // namespace lrs

#include "lrs/rational.hpp"

#include <cctype>

#include "lrs/error.hpp"

namespace lrs {

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        i = 1;
    if (i == s.size())
        return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            return false;
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    Integer num, den = 1;
    auto slash = text.find('/');
    bool ok = slash == std::string_view::npos
                  ? parse_integer(text, num)
                  : parse_integer(text.substr(0, slash), num) &&
                        parse_integer(text.substr(slash + 1), den) && den > 0;
    if (!ok)
        throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'",
                    std::string(text));
    return Rational(num, den);
}

Rational Rational::inverse() const {
    if (is_zero())
        throw Error(ErrorKind::division_by_zero, "inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

Rational Rational::pow(std::uint64_t e) const {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    mpq_class r(n, d);
    return Rational(r);
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorKind::division_by_zero, "division by zero");
    v_ /= o.v_;
    return *this;
}

} // namespace lrs

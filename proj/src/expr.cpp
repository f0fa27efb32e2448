#include "lrs/expr.hpp"

#include <cctype>

#include "lrs/error.hpp"

namespace lrs {

namespace {

constexpr std::uint64_t max_exponent = 1u << 16;

struct Fraction {
    Poly num, den;
};

Fraction reduce(Poly num, Poly den) {
    if (den.is_zero())
        throw Error(ErrorKind::division_by_zero, "division by the zero polynomial");
    if (num.is_zero())
        return {Poly{}, Poly::constant(1)};
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
        num = exact_div(num, g);
        den = exact_div(den, g);
    }
    return {std::move(num), std::move(den)};
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}
Fraction operator-(const Fraction& a) { return {-a.num, a.den}; }
Fraction operator*(const Fraction& a, const Fraction& b) { return reduce(a.num * b.num, a.den * b.den); }
Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num.is_zero())
        throw Error(ErrorKind::division_by_zero, "division by zero");
    return reduce(a.num * b.den, a.den * b.num);
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Fraction parse() {
        skip();
        if (pos_ == s_.size())
            fail("empty expression");
        Fraction f = sum();
        if (pos_ != s_.size())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::parse, "syntax error at offset " + std::to_string(pos_) + ": " + what,
                    std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            skip();
            return true;
        }
        return false;
    }

    Fraction sum() {
        Fraction acc = product();
        for (;;) {
            if (eat('+'))
                acc = acc + product();
            else if (eat('-'))
                acc = acc + -product();
            else
                return acc;
        }
    }

    Fraction product() {
        Fraction acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                const std::size_t at = pos_;
                Fraction d = unary();
                if (d.num.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    Fraction unary() {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }

    Fraction power() {
        Fraction base = atom();
        if (!eat('^'))
            return base;
        const std::uint64_t e = integer();
        if (e > max_exponent)
            fail("exponent too large");
        Fraction out{Poly::constant(1), Poly::constant(1)};
        for (std::uint64_t bit = std::uint64_t{1} << 63; bit; bit >>= 1) {
            out = out * out;
            if (e & bit)
                out = out * base;
        }
        return out;
    }

    std::uint64_t integer() {
        skip();
        const std::size_t begin = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == begin)
            fail("expected a nonnegative integer exponent");
        const std::string digits(s_.substr(begin, pos_ - begin));
        if (digits.size() > 9) {
            pos_ = begin;
            fail("exponent too large");
        }
        skip();
        return std::stoull(digits);
    }

    Fraction atom() {
        skip();
        if (pos_ == s_.size())
            fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            eat('(');
            Fraction inner = sum();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (c == 'z') {
            eat('z');
            return {Poly{0, 1}, Poly::constant(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t begin = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            Integer v(std::string(s_.substr(begin, pos_ - begin)));
            skip();
            return {Poly::constant(Rational(v)), Poly::constant(1)};
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

RationalFunction parse_expr(std::string_view text) {
    Fraction f = Parser(text).parse();
    return RationalFunction(f.num, f.den);
}

} // namespace lrs

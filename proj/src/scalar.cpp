#include "exprings/scalar.hpp"

#include "exprings/errors.hpp"

#include <cctype>

namespace exprings {

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (is_real()) return Scalar(Rational(1) / re_);
    Rational norm = re_ * re_ + im_ * im_;
    return Scalar(re_ / norm, -im_ / norm);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string Scalar::to_string() const {
    if (is_real()) return rational_to_string(re_);
    if (sgn(re_) == 0) return im_ == 1 ? "i" : "(" + rational_to_string(im_) + ")i";
    std::string s = "(" + rational_to_string(re_) + ")";
    if (sgn(im_) < 0)
        s += "-(" + rational_to_string(-im_) + ")i";
    else
        s += "+(" + rational_to_string(im_) + ")i";
    return s;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool done() {
        skip_ws();
        return pos == text.size();
    }
};

std::optional<Integer> parse_digits(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
    if (start == c.pos) return std::nullopt;
    return Integer(std::string(c.text.substr(start, c.pos - start)));
}

std::optional<Rational> parse_rational(Cursor& c) {
    bool neg = false;
    if (c.eat('-'))
        neg = true;
    else
        c.eat('+');
    auto num = parse_digits(c);
    if (!num) return std::nullopt;
    Integer den = 1;
    std::size_t save = c.pos;
    if (c.eat('/')) {
        auto d = parse_digits(c);
        if (!d) {
            c.pos = save;
        } else {
            if (*d == 0) return std::nullopt;
            den = *d;
        }
    }
    Rational r(*num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

}  // namespace

std::optional<Scalar> parse_scalar(std::string_view text) {
    Cursor c{text};
    if (c.eat('i')) return c.done() ? std::optional<Scalar>(Scalar::i()) : std::nullopt;
    if (c.eat('(')) {
        auto re = parse_rational(c);
        if (!re || !c.eat(')')) return std::nullopt;
        if (c.done()) return Scalar(*re);
        if (c.eat('i')) return c.done() ? std::optional<Scalar>(Scalar(Rational(0), *re)) : std::nullopt;
        bool neg = false;
        if (c.eat('-'))
            neg = true;
        else if (!c.eat('+'))
            return std::nullopt;
        if (!c.eat('(')) return std::nullopt;
        auto im = parse_rational(c);
        if (!im || !c.eat(')') || !c.eat('i') || !c.done()) return std::nullopt;
        return Scalar(*re, neg ? Rational(-*im) : *im);
    }
    auto r = parse_rational(c);
    if (!r || !c.done()) return std::nullopt;
    return Scalar(*r);
}

Scalar BaseField::exp(const Scalar& s) const {
    if (!exp_defined(s)) throw PartialityError("E is undefined at constant " + s.to_string());
    return Scalar(1);
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
Scalar scalar_neg(const Scalar& a) { return -a; }
Scalar scalar_inv(const Scalar& a) { return a.inverse(); }

}  // namespace exprings

#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace exprings {

using Rational = mpq_class;
using Integer = mpz_class;

/// Element of Q(i), stored as a pair of reduced rationals.  Elements of Q
/// are the values with zero imaginary part, so a single type serves both
/// base fields and equality stays representation equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    /// Multiplicative inverse; throws DomainError on zero.
    Scalar inverse() const;
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar conj() const { return Scalar(re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    /// Total order: real part first, then imaginary part.  Used only for
    /// canonical sorting, not as a field order.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// `p/q` for rationals, `(a/b)+(c/d)i` for non-real values.
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::string rational_to_string(const Rational& r);

/// Parses `p`, `p/q`, `(p/q)`, `(a/b)+(c/d)i`, `(a/b)-(c/d)i`.  Unreduced
/// input is accepted.  Returns nullopt when the text is not a scalar literal.
std::optional<Scalar> parse_scalar(std::string_view text);

enum class FieldTag { Q, Qi };

/// The base field together with its partial exponential.  Only the trivial
/// domain A(R) = {0} with E(0) = 1 is available: Q carries no nontrivial
/// exact exponential.
struct BaseField {
    FieldTag tag = FieldTag::Q;

    bool contains(const Scalar& s) const { return tag == FieldTag::Qi || s.is_real(); }
    bool exp_defined(const Scalar& s) const { return s.is_zero(); }
    /// E on A(R); throws PartialityError outside the domain.
    Scalar exp(const Scalar& s) const;

    static BaseField rationals() { return {FieldTag::Q}; }
    static BaseField gaussian() { return {FieldTag::Qi}; }
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
Scalar scalar_inv(const Scalar& a);

}  // namespace exprings

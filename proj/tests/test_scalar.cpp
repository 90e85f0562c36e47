#include "exprings/errors.hpp"
#include "exprings/scalar.hpp"

#include <gtest/gtest.h>

using namespace exprings;

TEST(Scalar, ParsesGaussian) {
    Scalar s = *parse_scalar("(1/2)-(3)i");
    EXPECT_EQ(s.re(), Rational(1, 2));
    EXPECT_EQ(s.im(), Rational(-3));
}

TEST(Scalar, RationalSum) { EXPECT_EQ(Scalar(Rational(1, 2)) + Scalar(Rational(1, 3)), Scalar(Rational(5, 6))); }

TEST(Scalar, ImaginaryUnitSquared) { EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1)); }

TEST(Scalar, InverseOfZeroThrows) {
    EXPECT_THROW(Scalar(0).inverse(), DomainError);
    EXPECT_THROW(scalar_inv(Scalar()), DomainError);
}

TEST(Scalar, GaussianInverse) {
    Scalar z(Rational(3), Rational(-4));
    EXPECT_EQ(z * z.inverse(), Scalar(1));
    EXPECT_EQ(z.inverse(), Scalar(Rational(3, 25), Rational(4, 25)));
}

TEST(Scalar, CanonicalFractions) {
    Scalar s = *parse_scalar("6/4");
    EXPECT_EQ(s.to_string(), "3/2");
    EXPECT_EQ(parse_scalar("-0/7")->to_string(), "0");
    EXPECT_FALSE(parse_scalar("1/0").has_value());
    EXPECT_FALSE(parse_scalar("x").has_value());
}

TEST(Scalar, PrintParseRoundTrip) {
    for (const Scalar& s : {Scalar(0), Scalar(-7), Scalar(Rational(-2, 9)), Scalar::i(), Scalar(Rational(0), Rational(-1, 2)),
                            Scalar(Rational(1, 3), Rational(5)), Scalar(Rational(-1), Rational(-1))}) {
        auto back = parse_scalar(s.to_string());
        ASSERT_TRUE(back.has_value()) << s.to_string();
        EXPECT_EQ(*back, s) << s.to_string();
    }
    EXPECT_EQ(Scalar::i().to_string(), "i");
    EXPECT_EQ(Scalar(Rational(0), Rational(1, 2)).to_string(), "(1/2)i");
}

TEST(Scalar, BaseFieldExponential) {
    BaseField q = BaseField::rationals();
    EXPECT_EQ(q.exp(Scalar(0)), Scalar(1));
    EXPECT_THROW(q.exp(Scalar(1)), PartialityError);
    EXPECT_FALSE(q.contains(Scalar::i()));
    EXPECT_TRUE(BaseField::gaussian().contains(Scalar::i()));
}

#include "support/testkit.hpp"

#include "exprings/errors.hpp"
#include "exprings/io.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace exprings;

namespace {

EPoly P(const char* text, std::size_t n = 1) { return parse_epoly(text, n); }

TruncatedSeries S(std::vector<long> c, std::size_t order) {
    std::vector<Scalar> v;
    for (long x : c) v.emplace_back(x);
    v.resize(order);
    return TruncatedSeries(v, order);
}

}  // namespace

TEST(Series, ExpOfUniformizer) {
    TruncatedSeries e = series_exp(TruncatedSeries::uniformizer(4));
    EXPECT_EQ(e.to_string(), "1 + t + 1/2 t^2 + 1/6 t^3");
    EXPECT_EQ(e, testkit::ode_exp(TruncatedSeries::uniformizer(4)));
}

TEST(Series, ExpOfZero) { EXPECT_EQ(series_exp(TruncatedSeries(5)), TruncatedSeries::constant(Scalar(1), 5)); }

TEST(Series, ExpNeedsMaximalIdeal) {
    EXPECT_THROW(series_exp(S({1, 1}, 4)), PartialityError);
    EXPECT_THROW(series_E(S({1, 1}, 4)), PartialityError);
}

TEST(Eval, Examples) {
    auto v = eval_epoly(P("E(X1) - 1"), ModelPoint::in_series({TruncatedSeries::uniformizer(3)}));
    EXPECT_EQ(std::get<TruncatedSeries>(v).to_string(), "t + 1/2 t^2");

    v = eval_epoly(P("X1^2 + 1"), ModelPoint::in_series({TruncatedSeries(3)}));
    EXPECT_EQ(std::get<TruncatedSeries>(v), TruncatedSeries::constant(Scalar(1), 3));

    EXPECT_THROW(eval_epoly(P("E(X1)"), ModelPoint::in_series({TruncatedSeries::constant(Scalar(1), 3)})),
                 PartialityError);
    EXPECT_THROW(eval_epoly(P("X1"), ModelPoint::in_series({})), DomainError);
}

TEST(Eval, FloatModel) {
    auto v = std::get<FloatValue>(eval_epoly(P("E(X1) - 2"), ModelPoint::in_floats({std::log(2.0)})));
    EXPECT_NEAR(std::abs(v), 0.0, 1e-12);
    // exp(iX) - 1 vanishes at 2*pi over Q(i)
    auto w = std::get<FloatValue>(eval_epoly(parse_epoly("E(i*X1) - 1", 1, BaseField::gaussian()),
                                             ModelPoint::in_floats({2 * std::numbers::pi}), BaseField::gaussian()));
    EXPECT_NEAR(std::abs(w), 0.0, 1e-12);
}

TEST(Eval, SeriesIsRingHomomorphism) {
    testkit::Gen g(12);
    for (int k = 0; k < 100; ++k) {
        EPoly a = g.epoly(2, 1), b = g.epoly(2, 1);
        ModelPoint pt = ModelPoint::in_series({g.series(6, true), g.series(6, true)});
        auto ea = std::get<TruncatedSeries>(eval_epoly(a, pt));
        auto eb = std::get<TruncatedSeries>(eval_epoly(b, pt));
        EXPECT_EQ(std::get<TruncatedSeries>(eval_epoly(a + b, pt)), ea + eb);
        EXPECT_EQ(std::get<TruncatedSeries>(eval_epoly(a * b, pt)), ea * eb);
    }
}

TEST(Khovanskii, Fixtures) {
    EXPECT_TRUE(khovanskii_check({P("X1")}, ModelPoint::in_series({TruncatedSeries(4)})));
    EXPECT_FALSE(khovanskii_check({P("X1")}, ModelPoint::in_series({TruncatedSeries::uniformizer(4)})));
    EXPECT_TRUE(khovanskii_check({P("E(X1) - 1")}, ModelPoint::in_series({TruncatedSeries(4)})));
    // singular zero: f = X1^2 vanishes at 0 but so does its Jacobian
    EXPECT_FALSE(khovanskii_check({P("X1^2")}, ModelPoint::in_series({TruncatedSeries(4)})));
    EXPECT_TRUE(khovanskii_check({P("E(X1) - 2")}, ModelPoint::in_floats({std::log(2.0)})));
}

#include "exprings/io.hpp"
#include "exprings/rabinowitsch.hpp"

#include <gtest/gtest.h>

using namespace exprings;

namespace {

EPoly P(const char* text, std::size_t n = 2, const BaseField& base = {}) { return parse_epoly(text, n, base); }

}  // namespace

TEST(SPoly, Arithmetic) {
    SPoly x = SPoly::adjoin_Y(P("X1"));
    EXPECT_EQ(x.degree(), 0u);
    EXPECT_EQ(x.coefficient(0), P("X1"));

    SPoly yx = SPoly::monomial(P("X1"), 1);
    SPoly sq = yx * yx;
    EXPECT_EQ(sq.degree(), 2u);
    EXPECT_EQ(sq.coefficient(2), P("X1^2"));
    EXPECT_TRUE(sq.coefficient(1).is_zero());

    SPoly one = SPoly::adjoin_Y(P("1"));
    EXPECT_EQ((one - yx) + yx, one);
    EXPECT_EQ(sq.to_string(), "(X1^2)*Y^2");
}

TEST(Certificate, Examples) {
    auto c = one_certificate({P("X1")}, P("X1"));
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(c->verified);
    EXPECT_EQ(c->t[0], SPoly::Y(2));
    EXPECT_EQ(c->r, SPoly::adjoin_Y(P("1")));

    c = one_certificate({P("E(X1) - 1")}, P("E(X1) - 1"));
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(c->verified);
    EXPECT_EQ(c->t[0], SPoly::Y(2));
    EXPECT_EQ(c->r, SPoly::adjoin_Y(P("1")));

    EXPECT_FALSE(one_certificate({P("X1")}, P("X2")).has_value());
}

TEST(ExtractPower, Examples) {
    for (const char* h : {"X1", "E(X1) - 1"}) {
        auto c = one_certificate({P(h)}, P(h));
        ASSERT_TRUE(c.has_value());
        PowerIdentity pw = extract_power(*c, {P(h)}, P(h));
        EXPECT_EQ(pw.d, 1u);
        EXPECT_EQ(pw.cofactors, std::vector<EPoly>{P("1")});
        EXPECT_TRUE(pw.verified);
    }
}

TEST(ExtractPower, DegreeZeroWhenUnit) {
    std::vector<EPoly> h{P("X1"), P("X1 - 1")};
    auto c = one_certificate(h, P("X2"));
    ASSERT_TRUE(c.has_value());
    PowerIdentity pw = extract_power(*c, h, P("X2"));
    EXPECT_EQ(pw.d, 0u);
    EXPECT_TRUE(pw.verified);
    EXPECT_EQ(combine(pw.cofactors, h), P("1"));
}

TEST(ExtractPower, HigherPower) {
    std::vector<EPoly> h{P("X1^2"), P("X2")};
    NssReport rep = nullstellensatz_pipeline(h, P("X1 + X2"));
    ASSERT_TRUE(rep.found);
    EXPECT_EQ(rep.power->d, 2u);
    EXPECT_TRUE(rep.verified());
}

TEST(Pipeline, Reports) {
    NssReport a = nullstellensatz_pipeline({P("X1")}, P("X1"));
    EXPECT_TRUE(a.dagger.holds);
    EXPECT_TRUE(a.verified());
    EXPECT_EQ(a.power->d, 1u);

    NssReport b = nullstellensatz_pipeline({P("X1"), P("E(X1) - 2")}, P("X2"));
    EXPECT_FALSE(b.dagger.holds);
    ASSERT_TRUE(b.dagger.witness.has_value());
    EXPECT_EQ(*b.dagger.witness, P("X1"));

    BaseField qi = BaseField::gaussian();
    NssReport c = nullstellensatz_pipeline({P("E(X1) - 1", 1, qi), P("E(i*X1) - 1", 1, qi)}, P("1", 1));
    EXPECT_FALSE(c.found);
    EXPECT_FALSE(c.verified());
}

TEST(Pipeline, Json) {
    auto j = nullstellensatz_pipeline({P("X1")}, P("X1")).to_json();
    EXPECT_EQ(j["schema"], "nssreport/1");
    EXPECT_EQ(j["d"], 1);
    EXPECT_EQ(j["verified"], true);
    EXPECT_EQ(j["cofactors"][0], "1");

    j = nullstellensatz_pipeline({P("X1")}, P("X2")).to_json();
    EXPECT_EQ(j["found"], false);
    EXPECT_TRUE(j["d"].is_null());
}

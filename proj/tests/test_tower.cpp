#include "support/testkit.hpp"

#include "exprings/errors.hpp"
#include "exprings/io.hpp"
#include "exprings/tower.hpp"

#include <gtest/gtest.h>

using namespace exprings;

namespace {

EPoly P(const char* text, std::size_t n = 1) { return parse_epoly(text, n); }

IdealHandle ideal(std::initializer_list<const char*> gens, std::size_t n = 1) {
    std::vector<EPoly> v;
    for (const char* g : gens) v.push_back(P(g, n));
    return IdealHandle(n, v);
}

}  // namespace

TEST(Dagger, Examples) {
    EXPECT_TRUE(dagger_check(ideal({"X1"}), 0).holds);

    DaggerVerdict v = dagger_check(ideal({"X1", "E(X1) - 2"}));
    EXPECT_EQ(v.layer, 1u);
    EXPECT_FALSE(v.holds);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(*v.witness, P("X1"));

    v = dagger_check(ideal({"X1", "E(X1) - 1"}));
    EXPECT_TRUE(v.holds);
    EXPECT_FALSE(v.tested.empty());
}

TEST(SplitTilde, Examples) {
    auto r = split_tilde(ideal({"X1"}), 0, {P("X1")});
    ASSERT_EQ(r.decomposition.rows().size(), 1u);
    EXPECT_EQ(r.decomposition.rows()[0].element, P("X1"));
    EXPECT_TRUE(r.decomposition.rows()[0].lower.is_zero());

    r = split_tilde(ideal({"X1"}), 0, {P("X1"), P("2*X1")});
    EXPECT_EQ(r.decomposition.rows().size(), 1u);

    r = split_tilde(ideal({"X1", "X2^2"}, 2), 0, {P("X1", 2), P("X2^2", 2), P("X1 + X2^2", 2)});
    EXPECT_EQ(r.decomposition.rows().size(), 2u);
}

TEST(SplitTilde, RejectsNonMembers) {
    auto r = split_tilde(ideal({"X1"}), 0, {P("X1 + X1^2"), P("X1 + 1"), P("E(X1)")});
    EXPECT_EQ(r.decomposition.rows().size(), 1u);
    EXPECT_EQ(r.rejected.size(), 2u);
}

TEST(Rewrite, Examples) {
    TrackedDecomposition d(2, 0);
    ASSERT_TRUE(d.add(P("X1", 2)));

    auto terms = rewrite(P("E(X1)", 2), d);
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].coefficient, P("1", 2));
    EXPECT_EQ(terms[0].argument, P("X1", 2));

    terms = rewrite(P("E(X1 + X2)", 2), d);
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].coefficient, P("1", 2));
    EXPECT_EQ(terms[0].argument, P("X1 + X2", 2));
    auto s = d.split(P("X1 + X2", 2));
    EXPECT_EQ(s.tracked, P("X1", 2));
    EXPECT_EQ(s.complement, P("X2", 2));

    TrackedDecomposition empty(2, 0);
    terms = rewrite(P("X1*E(X2)", 2), empty);
    ASSERT_EQ(terms.size(), 1u);
    EXPECT_EQ(terms[0].coefficient, P("X1", 2));
    EXPECT_EQ(terms[0].argument, P("X2", 2));
}

TEST(Rewrite, RoundTrip) {
    testkit::Gen g(21);
    for (int k = 0; k < 500; ++k) {
        std::size_t level = static_cast<std::size_t>(g.uniform(0, 1));
        TrackedDecomposition d(2, level);
        for (int j = 0; j < g.uniform(0, 2); ++j) d.add(g.epoly(2, level, 2, 2, true));
        EPoly u = g.epoly(2, level + 1);
        auto terms = rewrite(u, d);
        EXPECT_EQ(reexpand(terms, 2), u) << u.to_string();
        for (std::size_t i = 0; i < terms.size(); ++i)
            for (std::size_t j = i + 1; j < terms.size(); ++j) EXPECT_FALSE(terms[i].argument == terms[j].argument);
    }
}

TEST(Rewrite, PhiIsRingHomomorphism) {
    testkit::Gen g(22);
    TrackedDecomposition d(2, 0);
    d.add(P("X1", 2));
    for (int k = 0; k < 200; ++k) {
        EPoly a = g.epoly(2, 1), b = g.epoly(2, 1);
        EXPECT_EQ(rewrite_phi(a + b, d), rewrite_phi(a, d) + rewrite_phi(b, d));
        EXPECT_EQ(rewrite_phi(a * b, d), rewrite_phi(a, d) * rewrite_phi(b, d));
    }
}

TEST(Tower, MembershipAtLevelOne) {
    TowerIdeal t = extend_one_step(TowerIdeal(ideal({"X1"}), 0));
    EXPECT_TRUE(t.member(P("E(X1) - 1"), 1));
    EXPECT_FALSE(t.member(P("E(X1)"), 1));
    EXPECT_TRUE(t.member(P("X1*E(X1^2)"), 1));
    EXPECT_EQ(t.phi(P("X1*E(X1^2)"), 0), P("X1"));
}

TEST(Tower, DaggerDaggerExamples) {
    TowerIdeal t = extend_one_step(TowerIdeal(ideal({"X1"}), 0));
    auto rep = check_dagger_dagger(t, 0, {P("X1"), P("1"), P("X1^2 + X1")});
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.samples, 3u);
    EXPECT_TRUE(t.member(P("X1^2 + X1"), 1));
    EXPECT_FALSE(t.member(P("1"), 1));
}

TEST(Tower, ExtendTwoLevels) {
    TowerIdeal t = extend_to_E_ideal(TowerIdeal(ideal({"X1"}), 0), 2);
    EXPECT_EQ(t.top_level(), 2u);
    // E(E(X1) - 1) is undefined (constant -1 outside A(R)); E(X1*E(X1)) - 1 exercises the same two phi steps.
    EXPECT_THROW(P("E(E(X1) - 1) - 1"), PartialityError);
    EXPECT_TRUE(t.member(P("E(X1*E(X1)) - 1"), 2));
    EXPECT_TRUE(t.member(P("E(E(X1) - E(2*X1)) - 1"), 2));
    EXPECT_FALSE(t.member(P("1"), 2));
    EXPECT_FALSE(t.member(P("E(E(X1))"), 2));
    EXPECT_TRUE(t.member(P("E(X1^2) - 1"), 1));
}

TEST(Tower, RecordsTrackedGenerators) {
    TowerIdeal t = extend_to_E_ideal(TowerIdeal(ideal({"X1", "X2^2"}, 2), 0), 2);
    for (std::size_t level = 0; level < 2; ++level) {
        auto d = t.decomposition(level);
        EXPECT_FALSE(d.rows().empty());
        for (const auto& row : d.rows()) EXPECT_TRUE(t.member(epoly_E(row.element) - P("1", 2), level + 1));
    }
    for (const auto& e : t.recorded_generators()) EXPECT_TRUE(t.member(e));
}

TEST(Tower, RefreshOffFallsBackToSeeds) {
    TowerIdeal t(ideal({"X1"}), 0);
    t.set_auto_refresh(false);
    t = extend_one_step(t);
    t.set_auto_refresh(false);
    // X1^2 is not tracked: phi sends E(X1^2) - 1 to 0 anyway, since n0 = 0 kills every group element
    EXPECT_TRUE(t.member(P("E(X1^2) - 1"), 1));
}

TEST(Tower, RefusesWhenDaggerFails) {
    TowerIdeal t(ideal({"X1", "E(X1) - 2"}), 1);
    try {
        extend_one_step(t);
        FAIL() << "expected DaggerFailure";
    } catch (const DaggerFailure& e) {
        EXPECT_EQ(e.witness(), P("X1"));
        EXPECT_EQ(e.level(), 1u);
    }
}

TEST(Tower, JsonRoundTrip) {
    TowerIdeal t = extend_to_E_ideal(TowerIdeal(ideal({"X1", "X2^2"}, 2), 0), 2);
    auto j = t.to_json();
    EXPECT_EQ(j["schema"], "tower/1");
    TowerIdeal back = TowerIdeal::from_json(j);
    EXPECT_EQ(back.top_level(), t.top_level());
    EXPECT_EQ(back.to_json(), j);
    testkit::Gen g(23);
    for (int k = 0; k < 50; ++k) {
        EPoly u = g.epoly(2, 2);
        EXPECT_EQ(back.member(u, 2), t.member(u, 2)) << u.to_string();
    }
}

TEST(Saturation, Examples) {
    SaturationOutcome a = saturate_R1(ideal({"E(X1) - 1 - X1"}));
    EXPECT_TRUE(a.success);
    EXPECT_TRUE(a.dagger.holds);
    EXPECT_TRUE(a.steps.empty());

    SaturationOutcome b = saturate_R1(ideal({"X1", "E(X1) - 2"}));
    EXPECT_FALSE(b.success);
    EXPECT_TRUE(b.certificate_verified);
    ASSERT_FALSE(b.steps.empty());
    EXPECT_EQ(b.steps[0].added, P("E(X1) - 1"));
    EXPECT_EQ(b.steps[0].source, P("X1"));
    EXPECT_EQ(combine(b.certificate, b.ideal.generators()), P("1"));

    SaturationOutcome c = saturate_R1(ideal({"X1", "E(X1) - 1"}));
    EXPECT_TRUE(c.success);
    EXPECT_TRUE(c.dagger.holds);
    for (const auto& gen : {P("X1"), P("E(X1) - 1")}) EXPECT_TRUE(membership(c.ideal, gen).member);
}

TEST(Saturation, IterationCap) {
    EXPECT_THROW(saturate_R1(ideal({"X1", "E(X1) - 2"}), 0), BudgetExceeded);
}

TEST(RealKernel, Examples) {
    auto ok = real_kernel_check(ideal({"X1"}), {{P("X1")}}, 0);
    EXPECT_TRUE(ok.ok());
    EXPECT_EQ(ok.premises_met, 1u);

    auto bad = real_kernel_check(ideal({"X1^2"}), {{P("X1")}}, 0);
    ASSERT_EQ(bad.falsifications.size(), 1u);
    EXPECT_EQ(bad.falsifications[0].second, P("X1"));

    auto aug = real_kernel_check(ideal({"X1"}), {{P("E(X1) - 1")}}, 1);
    EXPECT_TRUE(aug.ok());
    EXPECT_EQ(aug.premises_met, 1u);
}

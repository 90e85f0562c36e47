#include "suites.hpp"

#include "testkit.hpp"

#include "exprings/diff.hpp"
#include "exprings/io.hpp"
#include "exprings/rabinowitsch.hpp"
#include "exprings/tower.hpp"

#include <utility>

namespace testkit {

namespace {

EPoly one(std::size_t n) { return EPoly::constant(n, Scalar(1)); }

std::string str(const EPoly& p) { return p.to_string(); }

}  // namespace

SuiteResult e_homomorphism_suite() {
    SuiteResult r;
    Gen g(1001);
    std::size_t pairs = 0;
    for (; pairs < 1000; ++pairs) {
        std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
        EPoly p = g.epoly(n, static_cast<std::size_t>(g.uniform(0, 2)), 3, 2, true);
        EPoly q = g.epoly(n, static_cast<std::size_t>(g.uniform(0, 2)), 3, 2, true);
        p -= EPoly::constant(n, p.constant_term());
        q -= EPoly::constant(n, q.constant_term());
        r.check(epoly_E(p + q) == epoly_E(p) * epoly_E(q), "E(p+q) != E(p)E(q) for p=" + str(p) + ", q=" + str(q));
    }
    for (std::size_t n = 0; n <= 3; ++n) r.check(epoly_E(EPoly(n)) == one(n), "E(0) != 1");
    r.summary = std::to_string(pairs) + " random pairs, E(0)=1 for n<=3";
    return r;
}

SuiteResult ord_suite() {
    SuiteResult r;
    const std::vector<std::pair<const char*, const char*>> fixtures = {
        {"0", "0"},
        {"1", "1"},
        {"X1", "2"},
        {"X1^2 + 1", "3"},
        {"X1^3", "4"},
        {"X1*X2 + X3", "3"},
        {"X1 + 2*E(X1)", "w + 2"},
        {"E(X1) - E(2*X1)", "w*2"},
        {"E(X1)", "w"},
        {"X1*E(X1) + E(X1)", "w"},
        {"E(X1) + E(X2) + E(X1 + X2)", "w*3"},
        {"3*E(X1) - E(X1^2)", "w*2"},
        {"E(X1^2) - 3", "w + 1"},
        {"E(X1)*E(-X1)", "1"},
        {"(1 + E(X1))*(1 - E(X1))", "w + 1"},
        {"E(X1)*E(X1)", "w"},
        {"X2*E(X1) + X1*E(X2)", "w*2"},
        {"E(E(X1))", "w^2"},
        {"E(X1 + E(X1))", "w^2"},
        {"E(X1) + (1 + E(X1))*E(E(X1))", "w^2 + w"},
        {"E(E(X1)) + E(E(X2)) + X1", "w^2*2 + 2"},
        {"E(X1) + E(E(X1)) + E(E(E(X1)))", "w^3 + w^2 + w"},
        {"X1 + X2^2 + X2*E(X1)", "w + 3"},
    };
    for (const auto& [text, expect] : fixtures) {
        EPoly p = parse_epoly(text, 3);
        std::string got = ord(p).to_string();
        r.check(got == expect, std::string("ord(") + text + ") = " + got + ", expected " + expect);
        r.check(ord(p) == naive_ord(p), std::string("naive ord disagrees on ") + text);
    }

    Gen g(2002);
    std::size_t applied = 0;
    for (; applied < 200; ++applied) {
        std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
        EPoly p = g.above_base(n, static_cast<std::size_t>(g.uniform(1, 3)));
        OrdReduction red = ord_reduce(p);
        r.check(red.reduced == epoly_E(red.q) * p, "ord_reduce product mismatch on " + str(p));
        r.check(ord(red.reduced) < ord(p), "ord did not drop on " + str(p) + ": " + ord(p).to_string() + " -> " +
                                               ord(red.reduced).to_string());
    }
    r.summary = std::to_string(fixtures.size()) + " fixtures, " + std::to_string(applied) + " strict reductions";
    return r;
}

SuiteResult derivation_suite() {
    SuiteResult r;
    Gen g(3003);
    std::size_t cases = 0;
    for (; cases < 200; ++cases) {
        std::size_t n = static_cast<std::size_t>(g.uniform(1, 3));
        DerivationSpec spec;
        for (std::size_t j = 0; j < n; ++j) spec.variable_action.push_back(g.coin(0.2) ? EPoly(n) : g.epoly(n, 1, 2));
        EPoly p = g.epoly(n, 2);
        EPoly direct = apply_derivation(spec, p);
        r.check(direct == derivation_via_partials(spec, p), "D(p) != sum D(X_j) dp/dX_j for p=" + str(p));
        r.check(derivation_defect(spec, p).is_zero(), "nonzero defect on " + str(p));
    }

    // d/dt p(a(t)) = sum_j (dp/dX_j)(a(t)) a_j'(t), compared below t^8.
    const std::size_t order = 9;
    std::size_t chains = 0;
    for (; chains < 100; ++chains) {
        std::size_t n = static_cast<std::size_t>(g.uniform(1, 2));
        EPoly p = g.epoly(n, 1);
        if (chains % 2 == 0) {
            // exponent values stay in t*K[[t]]: E-nodes enter with coefficients summing to 0
            EPoly b1 = g.poly(n, 2, 2, true), b2 = g.poly(n, 2, 2, true);
            if (b1.is_zero()) b1 = EPoly::variable(n, 1);
            if (b2.is_zero()) b2 = -EPoly::variable(n, 1);
            EPoly e = g.poly(n, 2, 2, true) + g.scalar() * (epoly_E(b1) - epoly_E(b2));
            p += g.epoly(n, 1, 2) * epoly_E(e);
        }
        std::vector<TruncatedSeries> a;
        for (std::size_t j = 0; j < n; ++j) a.push_back(g.series(order, true));
        ModelPoint pt = ModelPoint::in_series(a);
        TruncatedSeries lhs = std::get<TruncatedSeries>(eval_epoly(p, pt)).derivative();
        TruncatedSeries rhs(order);
        for (std::size_t j = 0; j < n; ++j)
            rhs += std::get<TruncatedSeries>(eval_epoly(partial_derivative(p, j + 1), pt)) * a[j].derivative();
        bool same = true;
        for (std::size_t k = 0; k + 1 < order; ++k) same = same && lhs[k] == rhs[k];
        r.check(same, "chain rule fails for " + str(p));
    }
    r.summary = std::to_string(cases) + " der-multi cases, " + std::to_string(chains) + " chain-rule checks mod t^8";
    return r;
}

namespace {


EPoly tiny_poly(Gen& g, bool shifted) {
    EPoly p(2);
    int k = g.uniform(1, 3);
    for (int t = 0; t < k; ++t) {
        Monomial m{0, 0};
        int d = g.uniform(0, 2);
        for (int j = 0; j < d; ++j) ++m[static_cast<std::size_t>(g.uniform(0, 1))];
        EPoly term = EPoly::term(2, g.scalar(), m, nullptr);
        int s = shifted ? g.uniform(-1, 1) : 0;
        if (s != 0) term = term * epoly_E(Scalar(static_cast<long>(s)) * EPoly::variable(2, 1));
        p += term;
    }
    return p;
}

EPoly small_multiplier(Gen& g, bool shifted) {
    EPoly c(2);
    int k = g.uniform(1, 2);
    for (int t = 0; t < k; ++t) {
        Monomial m{0, 0};
        if (g.coin()) ++m[static_cast<std::size_t>(g.uniform(0, 1))];
        EPoly term = EPoly::term(2, g.scalar(), m, nullptr);
        int s = shifted ? g.uniform(-1, 1) : 0;
        if (s != 0) term = term * epoly_E(Scalar(static_cast<long>(s)) * EPoly::variable(2, 1));
        c += term;
    }
    return c;
}

std::vector<std::vector<std::string>> gb_corpus() {
    return {
        {"X1"},
        {"X1", "X1^2 + X2"},
        {"E(X1) - 1"},
        {"E(X1) - 1", "E(2*X1)"},
        {"X1", "E(X1) - 2"},
        {"E(X1) - 1 - X1"},
        {"X1^2", "X2"},
        {"X1*E(X2) - X2", "E(X1) + X2^2"},
        {"E(X1) + E(X2) - 2", "X1 - X2"},
        {"E(E(X1)) - E(X1)", "X1^2"},
        {"X1 - E(X1/2) + 1"},
    };
}

}  // namespace

SuiteResult membership_suite() {
    SuiteResult r;
    std::size_t corpus = 0;
    for (const auto& texts : gb_corpus()) {
        IdealHandle ideal(3, parse_all(texts, 3));
        auto pb = groebner(ideal);
        StepBudget budget;
        r.check(s_pairs_reduce_to_zero(pb->gb, budget), "S-pairs do not reduce to zero for corpus ideal " +
                                                            std::to_string(corpus));
        r.check(cofactors_consistent(pb->gb), "cofactor rows inconsistent for corpus ideal " + std::to_string(corpus));
        ++corpus;
    }

    Gen g(4004);
    std::size_t instances = 0, trues = 0, falses = 0;
    const EPoly x1 = EPoly::variable(2, 1);
    for (; instances < 120; ++instances) {
        bool shifted = instances % 3 != 0;
        std::vector<EPoly> gens;
        int m = g.uniform(1, 2);
        for (int k = 0; k < m; ++k) gens.push_back(tiny_poly(g, shifted));
        IdealHandle ideal(2, gens);
        std::vector<EPoly> shifts;
        if (shifted) shifts.push_back(x1);

        // A member by construction and a random query.
        EPoly built(2);
        for (const auto& gi : gens) built += small_multiplier(g, shifted) * gi;
        EPoly random = tiny_poly(g, shifted);
        for (const EPoly& q : {built, random}) {
            MembershipResult mr = membership(ideal, q);
            MacaulayResult oracle = macaulay_member(gens, q, shifts, 2, 2);
            if (mr.member && !oracle.found) oracle = macaulay_member(gens, q, shifts, 4, 4);
            r.check(mr.member == oracle.found, "engine=" + std::string(mr.member ? "true" : "false") + ", oracle=" +
                                                   (oracle.found ? "true" : "false") + " for " + str(q));
            if (oracle.found) r.check(combine(oracle.cofactors, gens) == q, "oracle cofactors wrong");
            if (mr.member) {
                ++trues;
                r.check(mr.verified && combine(mr.cofactors, gens) == q, "unverified cofactors for " + str(q));
            } else {
                ++falses;
            }
        }
        r.check(membership(ideal, built).member, "constructed member rejected");
    }
    r.summary = std::to_string(corpus) + " corpus ideals S-pair consistent, " + std::to_string(instances) +
                " tiny instances (" + std::to_string(trues) + " true / " + std::to_string(falses) +
                " false) agree with the linear-algebra oracle";
    return r;
}

SuiteResult augmentation_suite() {
    SuiteResult r;
    Gen g(5005);
    std::size_t pairs = 0;
    for (; pairs < 500; ++pairs) {
        std::size_t n = static_cast<std::size_t>(g.uniform(1, 2));
        std::size_t layer = static_cast<std::size_t>(g.uniform(1, 2));
        EPoly u = g.epoly(n, layer), v = g.epoly(n, layer);
        EPoly au = augmentation(u, layer), av = augmentation(v, layer);
        r.check(augmentation(u + v, layer) == au + av, "additivity fails for " + str(u) + ", " + str(v));
        r.check(augmentation(u * v, layer) == au * av, "multiplicativity fails for " + str(u) + ", " + str(v));
        r.check(au.is_zero() || height(au) < layer, "image not in R_{l-1}");
    }
    for (std::size_t l = 1; l <= 3; ++l) r.check(augmentation(one(2), l) == one(2), "phi(1) != 1");

    std::size_t sampled = 0;
    for (const auto& texts : std::vector<std::vector<std::string>>{{"X1"}, {"X1", "X2^2"}}) {
        IdealHandle base(2, parse_all(texts, 2));
        TowerIdeal tower = extend_one_step(TowerIdeal(base, 0));
        for (int k = 0; k < 100; ++k, ++sampled) {
            EPoly b = g.poly(2, 3, 3);
            if (k % 2 == 0) {
                b = EPoly(2);
                for (const auto& gi : base.generators()) b += g.poly(2, 2, 2) * gi;
            }
            bool in_i = membership(base, b).member;
            r.check(augmentation_mod(b, base, 1).in_kernel == in_i, "I_1 ∩ R_0 != I at " + str(b));
            r.check(tower.member(b, 1) == in_i, "tower level 1 disagrees on " + str(b));
            EPoly u = g.epoly(2, 1);
            r.check(tower.member(u, 1) == augmentation_mod(u, base, 1).in_kernel, "kernel routes differ on " + str(u));
        }
    }
    r.summary = std::to_string(pairs) + " homomorphism pairs, " + std::to_string(sampled) + " sampled I_1 ∩ R_0 checks";
    return r;
}

namespace {

EPoly member_sample(Gen& g, const TowerIdeal& t, std::size_t level) {
    std::vector<EPoly> gens = t.base().generators();
    for (const auto& e : t.recorded_generators())
        if (height(e) <= level) gens.push_back(e);
    EPoly s(t.nvars());
    for (const auto& gi : gens)
        if (g.coin(0.7)) s += g.epoly(t.nvars(), level == 0 ? 0 : g.uniform(0, static_cast<int>(level) - 1), 2, 1) * gi;
    return s;
}

}  // namespace

SuiteResult tower_suite() {
    SuiteResult r;
    Gen g(6006);
    std::size_t samples = 0, tracked = 0;
    for (const auto& texts : std::vector<std::vector<std::string>>{{"X1"}, {"X1", "X2^2"}}) {
        IdealHandle base(2, parse_all(texts, 2));
        TowerIdeal t = extend_to_E_ideal(TowerIdeal(base, 0), 3);
        r.check(t.top_level() == 3, "tower did not reach level 3");
        for (std::size_t level = 0; level < 3; ++level) {
            std::vector<EPoly> s;
            for (int k = 0; k < 200; ++k)
                s.push_back(k % 2 == 0 ? member_sample(g, t, level) : g.epoly(2, level, 3, 2));
            DaggerDaggerReport rep = check_dagger_dagger(t, level, s);
            samples += rep.samples;
            r.check(rep.ok(), "(††) disagreement at level " + std::to_string(level) + " for <" + texts[0] + "...>: " +
                                  (rep.ok() ? "" : str(rep.disagreements.front())));
            auto d = t.decomposition(level);
            for (const auto& row : d.rows()) {
                ++tracked;
                r.check(t.member(epoly_E(row.element) - one(2), level + 1),
                        "E(f)-1 missing at level " + std::to_string(level + 1) + " for f=" + str(row.element));
            }
        }
        for (std::size_t level = 0; level <= 3; ++level)
            r.check(!t.member(one(2), level), "1 in I_" + std::to_string(level));
    }
    r.summary = std::to_string(samples) + " (††) samples, " + std::to_string(tracked) +
                " tracked E(f)-1 memberships, 1 excluded at levels 0..3";
    return r;
}

SuiteResult saturation_suite() {
    SuiteResult r;
    for (const char* text : {"E(X1) - 1 - X1", "X1; E(X1) - 1"}) {
        std::vector<std::string> parts;
        std::string s = text;
        for (std::size_t pos; (pos = s.find(';')) != std::string::npos; s = s.substr(pos + 1)) parts.push_back(s.substr(0, pos));
        parts.push_back(s);
        SaturationOutcome out = saturate_R1(IdealHandle(1, parse_all(parts, 1)));
        r.check(out.success, std::string("saturation failed on ") + text);
        r.check(out.dagger.holds, std::string("dagger does not hold after saturating ") + text);
    }
    IdealHandle bad(1, parse_all({"X1", "E(X1) - 2"}, 1));
    SaturationOutcome out = saturate_R1(bad);
    r.check(!out.success, "<X1, E(X1)-2> reported success");
    r.check(out.certificate_verified, "failure certificate not verified");
    r.check(combine(out.certificate, out.ideal.generators()) == one(1), "certificate does not re-expand to 1");
    r.summary = "2 successes with (†) holding, 1 verified failure certificate";
    return r;
}

SuiteResult rabinowitsch_suite() {
    SuiteResult r;
    struct Case {
        std::vector<std::string> h;
        std::string g;
        bool found;
    };
    for (const Case& c : std::vector<Case>{{{"X1"}, "X1", true}, {{"E(X1) - 1"}, "E(X1) - 1", true}, {{"X1"}, "X2", false}}) {
        std::vector<EPoly> h = parse_all(c.h, 2);
        EPoly g = parse_epoly(c.g, 2);
        NssReport rep = nullstellensatz_pipeline(h, g);
        r.check(rep.found == c.found, "found mismatch for g=" + c.g);
        if (!rep.found) continue;
        r.check(rep.power->d == 1, "d != 1 for g=" + c.g);
        r.check(rep.certificate->verified && rep.power->verified, "verification bit false for g=" + c.g);
        r.check(combine(rep.power->cofactors, h) == g.pow(rep.power->d), "g^d does not re-expand for g=" + c.g);
    }
    r.summary = "2 certificates with d=1 verified, 1 not-found";
    return r;
}

SuiteResult real_kernel_suite() {
    SuiteResult r;
    Gen g(9009);
    IdealHandle real(2, parse_all({"X1"}, 2));
    const EPoly x1 = EPoly::variable(2, 1);
    std::vector<std::vector<EPoly>> witnesses;
    for (int k = 0; k < 50; ++k) {
        std::vector<EPoly> tuple;
        int len = g.uniform(1, 3);
        for (int i = 0; i < len; ++i) {
            if (k % 2 == 0)
                tuple.push_back(g.epoly(2, 1) * x1 + g.epoly(2, 0) * (epoly_E(g.poly(2, 2, 2, true)) - one(2)));
            else
                tuple.push_back(g.epoly(2, 1));
        }
        witnesses.push_back(std::move(tuple));
    }
    RealKernelReport ok = real_kernel_check(real, witnesses, 1);
    r.check(ok.ok(), "falsification reported on <X1>");
    r.check(ok.premises_met >= 25, "too few witness tuples met the premise");
    RealKernelReport bad = real_kernel_check(IdealHandle(2, parse_all({"X1^2"}, 2)), {{x1}}, 0);
    r.check(!bad.ok(), "no falsification on <X1^2>");
    r.check(!bad.ok() && bad.falsifications.front().second == x1, "falsification does not name X1");
    r.summary = std::to_string(ok.tuples) + " witness tuples on <X1> (" + std::to_string(ok.premises_met) +
                " meeting the premise), falsification on <X1^2>";
    return r;
}

SuiteResult series_suite() {
    SuiteResult r;
    Gen g(10010);
    std::size_t pairs = 0;
    for (; pairs < 200; ++pairs) {
        TruncatedSeries a = g.series(8, true), b = g.series(8, true);
        r.check(series_exp(a + b) == series_exp(a) * series_exp(b), "exp(a+b) != exp(a)exp(b)");
        r.check(series_exp(a) == ode_exp(a), "series_exp disagrees with the recurrence");
    }
    TruncatedSeries t = TruncatedSeries::uniformizer(8);
    const EPoly x1 = EPoly::variable(1, 1);
    r.check(khovanskii_check({x1}, ModelPoint::in_series({TruncatedSeries(8)})), "f=(X1) at 0");
    r.check(!khovanskii_check({x1}, ModelPoint::in_series({t})), "f=(X1) at t");
    r.check(khovanskii_check({epoly_E(x1) - one(1)}, ModelPoint::in_series({TruncatedSeries(8)})), "f=(E(X1)-1) at 0");
    r.check(khovanskii_check({x1}, ModelPoint::in_floats({0.0})), "float f=(X1) at 0");
    r.summary = std::to_string(pairs) + " exp pairs mod t^8, 4 Khovanskii fixtures";
    return r;
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {1, "E-homomorphism", e_homomorphism_suite},
        {2, "ord", ord_suite},
        {3, "derivation", derivation_suite},
        {4, "Groebner/membership", membership_suite},
        {5, "augmentation", augmentation_suite},
        {6, "tower", tower_suite},
        {7, "saturation", saturation_suite},
        {8, "Rabinowitsch", rabinowitsch_suite},
        {9, "real kernel", real_kernel_suite},
        {10, "series model", series_suite},
    };
    return all;
}

}  // namespace testkit

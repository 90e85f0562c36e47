#include "cli.hpp"

#include "exprings/diff.hpp"
#include "exprings/ideal.hpp"
#include "exprings/io.hpp"
#include "exprings/models.hpp"
#include "exprings/rabinowitsch.hpp"
#include "exprings/tower.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace exprings::cli {

namespace {

struct Section {
    std::string title;
    std::vector<std::string> lines;
};

std::string fixed(FloatValue z) {
    auto clean = [](double x) { return std::abs(x) < 5e-7 ? 0.0 : x; };
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6f %c %.6fi", clean(z.real()), clean(z.imag()) < 0 ? '-' : '+',
                  std::abs(clean(z.imag())));
    return buf;
}

std::string yes(bool b) { return b ? "true" : "false"; }

Section ordinals() {
    Section s{"ordinal complexity", {}};
    for (const char* text : {"X1 + 2*E(X1)", "X1^2*X2 + 1", "E(X1) + E(X2) + X1", "E(X1)*E(E(X1)) + E(E(X2))",
                             "E(X1) + (1 + E(X1))*E(E(X1))"}) {
        EPoly p = parse_epoly(text, 2);
        s.lines.push_back("ord(" + p.to_string() + ") = " + ord(p).to_string());
    }
    EPoly p = parse_epoly("E(X1) + (1 + E(X1))*E(E(X1))", 2);
    auto r = ord_reduce(p);
    s.lines.push_back("E(" + r.q.to_string() + ") * (" + p.to_string() + ") = " + r.reduced.to_string() + ", ord " +
                      ord(r.reduced).to_string());
    return s;
}

Section series() {
    Section s{"series model K[[t]]/t^4", {}};
    auto t = ModelPoint::in_series({TruncatedSeries::uniformizer(4)});
    for (const char* text : {"E(X1) - 1", "E(2*X1)", "X1*E(X1)"}) {
        EPoly p = parse_epoly(text, 1);
        s.lines.push_back(p.to_string() + " at X1 = t: " + model_value_to_string(eval_epoly(p, t)));
    }
    EPoly f = parse_epoly("E(X1) - 1", 1);
    s.lines.push_back("khovanskii (E(X1) - 1) at X1 = 0: " +
                      yes(khovanskii_check({f}, ModelPoint::in_series({TruncatedSeries::constant(Scalar(0), 4)}))));
    return s;
}

Section counterexample() {
    Section s{"exp(X) - c and exp(iX) - 1 (c = 2)", {}};
    BaseField qi = BaseField::gaussian();
    EPoly f = parse_epoly("E(X1) - 2", 1, qi);
    EPoly g = parse_epoly("E(i*X1) - 1", 1, qi);
    s.lines.push_back("f = " + f.to_string() + ", g = " + g.to_string());
    const double pi = std::numbers::pi;
    for (int k = -1; k <= 1; ++k) {
        auto a = ModelPoint::in_floats({FloatValue(2 * pi * k, 0.0)});
        s.lines.push_back("X1 = 2*pi*(" + std::to_string(k) + "): f = " + fixed(std::get<FloatValue>(eval_epoly(f, a, qi))) +
                          ", g = " + fixed(std::get<FloatValue>(eval_epoly(g, a, qi))));
    }
    auto a = ModelPoint::in_floats({FloatValue(std::log(2.0), 0.0)});
    s.lines.push_back("X1 = log 2: f = " + fixed(std::get<FloatValue>(eval_epoly(f, a, qi))) +
                      ", g = " + fixed(std::get<FloatValue>(eval_epoly(g, a, qi))));
    s.lines.push_back("g vanishes only on 2*pi*Z, where exp(X1) = 1 != 2: no common complex zero");
    IdealHandle I(1, {f, g});
    auto m = membership(I, EPoly::constant(1, Scalar(1)));
    s.lines.push_back("1 in <f, g>: " + yes(m.member) + " (" + m.slice + ")");
    auto rep = nullstellensatz_pipeline({f, g}, EPoly::constant(1, Scalar(1)));
    s.lines.push_back("certificate for g = 1: " + std::string(rep.found ? "found" : "not found within slice"));
    return s;
}

Section ideals() {
    Section s{"membership in <E(X1) - 1>", {}};
    IdealHandle I(1, {parse_epoly("E(X1) - 1", 1)});
    for (const char* text : {"E(2*X1) - 1", "E(-X1) - 1", "E(X1/2) - 1", "X1", "1"}) {
        EPoly p = parse_epoly(text, 1);
        auto m = membership(I, p);
        std::string line = p.to_string() + ": " + yes(m.member);
        if (m.member) line += ", cofactor " + m.cofactors[0].to_string() + (m.verified ? " (verified)" : "");
        s.lines.push_back(line);
    }
    IdealHandle J(2, {parse_epoly("E(E(X1)) - 1", 2), parse_epoly("X1*E(X1) - X2", 2)});
    IdealHandle lower = intersect_subring(J, 1);
    for (const auto& gen : lower.generators())
        s.lines.push_back("<E(E(X1)) - 1, X1*E(X1) - X2> ∩ R_1 contains " + gen.to_string());
    return s;
}

Section tower() {
    Section s{"tower over <X1>", {}};
    TowerIdeal t = extend_to_E_ideal(TowerIdeal(IdealHandle(1, {parse_epoly("X1", 1)}), 0), 3);
    for (const char* text : {"E(X1) - 1", "E(X1)", "X1*E(X1^2)", "E(X1^2) - 1", "E(X1*E(X1)) - 1", "1"}) {
        EPoly p = parse_epoly(text, 1);
        s.lines.push_back(p.to_string() + " in I_" + std::to_string(t.top_level()) + ": " + yes(t.member(p)));
    }
    for (std::size_t l = t.base_level(); l < t.top_level(); ++l) {
        std::string line = "tracked at level " + std::to_string(l) + ":";
        auto d = t.decomposition(l);
            for (const auto& f : d.seeds()) line += " " + f.to_string() + ";";
        s.lines.push_back(line);
    }
    return s;
}

Section saturation() {
    Section s{"saturation in R_1", {}};
    for (auto gens : {std::vector<const char*>{"E(X1) - 1 - X1"}, {"X1", "E(X1) - 1"}, {"X1", "E(X1) - 2"}}) {
        std::vector<EPoly> h;
        for (auto g : gens) h.push_back(parse_epoly(g, 1));
        IdealHandle I(1, h);
        std::string name = "<";
        for (std::size_t i = 0; i < h.size(); ++i) name += (i ? ", " : "") + h[i].to_string();
        name += ">";
        s.lines.push_back(name + ": dagger " + dagger_check(I).describe());
        auto o = saturate_R1(I);
        for (const auto& st : o.steps) s.lines.push_back("  added " + st.added.to_string() + " from " + st.source.to_string());
        if (o.success) {
            s.lines.push_back("  stabilized, dagger " + o.dagger.describe());
        } else {
            std::string cert;
            for (std::size_t i = 0; i < o.certificate.size(); ++i) {
                if (o.certificate[i].is_zero()) continue;
                if (!cert.empty()) cert += " + ";
                cert += "[" + o.certificate[i].to_string() + "]*(" + o.ideal.generators()[i].to_string() + ")";
            }
            s.lines.push_back("  unit ideal: 1 = " + cert + (o.certificate_verified ? " (verified)" : " (NOT verified)"));
        }
    }
    return s;
}

Section rabinowitsch() {
    Section s{"Rabinowitsch certificates", {}};
    std::vector<std::pair<std::vector<const char*>, const char*>> cases = {
        {{"X1"}, "X1"}, {{"E(X1) - 1"}, "E(X1) - 1"}, {{"X1"}, "X2"}, {{"X1^2", "X2"}, "X1 + X2"}, {{"X1", "E(X1) - 2"}, "X1"}};
    for (const auto& [hs, gt] : cases) {
        std::vector<EPoly> h;
        for (auto x : hs) h.push_back(parse_epoly(x, 2));
        auto rep = nullstellensatz_pipeline(h, parse_epoly(gt, 2));
        std::string name = "h = [";
        for (std::size_t i = 0; i < h.size(); ++i) name += (i ? ", " : "") + h[i].to_string();
        name += "], g = " + rep.g.to_string();
        s.lines.push_back(name);
        s.lines.push_back("  dagger " + rep.dagger.describe());
        if (!rep.found) {
            s.lines.push_back("  not found within slice");
            continue;
        }
        std::string comb;
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (rep.power->cofactors[i].is_zero()) continue;
            if (!comb.empty()) comb += " + ";
            comb += "[" + rep.power->cofactors[i].to_string() + "]*(" + h[i].to_string() + ")";
        }
        s.lines.push_back("  d = " + std::to_string(rep.power->d) + ": g^d = " + comb + (rep.verified() ? " (verified)" : " (NOT verified)"));
    }
    return s;
}


EPoly random_element(std::mt19937_64& rng, std::size_t n, std::size_t height) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    EPoly p(n);
    for (int k = pick(1, 3); k > 0; --k) {
        Monomial m(n, 0);
        for (int d = pick(0, 2); d > 0; --d) ++m[static_cast<std::size_t>(pick(0, static_cast<int>(n) - 1))];
        ExpPtr a;
        if (height > 0) {
            EPoly e = random_element(rng, n, static_cast<std::size_t>(pick(0, static_cast<int>(height) - 1)));
            e -= EPoly::constant(n, e.constant_term());
            if (!e.is_zero()) a = std::make_shared<const EPoly>(std::move(e));
        }
        int num = pick(1, 5) * (pick(0, 1) ? 1 : -1);
        p += EPoly::term(n, Scalar(Rational(num, pick(1, 3))), m, a);
    }
    return p;
}

Section properties(std::uint64_t seed) {
    Section s{"random samples (seed " + std::to_string(seed) + ")", {}};
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 3; ++k) {
        EPoly p = random_element(rng, 2, 2), q = random_element(rng, 2, 1);
        p -= EPoly::constant(2, p.constant_term());
        q -= EPoly::constant(2, q.constant_term());
        s.lines.push_back("p = " + p.to_string() + ", q = " + q.to_string() +
                          ": E(p+q) = E(p)E(q) " + yes(epoly_E(p + q) == epoly_E(p) * epoly_E(q)));
        EPoly u = p - layer_part(p, 0);
        if (u.is_zero()) continue;
        auto r = ord_reduce(u);
        s.lines.push_back("ord " + ord(u).to_string() + " -> " + ord(r.reduced).to_string() + " via E(" +
                          r.q.to_string() + ")");
    }
    return s;
}

}  // namespace

std::string demo(bool json, std::optional<std::uint64_t> seed) {
    std::vector<Section> sections{ordinals(), series(), counterexample(), ideals(), tower(), saturation(), rabinowitsch()};
    if (seed) sections.push_back(properties(*seed));
    if (json) {
        nlohmann::json j;
        j["schema"] = "demo/1";
        j["sections"] = nlohmann::json::array();
        for (const auto& s : sections) j["sections"].push_back({{"title", s.title}, {"lines", s.lines}});
        return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& s : sections) {
        out += "== " + s.title + " ==\n";
        for (const auto& l : s.lines) out += l + "\n";
        out += "\n";
    }
    return out;
}

}  // namespace exprings::cli

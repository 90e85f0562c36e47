#include "exprings/groebner.hpp"

#include "exprings/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace exprings {

MonomialOrder MonomialOrder::elimination(std::vector<bool> eliminate) {
    MonomialOrder o;
    if (std::any_of(eliminate.begin(), eliminate.end(), [](bool b) { return b; })) o.eliminate_ = std::move(eliminate);
    return o;
}

namespace {

template <class Pred>
int grevlex_on(const PowerProduct& a, const PowerProduct& b, Pred in_block) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (in_block(i)) {
            da += a[i];
            db += b[i];
        }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (!in_block(i) || a[i] == b[i]) continue;
        return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const PowerProduct& a, const PowerProduct& b) const {
    if (eliminate_.empty()) return grevlex_on(a, b, [](std::size_t) { return true; });
    auto in_first = [&](std::size_t i) { return i < eliminate_.size() && eliminate_[i]; };
    if (int c = grevlex_on(a, b, in_first); c != 0) return c;
    return grevlex_on(a, b, [&](std::size_t i) { return !in_first(i); });
}

std::string MonomialOrder::describe() const {
    if (eliminate_.empty()) return "grevlex";
    std::string s = "elimination[";
    bool first = true;
    for (std::size_t i = 0; i < eliminate_.size(); ++i)
        if (eliminate_[i]) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "]>grevlex";
}

Poly Poly::from_terms(std::vector<PolyTerm> terms, const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const PolyTerm& a, const PolyTerm& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<PolyTerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
        if (merged.back().coeff.is_zero()) merged.pop_back();
    }
    return Poly(std::move(merged));
}

Poly Poly::constant(std::size_t nvars, const Scalar& c) {
    if (c.is_zero()) return {};
    return Poly({PolyTerm{PowerProduct(nvars, 0), c}});
}

Poly Poly::monomial(PowerProduct m, const Scalar& c) {
    if (c.is_zero()) return {};
    return Poly({PolyTerm{std::move(m), c}});
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
}

Poly poly_sub_scaled(const Poly& a, const Scalar& c, const PowerProduct& m, const Poly& b, const MonomialOrder& ord) {
    std::vector<PolyTerm> out;
    out.reserve(a.size() + b.size());
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::size_t i = 0, j = 0;
    PowerProduct shifted;
    auto shift = [&](std::size_t k) {
        shifted = tb[k].mono;
        for (std::size_t v = 0; v < shifted.size(); ++v) shifted[v] += m[v];
    };
    bool have = false;
    while (i < ta.size() || j < tb.size()) {
        if (j < tb.size() && !have) {
            shift(j);
            have = true;
        }
        int cmpv = 0;
        if (i == ta.size())
            cmpv = -1;
        else if (j == tb.size())
            cmpv = 1;
        else
            cmpv = ord.compare(ta[i].mono, shifted);
        if (cmpv > 0) {
            out.push_back(ta[i++]);
        } else if (cmpv < 0) {
            out.push_back(PolyTerm{shifted, -(c * tb[j].coeff)});
            ++j;
            have = false;
        } else {
            Scalar v = ta[i].coeff - c * tb[j].coeff;
            if (!v.is_zero()) out.push_back(PolyTerm{ta[i].mono, std::move(v)});
            ++i;
            ++j;
            have = false;
        }
    }
    return Poly(std::move(out));
}

Poly poly_add(const Poly& a, const Poly& b, const MonomialOrder& ord) {
    if (b.is_zero()) return a;
    return poly_sub_scaled(a, Scalar(-1), PowerProduct(b.lead().mono.size(), 0), b, ord);
}

Poly poly_sub(const Poly& a, const Poly& b, const MonomialOrder& ord) {
    if (b.is_zero()) return a;
    return poly_sub_scaled(a, Scalar(1), PowerProduct(b.lead().mono.size(), 0), b, ord);
}

Poly poly_mul(const Poly& a, const Poly& b, const MonomialOrder& ord) {
    Poly acc;
    for (const auto& t : a.terms()) acc = poly_sub_scaled(acc, -t.coeff, t.mono, b, ord);
    return acc;
}

Poly poly_reorder(const Poly& a, const MonomialOrder& ord) { return Poly::from_terms(a.terms(), ord); }

bool divides(const PowerProduct& a, const PowerProduct& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

PowerProduct pp_lcm(const PowerProduct& a, const PowerProduct& b) {
    PowerProduct r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

PowerProduct pp_quotient(const PowerProduct& b, const PowerProduct& a) {
    PowerProduct r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

void StepBudget::charge(std::size_t n) {
    used_ += n;
    if (used_ > limit_) throw BudgetExceeded(limit_);
}

bool GroebnerBasis::is_unit() const {
    return basis.size() == 1 && std::all_of(basis[0].lead().mono.begin(), basis[0].lead().mono.end(),
                                            [](std::uint32_t e) { return e == 0; });
}

namespace {

struct Element {
    Poly p;
    std::vector<Poly> cof;
};

void scale(Element& e, const Scalar& c) {
    e.p *= c;
    for (auto& q : e.cof) q *= c;
}

/// e -= c * m * g, mirrored on the cofactors.
void subtract(Element& e, const Scalar& c, const PowerProduct& m, const Element& g, const MonomialOrder& ord,
              bool track) {
    e.p = poly_sub_scaled(e.p, c, m, g.p, ord);
    if (!track) return;
    for (std::size_t j = 0; j < e.cof.size(); ++j)
        if (!g.cof[j].is_zero()) e.cof[j] = poly_sub_scaled(e.cof[j], c, m, g.cof[j], ord);
}

/// Full reduction of e by `basis` (skipping index `skip`).  Returns the
/// remainder in e.p; terms already found irreducible are kept in place.
void full_reduce(Element& e, const std::vector<Element>& basis, const MonomialOrder& ord, StepBudget& budget,
                 bool track, std::size_t skip = static_cast<std::size_t>(-1)) {
    std::vector<PolyTerm> rem;
    Element work = std::move(e);
    while (!work.p.is_zero()) {
        const PolyTerm& lt = work.p.lead();
        const Element* divisor = nullptr;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == skip || basis[k].p.is_zero()) continue;
            if (divides(basis[k].p.lead().mono, lt.mono)) {
                divisor = &basis[k];
                break;
            }
        }
        if (!divisor) {
            rem.push_back(lt);
            std::vector<PolyTerm> rest(work.p.terms().begin() + 1, work.p.terms().end());
            work.p = Poly(std::move(rest));
            continue;
        }
        budget.charge();
        Scalar c = lt.coeff / divisor->p.lead().coeff;
        PowerProduct m = pp_quotient(lt.mono, divisor->p.lead().mono);
        subtract(work, c, m, *divisor, ord, track);
    }
    work.p = Poly(std::move(rem));
    e = std::move(work);
}

Element s_polynomial(const Element& a, const Element& b, const MonomialOrder& ord, bool track) {
    PowerProduct l = pp_lcm(a.p.lead().mono, b.p.lead().mono);
    Element s;
    s.cof.assign(a.cof.size(), Poly());
    s.p = Poly();
    subtract(s, -(a.p.lead().coeff.inverse()), pp_quotient(l, a.p.lead().mono), a, ord, track);
    subtract(s, b.p.lead().coeff.inverse(), pp_quotient(l, b.p.lead().mono), b, ord, track);
    return s;
}

bool coprime(const PowerProduct& a, const PowerProduct& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Poly> generators, std::size_t nvars, const MonomialOrder& ord,
                         StepBudget& budget) {
    GroebnerBasis out;
    out.order = ord;
    out.nvars = nvars;
    for (auto& g : generators) g = poly_reorder(g, ord);
    out.generators = generators;
    const std::size_t ngens = generators.size();

    std::vector<Element> g;
    for (std::size_t j = 0; j < ngens; ++j) {
        if (generators[j].is_zero()) continue;
        Element e;
        e.p = generators[j];
        e.cof.assign(ngens, Poly());
        e.cof[j] = Poly::constant(nvars, Scalar(1));
        full_reduce(e, g, ord, budget, true);
        if (e.p.is_zero()) continue;
        scale(e, e.p.lead().coeff.inverse());
        g.push_back(std::move(e));
    }

    using Pair = std::pair<std::size_t, std::size_t>;
    auto pair_key = [&](const Pair& pr) {
        PowerProduct l = pp_lcm(g[pr.first].p.lead().mono, g[pr.second].p.lead().mono);
        std::uint64_t d = 0;
        for (auto x : l) d += x;
        return std::make_tuple(d, pr.second, pr.first);
    };
    std::set<Pair> pending;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

    while (!pending.empty()) {
        auto best = std::min_element(pending.begin(), pending.end(),
                                     [&](const Pair& a, const Pair& b) { return pair_key(a) < pair_key(b); });
        Pair pr = *best;
        pending.erase(best);
        const auto& li = g[pr.first].p.lead().mono;
        const auto& lj = g[pr.second].p.lead().mono;
        if (coprime(li, lj)) continue;
        PowerProduct l = pp_lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == pr.first || k == pr.second) continue;
            if (!divides(g[k].p.lead().mono, l)) continue;
            Pair a{std::min(k, pr.first), std::max(k, pr.first)};
            Pair b{std::min(k, pr.second), std::max(k, pr.second)};
            chain = !pending.count(a) && !pending.count(b);
        }
        if (chain) continue;
        Element s = s_polynomial(g[pr.first], g[pr.second], ord, true);
        full_reduce(s, g, ord, budget, true);
        if (s.p.is_zero()) continue;
        scale(s, s.p.lead().coeff.inverse());
        g.push_back(std::move(s));
        std::size_t n = g.size() - 1;
        for (std::size_t i = 0; i < n; ++i) pending.insert({i, n});
    }

    // minimalize
    std::vector<bool> redundant(g.size(), false);
    for (std::size_t k = 0; k < g.size(); ++k)
        for (std::size_t m = 0; m < g.size() && !redundant[k]; ++m) {
            if (m == k || redundant[m]) continue;
            const auto& a = g[m].p.lead().mono;
            const auto& b = g[k].p.lead().mono;
            if (divides(a, b) && (a != b || m < k)) redundant[k] = true;
        }
    std::vector<Element> minimal;
    for (std::size_t k = 0; k < g.size(); ++k)
        if (!redundant[k]) minimal.push_back(std::move(g[k]));
    // interreduce tails
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        // tail = element - lead; reducing it keeps tail + lead = sum cof * F
        Element tail = std::move(minimal[k]);
        PolyTerm lt = tail.p.lead();
        tail.p = Poly(std::vector<PolyTerm>(tail.p.terms().begin() + 1, tail.p.terms().end()));
        full_reduce(tail, minimal, ord, budget, true, k);
        std::vector<PolyTerm> terms{std::move(lt)};
        for (const auto& t : tail.p.terms()) terms.push_back(t);
        tail.p = Poly(std::move(terms));
        minimal[k] = std::move(tail);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Element& a, const Element& b) { return ord.compare(a.p.lead().mono, b.p.lead().mono) < 0; });
    for (auto& e : minimal) {
        out.basis.push_back(std::move(e.p));
        out.cofactors.push_back(std::move(e.cof));
    }
    return out;
}

Reduction reduce(const Poly& p, const GroebnerBasis& gb, StepBudget& budget, bool track_cofactors) {
    std::vector<Element> basis;
    basis.reserve(gb.basis.size());
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        Element e;
        e.p = gb.basis[k];
        if (track_cofactors) e.cof = gb.cofactors[k];
        basis.push_back(std::move(e));
    }
    Element e;
    e.p = poly_reorder(p, gb.order);
    if (track_cofactors) e.cof.assign(gb.generators.size(), Poly());
    full_reduce(e, basis, gb.order, budget, track_cofactors);
    Reduction r;
    r.remainder = std::move(e.p);
    if (track_cofactors) {
        // full_reduce accumulated -(sum q_k basis_k) in cofactor form
        for (auto& c : e.cof) c = -c;
        r.cofactors = std::move(e.cof);
    }
    return r;
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& gb, StepBudget& budget) {
    std::vector<Element> basis;
    for (const auto& b : gb.basis) basis.push_back(Element{b, {}});
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            Element s = s_polynomial(basis[i], basis[j], gb.order, false);
            full_reduce(s, basis, gb.order, budget, false);
            if (!s.p.is_zero()) return false;
        }
    return true;
}

bool cofactors_consistent(const GroebnerBasis& gb) {
    for (std::size_t k = 0; k < gb.basis.size(); ++k) {
        Poly acc;
        for (std::size_t j = 0; j < gb.generators.size(); ++j)
            if (!gb.cofactors[k][j].is_zero())
                acc = poly_add(acc, poly_mul(gb.cofactors[k][j], gb.generators[j], gb.order), gb.order);
        if (!(acc == gb.basis[k])) return false;
    }
    return true;
}

}  // namespace exprings

#include "exprings/tower.hpp"

#include "exprings/io.hpp"

#include <algorithm>
#include <map>

namespace exprings {

namespace {

bool zero_constant(const EPoly& p) { return p.constant_term().is_zero(); }

EPoly minus_one(const EPoly& p) { return p - EPoly::constant(p.nvars(), Scalar(1)); }

EPoly E_minus_one(const EPoly& u) { return minus_one(EPoly::group_element(u)); }

const TermKey& pivot_of(const EPoly& v) { return v.terms().rbegin()->first; }

}  // namespace

std::string DaggerVerdict::describe() const {
    if (!holds) return "fails with witness " + witness->to_string();
    if (layer == 0) return "holds (I ∩ R_-1 = 0)";
    return "holds on the computed generators";
}

DaggerVerdict dagger_check(const IdealHandle& ideal, std::size_t layer) {
    DaggerVerdict v;
    v.layer = layer;
    if (layer == 0) return v;
    IdealHandle lower = intersect_subring(ideal, layer - 1);
    for (const auto& g : lower.generators()) {
        if (g.is_zero()) continue;
        if (!zero_constant(g)) {
            v.skipped.push_back(g);
            continue;
        }
        v.tested.push_back(g);
        if (!membership(ideal, E_minus_one(g)).member) {
            v.holds = false;
            v.witness = g;
            return v;
        }
    }
    return v;
}

DaggerVerdict dagger_check(const IdealHandle& ideal) { return dagger_check(ideal, ideal.layer()); }

EPoly top_part(const EPoly& e, std::size_t n) {
    if (n == 0) return e - EPoly::constant(e.nvars(), e.constant_term());
    return layer_part(e, n);
}

bool TrackedDecomposition::add(const EPoly& f, std::string* reason) {
    auto reject = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (f.nvars() != nvars_) return reject("variable count mismatch");
    if (f.height() > level_) return reject("height exceeds level " + std::to_string(level_));
    if (!zero_constant(f)) return reject("nonzero constant term (E undefined on its lower part)");
    Row row{top_part(f, level_), f, EPoly(nvars_)};
    row.lower = f - row.projection;
    if (row.projection.is_zero()) return reject("projection onto the top summand is zero");
    for (const auto& r : rows_) {
        Scalar c = coefficient(row.projection, pivot_of(r.projection));
        if (c.is_zero()) continue;
        row.projection -= r.projection * c;
        row.element -= r.element * c;
        row.lower -= r.lower * c;
    }
    if (row.projection.is_zero()) return reject("projection depends on tracked elements");
    Scalar lead = row.projection.terms().rbegin()->second.inverse();
    row.projection *= lead;
    row.element *= lead;
    row.lower *= lead;
    seeds_.push_back(f);
    rows_.push_back(std::move(row));
    return true;
}

TrackedDecomposition::Split TrackedDecomposition::split(const EPoly& a) const {
    Split s{EPoly(nvars_), EPoly(nvars_), a};
    for (const auto& r : rows_) {
        Scalar c = coefficient(s.complement, pivot_of(r.projection));
        if (c.is_zero()) continue;
        s.complement -= r.projection * c;
        s.tracked += r.element * c;
        s.lower += r.lower * c;
    }
    return s;
}

SplitReport split_tilde(const IdealHandle& ideal, std::size_t layer, const std::vector<EPoly>& seeds) {
    SplitReport rep{TrackedDecomposition(ideal.nvars(), layer), {}};
    for (const auto& s : seeds) {
        if (!membership(ideal, s).member) {
            rep.rejected.emplace_back(s, "not a member of the ideal");
            continue;
        }
        std::string why;
        if (!rep.decomposition.add(s, &why)) rep.rejected.emplace_back(s, why);
    }
    return rep;
}

std::vector<RewriteTerm> rewrite(const EPoly& u, const TrackedDecomposition& d) {
    const std::size_t n = d.level();
    if (u.height() > n + 1)
        throw DomainError("rewrite: element of height " + std::to_string(u.height()) + " is not in R_" +
                          std::to_string(n + 1));
    std::map<EPoly, EPoly, EPolyLess> grouped;
    for (const auto& [k, c] : u.terms()) {
        if (!k.exp) {
            auto [it, _] = grouped.try_emplace(EPoly(u.nvars()), EPoly(u.nvars()));
            it->second.add_term(k, c);
            continue;
        }
        EPoly top = top_part(*k.exp, n);
        EPoly low = *k.exp - top;
        auto s = d.split(top);
        EPoly shift = low - s.lower;
        EPoly coeff = EPoly::term(u.nvars(), c, k.mono,
                                  shift.is_zero() ? nullptr : std::make_shared<const EPoly>(std::move(shift)));
        EPoly arg = s.tracked + s.complement;
        auto [it, _] = grouped.try_emplace(std::move(arg), EPoly(u.nvars()));
        it->second += coeff;
    }
    std::vector<RewriteTerm> out;
    for (auto& [arg, coeff] : grouped)
        if (!coeff.is_zero()) out.push_back({coeff, arg});
    return out;
}

EPoly reexpand(const std::vector<RewriteTerm>& terms, std::size_t nvars) {
    EPoly acc(nvars);
    for (const auto& t : terms) acc += t.coefficient * EPoly::group_element(t.argument);
    return acc;
}

EPoly rewrite_phi(const EPoly& u, const TrackedDecomposition& d) {
    EPoly acc(u.nvars());
    for (const auto& t : rewrite(u, d)) acc += t.coefficient;
    return acc;
}

DaggerFailure::DaggerFailure(std::size_t level, EPoly witness)
    : DomainError("(†) fails at level " + std::to_string(level) + " with witness " + witness.to_string()),
      level_(level),
      witness_(std::move(witness)) {}

TowerIdeal::TowerIdeal(IdealHandle base, std::size_t base_level, std::vector<EPoly> seeds)
    : base_(std::move(base)), base_level_(base_level), pending_seeds_(std::move(seeds)) {
    if (base_.layer() > base_level_)
        throw DomainError("base ideal has generators of height " + std::to_string(base_.layer()) +
                          " above the base level");
    if (pending_seeds_.empty())
        for (const auto& g : base_.generators())
            if (!g.is_zero() && zero_constant(g)) pending_seeds_.push_back(g);
}

TowerIdeal::TowerIdeal(const TowerIdeal& o) : base_(o.base_), base_level_(o.base_level_) {
    std::lock_guard lock(o.mutex_);
    pending_seeds_ = o.pending_seeds_;
    levels_ = o.levels_;
    auto_refresh_ = o.auto_refresh_;
}

TowerIdeal& TowerIdeal::operator=(const TowerIdeal& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mutex_, o.mutex_);
    base_ = o.base_;
    base_level_ = o.base_level_;
    pending_seeds_ = o.pending_seeds_;
    levels_ = o.levels_;
    auto_refresh_ = o.auto_refresh_;
    return *this;
}

TrackedDecomposition TowerIdeal::decomposition(std::size_t level) const {
    std::lock_guard lock(mutex_);
    if (level < base_level_ || level >= top_level()) throw DomainError("no decomposition at level " + std::to_string(level));
    return levels_[level - base_level_].decomposition;
}

std::vector<EPoly> TowerIdeal::recorded_generators() const {
    std::lock_guard lock(mutex_);
    std::vector<EPoly> out;
    for (const auto& l : levels_) out.insert(out.end(), l.recorded.begin(), l.recorded.end());
    return out;
}

void TowerIdeal::track(std::size_t level, const EPoly& f) const {
    auto& l = levels_[level - base_level_];
    if (l.decomposition.add(f)) l.recorded.push_back(E_minus_one(f));
}

std::optional<EPoly> TowerIdeal::refresh_candidate(const EPoly& a, std::size_t level) const {
    if (level > base_level_) {
        EPoly f = a - phi_unlocked(a, level - 1);
        if (!zero_constant(f)) return std::nullopt;
        return f;
    }
    std::vector<EPoly> all = base_.generators();
    all.push_back(a);
    LaurentPresentation pres = present(all);
    std::vector<bool> mask;
    if (level == 0) {
        mask.assign(pres.ring_vars(), false);
        for (std::size_t j = 0; j < nvars(); ++j) mask[j] = true;
    } else {
        mask = pres.elimination_mask_above(level - 1);
    }
    auto pb = base_.basis_in(pres, MonomialOrder::elimination(mask));
    StepBudget budget(base_.budget());
    Reduction red = reduce(pres.encode(a, pb->gb.order), pb->gb, budget, false);
    for (const auto& t : red.remainder.terms())
        for (std::size_t v = 0; v < mask.size(); ++v)
            if (mask[v] && t.mono[v] != 0) return std::nullopt;
    EPoly f = a - pres.decode(red.remainder);
    if (!zero_constant(f)) return std::nullopt;
    return f;
}

EPoly TowerIdeal::phi_unlocked(const EPoly& u, std::size_t level) const {
    if (level < base_level_ || level >= top_level())
        throw DomainError("tower has no level " + std::to_string(level + 1));
    auto& l = levels_[level - base_level_];
    if (auto_refresh_) {
        for (const auto& e : exponents_of(u)) {
            EPoly top = top_part(e, level);
            if (top.is_zero()) continue;
            auto s = l.decomposition.split(top);
            if (s.complement.is_zero()) continue;
            if (auto f = refresh_candidate(s.complement, level)) track(level, *f);
        }
    }
    return rewrite_phi(u, l.decomposition);
}

EPoly TowerIdeal::phi(const EPoly& u, std::size_t level) const {
    std::lock_guard lock(mutex_);
    return phi_unlocked(u, level);
}

bool TowerIdeal::member_unlocked(const EPoly& u, std::size_t level) const {
    if (u.nvars() != nvars()) throw DomainError("variable count mismatch between tower and query");
    if (level < base_level_ || level > top_level())
        throw DomainError("tower has no level " + std::to_string(level));
    if (u.height() > level)
        throw DomainError("element of height " + std::to_string(u.height()) + " is not in R_" + std::to_string(level));
    if (u.is_zero()) return true;
    if (level == base_level_) return membership(base_, u).member;
    return member_unlocked(phi_unlocked(u, level - 1), level - 1);
}

bool TowerIdeal::member(const EPoly& u, std::size_t level) const {
    std::lock_guard lock(mutex_);
    return member_unlocked(u, level);
}

std::vector<EPoly> TowerIdeal::generators_below(std::size_t level) const {
    std::vector<EPoly> out = base_.generators();
    for (std::size_t i = base_level_; i < level; ++i) {
        const auto& l = levels_[i - base_level_];
        out.insert(out.end(), l.decomposition.seeds().begin(), l.decomposition.seeds().end());
        out.insert(out.end(), l.recorded.begin(), l.recorded.end());
    }
    return out;
}

DaggerVerdict TowerIdeal::dagger_at_top() const {
    std::lock_guard lock(mutex_);
    std::size_t top = top_level();
    if (top == base_level_) return dagger_check(base_, base_level_);
    DaggerVerdict v;
    v.layer = top;
    for (const auto& g : generators_below(top - 1)) {
        if (g.is_zero()) continue;
        if (!zero_constant(g)) {
            v.skipped.push_back(g);
            continue;
        }
        v.tested.push_back(g);
        if (!member_unlocked(E_minus_one(g), top)) {
            v.holds = false;
            v.witness = g;
            break;
        }
    }
    return v;
}

std::vector<std::pair<EPoly, std::string>> TowerIdeal::add_seeds(std::size_t level, const std::vector<EPoly>& seeds) {
    std::lock_guard lock(mutex_);
    if (level < base_level_ || level >= top_level()) throw DomainError("no decomposition at level " + std::to_string(level));
    std::vector<std::pair<EPoly, std::string>> rejected;
    auto& l = levels_[level - base_level_];
    for (const auto& s : seeds) {
        if (s.height() > level || !member_unlocked(s, level)) {
            rejected.emplace_back(s, "not a member of I_" + std::to_string(level));
            continue;
        }
        std::string why;
        if (l.decomposition.add(s, &why))
            l.recorded.push_back(E_minus_one(s));
        else
            rejected.emplace_back(s, why);
    }
    return rejected;
}

TowerIdeal extend_one_step(const TowerIdeal& t, const std::vector<EPoly>& seeds) {
    TowerIdeal out(t);
    DaggerVerdict v = out.dagger_at_top();
    if (!v.holds) throw DaggerFailure(out.top_level(), *v.witness);
    std::lock_guard lock(out.mutex_);
    std::size_t level = out.top_level();
    std::vector<EPoly> candidates = seeds;
    candidates.insert(candidates.end(), out.pending_seeds_.begin(), out.pending_seeds_.end());
    out.pending_seeds_.clear();
    if (!out.levels_.empty())
        for (const auto& f : out.levels_.back().decomposition.seeds()) candidates.push_back(f * EPoly::group_element(f));
    out.levels_.push_back({TrackedDecomposition(out.nvars(), level), {}});
    for (const auto& c : candidates) {
        if (c.height() > level || !out.member_unlocked(c, level)) continue;
        out.track(level, c);
    }
    return out;
}

TowerIdeal extend_to_E_ideal(const TowerIdeal& t, std::size_t levels) {
    TowerIdeal out(t);
    for (std::size_t k = 0; k < levels; ++k) out = extend_one_step(out);
    return out;
}

DaggerDaggerReport check_dagger_dagger(const TowerIdeal& t, std::size_t level, const std::vector<EPoly>& samples) {
    DaggerDaggerReport rep;
    rep.level = level;
    for (const auto& s : samples) {
        ++rep.samples;
        if (t.member(s, level) != t.member(s, level + 1)) rep.disagreements.push_back(s);
    }
    return rep;
}

nlohmann::json TowerIdeal::to_json() const {
    std::lock_guard lock(mutex_);
    nlohmann::json j;
    j["schema"] = "tower/1";
    j["nvars"] = nvars();
    j["base_level"] = base_level_;
    j["top_level"] = top_level();
    j["auto_refresh"] = auto_refresh_;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : base_.generators()) j["generators"].push_back(exprings::to_json(g));
    j["pending_seeds"] = nlohmann::json::array();
    for (const auto& s : pending_seeds_) j["pending_seeds"].push_back(exprings::to_json(s));
    j["levels"] = nlohmann::json::array();
    for (const auto& l : levels_) {
        nlohmann::json lj;
        lj["level"] = l.decomposition.level();
        lj["tracked"] = nlohmann::json::array();
        for (const auto& s : l.decomposition.seeds()) lj["tracked"].push_back(exprings::to_json(s));
        lj["recorded"] = nlohmann::json::array();
        for (const auto& r : l.recorded) lj["recorded"].push_back(exprings::to_json(r));
        j["levels"].push_back(std::move(lj));
    }
    return j;
}

TowerIdeal TowerIdeal::from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("schema", "") != "tower/1") throw ParseError("not a tower/1 document", 1, 1);
    try {
        std::size_t n = j.at("nvars").get<std::size_t>();
        std::vector<EPoly> gens;
        for (const auto& g : j.at("generators")) gens.push_back(epoly_from_json(g));
        std::vector<EPoly> pending;
        for (const auto& s : j.at("pending_seeds")) pending.push_back(epoly_from_json(s));
        TowerIdeal t(IdealHandle(n, std::move(gens)), j.at("base_level").get<std::size_t>());
        t.pending_seeds_ = std::move(pending);
        t.auto_refresh_ = j.value("auto_refresh", true);
        for (const auto& lj : j.at("levels")) {
            Level l{TrackedDecomposition(n, lj.at("level").get<std::size_t>()), {}};
            if (l.decomposition.level() != t.top_level()) throw ParseError("tower/1 levels out of order", 1, 1);
            for (const auto& s : lj.at("tracked")) l.decomposition.add(epoly_from_json(s));
            for (const auto& r : lj.at("recorded")) l.recorded.push_back(epoly_from_json(r));
            t.levels_.push_back(std::move(l));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed tower/1 document: ") + e.what(), 1, 1);
    }
}

namespace {

/// u = sum lambda_j b_j with u ∈ I0 for exponent-lattice vectors b_j of R_0.
std::vector<EPoly> lattice_kernel(const std::vector<EPoly>& lattice, const IdealHandle& i0) {
    std::vector<EPoly> out;
    if (lattice.empty()) return out;
    auto pb = groebner(i0);
    StepBudget budget(i0.budget());
    struct Vec {
        Poly nf;
        std::vector<Scalar> combo;
    };
    std::vector<Vec> rows;
    const auto& ord = pb->gb.order;
    for (std::size_t j = 0; j < lattice.size(); ++j) {
        Vec v;
        v.nf = reduce(pb->presentation.encode(lattice[j], ord), pb->gb, budget, false).remainder;
        v.combo.assign(lattice.size(), Scalar(0));
        v.combo[j] = Scalar(1);
        for (const auto& r : rows) {
            if (v.nf.is_zero()) break;
            // eliminate r's leading monomial from v
            Scalar c;
            for (const auto& t : v.nf.terms())
                if (t.mono == r.nf.lead().mono) c = t.coeff;
            if (c.is_zero()) continue;
            v.nf = poly_sub_scaled(v.nf, c, PowerProduct(r.nf.lead().mono.size(), 0), r.nf, ord);
            for (std::size_t k = 0; k < v.combo.size(); ++k) v.combo[k] -= c * r.combo[k];
        }
        if (v.nf.is_zero()) {
            EPoly u(i0.nvars());
            for (std::size_t k = 0; k < lattice.size(); ++k)
                if (!v.combo[k].is_zero()) u += lattice[k] * v.combo[k];
            if (!u.is_zero()) out.push_back(std::move(u));
            continue;
        }
        Scalar inv = v.nf.lead().coeff.inverse();
        v.nf *= inv;
        for (auto& c : v.combo) c *= inv;
        rows.push_back(std::move(v));
    }
    return out;
}

}  // namespace

SaturationOutcome saturate_R1(const IdealHandle& ideal, std::size_t max_iterations) {
    if (ideal.layer() > 1) throw DomainError("saturate_R1 expects an ideal of R_1");
    SaturationOutcome out;
    std::vector<EPoly> working = ideal.generators();
    const std::size_t n = ideal.nvars();
    for (std::size_t it = 0;; ++it) {
        if (it >= max_iterations) throw BudgetExceeded(max_iterations);
        out.iterations = it + 1;
        IdealHandle w(n, working, ideal.budget());
        auto unit = membership(w, EPoly::constant(n, Scalar(1)));
        if (unit.member) {
            out.success = false;
            out.ideal = w;
            out.certificate = unit.cofactors;
            out.certificate_verified = unit.verified;
            return out;
        }
        IdealHandle i0 = intersect_subring(w, 0);
        std::vector<EPoly> sources;
        for (const auto& g : i0.generators())
            if (!g.is_zero() && zero_constant(g)) sources.push_back(g);
        std::vector<EPoly> all = working;
        all.emplace_back(n);
        LaurentPresentation pres = present(all);
        std::vector<EPoly> lattice;
        for (std::size_t i = 0; i < pres.rank(); ++i)
            if (pres.group_layer(i) == 1) lattice.push_back(pres.basis()[i]);
        for (auto& u : lattice_kernel(lattice, i0)) sources.push_back(std::move(u));

        bool grew = false;
        for (const auto& u : sources) {
            EPoly cand = E_minus_one(u);
            if (membership(IdealHandle(n, working, ideal.budget()), cand).member) continue;
            working.push_back(cand);
            out.steps.push_back({cand, u});
            grew = true;
        }
        if (!grew) {
            out.success = true;
            out.ideal = w;
            out.dagger = dagger_check(w, 1);
            return out;
        }
    }
}

RealKernelReport real_kernel_check(const IdealHandle& ideal, const std::vector<std::vector<EPoly>>& witnesses,
                                   std::size_t layer) {
    RealKernelReport rep;
    rep.layer = layer;
    for (std::size_t k = 0; k < witnesses.size(); ++k) {
        ++rep.tuples;
        const auto& tuple = witnesses[k];
        if (tuple.empty()) continue;
        EPoly s(tuple.front().nvars());
        for (const auto& u : tuple) s += u * u;
        if (!augmentation_mod(s, ideal, layer).in_kernel) continue;
        ++rep.premises_met;
        for (const auto& u : tuple)
            if (!augmentation_mod(u, ideal, layer).in_kernel) rep.falsifications.emplace_back(k, u);
    }
    return rep;
}

}  // namespace exprings

#include "exprings/ideal.hpp"

#include "exprings/errors.hpp"

#include <algorithm>

namespace exprings {

std::vector<EPoly> PresentedBasis::decoded_basis() const {
    std::vector<EPoly> out;
    for (const auto& b : gb.basis) {
        EPoly e = presentation.decode(b);
        if (!e.is_zero()) out.push_back(std::move(e));
    }
    return out;
}

IdealHandle::IdealHandle(std::size_t nvars, std::vector<EPoly> generators, std::size_t budget)
    : nvars_(nvars), generators_(std::move(generators)), budget_(budget) {
    for (const auto& g : generators_)
        if (g.nvars() != nvars_) throw DomainError("generator variable count mismatch");
}

namespace {

std::size_t arity_of(const std::vector<EPoly>& gens) { return gens.empty() ? 0 : gens.front().nvars(); }

}  // namespace

IdealHandle::IdealHandle(std::vector<EPoly> generators, std::size_t budget)
    : nvars_(arity_of(generators)), generators_(std::move(generators)), budget_(budget) {
    for (const auto& g : generators_)
        if (g.nvars() != nvars_) throw DomainError("generator variable count mismatch");
}

IdealHandle::IdealHandle(const IdealHandle& o) : nvars_(o.nvars_), generators_(o.generators_), budget_(o.budget_) {
    std::lock_guard lock(o.mutex_);
    cache_ = o.cache_;
}

IdealHandle& IdealHandle::operator=(const IdealHandle& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mutex_, o.mutex_);
    nvars_ = o.nvars_;
    generators_ = o.generators_;
    budget_ = o.budget_;
    cache_ = o.cache_;
    return *this;
}

std::size_t IdealHandle::layer() const {
    std::size_t l = 0;
    for (const auto& g : generators_) l = std::max(l, g.height());
    return l;
}

std::shared_ptr<const PresentedBasis> IdealHandle::basis(const std::vector<EPoly>& extra,
                                                         const MonomialOrder& order) const {
    std::vector<EPoly> all = generators_;
    all.insert(all.end(), extra.begin(), extra.end());
    all.emplace_back(nvars_);
    return basis_in(present(all), order);
}

std::shared_ptr<const PresentedBasis> IdealHandle::basis_in(const LaurentPresentation& pres,
                                                            const MonomialOrder& order) const {
    std::string key = pres.key() + "#" + order.describe();
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    auto result = std::make_shared<PresentedBasis>();
    result->presentation = pres;
    std::vector<Poly> gens;
    for (const auto& g : generators_) gens.push_back(pres.encode(g, order));
    result->ideal_generators = gens.size();
    for (auto& r : pres.relations(order)) gens.push_back(std::move(r));
    StepBudget budget(budget_);
    result->gb = buchberger(std::move(gens), pres.ring_vars(), order, budget);
    cache_.emplace(key, result);
    return result;
}

std::shared_ptr<const PresentedBasis> groebner(const IdealHandle& ideal, const MonomialOrder& order) {
    return ideal.basis({}, order);
}

EPoly combine(const std::vector<EPoly>& cofactors, const std::vector<EPoly>& generators) {
    if (generators.empty()) return EPoly(cofactors.empty() ? 0 : cofactors.front().nvars());
    EPoly acc(generators.front().nvars());
    for (std::size_t i = 0; i < cofactors.size() && i < generators.size(); ++i)
        if (!cofactors[i].is_zero()) acc += cofactors[i] * generators[i];
    return acc;
}

MembershipResult membership(const IdealHandle& ideal, const EPoly& p) {
    if (p.nvars() != ideal.nvars()) throw DomainError("variable count mismatch between ideal and query");
    auto pb = ideal.basis({p}, MonomialOrder::grevlex());
    StepBudget budget(ideal.budget());
    Reduction red = reduce(pb->presentation.encode(p, pb->gb.order), pb->gb, budget, true);
    MembershipResult r;
    r.slice = pb->presentation.describe();
    r.member = red.remainder.is_zero();
    if (!r.member) return r;
    for (std::size_t i = 0; i < pb->ideal_generators; ++i) r.cofactors.push_back(pb->presentation.decode(red.cofactors[i]));
    r.verified = combine(r.cofactors, ideal.generators()) == p;
    return r;
}

IdealHandle intersect_subring(const IdealHandle& ideal, std::size_t r) {
    std::vector<EPoly> all = ideal.generators();
    all.emplace_back(ideal.nvars());
    LaurentPresentation pres = present(all);
    auto mask = pres.elimination_mask_above(r);
    bool eliminating = std::any_of(mask.begin(), mask.end(), [](bool b) { return b; });
    if (!eliminating) {
        std::vector<EPoly> kept;
        for (const auto& g : ideal.generators())
            if (!g.is_zero()) kept.push_back(g);
        return IdealHandle(ideal.nvars(), std::move(kept), ideal.budget());
    }
    auto pb = ideal.basis_in(pres, MonomialOrder::elimination(mask));
    std::vector<EPoly> kept;
    for (const auto& b : pb->gb.basis) {
        bool free = std::all_of(b.terms().begin(), b.terms().end(), [&](const PolyTerm& t) {
            for (std::size_t v = 0; v < mask.size(); ++v)
                if (mask[v] && t.mono[v] != 0) return false;
            return true;
        });
        if (!free) continue;
        EPoly e = pres.decode(b);
        if (!e.is_zero()) kept.push_back(std::move(e));
    }
    return IdealHandle(ideal.nvars(), std::move(kept), ideal.budget());
}

EPoly augmentation(const EPoly& u, std::size_t layer) {
    if (u.height() > layer)
        throw DomainError("augmentation: element of height " + std::to_string(u.height()) + " is not in R_" +
                          std::to_string(layer));
    if (layer == 0) return u;
    EPoly out(u.nvars());
    for (const auto& [k, c] : u.terms()) {
        if (key_layer(k) != layer) {
            out.add_term(k, c);
            continue;
        }
        EPoly rest = *k.exp - layer_part(*k.exp, layer - 1);
        out.add_term(TermKey{k.mono, rest.is_zero() ? nullptr : std::make_shared<const EPoly>(std::move(rest))}, c);
    }
    return out;
}

AugmentationVerdict augmentation_mod(const EPoly& u, const IdealHandle& ideal, std::size_t layer) {
    AugmentationVerdict v;
    v.image = augmentation(u, layer);
    v.in_kernel = membership(ideal, v.image).member;
    return v;
}

}  // namespace exprings

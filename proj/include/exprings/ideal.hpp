#pragma once

#include "exprings/epoly.hpp"
#include "exprings/groebner.hpp"
#include "exprings/laurent.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace exprings {

/// Gröbner basis of an ideal in the Laurent encoding of some lattice slice.
struct PresentedBasis {
    LaurentPresentation presentation;
    GroebnerBasis gb;
    /// Number of leading generators that are the ideal's own generators (the
    /// rest are u_i v_i - 1 relations).
    std::size_t ideal_generators = 0;

    /// The basis elements mapped back to R_l (relations vanish there).
    std::vector<EPoly> decoded_basis() const;
};

/// Ideal of R_l given by finitely many generators, with cached Gröbner
/// bases keyed by lattice slice and monomial order.  Cache fills are
/// serialized; completed bases are shared read-only.
class IdealHandle {
public:
    IdealHandle(std::size_t nvars, std::vector<EPoly> generators, std::size_t budget = StepBudget::kDefault);
    explicit IdealHandle(std::vector<EPoly> generators, std::size_t budget = StepBudget::kDefault);

    IdealHandle(const IdealHandle& o);
    IdealHandle& operator=(const IdealHandle& o);

    std::size_t nvars() const { return nvars_; }
    const std::vector<EPoly>& generators() const& { return generators_; }
    std::vector<EPoly> generators() && { return std::move(generators_); }
    /// Smallest l with every generator in R_l.
    std::size_t layer() const;
    std::size_t budget() const { return budget_; }

    /// Basis over the minimal lattice covering the generators and `extra`.
    std::shared_ptr<const PresentedBasis> basis(const std::vector<EPoly>& extra, const MonomialOrder& order) const;

    std::shared_ptr<const PresentedBasis> basis_in(const LaurentPresentation& pres, const MonomialOrder& order) const;

private:
    std::size_t nvars_;
    std::vector<EPoly> generators_;
    std::size_t budget_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, std::shared_ptr<const PresentedBasis>> cache_;
};

/// Reduced Gröbner basis of the presented generators plus all u_i v_i - 1.
std::shared_ptr<const PresentedBasis> groebner(const IdealHandle& ideal, const MonomialOrder& order = {});

struct MembershipResult {
    bool member = false;
    /// p = sum cofactors[i] * generators[i] when member.
    std::vector<EPoly> cofactors;
    /// Cofactor identity re-expanded in R_l.
    bool verified = false;
    std::string slice;
};

MembershipResult membership(const IdealHandle& ideal, const EPoly& p);

/// Generators of I ∩ R_r obtained by block elimination of every u_i, v_i of
/// group layer > r.
IdealHandle intersect_subring(const IdealHandle& ideal, std::size_t r);

/// Augmentation map of R_l = R_{l-1}[t^{A_{l-1}}] onto R_{l-1}: every
/// top-layer group element collapses to 1.  Identity for l = 0.
EPoly augmentation(const EPoly& u, std::size_t layer);

struct AugmentationVerdict {
    EPoly image;
    bool in_kernel = false;
};

/// (phi^a(u), phi^a(u) ∈ I), i.e. membership of u in the kernel of phi^a_I.
AugmentationVerdict augmentation_mod(const EPoly& u, const IdealHandle& ideal, std::size_t layer);

/// sum_i c_i g_i
EPoly combine(const std::vector<EPoly>& cofactors, const std::vector<EPoly>& generators);

}  // namespace exprings

#pragma once

#include "exprings/epoly.hpp"
#include "exprings/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace exprings {

/// Finite slice of R_l encoded as a Laurent polynomial ring.
///
/// The exponents of the presented values span a free abelian group with
/// basis b_1..b_m (Hermite normal form over the exponent coordinates, with
/// higher-layer coordinates leading, so every basis vector has a single
/// layer and lower-layer sublattices are spanned by a tail of the basis).
/// t^{sum k_i b_i} is encoded in Q(i)[X_1..X_n, u_1..u_m, v_1..v_m(, Y)] as
/// prod u_i^{k_i} (k_i > 0) or v_i^{-k_i} (k_i < 0), with u_i v_i - 1 added
/// as relations.
class LaurentPresentation {
public:
    LaurentPresentation() = default;

    std::size_t nvars() const { return nvars_; }
    std::size_t rank() const { return basis_.size(); }
    bool has_y() const { return with_y_; }
    const std::vector<EPoly>& basis() const { return basis_; }
    /// Layer of the group elements t^{b_i}: 1 + height(b_i).
    std::size_t group_layer(std::size_t i) const { return group_layers_[i]; }

    std::size_t ring_vars() const { return nvars_ + 2 * basis_.size() + (with_y_ ? 1 : 0); }
    std::size_t u_index(std::size_t i) const { return nvars_ + i; }
    std::size_t v_index(std::size_t i) const { return nvars_ + basis_.size() + i; }
    std::size_t y_index() const { return nvars_ + 2 * basis_.size(); }

    /// Integer coordinates of an exponent in the lattice basis, nullopt when
    /// it lies outside the lattice.
    std::optional<std::vector<Integer>> coordinates(const EPoly& exponent) const;
    bool covers(const EPoly& p) const;

    /// u_i v_i - 1 for every basis vector.
    std::vector<Poly> relations(const MonomialOrder& ord) const;

    /// Throws DomainError when an exponent of p is outside the lattice.
    Poly encode(const EPoly& p, const MonomialOrder& ord, std::uint32_t y_degree = 0) const;
    /// Inverse of encode on the X,u,v part.  Monomials carrying Y are rejected
    /// unless `y_degree_filter` selects them.
    EPoly decode(const Poly& p, std::optional<std::uint32_t> y_degree_filter = std::nullopt) const;
    std::uint32_t max_y_degree(const Poly& p) const;

    /// Variables to eliminate so that only R_r survives: u_i, v_i with group
    /// layer > r.
    std::vector<bool> elimination_mask_above(std::size_t r) const;

    /// Stable textual key for caching.
    std::string key() const;
    std::string describe() const;

    friend LaurentPresentation present(const std::vector<EPoly>& ps, bool with_y);

private:
    struct Column {
        TermKey key;
        bool imaginary;
    };

    std::size_t nvars_ = 0;
    bool with_y_ = false;
    std::vector<EPoly> basis_;
    std::vector<std::size_t> group_layers_;
    std::vector<Column> columns_;
    std::vector<std::vector<Rational>> rows_;  // basis in column coordinates
    std::vector<std::size_t> pivots_;
};

/// Minimal layer-adapted lattice covering every exponent occurring in ps.
LaurentPresentation present(const std::vector<EPoly>& ps, bool with_y = false);

}  // namespace exprings

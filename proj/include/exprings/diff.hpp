#pragma once

#include "exprings/epoly.hpp"

#include <vector>

namespace exprings {

/// An E-derivation on R[X]^E, fixed by its values on the variables.  Every
/// derivation of a characteristic-0 field vanishes on Q and Q(i), so the
/// base action is identically zero.
struct DerivationSpec {
    std::vector<EPoly> variable_action;  // D(X_j), j = 1..n
};

/// d/dX_j, 1-based.  d(t^a) = (da/dX_j) * t^a.
EPoly partial_derivative(const EPoly& p, std::size_t j);

/// D(p), computed by structural recursion (Leibniz on X^m * t^a and
/// D(t^a) = t^a * D(a)).
EPoly apply_derivation(const DerivationSpec& spec, const EPoly& p);

/// sum_j D(X_j) * dp/dX_j.
EPoly derivation_via_partials(const DerivationSpec& spec, const EPoly& p);

/// p^delta := D(p) - sum_j D(X_j) dp/dX_j.
EPoly derivation_defect(const DerivationSpec& spec, const EPoly& p);

/// Matrix of partial derivatives d f_i / d X_j.
std::vector<std::vector<EPoly>> jacobian_matrix(const std::vector<EPoly>& f);

/// Determinant of jacobian_matrix, by Laplace expansion along the first row.
EPoly jacobian(const std::vector<EPoly>& f);

EPoly determinant(const std::vector<std::vector<EPoly>>& m);

}  // namespace exprings

#include "exprings/diff.hpp"

#include "exprings/errors.hpp"

namespace exprings {

namespace {

EPoly single_term(std::size_t n, const TermKey& k, const Scalar& c) {
    EPoly p(n);
    p.add_term(k, c);
    return p;
}

}  // namespace

EPoly partial_derivative(const EPoly& p, std::size_t j) {
    const std::size_t n = p.nvars();
    if (j < 1 || j > n) throw DomainError("partial derivative index X" + std::to_string(j) + " out of range");
    EPoly out(n);
    for (const auto& [k, c] : p.terms()) {
        if (k.mono[j - 1] > 0) {
            TermKey dk = k;
            dk.mono[j - 1] -= 1;
            out.add_term(dk, c * Scalar(static_cast<long>(k.mono[j - 1])));
        }
        if (k.exp) {
            EPoly da = partial_derivative(*k.exp, j);
            if (!da.is_zero()) out += da * single_term(n, k, c);
        }
    }
    return out;
}

EPoly apply_derivation(const DerivationSpec& spec, const EPoly& p) {
    const std::size_t n = p.nvars();
    if (spec.variable_action.size() != n) throw DomainError("derivation spec arity does not match");
    EPoly out(n);
    for (const auto& [k, c] : p.terms()) {
        // D(X^m) = sum_j m_j X^{m - e_j} D(X_j)
        for (std::size_t j = 0; j < n; ++j) {
            if (k.mono[j] == 0) continue;
            TermKey dk = k;
            dk.mono[j] -= 1;
            out += single_term(n, dk, c * Scalar(static_cast<long>(k.mono[j]))) * spec.variable_action[j];
        }
        if (k.exp) {
            EPoly da = apply_derivation(spec, *k.exp);
            if (!da.is_zero()) out += da * single_term(n, k, c);
        }
    }
    return out;
}

EPoly derivation_via_partials(const DerivationSpec& spec, const EPoly& p) {
    const std::size_t n = p.nvars();
    if (spec.variable_action.size() != n) throw DomainError("derivation spec arity does not match");
    EPoly out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (spec.variable_action[j].is_zero()) continue;
        out += spec.variable_action[j] * partial_derivative(p, j + 1);
    }
    return out;
}

EPoly derivation_defect(const DerivationSpec& spec, const EPoly& p) {
    return apply_derivation(spec, p) - derivation_via_partials(spec, p);
}

std::vector<std::vector<EPoly>> jacobian_matrix(const std::vector<EPoly>& f) {
    if (f.empty()) throw DomainError("jacobian of an empty system");
    const std::size_t n = f.front().nvars();
    if (f.size() != n)
        throw DomainError("jacobian needs a square system: " + std::to_string(f.size()) + " functions in " +
                          std::to_string(n) + " variables");
    std::vector<std::vector<EPoly>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i].nvars() != n) throw DomainError("variable count mismatch in system");
        for (std::size_t j = 0; j < n; ++j) m[i].push_back(partial_derivative(f[i], j + 1));
    }
    return m;
}

EPoly determinant(const std::vector<std::vector<EPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw DomainError("determinant of an empty matrix");
    const std::size_t nv = m[0][0].nvars();
    if (n == 1) return m[0][0];
    EPoly det(nv);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<EPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<EPoly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        EPoly term = m[0][col] * determinant(minor);
        if (col % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

EPoly jacobian(const std::vector<EPoly>& f) { return determinant(jacobian_matrix(f)); }

}  // namespace exprings

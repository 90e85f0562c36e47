#include "exprings/laurent.hpp"

#include "exprings/errors.hpp"

#include <algorithm>
#include <map>

namespace exprings {

namespace {

struct ColumnLess {
    bool operator()(const std::pair<TermKey, bool>& a, const std::pair<TermKey, bool>& b) const {
        auto la = key_layer(a.first);
        auto lb = key_layer(b.first);
        if (la != lb) return la > lb;  // higher layers lead
        KeyLess less;
        if (less(a.first, b.first)) return false;
        if (less(b.first, a.first)) return true;
        return !a.second && b.second;
    }
};

using ColumnIndex = std::map<std::pair<TermKey, bool>, std::size_t, ColumnLess>;

std::vector<Rational> to_row(const EPoly& e, const ColumnIndex& index, bool& inside) {
    std::vector<Rational> row(index.size(), Rational(0));
    inside = true;
    for (const auto& [k, c] : e.terms()) {
        for (bool imag : {false, true}) {
            const Rational& part = imag ? c.im() : c.re();
            if (sgn(part) == 0) continue;
            auto it = index.find({k, imag});
            if (it == index.end()) {
                inside = false;
                continue;
            }
            row[it->second] = part;
        }
    }
    return row;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Row-style Hermite normal form; returns nonzero rows and their pivots.
void hermite(std::vector<std::vector<Integer>>& rows, std::vector<std::size_t>& pivots, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (sgn(rows[i][col]) != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (sgn(rows[i][col]) == 0) continue;
                Integer q = floor_div(rows[i][col], rows[r][col]);
                for (std::size_t c = col; c < ncols; ++c) rows[i][c] -= q * rows[r][c];
                if (sgn(rows[i][col]) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r >= rows.size() || sgn(rows[r][col]) == 0) continue;
        if (sgn(rows[r][col]) < 0)
            for (auto& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(rows[i][col], rows[r][col]);
            if (sgn(q) != 0)
                for (std::size_t c = col; c < ncols; ++c) rows[i][c] -= q * rows[r][c];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
}

}  // namespace

LaurentPresentation present(const std::vector<EPoly>& ps, bool with_y) {
    LaurentPresentation pres;
    pres.with_y_ = with_y;
    pres.nvars_ = ps.empty() ? 0 : ps.front().nvars();
    for (const auto& p : ps)
        if (p.nvars() != pres.nvars_) throw DomainError("variable count mismatch in presentation");

    std::vector<EPoly> exps;
    for (const auto& p : ps)
        for (auto& e : exponents_of(p)) exps.push_back(std::move(e));

    ColumnIndex index;
    for (const auto& e : exps)
        for (const auto& [k, c] : e.terms()) {
            if (sgn(c.re()) != 0) index.emplace(std::make_pair(k, false), 0);
            if (sgn(c.im()) != 0) index.emplace(std::make_pair(k, true), 0);
        }
    std::size_t ncols = 0;
    for (auto& [col, idx] : index) {
        idx = ncols++;
        pres.columns_.push_back({col.first, col.second});
    }

    std::vector<std::vector<Rational>> qrows;
    Integer denom = 1;
    for (const auto& e : exps) {
        bool inside = true;
        qrows.push_back(to_row(e, index, inside));
        for (const auto& x : qrows.back()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<std::vector<Integer>> irows;
    for (const auto& row : qrows) {
        std::vector<Integer> ir;
        for (const auto& x : row) ir.push_back(Integer(x.get_num() * (denom / x.get_den())));
        irows.push_back(std::move(ir));
    }
    hermite(irows, pres.pivots_, ncols);

    for (const auto& ir : irows) {
        std::vector<Rational> row;
        EPoly b(pres.nvars_);
        for (std::size_t c = 0; c < ncols; ++c) {
            Rational x(ir[c], denom);
            x.canonicalize();
            row.push_back(x);
            if (sgn(x) == 0) continue;
            const auto& col = pres.columns_[c];
            b.add_term(col.key, col.imaginary ? Scalar(Rational(0), x) : Scalar(x));
        }
        pres.rows_.push_back(std::move(row));
        pres.group_layers_.push_back(b.height() + 1);
        pres.basis_.push_back(std::move(b));
    }
    return pres;
}

std::optional<std::vector<Integer>> LaurentPresentation::coordinates(const EPoly& exponent) const {
    ColumnIndex index;
    for (std::size_t c = 0; c < columns_.size(); ++c) index.emplace(std::make_pair(columns_[c].key, columns_[c].imaginary), c);
    bool inside = true;
    auto row = to_row(exponent, index, inside);
    if (!inside) return std::nullopt;
    std::vector<Integer> coords;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational k = row[pivots_[i]] / rows_[i][pivots_[i]];
        k.canonicalize();
        if (k.get_den() != 1) return std::nullopt;
        if (sgn(k) != 0)
            for (std::size_t c = 0; c < row.size(); ++c) row[c] -= k * rows_[i][c];
        coords.push_back(k.get_num());
    }
    for (const auto& x : row)
        if (sgn(x) != 0) return std::nullopt;
    return coords;
}

bool LaurentPresentation::covers(const EPoly& p) const {
    if (p.nvars() != nvars_ && !(basis_.empty() && nvars_ == 0)) return false;
    for (const auto& e : exponents_of(p))
        if (!coordinates(e)) return false;
    return true;
}

std::vector<Poly> LaurentPresentation::relations(const MonomialOrder& ord) const {
    std::vector<Poly> rels;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        PowerProduct uv(ring_vars(), 0);
        uv[u_index(i)] = 1;
        uv[v_index(i)] = 1;
        rels.push_back(Poly::from_terms({{uv, Scalar(1)}, {PowerProduct(ring_vars(), 0), Scalar(-1)}}, ord));
    }
    return rels;
}

Poly LaurentPresentation::encode(const EPoly& p, const MonomialOrder& ord, std::uint32_t y_degree) const {
    std::vector<PolyTerm> terms;
    for (const auto& [k, c] : p.terms()) {
        PowerProduct m(ring_vars(), 0);
        for (std::size_t j = 0; j < nvars_; ++j) m[j] = k.mono[j];
        if (k.exp) {
            auto coords = coordinates(*k.exp);
            if (!coords) throw DomainError("exponent " + k.exp->to_string() + " is outside the presentation lattice");
            for (std::size_t i = 0; i < coords->size(); ++i) {
                const Integer& x = (*coords)[i];
                if (sgn(x) > 0)
                    m[u_index(i)] = static_cast<std::uint32_t>(x.get_ui());
                else if (sgn(x) < 0)
                    m[v_index(i)] = static_cast<std::uint32_t>(Integer(-x).get_ui());
            }
        }
        if (with_y_) m[y_index()] = y_degree;
        terms.push_back({std::move(m), c});
    }
    return Poly::from_terms(std::move(terms), ord);
}

EPoly LaurentPresentation::decode(const Poly& p, std::optional<std::uint32_t> y_degree_filter) const {
    EPoly out(nvars_);
    for (const auto& t : p.terms()) {
        if (with_y_) {
            std::uint32_t yd = t.mono[y_index()];
            if (!y_degree_filter) {
                if (yd != 0) throw DomainError("cannot decode a monomial containing Y");
            } else if (yd != *y_degree_filter) {
                continue;
            }
        }
        Monomial m(t.mono.begin(), t.mono.begin() + static_cast<std::ptrdiff_t>(nvars_));
        EPoly exp(nvars_);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            long k = static_cast<long>(t.mono[u_index(i)]) - static_cast<long>(t.mono[v_index(i)]);
            if (k != 0) exp += basis_[i] * Scalar(k);
        }
        out += EPoly::term(nvars_, t.coeff, std::move(m),
                           exp.is_zero() ? nullptr : std::make_shared<const EPoly>(std::move(exp)));
    }
    return out;
}

std::uint32_t LaurentPresentation::max_y_degree(const Poly& p) const {
    std::uint32_t d = 0;
    if (!with_y_) return 0;
    for (const auto& t : p.terms()) d = std::max(d, t.mono[y_index()]);
    return d;
}

std::vector<bool> LaurentPresentation::elimination_mask_above(std::size_t r) const {
    std::vector<bool> mask(ring_vars(), false);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (group_layers_[i] > r) {
            mask[u_index(i)] = true;
            mask[v_index(i)] = true;
        }
    return mask;
}

std::string LaurentPresentation::key() const {
    std::string k = std::to_string(nvars_) + (with_y_ ? "Y" : "") + "|";
    for (const auto& b : basis_) k += b.to_string() + ";";
    return k;
}

std::string LaurentPresentation::describe() const {
    if (basis_.empty()) return "exponent lattice: {}";
    std::string s = "exponent lattice: {";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ", ";
        s += basis_[i].to_string();
    }
    return s + "}";
}

}  // namespace exprings

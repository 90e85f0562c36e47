#pragma once

#include "exprings/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace exprings {

/// Exponent vector of an ordinary commutative monomial.
using PowerProduct = std::vector<std::uint32_t>;

/// Graded reverse lexicographic order, optionally refined into a block
/// elimination order: variables flagged in `eliminate` form the first block
/// and are compared (grevlex) before the remaining ones.
class MonomialOrder {
public:
    MonomialOrder() = default;
    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder elimination(std::vector<bool> eliminate);

    bool is_elimination() const { return !eliminate_.empty(); }
    const std::vector<bool>& eliminated() const { return eliminate_; }

    /// <0, 0, >0
    int compare(const PowerProduct& a, const PowerProduct& b) const;

    std::string describe() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    std::vector<bool> eliminate_;
};

struct PolyTerm {
    PowerProduct mono;
    Scalar coeff;
};

/// Sparse polynomial over Q(i), terms sorted strictly decreasing in the
/// order it was built with.  Every operation takes that order explicitly.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<PolyTerm> sorted_terms) : terms_(std::move(sorted_terms)) {}

    static Poly from_terms(std::vector<PolyTerm> terms, const MonomialOrder& ord);
    static Poly constant(std::size_t nvars, const Scalar& c);
    static Poly monomial(PowerProduct m, const Scalar& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<PolyTerm>& terms() const { return terms_; }
    const PolyTerm& lead() const { return terms_.front(); }

    Poly operator-() const;
    Poly& operator*=(const Scalar& c);

    friend bool operator==(const Poly& a, const Poly& b);

private:
    std::vector<PolyTerm> terms_;
};

Poly poly_add(const Poly& a, const Poly& b, const MonomialOrder& ord);
Poly poly_sub(const Poly& a, const Poly& b, const MonomialOrder& ord);
/// a - c * m * b
Poly poly_sub_scaled(const Poly& a, const Scalar& c, const PowerProduct& m, const Poly& b, const MonomialOrder& ord);
Poly poly_mul(const Poly& a, const Poly& b, const MonomialOrder& ord);
/// Re-sorts the terms for another order.
Poly poly_reorder(const Poly& a, const MonomialOrder& ord);

bool divides(const PowerProduct& a, const PowerProduct& b);
PowerProduct pp_lcm(const PowerProduct& a, const PowerProduct& b);
PowerProduct pp_quotient(const PowerProduct& b, const PowerProduct& a);

/// Counts reduction steps against a fixed budget.
class StepBudget {
public:
    static constexpr std::size_t kDefault = 1'000'000;
    explicit StepBudget(std::size_t limit = kDefault) : limit_(limit) {}
    void charge(std::size_t n = 1);
    std::size_t used() const { return used_; }
    std::size_t limit() const { return limit_; }

private:
    std::size_t limit_;
    std::size_t used_ = 0;
};

/// Reduced Gröbner basis with cofactors: basis[k] = sum_j cofactors[k][j] * generators[j].
struct GroebnerBasis {
    MonomialOrder order;
    std::size_t nvars = 0;
    std::vector<Poly> generators;
    std::vector<Poly> basis;
    std::vector<std::vector<Poly>> cofactors;

    bool is_unit() const;
};

GroebnerBasis buchberger(std::vector<Poly> generators, std::size_t nvars, const MonomialOrder& ord,
                         StepBudget& budget);

struct Reduction {
    Poly remainder;
    /// p - remainder = sum_j cofactors[j] * generators[j]; empty unless tracked.
    std::vector<Poly> cofactors;
};

Reduction reduce(const Poly& p, const GroebnerBasis& gb, StepBudget& budget, bool track_cofactors = true);

/// Every S-polynomial of the basis reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& gb, StepBudget& budget);

/// Every recorded cofactor row re-expands to its basis element.
bool cofactors_consistent(const GroebnerBasis& gb);

}  // namespace exprings

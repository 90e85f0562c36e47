#pragma once

#include "exprings/ordinal.hpp"
#include "exprings/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace exprings {

class EPoly;

/// Exponent vector over X_1..X_n.
using Monomial = std::vector<std::uint32_t>;

/// Exponent-argument of a group element t^a.  Null stands for a = 0.
using ExpPtr = std::shared_ptr<const EPoly>;

/// Key of one stored term X^m * t^a.
struct TermKey {
    Monomial mono;
    ExpPtr exp;
};

/// Layer of a term: 0 for t^0, otherwise 1 + height(a).
std::size_t key_layer(const TermKey& k);

std::uint32_t total_degree(const Monomial& m);

/// Canonical term order: layer, then graded-lex on the monomial (X1 > X2),
/// then recursively on the exponent-argument.
struct KeyLess {
    bool operator()(const TermKey& a, const TermKey& b) const;
};

bool keys_equal(const TermKey& a, const TermKey& b);

/// Element of the free E-ring R[X_1..X_n]^E stored in flat group-ring form
/// R_0[t^{A_0 + ... + A_k}]: a finite sum of c * X^m * t^a with every
/// exponent-argument a itself canonical and free of constant term.
class EPoly {
public:
    using TermMap = std::map<TermKey, Scalar, KeyLess>;

    explicit EPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static EPoly constant(std::size_t nvars, const Scalar& c);
    /// X_j, 1-based.
    static EPoly variable(std::size_t nvars, std::size_t j);
    /// c * X^m * t^a.  The exponent must have zero constant term.
    static EPoly term(std::size_t nvars, const Scalar& c, Monomial m, ExpPtr a);
    /// t^a for a nonzero exponent a (no base-field factor involved).
    static EPoly group_element(const EPoly& a);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Minimal k with this element in R_k.
    std::size_t height() const;
    Scalar constant_term() const;
    bool is_constant() const;

    /// Adds c * X^m * t^a in place, merging and dropping zeros.
    void add_term(const TermKey& key, const Scalar& c);

    EPoly operator-() const;
    EPoly& operator+=(const EPoly& o);
    EPoly& operator-=(const EPoly& o);
    EPoly& operator*=(const Scalar& c);
    friend EPoly operator+(EPoly a, const EPoly& b) { return a += b; }
    friend EPoly operator-(EPoly a, const EPoly& b) { return a -= b; }
    friend EPoly operator*(const EPoly& a, const EPoly& b);
    friend EPoly operator*(EPoly a, const Scalar& c) { return a *= c; }
    friend EPoly operator*(const Scalar& c, EPoly a) { return a *= c; }

    EPoly pow(unsigned e) const;

    friend bool operator==(const EPoly& a, const EPoly& b);

    std::string to_string() const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

/// Three-way comparison extending the canonical term order to whole values.
int compare(const EPoly& a, const EPoly& b);

struct EPolyLess {
    bool operator()(const EPoly& a, const EPoly& b) const { return compare(a, b) < 0; }
};

EPoly epoly_add(const EPoly& p, const EPoly& q);
EPoly epoly_mul(const EPoly& p, const EPoly& q);
EPoly epoly_neg(const EPoly& p);

/// E(p) = E_base(const(p)) * t^{p - const(p)}.
EPoly epoly_E(const EPoly& p, const BaseField& base = {});

/// Sum of the terms of p whose layer is exactly `layer`.
EPoly layer_part(const EPoly& p, std::size_t layer);

/// p = p_0 + p_1 + ... + p_k with p_i collecting the layer-i terms.
struct LayerDecomposition {
    std::vector<EPoly> components;

    EPoly recompose(std::size_t nvars) const;
};

LayerDecomposition layer_decompose(const EPoly& p);

std::size_t height(const EPoly& p);

/// 0 for p = 0, totdeg + 1 on R_0, and otherwise the number of distinct
/// top-layer group elements E(a) in p = sum r_i E(a_i).
std::size_t rank(const EPoly& p);

/// Top-layer component of an exponent argument (its part in A_{height}).
EPoly top_component(const EPoly& exponent);

OrdinalCNF ord(const EPoly& p);

struct OrdReduction {
    EPoly q;
    EPoly reduced;
};

/// For p != 0 with p_0 = 0, returns q and E(q) * p with a strictly smaller
/// ord.  The multiplier cancels the minimal term in the canonical order,
/// which sits at the lowest occupied layer.
OrdReduction ord_reduce(const EPoly& p);

/// Coefficient of the term X^m * t^a, zero when absent.
Scalar coefficient(const EPoly& p, const TermKey& key);

/// Nonzero exponent-arguments occurring in p (top level only), sorted.
std::vector<EPoly> exponents_of(const EPoly& p);

}  // namespace exprings

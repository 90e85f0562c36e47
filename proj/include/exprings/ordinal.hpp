#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace exprings {

/// Ordinal below w^w in Cantor normal form: sum of w^level * coeff with
/// strictly decreasing levels and positive coefficients.
class OrdinalCNF {
public:
    using Term = std::pair<std::size_t, std::size_t>;  // (level, coefficient)

    OrdinalCNF() = default;
    static OrdinalCNF finite(std::size_t n);
    static OrdinalCNF omega_power(std::size_t level, std::size_t coeff = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Natural (commutative) sum: coefficients at equal levels add.
    OrdinalCNF& operator+=(const OrdinalCNF& o);
    friend OrdinalCNF operator+(OrdinalCNF a, const OrdinalCNF& b) { return a += b; }

    friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;
    friend std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b);

    /// "w^2*3 + w + 2"; "0" for zero.
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

}  // namespace exprings

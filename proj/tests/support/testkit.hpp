#pragma once

#include "exprings/epoly.hpp"
#include "exprings/ideal.hpp"
#include "exprings/models.hpp"
#include "exprings/ordinal.hpp"

#include <random>
#include <string>
#include <vector>

namespace testkit {

using namespace exprings;

/// Small random values.  Seeds are fixed per suite so failures replay.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    /// Nonzero rational with |num| <= 5, den <= 3.
    Scalar scalar();
    Scalar gaussian();

    /// Polynomial in X_1..X_n with at most `terms` terms of degree <= deg.
    EPoly poly(std::size_t n, int terms, int deg, bool zero_constant = false);
    /// Element of height <= h.  Exponents are themselves random of height < h.
    EPoly epoly(std::size_t n, std::size_t h, int terms = 3, int deg = 2, bool zero_constant = false);
    /// Random element with no layer-0 part and height >= 1.
    EPoly above_base(std::size_t n, std::size_t h, int terms = 3);

    TruncatedSeries series(std::size_t order, bool zero_constant);

private:
    std::mt19937_64 rng_;
};

/// ord computed from the raw term list, without layer_decompose or rank.
OrdinalCNF naive_ord(const EPoly& p);

/// Truncated exp by the recurrence n y_n = sum_k k s_k y_{n-k} (y' = s' y).
TruncatedSeries ode_exp(const TruncatedSeries& s);

/// Values of p at random complex points, for checking identities in the
/// float model.  Returns the largest |p(a)| seen.
double float_residual(const EPoly& p, Gen& g, int points = 5);

/// Linear-algebra membership oracle: is p a Q(i)-combination of
/// X^m t^{k b} g_j with deg m <= max_deg and |k| <= max_shift, where b runs
/// over `shifts` (group elements of the slice)?  No Gröbner machinery.
struct MacaulayResult {
    bool found = false;
    std::vector<EPoly> cofactors;
    std::size_t unknowns = 0;
};
MacaulayResult macaulay_member(const std::vector<EPoly>& gens, const EPoly& p, const std::vector<EPoly>& shifts,
                               int max_deg, int max_shift);

std::vector<EPoly> parse_all(const std::vector<std::string>& texts, std::size_t n);

}  // namespace testkit

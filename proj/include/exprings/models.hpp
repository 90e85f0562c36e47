#pragma once

#include "exprings/epoly.hpp"

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace exprings {

/// Element of K[[t]] / t^N.  All arithmetic truncates at the common order N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 8);
    TruncatedSeries(std::vector<Scalar> coeffs, std::size_t order);

    static TruncatedSeries constant(const Scalar& c, std::size_t order);
    /// The uniformizer t (zero when order == 1).
    static TruncatedSeries uniformizer(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& c);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// Formal derivative d/dt; the top coefficient is lost to truncation.
    TruncatedSeries derivative() const;

    /// "t + 1/2 t^2 + 1/6 t^3"
    std::string to_string() const;

private:
    std::vector<Scalar> coeffs_;
};

/// Neumann exponential sum_{i<N} s^i / i!, defined for s in the maximal ideal.
TruncatedSeries series_exp(const TruncatedSeries& s);

/// Exponential on the partial E-field K((t)): E(r_0 + r_1) = E(r_0) exp(r_1)
/// with r_0 constrained to A(K).
TruncatedSeries series_E(const TruncatedSeries& s, const BaseField& base = {});

enum class ModelKind { Series, Float };

using FloatValue = std::complex<double>;
using ModelValue = std::variant<TruncatedSeries, FloatValue>;

struct ModelPoint {
    ModelKind kind = ModelKind::Series;
    std::vector<TruncatedSeries> series;
    std::vector<FloatValue> floats;

    static ModelPoint in_series(std::vector<TruncatedSeries> coords);
    static ModelPoint in_floats(std::vector<FloatValue> coords);
    std::size_t arity() const { return kind == ModelKind::Series ? series.size() : floats.size(); }
};

/// Ring-homomorphic evaluation; E-nodes go through the model exponential.
ModelValue eval_epoly(const EPoly& p, const ModelPoint& a, const BaseField& base = {});

std::string model_value_to_string(const ModelValue& v);

/// True iff every f_i vanishes at a and the Jacobian does not.  The series
/// model is exact; the float model compares magnitudes against `tolerance`.
bool khovanskii_check(const std::vector<EPoly>& f, const ModelPoint& a, double tolerance = 1e-9,
                      const BaseField& base = {});

}  // namespace exprings

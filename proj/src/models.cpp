#include "exprings/models.hpp"

#include "exprings/diff.hpp"
#include "exprings/errors.hpp"

#include <cmath>
#include <sstream>

namespace exprings {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
    if (order == 0) throw DomainError("truncation order must be at least 1");
}

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    if (order == 0) throw DomainError("truncation order must be at least 1");
    coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::uniformizer(std::size_t order) {
    TruncatedSeries s(order);
    if (order > 1) s.coeffs_[1] = Scalar(1);
    return s;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw DomainError("series truncation orders differ");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_orders(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_orders(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_orders(a, b);
    const std::size_t n = a.order();
    TruncatedSeries r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries operator*(TruncatedSeries a, const Scalar& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
}

TruncatedSeries TruncatedSeries::derivative() const {
    TruncatedSeries r(order());
    for (std::size_t i = 1; i < order(); ++i) r.coeffs_[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
    return r;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        bool negative = c.is_real() && sgn(c.re()) < 0;
        Scalar mag = negative ? -c : c;
        std::string power = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        std::string t;
        if (i == 0)
            t = mag.to_string();
        else if (mag.is_one())
            t = power;
        else
            t = mag.to_string() + " " + power;
        if (out.empty())
            out = negative ? "-" + t : t;
        else
            out += (negative ? " - " : " + ") + t;
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s[0].is_zero())
        throw PartialityError("series exponential needs zero constant coefficient, got " + s[0].to_string());
    const std::size_t n = s.order();
    TruncatedSeries result = TruncatedSeries::constant(Scalar(1), n);
    TruncatedSeries power = result;
    Rational factorial(1);
    for (std::size_t i = 1; i < n; ++i) {
        power = power * s;
        if (power.is_zero()) break;
        factorial *= static_cast<long>(i);
        result += power * Scalar(Rational(1) / factorial);
    }
    return result;
}

TruncatedSeries series_E(const TruncatedSeries& s, const BaseField& base) {
    Scalar c0 = s[0];
    Scalar e0 = base.exp(c0);
    return series_exp(s - TruncatedSeries::constant(c0, s.order())) * e0;
}

ModelPoint ModelPoint::in_series(std::vector<TruncatedSeries> coords) {
    ModelPoint p;
    p.kind = ModelKind::Series;
    p.series = std::move(coords);
    return p;
}

ModelPoint ModelPoint::in_floats(std::vector<FloatValue> coords) {
    ModelPoint p;
    p.kind = ModelKind::Float;
    p.floats = std::move(coords);
    return p;
}

namespace {

FloatValue to_float(const Scalar& c) { return {c.re().get_d(), c.im().get_d()}; }

TruncatedSeries eval_series(const EPoly& p, const ModelPoint& a, const BaseField& base) {
    const std::size_t order = a.series.empty() ? 1 : a.series.front().order();
    TruncatedSeries acc(order);
    for (const auto& [k, c] : p.terms()) {
        TruncatedSeries t = TruncatedSeries::constant(c, order);
        for (std::size_t j = 0; j < k.mono.size(); ++j)
            for (std::uint32_t e = 0; e < k.mono[j]; ++e) t = t * a.series[j];
        if (k.exp) {
            TruncatedSeries arg = eval_series(*k.exp, a, base);
            if (!base.exp_defined(arg[0]))
                throw PartialityError("E(" + k.exp->to_string() + ") is undefined at the point: argument has constant coefficient " +
                                      arg[0].to_string());
            t = t * series_E(arg, base);
        }
        acc += t;
    }
    return acc;
}

FloatValue eval_float(const EPoly& p, const ModelPoint& a) {
    FloatValue acc{0.0, 0.0};
    for (const auto& [k, c] : p.terms()) {
        FloatValue t = to_float(c);
        for (std::size_t j = 0; j < k.mono.size(); ++j)
            for (std::uint32_t e = 0; e < k.mono[j]; ++e) t *= a.floats[j];
        if (k.exp) t *= std::exp(eval_float(*k.exp, a));
        acc += t;
    }
    return acc;
}

}  // namespace

ModelValue eval_epoly(const EPoly& p, const ModelPoint& a, const BaseField& base) {
    if (a.arity() != p.nvars())
        throw DomainError("point arity " + std::to_string(a.arity()) + " does not match " +
                          std::to_string(p.nvars()) + " variables");
    if (a.kind == ModelKind::Float) return eval_float(p, a);
    for (const auto& s : a.series)
        if (s.order() != a.series.front().order()) throw DomainError("series truncation orders differ");
    return eval_series(p, a, base);
}

std::string model_value_to_string(const ModelValue& v) {
    if (const auto* s = std::get_if<TruncatedSeries>(&v)) return s->to_string();
    const auto& z = std::get<FloatValue>(v);
    std::ostringstream os;
    os.precision(12);
    os << z.real();
    if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

bool khovanskii_check(const std::vector<EPoly>& f, const ModelPoint& a, double tolerance, const BaseField& base) {
    EPoly jac = jacobian(f);
    auto vanishes = [&](const ModelValue& v) {
        if (const auto* s = std::get_if<TruncatedSeries>(&v)) return s->is_zero();
        return std::abs(std::get<FloatValue>(v)) <= tolerance;
    };
    for (const auto& fi : f)
        if (!vanishes(eval_epoly(fi, a, base))) return false;
    return !vanishes(eval_epoly(jac, a, base));
}

}  // namespace exprings

#include "exprings/ordinal.hpp"

#include <algorithm>

namespace exprings {

OrdinalCNF OrdinalCNF::finite(std::size_t n) { return omega_power(0, n); }

OrdinalCNF OrdinalCNF::omega_power(std::size_t level, std::size_t coeff) {
    OrdinalCNF o;
    if (coeff != 0) o.terms_.emplace_back(level, coeff);
    return o;
}

OrdinalCNF& OrdinalCNF::operator+=(const OrdinalCNF& o) {
    for (const auto& [level, coeff] : o.terms_) {
        auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first <= level; });
        if (it != terms_.end() && it->first == level)
            it->second += coeff;
        else
            terms_.insert(it, {level, coeff});
    }
    return *this;
}

std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const auto& [la, ca] = a.terms_[i];
        const auto& [lb, cb] = b.terms_[i];
        if (la != lb) return la <=> lb;
        if (ca != cb) return ca <=> cb;
    }
    return a.terms_.size() <=> b.terms_.size();
}

std::string OrdinalCNF::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [level, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        if (level == 0) {
            out += std::to_string(coeff);
            continue;
        }
        out += level == 1 ? "w" : "w^" + std::to_string(level);
        if (coeff != 1) out += "*" + std::to_string(coeff);
    }
    return out;
}

}  // namespace exprings

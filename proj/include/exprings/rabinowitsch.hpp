#pragma once

#include "exprings/epoly.hpp"
#include "exprings/groebner.hpp"
#include "exprings/tower.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exprings {

/// Element of R_l[Y]; Y is an ordinary variable and never enters an E-node.
class SPoly {
public:
    explicit SPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static SPoly adjoin_Y(const EPoly& p);
    /// Y^j * p
    static SPoly monomial(const EPoly& p, std::uint32_t j);
    static SPoly Y(std::size_t nvars) { return monomial(EPoly::constant(nvars, Scalar(1)), 1); }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::uint32_t degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    EPoly coefficient(std::uint32_t j) const;
    const std::map<std::uint32_t, EPoly>& coefficients() const { return coeffs_; }

    SPoly& operator+=(const SPoly& o);
    SPoly& operator-=(const SPoly& o);
    friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
    friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
    friend SPoly operator*(const SPoly& a, const SPoly& b);
    friend bool operator==(const SPoly& a, const SPoly& b);

    std::string to_string() const;

private:
    void set(std::uint32_t j, EPoly c);

    std::size_t nvars_;
    std::map<std::uint32_t, EPoly> coeffs_;
};

SPoly adjoin_Y(const EPoly& p);

struct Certificate {
    /// 1 = sum t[i] * h[i] + (1 - Y g) * r
    std::vector<SPoly> t;
    SPoly r;
    bool verified = false;
    std::string slice;
};

/// Searches for 1 in <h_1..h_m, 1 - Y g> over the lattice slice of h and g.
/// nullopt is relative to that slice.
std::optional<Certificate> one_certificate(const std::vector<EPoly>& h, const EPoly& g,
                                           std::size_t budget = StepBudget::kDefault);
/// Same, also reporting the slice when nothing is found.
std::optional<Certificate> one_certificate(const std::vector<EPoly>& h, const EPoly& g, std::string& slice,
                                           std::size_t budget = StepBudget::kDefault);

struct PowerIdentity {
    std::uint32_t d = 0;
    /// g^d = sum cofactors[i] * h[i]
    std::vector<EPoly> cofactors;
    bool verified = false;
};

/// Substitutes Y = 1/g and clears denominators.
PowerIdentity extract_power(const Certificate& cert, const std::vector<EPoly>& h, const EPoly& g);

struct NssReport {
    std::vector<EPoly> h;
    EPoly g;
    DaggerVerdict dagger;
    bool found = false;
    std::optional<Certificate> certificate;
    std::optional<PowerIdentity> power;
    std::string slice;

    bool verified() const { return found && certificate->verified && power->verified; }
    nlohmann::json to_json() const;
    std::string to_text() const;
};

NssReport nullstellensatz_pipeline(const std::vector<EPoly>& h, const EPoly& g,
                                   std::size_t budget = StepBudget::kDefault);

}  // namespace exprings

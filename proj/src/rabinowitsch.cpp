#include "exprings/rabinowitsch.hpp"

#include "exprings/io.hpp"
#include "exprings/laurent.hpp"

namespace exprings {

void SPoly::set(std::uint32_t j, EPoly c) {
    if (c.is_zero())
        coeffs_.erase(j);
    else
        coeffs_.insert_or_assign(j, std::move(c));
}

SPoly SPoly::adjoin_Y(const EPoly& p) { return monomial(p, 0); }

SPoly SPoly::monomial(const EPoly& p, std::uint32_t j) {
    SPoly s(p.nvars());
    s.set(j, p);
    return s;
}

SPoly adjoin_Y(const EPoly& p) { return SPoly::adjoin_Y(p); }

EPoly SPoly::coefficient(std::uint32_t j) const {
    auto it = coeffs_.find(j);
    return it == coeffs_.end() ? EPoly(nvars_) : it->second;
}

SPoly& SPoly::operator+=(const SPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [j, c] : o.coeffs_) set(j, coefficient(j) + c);
    return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [j, c] : o.coeffs_) set(j, coefficient(j) - c);
    return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly out(a.nvars_ ? a.nvars_ : b.nvars_);
    for (const auto& [i, x] : a.coeffs_)
        for (const auto& [j, y] : b.coeffs_) out.set(i + j, out.coefficient(i + j) + x * y);
    return out;
}

bool operator==(const SPoly& a, const SPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (const auto& [j, c] : a.coeffs_)
        if (!(b.coefficient(j) == c)) return false;
    return true;
}

std::string SPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [j, c] = *it;
        if (!s.empty()) s += " + ";
        std::string y = j == 1 ? "Y" : "Y^" + std::to_string(j);
        if (j == 0)
            s += c.size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
        else if (c == EPoly::constant(nvars_, Scalar(1)))
            s += y;
        else
            s += "(" + c.to_string() + ")*" + y;
    }
    return s;
}

namespace {

std::vector<EPoly> with_zero(std::vector<EPoly> v, std::size_t n) {
    v.emplace_back(n);
    return v;
}

SPoly decode_spoly(const LaurentPresentation& pres, const Poly& p) {
    SPoly s(pres.nvars());
    for (std::uint32_t j = 0; j <= pres.max_y_degree(p); ++j) s += SPoly::monomial(pres.decode(p, j), j);
    return s;
}

}  // namespace

std::optional<Certificate> one_certificate(const std::vector<EPoly>& h, const EPoly& g, std::string& slice,
                                           std::size_t budget) {
    const std::size_t n = g.nvars();
    std::vector<EPoly> all = h;
    all.push_back(g);
    LaurentPresentation pres = present(with_zero(all, n), true);
    slice = pres.describe();
    MonomialOrder ord = MonomialOrder::grevlex();

    std::vector<Poly> gens;
    for (const auto& hi : h) gens.push_back(pres.encode(hi, ord));
    gens.push_back(poly_sub(Poly::constant(pres.ring_vars(), Scalar(1)), pres.encode(g, ord, 1), ord));
    for (auto& r : pres.relations(ord)) gens.push_back(std::move(r));

    StepBudget steps(budget);
    GroebnerBasis gb = buchberger(gens, pres.ring_vars(), ord, steps);
    Reduction red = reduce(Poly::constant(pres.ring_vars(), Scalar(1)), gb, steps, true);
    if (!red.remainder.is_zero()) return std::nullopt;

    Certificate cert;
    cert.slice = slice;
    for (std::size_t i = 0; i < h.size(); ++i) cert.t.push_back(decode_spoly(pres, red.cofactors[i]));
    cert.r = decode_spoly(pres, red.cofactors[h.size()]);

    SPoly one_minus_yg = SPoly::adjoin_Y(EPoly::constant(n, Scalar(1))) - SPoly::monomial(g, 1);
    SPoly acc = one_minus_yg * cert.r;
    for (std::size_t i = 0; i < h.size(); ++i) acc += cert.t[i] * SPoly::adjoin_Y(h[i]);
    cert.verified = acc == SPoly::adjoin_Y(EPoly::constant(n, Scalar(1)));
    return cert;
}

std::optional<Certificate> one_certificate(const std::vector<EPoly>& h, const EPoly& g, std::size_t budget) {
    std::string slice;
    return one_certificate(h, g, slice, budget);
}

PowerIdentity extract_power(const Certificate& cert, const std::vector<EPoly>& h, const EPoly& g) {
    const std::size_t n = g.nvars();
    PowerIdentity out;
    for (const auto& t : cert.t) out.d = std::max(out.d, t.degree());
    std::vector<EPoly> gpow{EPoly::constant(n, Scalar(1))};
    for (std::uint32_t k = 1; k <= out.d; ++k) gpow.push_back(gpow.back() * g);
    for (const auto& t : cert.t) {
        EPoly c(n);
        for (const auto& [j, tij] : t.coefficients()) c += tij * gpow[out.d - j];
        out.cofactors.push_back(std::move(c));
    }
    EPoly acc(n);
    for (std::size_t i = 0; i < h.size() && i < out.cofactors.size(); ++i) acc += out.cofactors[i] * h[i];
    out.verified = acc == gpow[out.d];
    return out;
}

NssReport nullstellensatz_pipeline(const std::vector<EPoly>& h, const EPoly& g, std::size_t budget) {
    NssReport rep;
    rep.h = h;
    rep.g = g;
    rep.dagger = dagger_check(IdealHandle(g.nvars(), h, budget));
    rep.certificate = one_certificate(h, g, rep.slice, budget);
    rep.found = rep.certificate.has_value();
    if (rep.found) rep.power = extract_power(*rep.certificate, h, g);
    return rep;
}

nlohmann::json NssReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "nssreport/1";
    j["h"] = nlohmann::json::array();
    for (const auto& x : h) j["h"].push_back(x.to_string());
    j["g"] = g.to_string();
    nlohmann::json dj;
    dj["layer"] = dagger.layer;
    dj["holds"] = dagger.holds;
    dj["witness"] = dagger.witness ? nlohmann::json(dagger.witness->to_string()) : nlohmann::json(nullptr);
    dj["verdict"] = dagger.describe();
    j["dagger"] = dj;
    j["slice"] = slice;
    j["found"] = found;
    if (found) {
        nlohmann::json cj;
        cj["t"] = nlohmann::json::array();
        for (const auto& t : certificate->t) cj["t"].push_back(t.to_string());
        cj["r"] = certificate->r.to_string();
        cj["verified"] = certificate->verified;
        j["certificate"] = cj;
        j["d"] = power->d;
        j["cofactors"] = nlohmann::json::array();
        for (const auto& c : power->cofactors) j["cofactors"].push_back(c.to_string());
        j["verified"] = verified();
    } else {
        j["certificate"] = nullptr;
        j["d"] = nullptr;
        j["cofactors"] = nullptr;
        j["verified"] = false;
    }
    return j;
}

std::string NssReport::to_text() const {
    std::string s;
    s += "ideal: <";
    for (std::size_t i = 0; i < h.size(); ++i) s += (i ? ", " : "") + h[i].to_string();
    s += ">\n";
    s += "g: " + g.to_string() + "\n";
    s += "dagger (layer " + std::to_string(dagger.layer) + "): " + dagger.describe() + "\n";
    s += slice + "\n";
    if (!found) return s + "certificate: not found within slice\n";
    s += "certificate: 1 = ";
    for (std::size_t i = 0; i < h.size(); ++i) s += "[" + certificate->t[i].to_string() + "]*h" + std::to_string(i + 1) + " + ";
    s += "(1 - Y*g)*[" + certificate->r.to_string() + "]";
    s += certificate->verified ? " (verified)\n" : " (VERIFICATION FAILED)\n";
    s += "d = " + std::to_string(power->d) + "\n";
    s += "g^" + std::to_string(power->d) + " = ";
    for (std::size_t i = 0; i < power->cofactors.size(); ++i)
        s += (i ? " + " : "") + std::string("[") + power->cofactors[i].to_string() + "]*h" + std::to_string(i + 1);
    s += power->verified ? " (verified)\n" : " (VERIFICATION FAILED)\n";
    return s;
}

}  // namespace exprings

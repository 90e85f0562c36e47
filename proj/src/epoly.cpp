#include "exprings/epoly.hpp"

#include "exprings/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace exprings {

std::size_t key_layer(const TermKey& k) { return k.exp ? k.exp->height() + 1 : 0; }

std::uint32_t total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::uint32_t{0}); }

namespace {

int compare_monomials(const Monomial& a, const Monomial& b) {
    auto da = total_degree(a);
    auto db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // graded lex with X1 > X2 > ...: larger leading exponent is larger
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

int compare_keys(const TermKey& a, const TermKey& b) {
    auto la = key_layer(a);
    auto lb = key_layer(b);
    if (la != lb) return la < lb ? -1 : 1;
    if (int c = compare_monomials(a.mono, b.mono); c != 0) return c;
    if (a.exp == b.exp) return 0;
    if (!a.exp) return -1;
    if (!b.exp) return 1;
    return compare(*a.exp, *b.exp);
}

ExpPtr add_exponents(const ExpPtr& a, const ExpPtr& b) {
    if (!a) return b;
    if (!b) return a;
    EPoly s = *a + *b;
    if (s.is_zero()) return nullptr;
    return std::make_shared<const EPoly>(std::move(s));
}

void check_arity(const EPoly& a, const EPoly& b) {
    if (a.nvars() != b.nvars())
        throw DomainError("variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                          std::to_string(b.nvars()));
}

}  // namespace

bool KeyLess::operator()(const TermKey& a, const TermKey& b) const { return compare_keys(a, b) < 0; }

bool keys_equal(const TermKey& a, const TermKey& b) { return compare_keys(a, b) == 0; }

int compare(const EPoly& a, const EPoly& b) {
    if (a.nvars() != b.nvars()) return a.nvars() < b.nvars() ? -1 : 1;
    auto ia = a.terms().rbegin();
    auto ib = b.terms().rbegin();
    for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
        if (int c = compare_keys(ia->first, ib->first); c != 0) return c;
        auto c = ia->second <=> ib->second;
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (ia == a.terms().rend() && ib == b.terms().rend()) return 0;
    return ia == a.terms().rend() ? -1 : 1;
}

bool operator==(const EPoly& a, const EPoly& b) { return compare(a, b) == 0; }

EPoly EPoly::constant(std::size_t nvars, const Scalar& c) {
    EPoly p(nvars);
    p.add_term(TermKey{Monomial(nvars, 0), nullptr}, c);
    return p;
}

EPoly EPoly::variable(std::size_t nvars, std::size_t j) {
    if (j < 1 || j > nvars) throw DomainError("variable index X" + std::to_string(j) + " out of range");
    Monomial m(nvars, 0);
    m[j - 1] = 1;
    EPoly p(nvars);
    p.add_term(TermKey{std::move(m), nullptr}, Scalar(1));
    return p;
}

EPoly EPoly::term(std::size_t nvars, const Scalar& c, Monomial m, ExpPtr a) {
    if (m.size() != nvars) throw DomainError("monomial length does not match variable count");
    if (a && a->is_zero()) a = nullptr;
    if (a) {
        if (a->nvars() != nvars) throw DomainError("exponent variable count mismatch");
        if (!a->constant_term().is_zero()) throw DomainError("exponent-argument must have zero constant term");
    }
    EPoly p(nvars);
    p.add_term(TermKey{std::move(m), std::move(a)}, c);
    return p;
}

EPoly EPoly::group_element(const EPoly& a) {
    return term(a.nvars(), Scalar(1), Monomial(a.nvars(), 0),
                a.is_zero() ? nullptr : std::make_shared<const EPoly>(a));
}

std::size_t EPoly::height() const { return terms_.empty() ? 0 : key_layer(terms_.rbegin()->first); }

Scalar EPoly::constant_term() const { return coefficient(*this, TermKey{Monomial(nvars_, 0), nullptr}); }

bool EPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && !terms_.begin()->first.exp &&
                              total_degree(terms_.begin()->first.mono) == 0);
}

void EPoly::add_term(const TermKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EPoly EPoly::operator-() const {
    EPoly r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

EPoly& EPoly::operator+=(const EPoly& o) {
    check_arity(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

EPoly& EPoly::operator-=(const EPoly& o) {
    check_arity(*this, o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

EPoly& EPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

EPoly operator*(const EPoly& a, const EPoly& b) {
    check_arity(a, b);
    EPoly r(a.nvars());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Monomial m(ka.mono);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += kb.mono[i];
            r.add_term(TermKey{std::move(m), add_exponents(ka.exp, kb.exp)}, ca * cb);
        }
    return r;
}

EPoly EPoly::pow(unsigned e) const {
    EPoly result = constant(nvars_, Scalar(1));
    EPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

namespace {

std::string monomial_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "X" + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace

std::string EPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        std::string body = monomial_string(key.mono);
        if (key.exp) {
            if (!body.empty()) body += "*";
            body += "E(" + key.exp->to_string() + ")";
        }
        bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
        Scalar mag = negative ? -c : c;
        std::string coeff = mag.to_string();
        std::string t;
        if (body.empty())
            t = coeff;
        else if (mag.is_one())
            t = body;
        else
            t = coeff + "*" + body;
        if (first)
            out += negative ? "-" + t : t;
        else
            out += (negative ? " - " : " + ") + t;
        first = false;
    }
    return out;
}

Scalar coefficient(const EPoly& p, const TermKey& key) {
    auto it = p.terms().find(key);
    return it == p.terms().end() ? Scalar(0) : it->second;
}

EPoly epoly_add(const EPoly& p, const EPoly& q) { return p + q; }
EPoly epoly_mul(const EPoly& p, const EPoly& q) { return p * q; }
EPoly epoly_neg(const EPoly& p) { return -p; }

EPoly epoly_E(const EPoly& p, const BaseField& base) {
    Scalar c = p.constant_term();
    if (!base.exp_defined(c)) throw PartialityError("E is undefined: constant term " + c.to_string() + " lies outside A(R)");
    Scalar ec = base.exp(c);
    EPoly rest = p - EPoly::constant(p.nvars(), c);
    if (rest.is_zero()) return EPoly::constant(p.nvars(), ec);
    return EPoly::term(p.nvars(), ec, Monomial(p.nvars(), 0), std::make_shared<const EPoly>(std::move(rest)));
}

EPoly layer_part(const EPoly& p, std::size_t layer) {
    EPoly r(p.nvars());
    for (const auto& [k, c] : p.terms())
        if (key_layer(k) == layer) r.add_term(k, c);
    return r;
}

EPoly LayerDecomposition::recompose(std::size_t nvars) const {
    EPoly r(nvars);
    for (const auto& c : components) r += c;
    return r;
}

LayerDecomposition layer_decompose(const EPoly& p) {
    LayerDecomposition d;
    d.components.assign(p.height() + 1, EPoly(p.nvars()));
    for (const auto& [k, c] : p.terms()) d.components[key_layer(k)].add_term(k, c);
    return d;
}

std::size_t height(const EPoly& p) { return p.height(); }

EPoly top_component(const EPoly& exponent) { return layer_part(exponent, exponent.height()); }

std::size_t rank(const EPoly& p) {
    if (p.is_zero()) return 0;
    std::size_t h = p.height();
    if (h == 0) {
        std::uint32_t deg = 0;
        for (const auto& [k, c] : p.terms()) deg = std::max(deg, total_degree(k.mono));
        return deg + 1;
    }
    std::set<EPoly, EPolyLess> tops;
    for (const auto& [k, c] : p.terms())
        if (key_layer(k) == h) tops.insert(top_component(*k.exp));
    return tops.size();
}

OrdinalCNF ord(const EPoly& p) {
    OrdinalCNF o;
    if (p.is_zero()) return o;
    auto d = layer_decompose(p);
    for (std::size_t i = d.components.size(); i-- > 0;)
        o += OrdinalCNF::omega_power(i, rank(d.components[i]));
    return o;
}

OrdReduction ord_reduce(const EPoly& p) {
    if (p.is_zero()) throw DomainError("ord_reduce: input is zero");
    const auto& [lowest, c] = *p.terms().begin();
    if (!lowest.exp) throw DomainError("ord_reduce: layer-0 component is nonzero");
    EPoly q = -*lowest.exp;
    EPoly reduced = epoly_E(q) * p;
    return {std::move(q), std::move(reduced)};
}

std::vector<EPoly> exponents_of(const EPoly& p) {
    std::set<EPoly, EPolyLess> s;
    for (const auto& [k, c] : p.terms())
        if (k.exp) s.insert(*k.exp);
    return {s.begin(), s.end()};
}

}  // namespace exprings

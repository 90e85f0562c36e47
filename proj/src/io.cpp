#include "exprings/io.hpp"

#include "exprings/errors.hpp"

#include <cctype>
#include <sstream>

namespace exprings {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars, const BaseField& base)
        : text_(text), nvars_(nvars), base_(base) {}

    EPoly parse_all() {
        EPoly p = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
    BaseField base_;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    EPoly parse_sum() {
        EPoly acc(nvars_);
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        while (true) {
            EPoly t = parse_term();
            if (negate)
                acc -= t;
            else
                acc += t;
            if (eat('+'))
                negate = false;
            else if (eat('-'))
                negate = true;
            else
                break;
        }
        return acc;
    }

    bool at_scalar_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) return true;
        if (text_[pos_] != '(') return false;
        return parse_scalar(text_.substr(pos_, coeff_end() - pos_)).has_value();
    }

    /// Longest prefix that is a scalar literal: `p[/q]`, `(r)` or `(r)±(s)i`.
    std::size_t coeff_end() const {
        std::size_t start = pos_;
        std::size_t end = start;
        if (text_[start] == '(') {
            end = text_.find(')', start);
            if (end == std::string_view::npos) return text_.size();
            ++end;
            // optional imaginary part
            std::size_t k = end;
            while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
            if (k < text_.size() && text_[k] == 'i') return k + 1;
            if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) {
                std::size_t j = k + 1;
                while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
                if (j < text_.size() && text_[j] == '(') {
                    std::size_t close = text_.find(')', j);
                    if (close != std::string_view::npos) {
                        std::size_t m = close + 1;
                        while (m < text_.size() && std::isspace(static_cast<unsigned char>(text_[m]))) ++m;
                        if (m < text_.size() && text_[m] == 'i') end = m + 1;
                    }
                }
            }
        } else {
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
            std::size_t k = end;
            while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
            if (k < text_.size() && text_[k] == '/') {
                std::size_t j = k + 1;
                while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
                std::size_t d = j;
                while (d < text_.size() && std::isdigit(static_cast<unsigned char>(text_[d]))) ++d;
                if (d > j) end = d;
            }
        }
        return end;
    }

    Scalar parse_coeff() {
        skip_ws();
        std::size_t start = pos_;
        std::size_t end = coeff_end();
        auto s = parse_scalar(text_.substr(start, end - start));
        if (!s) fail("malformed scalar literal", start);
        if (!base_.contains(*s)) fail("non-real scalar over base field Q", start);
        pos_ = end;
        return *s;
    }

    EPoly parse_term() {
        EPoly acc = EPoly::constant(nvars_, Scalar(1));
        if (at_scalar_start()) {
            acc *= parse_coeff();
            if (!eat('*')) return acc;
        }
        acc = acc * parse_factor();
        while (true) {
            if (eat('*')) {
                if (at_scalar_start())
                    acc *= parse_coeff();
                else
                    acc = acc * parse_factor();
            } else if (eat('/')) {
                if (!at_scalar_start()) fail("expected scalar divisor after '/'");
                std::size_t at = pos_;
                Scalar d = parse_coeff();
                if (d.is_zero()) fail("division by zero", at);
                acc *= d.inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    EPoly power_suffix(EPoly x) {
        if (!eat('^')) return x;
        std::string e = digits();
        if (e.empty()) fail("expected exponent after '^'");
        return x.pow(static_cast<unsigned>(std::stoul(e)));
    }

    EPoly parse_factor() {
        skip_ws();
        std::size_t start = pos_;
        if (eat('X')) {
            std::string idx = digits();
            if (idx.empty()) fail("expected variable index after 'X'");
            unsigned long j = std::stoul(idx);
            if (j < 1 || j > nvars_)
                fail("unknown variable X" + idx + " (arity " + std::to_string(nvars_) + ")", start);
            return power_suffix(EPoly::variable(nvars_, j));
        }
        if (eat('E')) {
            expect('(');
            EPoly arg = parse_sum();
            expect(')');
            EPoly value;
            try {
                value = epoly_E(arg, base_);
            } catch (const PartialityError& e) {
                std::size_t line = 1, col = 1;
                for (std::size_t i = 0; i < start; ++i) {
                    if (text_[i] == '\n') {
                        ++line;
                        col = 1;
                    } else {
                        ++col;
                    }
                }
                throw PartialityError(std::string(e.what()) + " (E at " + std::to_string(line) + ":" +
                                      std::to_string(col) + ")");
            }
            return power_suffix(std::move(value));
        }
        if (eat('i')) {
            if (!base_.contains(Scalar::i())) fail("imaginary unit over base field Q", start);
            return EPoly::constant(nvars_, Scalar::i());
        }
        if (eat('(')) {
            EPoly inner = parse_sum();
            expect(')');
            return power_suffix(std::move(inner));
        }
        if (pos_ >= text_.size()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
};

}  // namespace

EPoly parse_epoly(std::string_view text, std::size_t nvars, const BaseField& base) {
    return Parser(text, nvars, base).parse_all();
}

std::string print_epoly(const EPoly& p) { return p.to_string(); }

std::size_t max_variable_index(std::string_view text) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'X') continue;
        std::size_t j = i + 1;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::size_t k = j;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k > j) best = std::max<std::size_t>(best, std::stoul(std::string(text.substr(j, k - j))));
    }
    return best;
}

std::vector<EPoly> parse_epoly_list(std::string_view text, std::size_t nvars, const BaseField& base) {
    std::vector<EPoly> out;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        std::string_view line = text.substr(start, end - start);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string_view::npos && line[first] != '#') {
            try {
                out.push_back(parse_epoly(line, nvars, base));
            } catch (const ParseError& e) {
                throw ParseError(std::string("line ") + std::to_string(lineno) + ": " + e.what(), lineno,
                                 e.column());
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

namespace {

nlohmann::json terms_json(const EPoly& p) {
    auto terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        nlohmann::json t;
        t["coeff"] = c.to_string();
        t["monomial"] = k.mono;
        t["exponent"] = k.exp ? terms_json(*k.exp) : nlohmann::json(nullptr);
        terms.push_back(std::move(t));
    }
    return terms;
}

EPoly terms_from_json(const nlohmann::json& terms, std::size_t nvars) {
    EPoly p(nvars);
    for (const auto& t : terms) {
        auto c = parse_scalar(t.at("coeff").get<std::string>());
        if (!c) throw ParseError("malformed coefficient in epoly/1 document", 1, 1);
        Monomial m = t.at("monomial").get<Monomial>();
        if (m.size() != nvars) throw ParseError("monomial length mismatch in epoly/1 document", 1, 1);
        ExpPtr e;
        if (!t.at("exponent").is_null()) e = std::make_shared<const EPoly>(terms_from_json(t.at("exponent"), nvars));
        p += EPoly::term(nvars, *c, std::move(m), std::move(e));
    }
    return p;
}

}  // namespace

nlohmann::json to_json(const EPoly& p) {
    return {{"schema", "epoly/1"}, {"nvars", p.nvars()}, {"terms", terms_json(p)}};
}

EPoly epoly_from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != "epoly/1") throw ParseError("expected schema epoly/1", 1, 1);
    return terms_from_json(j.at("terms"), j.at("nvars").get<std::size_t>());
}

}  // namespace exprings

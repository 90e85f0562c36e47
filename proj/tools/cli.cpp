#include "cli.hpp"

#include "exprings/diff.hpp"
#include "exprings/errors.hpp"
#include "exprings/ideal.hpp"
#include "exprings/io.hpp"
#include "exprings/models.hpp"
#include "exprings/rabinowitsch.hpp"
#include "exprings/tower.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace exprings::cli {

namespace {

using json = nlohmann::json;

class InputError : public Error {
public:
    using Error::Error;
};

struct Globals {
    bool json = false;
    std::string base = "Q";
    std::size_t vars = 0;
    std::size_t budget = StepBudget::kDefault;

    BaseField field() const { return base == "Qi" ? BaseField::gaussian() : BaseField::rationals(); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Session {
public:
    Session(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

    /// Fixes the variable count from every text the command will parse.
    void scan(const std::string& text) { seen_ = std::max(seen_, max_variable_index(text)); }
    std::size_t nvars() const { return g_.vars ? g_.vars : std::max<std::size_t>(seen_, 1); }

    EPoly parse(const std::string& text) const { return parse_epoly(text, nvars(), g_.field()); }
    std::vector<EPoly> parse_list(const std::string& text) const { return parse_epoly_list(text, nvars(), g_.field()); }
    IdealHandle ideal(const std::string& text) const { return IdealHandle(nvars(), parse_list(text), g_.budget); }

    bool as_json() const { return g_.json; }
    std::size_t budget() const { return g_.budget; }
    const BaseField& field() const { return field_; }
    std::ostream& out() { return out_; }

    void emit(const nlohmann::json& j) { out_ << j.dump(2) << "\n"; }

private:
    const Globals& g_;
    std::ostream& out_;
    std::size_t seen_ = 0;
    BaseField field_ = g_.field();
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

json list_json(const std::vector<EPoly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

std::string combination_text(const std::vector<EPoly>& cofactors, const std::vector<EPoly>& gens) {
    std::string s;
    for (std::size_t i = 0; i < cofactors.size(); ++i) {
        if (cofactors[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "[" + cofactors[i].to_string() + "]*(" + gens[i].to_string() + ")";
    }
    return s.empty() ? "0" : s;
}

Scalar parse_coefficient(const std::string& text) {
    auto s = parse_scalar(text);
    if (!s) throw ParseError("malformed coefficient '" + text + "'", 1, 1);
    return *s;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

FloatValue parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw ParseError("empty coordinate", 1, 1);
    const char* begin = t.c_str();
    char* end = nullptr;
    if (t == "i") return {0.0, 1.0};
    if (t == "-i") return {0.0, -1.0};
    double a = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number '" + text + "'", 1, 1);
    if (*end == '\0') return {a, 0.0};
    if (*end == 'i' && end[1] == '\0') return {0.0, a};
    const char* rest = end;
    if (std::string(rest) == "+i") return {a, 1.0};
    if (std::string(rest) == "-i") return {a, -1.0};
    double b = std::strtod(rest, &end);
    if (end == rest || *end != 'i' || end[1] != '\0') throw ParseError("malformed number '" + text + "'", 1, 1);
    return {a, b};
}

ModelPoint parse_point(const std::string& model, const std::string& at, std::size_t order, std::size_t arity) {
    if (model == "series") {
        std::vector<TruncatedSeries> coords;
        for (const auto& coord : split(at, ';')) {
            std::vector<Scalar> coeffs;
            for (const auto& c : split(coord, ',')) coeffs.push_back(parse_coefficient(c));
            coords.emplace_back(std::move(coeffs), order);
        }
        while (coords.size() < arity) coords.push_back(TruncatedSeries::constant(Scalar(0), order));
        return ModelPoint::in_series(std::move(coords));
    }
    std::vector<FloatValue> coords;
    for (const auto& c : split(at, ',')) coords.push_back(parse_complex(c));
    while (coords.size() < arity) coords.emplace_back(0.0, 0.0);
    return ModelPoint::in_floats(std::move(coords));
}

std::size_t point_arity(const std::string& model, const std::string& at) {
    return split(at, model == "series" ? ';' : ',').size();
}

json value_json(const ModelValue& v) {
    json j;
    j["value"] = model_value_to_string(v);
    if (const auto* s = std::get_if<TruncatedSeries>(&v)) {
        j["coefficients"] = json::array();
        for (const auto& c : s->coeffs()) j["coefficients"].push_back(c.to_string());
    } else {
        const auto& z = std::get<FloatValue>(v);
        j["re"] = z.real();
        j["im"] = z.imag();
    }
    return j;
}

json dagger_json(const DaggerVerdict& v) {
    json j;
    j["layer"] = v.layer;
    j["holds"] = v.holds;
    j["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
    j["verdict"] = v.describe();
    j["tested"] = list_json(v.tested);
    j["skipped"] = list_json(v.skipped);
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    CLI::App app{"Exact computations in free exponential polynomial rings", "exprings"};
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--base", g.base, "Base field")->check(CLI::IsMember({"Q", "Qi"}));
    app.add_option("--vars", g.vars, "Number of variables (default: highest index used)");
    app.add_option("--budget", g.budget, "Reduction step budget per Groebner computation");

    std::function<void(Session&)> action;
    auto on = [&](CLI::App* sub, std::function<void(Session&)> f) { sub->callback([&action, f] { action = f; }); };

    // ord
    std::string ord_expr;
    bool ord_reduce_flag = false;
    auto* ord_cmd = app.add_subcommand("ord", "Ordinal complexity of an epoly");
    ord_cmd->add_option("expr", ord_expr)->required();
    ord_cmd->add_flag("--reduce", ord_reduce_flag, "Also apply one ord-lowering unit multiplication");
    on(ord_cmd, [&](Session& s) {
        s.scan(ord_expr);
        EPoly p = s.parse(ord_expr);
        json j{{"input", p.to_string()}, {"ord", ord(p).to_string()}, {"rank", rank(p)}, {"height", p.height()}};
        std::optional<OrdReduction> r;
        if (ord_reduce_flag) {
            r = ord_reduce(p);
            j["reduction"] = {{"q", r->q.to_string()}, {"reduced", r->reduced.to_string()}, {"ord", ord(r->reduced).to_string()}};
        }
        if (s.as_json()) return s.emit(j);
        s.out() << ord(p).to_string() << "\n";
        if (r)
            s.out() << "E(" << r->q.to_string() << ") * p = " << r->reduced.to_string() << "\n"
                    << ord(r->reduced).to_string() << "\n";
    });

    // eval
    std::string eval_expr, eval_model = "series", eval_at;
    std::size_t eval_order = 8;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate in a model (series K[[t]]/t^N or floating complex)");
    eval_cmd->add_option("expr", eval_expr)->required();
    eval_cmd->add_option("--model", eval_model)->check(CLI::IsMember({"series", "float"}));
    eval_cmd->add_option("--order", eval_order, "Truncation order N")->check(CLI::PositiveNumber);
    eval_cmd->add_option("--at", eval_at, "Point: series coefficients c0,c1,... per variable separated by ';', "
                                           "or complex numbers separated by ','")
        ->required();
    on(eval_cmd, [&](Session& s) {
        s.scan(eval_expr);
        std::size_t arity = point_arity(eval_model, eval_at);
        std::size_t n = std::max(s.nvars(), arity);
        EPoly p = parse_epoly(eval_expr, n, s.field());
        ModelValue v = eval_epoly(p, parse_point(eval_model, eval_at, eval_order, n), s.field());
        if (s.as_json()) {
            json j = value_json(v);
            j["model"] = eval_model;
            return s.emit(j);
        }
        s.out() << model_value_to_string(v) << "\n";
    });

    // derive
    std::string derive_expr;
    std::vector<std::string> derive_action;
    std::size_t derive_var = 0;
    auto* derive_cmd = app.add_subcommand("derive", "Apply a derivation");
    derive_cmd->add_option("expr", derive_expr)->required();
    derive_cmd->add_option("--var", derive_var, "Partial derivative in X_j");
    derive_cmd->add_option("--action", derive_action, "Image D(X_j), one per variable in order");
    on(derive_cmd, [&](Session& s) {
        s.scan(derive_expr);
        for (const auto& a : derive_action) s.scan(a);
        EPoly p = s.parse(derive_expr);
        DerivationSpec spec;
        if (!derive_action.empty()) {
            for (const auto& a : derive_action) spec.variable_action.push_back(s.parse(a));
            while (spec.variable_action.size() < s.nvars()) spec.variable_action.emplace_back(s.nvars());
        } else {
            if (derive_var < 1 || derive_var > s.nvars()) throw DomainError("derive needs --var j (1..n) or --action");
            for (std::size_t j = 1; j <= s.nvars(); ++j)
                spec.variable_action.push_back(EPoly::constant(s.nvars(), Scalar(j == derive_var ? 1 : 0)));
        }
        EPoly d = apply_derivation(spec, p);
        bool consistent = d == derivation_via_partials(spec, p);
        if (s.as_json()) return s.emit({{"input", p.to_string()}, {"result", d.to_string()}, {"consistent", consistent}});
        s.out() << d.to_string() << "\n";
        if (!consistent) s.out() << "warning: structural and partial-derivative routes disagree\n";
    });

    // jacobian
    std::vector<std::string> jac_exprs;
    auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian determinant of a square system");
    jac_cmd->add_option("exprs", jac_exprs)->required();
    on(jac_cmd, [&](Session& s) {
        for (const auto& e : jac_exprs) s.scan(e);
        std::vector<EPoly> f;
        for (const auto& e : jac_exprs) f.push_back(parse_epoly(e, std::max(s.nvars(), jac_exprs.size()), s.field()));
        auto m = jacobian_matrix(f);
        EPoly det = determinant(m);
        if (s.as_json()) {
            json rows = json::array();
            for (const auto& r : m) rows.push_back(list_json(r));
            return s.emit({{"matrix", rows}, {"determinant", det.to_string()}});
        }
        for (const auto& r : m) {
            s.out() << "[";
            for (std::size_t k = 0; k < r.size(); ++k) s.out() << (k ? ", " : "") << r[k].to_string();
            s.out() << "]\n";
        }
        s.out() << "det: " << det.to_string() << "\n";
    });

    // khovanskii
    std::vector<std::string> kh_exprs;
    std::string kh_model = "series", kh_at;
    std::size_t kh_order = 8;
    double kh_tol = 1e-9;
    auto* kh_cmd = app.add_subcommand("khovanskii", "Check a non-singular zero of a square system");
    kh_cmd->add_option("exprs", kh_exprs)->required();
    kh_cmd->add_option("--model", kh_model)->check(CLI::IsMember({"series", "float"}));
    kh_cmd->add_option("--order", kh_order)->check(CLI::PositiveNumber);
    kh_cmd->add_option("--at", kh_at)->required();
    kh_cmd->add_option("--tol", kh_tol, "Float model tolerance");
    on(kh_cmd, [&](Session& s) {
        for (const auto& e : kh_exprs) s.scan(e);
        std::size_t n = std::max({s.nvars(), kh_exprs.size(), point_arity(kh_model, kh_at)});
        std::vector<EPoly> f;
        for (const auto& e : kh_exprs) f.push_back(parse_epoly(e, n, s.field()));
        ModelPoint a = parse_point(kh_model, kh_at, kh_order, n);
        bool ok = khovanskii_check(f, a, kh_tol, s.field());
        if (s.as_json()) {
            json vals = json::array();
            for (const auto& fi : f) vals.push_back(value_json(eval_epoly(fi, a, s.field())));
            return s.emit({{"khovanskii", ok},
                           {"values", vals},
                           {"jacobian", value_json(eval_epoly(jacobian(f), a, s.field()))}});
        }
        s.out() << bool_text(ok) << "\n";
    });

    // member
    std::string mem_ideal, mem_expr, mem_tower;
    std::optional<std::size_t> mem_level;
    auto* mem_cmd = app.add_subcommand("member", "Ideal membership with cofactors");
    mem_cmd->add_option("expr", mem_expr)->required();
    mem_cmd->add_option("--ideal", mem_ideal, "Generator file (one epoly per line)");
    mem_cmd->add_option("--tower", mem_tower, "tower/1 document instead of an ideal file");
    mem_cmd->add_option("--level", mem_level, "Tower level (default: top)");
    on(mem_cmd, [&](Session& s) {
        if (!mem_tower.empty()) {
            TowerIdeal t = TowerIdeal::from_json(json::parse(read_file(mem_tower)));
            EPoly p = parse_epoly(mem_expr, t.nvars(), s.field());
            std::size_t level = mem_level.value_or(t.top_level());
            bool m = t.member(p, level);
            if (s.as_json()) return s.emit({{"member", m}, {"level", level}});
            s.out() << bool_text(m) << "\n";
            return;
        }
        if (mem_ideal.empty()) throw InputError("member needs --ideal or --tower");
        std::string text = read_file(mem_ideal);
        s.scan(text);
        s.scan(mem_expr);
        IdealHandle I = s.ideal(text);
        MembershipResult r = membership(I, s.parse(mem_expr));
        if (s.as_json())
            return s.emit({{"member", r.member},
                           {"verified", r.verified},
                           {"cofactors", r.member ? list_json(r.cofactors) : json(nullptr)},
                           {"slice", r.slice}});
        s.out() << bool_text(r.member) << "\n";
    });

    // intersect
    std::string int_ideal;
    std::size_t int_layer = 0;
    auto* int_cmd = app.add_subcommand("intersect", "Generators of I ∩ R_r");
    int_cmd->add_option("--ideal", int_ideal)->required();
    int_cmd->add_option("--layer", int_layer, "r")->required();
    on(int_cmd, [&](Session& s) {
        std::string text = read_file(int_ideal);
        s.scan(text);
        IdealHandle r = intersect_subring(s.ideal(text), int_layer);
        if (s.as_json()) return s.emit({{"layer", int_layer}, {"generators", list_json(r.generators())}});
        for (const auto& g : r.generators()) s.out() << g.to_string() << "\n";
    });

    // aug
    std::string aug_expr, aug_ideal;
    std::size_t aug_layer = 0;
    auto* aug_cmd = app.add_subcommand("aug", "Augmentation R_l -> R_{l-1}, optionally modulo an ideal");
    aug_cmd->add_option("expr", aug_expr)->required();
    aug_cmd->add_option("--layer", aug_layer)->required();
    aug_cmd->add_option("--ideal", aug_ideal, "Ideal of R_{l-1} for the kernel test");
    on(aug_cmd, [&](Session& s) {
        s.scan(aug_expr);
        std::string text = aug_ideal.empty() ? "" : read_file(aug_ideal);
        s.scan(text);
        EPoly p = s.parse(aug_expr);
        if (aug_ideal.empty()) {
            EPoly img = augmentation(p, aug_layer);
            if (s.as_json()) return s.emit({{"image", img.to_string()}});
            s.out() << img.to_string() << "\n";
            return;
        }
        auto v = augmentation_mod(p, s.ideal(text), aug_layer);
        if (s.as_json()) return s.emit({{"image", v.image.to_string()}, {"in_kernel", v.in_kernel}});
        s.out() << v.image.to_string() << "\n" << "in kernel: " << bool_text(v.in_kernel) << "\n";
    });

    // dagger
    std::string dag_ideal;
    std::optional<std::size_t> dag_layer;
    auto* dag_cmd = app.add_subcommand("dagger", "Check u ∈ I ∩ R_{n-1} => E(u) - 1 ∈ I on generators");
    dag_cmd->add_option("--ideal", dag_ideal)->required();
    dag_cmd->add_option("--layer", dag_layer, "n (default: height of the generators)");
    on(dag_cmd, [&](Session& s) {
        std::string text = read_file(dag_ideal);
        s.scan(text);
        IdealHandle I = s.ideal(text);
        DaggerVerdict v = dagger_check(I, dag_layer.value_or(I.layer()));
        if (s.as_json()) return s.emit(dagger_json(v));
        s.out() << v.describe() << "\n";
    });

    // extend
    std::string ext_ideal, ext_out;
    std::size_t ext_levels = 1;
    std::optional<std::size_t> ext_base;
    std::vector<std::string> ext_seeds, ext_queries;
    bool ext_no_refresh = false;
    auto* ext_cmd = app.add_subcommand("extend", "Extend an ideal along the tower of E-ring layers");
    ext_cmd->add_option("--ideal", ext_ideal)->required();
    ext_cmd->add_option("--levels", ext_levels, "Number of levels to add");
    ext_cmd->add_option("--base-level", ext_base, "Base layer (default: height of the generators)");
    ext_cmd->add_option("--seed", ext_seeds, "Extra tracked element of the base ideal");
    ext_cmd->add_option("--query", ext_queries, "Membership query at the top level");
    ext_cmd->add_option("--out", ext_out, "Write the tower/1 document here");
    ext_cmd->add_flag("--no-refresh", ext_no_refresh, "Disable automatic seed refresh");
    on(ext_cmd, [&](Session& s) {
        std::string text = read_file(ext_ideal);
        s.scan(text);
        for (const auto& q : ext_seeds) s.scan(q);
        for (const auto& q : ext_queries) s.scan(q);
        IdealHandle I = s.ideal(text);
        std::vector<EPoly> seeds;
        for (const auto& q : ext_seeds) seeds.push_back(s.parse(q));
        TowerIdeal t(I, ext_base.value_or(I.layer()), seeds);
        t.set_auto_refresh(!ext_no_refresh);
        t = extend_to_E_ideal(t, ext_levels);
        json answers = json::array();
        std::vector<std::pair<std::string, bool>> results;
        for (const auto& q : ext_queries) {
            bool m = t.member(s.parse(q));
            results.emplace_back(q, m);
            answers.push_back({{"query", q}, {"member", m}});
        }
        json doc = t.to_json();
        if (!ext_out.empty()) {
            std::ofstream f(ext_out);
            if (!f) throw InputError("cannot write " + ext_out);
            f << doc.dump(2) << "\n";
        }
        if (s.as_json()) return s.emit({{"tower", doc}, {"queries", answers}});
        s.out() << "levels " << t.base_level() << ".." << t.top_level() << "\n";
        for (std::size_t l = t.base_level(); l < t.top_level(); ++l) {
            s.out() << "tracked at level " << l << ":";
            auto d = t.decomposition(l);
            for (const auto& f : d.seeds()) s.out() << " " << f.to_string() << ";";
            s.out() << "\n";
        }
        for (const auto& [q, m] : results) s.out() << q << ": " << bool_text(m) << "\n";
    });

    // saturate
    std::string sat_ideal;
    std::size_t sat_iterations = 32;
    auto* sat_cmd = app.add_subcommand("saturate", "Saturation loop for an ideal of R_1");
    sat_cmd->add_option("--ideal", sat_ideal)->required();
    sat_cmd->add_option("--max-iterations", sat_iterations);
    on(sat_cmd, [&](Session& s) {
        std::string text = read_file(sat_ideal);
        s.scan(text);
        IdealHandle I = s.ideal(text);
        SaturationOutcome o = saturate_R1(I, sat_iterations);
        json steps = json::array();
        for (const auto& st : o.steps) steps.push_back({{"added", st.added.to_string()}, {"from", st.source.to_string()}});
        if (s.as_json()) {
            json j{{"success", o.success},
                   {"iterations", o.iterations},
                   {"steps", steps},
                   {"generators", list_json(o.ideal.generators())}};
            if (o.success) {
                j["dagger"] = dagger_json(o.dagger);
            } else {
                j["certificate"] = list_json(o.certificate);
                j["verified"] = o.certificate_verified;
            }
            return s.emit(j);
        }
        s.out() << (o.success ? "stabilized" : "unit ideal reached") << " after " << o.iterations << " iteration"
                << (o.iterations == 1 ? "" : "s") << "\n";
        for (const auto& st : o.steps) s.out() << "added " << st.added.to_string() << " from " << st.source.to_string() << "\n";
        if (o.success) {
            s.out() << "dagger: " << o.dagger.describe() << "\n";
        } else {
            s.out() << "1 = " << combination_text(o.certificate, o.ideal.generators())
                    << (o.certificate_verified ? " (verified)" : " (VERIFICATION FAILED)") << "\n";
        }
    });

    // rabinowitsch
    std::string rab_ideal, rab_g;
    auto* rab_cmd = app.add_subcommand("rabinowitsch", "Certificate g^d ∈ <h> via 1 ∈ <h, 1 - Y g>");
    rab_cmd->add_option("--ideal", rab_ideal)->required();
    rab_cmd->add_option("--g", rab_g)->required();
    on(rab_cmd, [&](Session& s) {
        std::string text = read_file(rab_ideal);
        s.scan(text);
        s.scan(rab_g);
        NssReport r = nullstellensatz_pipeline(s.parse_list(text), s.parse(rab_g), s.budget());
        if (s.as_json()) return s.emit(r.to_json());
        s.out() << r.to_text();
    });

    auto* demo_cmd = app.add_subcommand("demo", "Run the worked examples");
    std::optional<std::uint64_t> demo_seed;
    demo_cmd->add_option("--seed", demo_seed, "Also print random property samples drawn from this seed");
    on(demo_cmd, [&](Session& s) { s.out() << demo(s.as_json(), demo_seed); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInput;
    }

    Session session(g, out);
    try {
        action(session);
        return kOk;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
}

}  // namespace exprings::cli

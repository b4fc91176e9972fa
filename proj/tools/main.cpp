#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skewhopf/builtins.hpp"
#include "skewhopf/classic.hpp"
#include "skewhopf/parse.hpp"
#include "skewhopf/report.hpp"
#include "skewhopf/winding.hpp"

namespace {

using namespace skewhopf;

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    long long budget = Tower::kDefaultBudget;
};

long long env_budget_default() {
    if (const char* env = std::getenv("SKEWHOPF_REWRITE_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw SkewError("SKEWHOPF_REWRITE_BUDGET is not an integer");
        }
    }
    return Tower::kDefaultBudget;
}

// FILE is a path to a .hopf source; bare builtin names are accepted too.
struct Input {
    HopfTower ht;
    std::string digest;
};

Input load(const std::string& file, const Options& opt) {
    std::ifstream in(file);
    if (in) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        return {parse(text, opt.budget), input_digest(text)};
    }
    HopfTower ht = builtin(file, opt.budget);
    return {ht, input_digest(serialize(ht))};
}

int emit(const Report& report, const Options& opt) {
    std::cout << (opt.json ? report.to_json() : report.to_text());
    return report.exit_code();
}

std::size_t step_to_gen(const HopfTower& ht, int step) {
    if (step < 2 || static_cast<std::size_t>(step) > ht.arity())
        throw SkewError("step out of range: expected 2 <= step <= " +
                        std::to_string(ht.arity()));
    return static_cast<std::size_t>(step - 1);
}

Character parse_assignments(const std::string& text, const Tower& t, std::size_t count) {
    Character m{std::vector<Scalar>(count, Scalar(0))};
    std::vector<bool> seen(count, false);
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ',')) {
        auto eq = piece.find('=');
        if (eq == std::string::npos) throw SkewError("assignment must look like gen=value");
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string name = trim(piece.substr(0, eq));
        std::string value = trim(piece.substr(eq + 1));
        auto idx = t.index_of(name);
        if (!idx) throw SkewError("unknown generator '" + name + "'");
        if (*idx >= count)
            throw SkewError("generator '" + name + "' is not below the chosen step");
        auto q = parse_rational(value);
        if (!q) throw SkewError("malformed rational '" + value + "'");
        m.values[*idx] = *q;
        seen[*idx] = true;
    }
    for (std::size_t i = 0; i < count; ++i)
        if (!seen[i]) throw SkewError("missing assignment for generator '" + t.name(i) + "'");
    return m;
}

std::vector<std::size_t> parse_gen_list(const std::string& text, const Tower& t) {
    std::vector<std::size_t> out;
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ',')) {
        auto b = piece.find_first_not_of(" \t");
        auto e = piece.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        std::string name = piece.substr(b, e - b + 1);
        auto idx = t.index_of(name);
        if (!idx) throw SkewError("unknown generator '" + name + "'");
        out.push_back(*idx);
    }
    return out;
}

std::string variety_to_string(const VarietyDescription& v, const Tower& t) {
    std::string out;
    for (std::size_t i = 0; i < v.gens.size(); ++i) {
        if (!out.empty()) out += ", ";
        switch (v.gens[i].kind) {
            case VarietyDescription::Kind::free_param: out += t.name(i) + " free"; break;
            case VarietyDescription::Kind::forced:
                out += t.name(i) + " = " + to_string(v.gens[i].value);
                break;
            case VarietyDescription::Kind::unresolved: out += t.name(i) + " unresolved"; break;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for skew polynomial towers with Hopf structure"};
    app.require_subcommand(1);

    Options opt;
    try {
        opt.budget = env_budget_default();
    } catch (const SkewError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    app.add_flag("--json", opt.json, "emit the report as JSON");
    app.add_option("--seed", opt.seed, "seed for sampled diagnostics");
    app.add_option("--rewrite-budget", opt.budget, "rewrite step budget per operation");

    std::string file, expr_text, at_text, gens_text, emit_name;
    int step = 2;
    unsigned max_deg = 3, power = 1, max_m = 10;

    CLI::App* c_check = app.add_subcommand("check", "validate the tower and all Hopf laws");
    c_check->add_option("file", file)->required();

    CLI::App* c_nf = app.add_subcommand("nf", "canonical form of an expression");
    c_nf->add_option("file", file)->required();
    c_nf->add_option("expr", expr_text)->required();

    CLI::App* c_prim = app.add_subcommand("primitives", "primitive space up to a degree bound");
    c_prim->add_option("file", file)->required();
    c_prim->add_option("--max-deg", max_deg)->default_val(3);

    CLI::App* c_anti = app.add_subcommand("antipode", "apply a power of the antipode");
    c_anti->add_option("file", file)->required();
    c_anti->add_option("--power", power)->default_val(1);
    c_anti->add_option("expr", expr_text);

    CLI::App* c_order = app.add_subcommand("antipode-order", "antipode order dichotomy");
    c_order->add_option("file", file)->required();
    c_order->add_option("--max-m", max_m)->default_val(10);

    CLI::App* c_chars = app.add_subcommand("characters", "solve the character equations");
    c_chars->add_option("file", file)->required();

    CLI::App* c_classify = app.add_subcommand("classify", "invariant/variant type of a step");
    c_classify->add_option("file", file)->required();
    c_classify->add_option("--step", step)->required();

    CLI::App* c_fiber = app.add_subcommand("fiber", "character fiber over a base character");
    c_fiber->add_option("file", file)->required();
    c_fiber->add_option("--step", step)->required();
    c_fiber->add_option("--at", at_text)->required();

    CLI::App* c_s4 = app.add_subcommand("s4", "decompose S^4 into winding maps");
    c_s4->add_option("file", file)->required();

    CLI::App* c_norm = app.add_subcommand("normality", "bounded normality probe for an ideal");
    c_norm->add_option("file", file)->required();
    c_norm->add_option("--gens", gens_text)->required();
    c_norm->add_option("--max-deg", max_deg)->default_val(3);

    CLI::App* c_examples = app.add_subcommand("examples", "list or emit builtin presentations");
    c_examples->add_option("--emit", emit_name);

    CLI11_PARSE(app, argc, argv);

    try {
        Report report;
        if (c_examples->parsed()) {
            if (!emit_name.empty()) {
                std::cout << serialize(builtin(emit_name, opt.budget));
                return 0;
            }
            for (const auto& name : builtin_sample_names()) std::cout << name << "\n";
            return 0;
        }

        Input in = load(file, opt);
        report.input_digest = in.digest;
        const HopfTower& ht = in.ht;
        const Tower& t = ht.tower();

        if (c_check->parsed()) {
            report.command = "check";
            report.checks = check_all(ht);
        } else if (c_nf->parsed()) {
            report.command = "nf";
            NcPoly p = normal_form(parse_expr(expr_text, t), t);
            report.results["normal_form"] = to_string(p, t.names());
        } else if (c_prim->parsed()) {
            report.command = "primitives";
            PrimitiveBasis basis = primitives(ht, max_deg);
            report.results["dimension"] = std::to_string(basis.basis.size());
            report.results["complete_up_to_degree"] = std::to_string(basis.max_degree);
            std::string joined;
            for (const auto& p : basis.basis) {
                if (!joined.empty()) joined += "; ";
                joined += to_string(p, t.names());
            }
            report.results["basis"] = joined;
        } else if (c_anti->parsed()) {
            report.command = "antipode";
            if (expr_text.empty()) {
                for (std::size_t i = 0; i < t.arity(); ++i) {
                    NcPoly image = antipode_power(NcPoly::generator(t.arity(), i), power, ht);
                    report.results["S^" + std::to_string(power) + "(" + t.name(i) + ")"] =
                        to_string(image, t.names());
                }
            } else {
                NcPoly p = normal_form(parse_expr(expr_text, t), t);
                report.results["result"] = to_string(antipode_power(p, power, ht), t.names());
            }
        } else if (c_order->parsed()) {
            report.command = "antipode-order";
            AntipodeOrder order = antipode_order(ht, max_m);
            switch (order.kind) {
                case AntipodeOrder::Kind::involutive:
                    report.results["order"] = "S^2 = id";
                    break;
                case AntipodeOrder::Kind::infinite:
                    report.results["order"] = "infinite";
                    report.results["witness_generator"] = t.name(order.witness_gen);
                    report.results["increment"] = to_string(order.increment, t.names());
                    break;
                case AntipodeOrder::Kind::undecided:
                    report.checks.unresolved("antipode.order", "order dichotomy of the antipode",
                                             order.note);
                    break;
            }
        } else if (c_chars->parsed()) {
            report.command = "characters";
            VarietyDescription v = character_variety(t);
            report.results["variety"] = variety_to_string(v, t);
            if (!v.consistent)
                report.checks.fail("variety.consistency", "the character equations are solvable",
                                   v.notes.empty() ? "inconsistent" : v.notes.front());
            for (std::size_t i = 0; i < v.gens.size(); ++i)
                if (v.gens[i].kind == VarietyDescription::Kind::unresolved)
                    report.checks.unresolved("variety.generator[" + t.name(i) + "]",
                                             "triangular substitution",
                                             "nonlinear residue blocks this generator");
        } else if (c_classify->parsed()) {
            report.command = "classify";
            Classification c = classify_extension(ht, step_to_gen(ht, step));
            switch (c.type) {
                case ExtensionType::invariant: report.results["type"] = "Invariant"; break;
                case ExtensionType::variant: report.results["type"] = "Variant"; break;
                case ExtensionType::inconsistent:
                    report.results["type"] = "Inconsistent";
                    report.checks.fail("classify.dichotomy",
                                       "invariant/variant dichotomy of a step", c.detail);
                    break;
            }
            report.results["detail"] = c.detail;
        } else if (c_fiber->parsed()) {
            report.command = "fiber";
            std::size_t g = step_to_gen(ht, step);
            Character m = parse_assignments(at_text, t, g);
            FiberResult fiber = goodearl_fiber(ht, g, m);
            switch (fiber.kind) {
                case FiberResult::Kind::line: report.results["fiber"] = "Line"; break;
                case FiberResult::Kind::point:
                    report.results["fiber"] = "Point";
                    report.results["lambda0"] = to_string(fiber.lambda0);
                    break;
                case FiberResult::Kind::empty: report.results["fiber"] = "Empty"; break;
                case FiberResult::Kind::unresolved:
                    report.results["fiber"] = "Unresolved";
                    report.checks.unresolved("fiber.kind", "character fiber dichotomy",
                                             fiber.diagnostics.empty()
                                                 ? "unresolved"
                                                 : fiber.diagnostics.front());
                    break;
            }
            if (!fiber.description.empty()) report.results["description"] = fiber.description;
        } else if (c_s4->parsed()) {
            report.command = "s4";
            S4Decomposition dec = s4_decompose(ht);
            if (dec.resolved) {
                for (std::size_t i = 0; i < t.arity(); ++i)
                    report.results["chi(" + t.name(i) + ")"] = to_string(dec.chi.values[i]);
            } else {
                report.checks.unresolved("s4.decomposition",
                                         "S^4 as left and right winding maps", dec.diagnostic);
            }
        } else if (c_norm->parsed()) {
            report.command = "normality";
            std::vector<std::size_t> gens = parse_gen_list(gens_text, t);
            NormalityResult res = normality_search(ht, gens, max_deg);
            if (res.normal) {
                report.results["normality"] =
                    "normal up to degree " + std::to_string(res.max_degree);
                report.checks.pass("normality.ideal", "stability under both adjoint coactions");
            } else {
                report.results["normality"] = "not normal";
                report.results["element"] = to_string(res.element, t.names());
                report.results["side"] = res.side;
                report.checks.fail("normality.ideal", "stability under both adjoint coactions",
                                   to_string(res.residual, t.names()));
            }
        }
        return emit(report, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SkewError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

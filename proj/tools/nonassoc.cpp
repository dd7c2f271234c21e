// Command-line front end: every pipeline of the library as a subcommand,
// with deterministic text output or --json. Exit codes: 0 success, 1 domain
// error (bad expression, algebra mismatch, ...), 2 usage error.

#include "CLI11.hpp"

#include "nonassoc/algebra.hpp"
#include "nonassoc/assoc.hpp"
#include "nonassoc/error.hpp"
#include "nonassoc/expr.hpp"
#include "nonassoc/json_io.hpp"
#include "nonassoc/observability.hpp"
#include "nonassoc/parse.hpp"
#include "nonassoc/ym.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace nonassoc;

namespace {

bool use_color() {
    if (!isatty(STDOUT_FILENO)) return false;
    const char* env = std::getenv("NONASSOC_COLOR");
    return env == nullptr || std::string(env) != "0";
}

std::string styled(const std::string& text, const char* code) {
    if (!use_color()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

AlgebraPtr resolve_algebra(const std::string& name, const std::string& file) {
    if (!name.empty() && !file.empty())
        throw CLI::ValidationError("--algebra and --algebra-file are mutually exclusive");
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open algebra file: " + file);
        ordered_json j;
        try {
            in >> j;
        } catch (const std::exception& ex) {
            throw Error("bad algebra file " + file + ": " + ex.what());
        }
        return algebra_from_json(j);
    }
    if (name.empty())
        throw CLI::ValidationError("an algebra is required: --algebra NAME or --algebra-file PATH");
    return named_algebra(name);
}

std::vector<Element> parse_generators(const AlgebraPtr& alg, const std::vector<std::string>& texts) {
    std::vector<Element> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(parse_element(alg, t));
    return out;
}

StateVector parse_state(const AlgebraPtr& alg, const std::vector<std::string>& sites) {
    std::vector<StateVector::Site> out;
    out.reserve(sites.size());
    for (const std::string& s : sites) {
        std::size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--site takes WEIGHT:ELEMENT, got '" + s + "'");
        out.push_back({Rational::from_string(s.substr(0, colon)),
                       parse_element(alg, s.substr(colon + 1))});
    }
    return StateVector(std::move(out));
}

CompositeOp parse_composite(const std::string& text) {
    Expr e = parse(text);
    const auto& ts = e.terms();
    if (ts.size() != 1 || !ts.begin()->second.is_one())
        throw Error("commutator operand must be a single unscaled product: " + text);
    return CompositeOp(ts.begin()->first);
}

std::string join_basis(const std::vector<Element>& basis) {
    std::string out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k) out += ", ";
        out += basis[k].str();
    }
    return out;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void print_subspace(const Subspace& sub, bool json) {
    std::vector<Element> basis = sub.basis();
    if (json) {
        ordered_json j;
        j["dim"] = sub.dim();
        j["basis"] = ordered_json::array();
        for (const Element& b : basis) j["basis"].push_back(element_to_json(b));
        emit_json(j);
        return;
    }
    std::cout << "dim " << sub.dim() << ": " << join_basis(basis) << "\n";
}

std::string tuple_str(const std::vector<int>& t) {
    std::string out = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k) out += ", ";
        out += std::to_string(t[k]);
    }
    return out + ")";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for non-associative operator algebras"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");

    auto add_sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    std::string alg_name, alg_file;
    auto add_algebra_opts = [&](CLI::App* sub) {
        sub->add_option("--algebra", alg_name,
                        "built-in algebra (r, c, quat, oct, split-oct, sed, ...)");
        sub->add_option("--algebra-file", alg_file, "JSON file with a structure-constant table");
    };

    // ---- algebra ---------------------------------------------------------
    CLI::App* algebra_cmd = add_sub(&app, "algebra", "inspect an algebra or test an identity");
    add_algebra_opts(algebra_cmd);
    bool table = false, zero_div = false;
    std::string check_name;
    algebra_cmd->add_flag("--table", table, "print the full multiplication table");
    algebra_cmd->add_option("--check", check_name, "test an identity by exhaustive basis scan")
        ->check(CLI::IsMember({"alternative", "flexible", "moufang", "associative", "commutative"}));
    algebra_cmd->add_flag("--zero-divisor", zero_div, "search for a two-term zero divisor pair");
    algebra_cmd->callback([&] {
        AlgebraPtr alg = resolve_algebra(alg_name, alg_file);
        if (!check_name.empty()) {
            IdentityCheck res = check_identity(alg, identity_from_name(check_name));
            if (json) {
                ordered_json j;
                j["identity"] = check_name;
                j["holds"] = res.holds;
                j["counterexample"] =
                    res.holds ? ordered_json(nullptr) : ordered_json(res.counterexample);
                emit_json(j);
            } else if (res.holds) {
                std::cout << styled("holds", "32") << "\n";
            } else {
                std::cout << styled("counterexample", "31") << " " << tuple_str(res.counterexample)
                          << "\n";
            }
            return;
        }
        if (zero_div) {
            std::optional<ZeroDivisorPair> zd = find_zero_divisor(alg);
            if (json) {
                ordered_json j;
                j["found"] = zd.has_value();
                if (zd) {
                    j["u"] = element_to_json(zd->u);
                    j["v"] = element_to_json(zd->v);
                }
                emit_json(j);
            } else if (zd) {
                std::cout << "u = " << zd->u.str() << "\n" << "v = " << zd->v.str() << "\n";
            } else {
                std::cout << "none\n";
            }
            return;
        }
        if (table) {
            if (json) {
                emit_json(algebra_to_json(*alg));
                return;
            }
            for (int i = 0; i < alg->dim(); ++i)
                for (int j2 = 0; j2 < alg->dim(); ++j2)
                    std::cout << "e" << i << " * e" << j2 << " = "
                              << Element(alg, QVec(alg->basis_product(i, j2))).str() << "\n";
            return;
        }
        if (json) {
            emit_json(algebra_to_json(*alg));
            return;
        }
        std::cout << "name: " << alg->name() << "\n" << "dim: " << alg->dim() << "\n";
        if (alg->cd_constructed()) {
            std::cout << "construction: cayley-dickson";
            if (!alg->gammas().empty()) {
                std::cout << " (";
                for (std::size_t k = 0; k < alg->gammas().size(); ++k)
                    std::cout << (k ? ", " : "") << alg->gammas()[k];
                std::cout << ")";
            }
            std::cout << "\n";
        } else {
            std::cout << "construction: table\n";
        }
        std::cout << "involution: " << (alg->has_involution() ? "yes" : "no") << "\n";
    });

    // ---- assoc -----------------------------------------------------------
    CLI::App* assoc_cmd = add_sub(&app, "assoc", "associator (ab)c -+ a(bc) of three elements");
    add_algebra_opts(assoc_cmd);
    std::string triple_text, assoc_sign = "minus";
    assoc_cmd->add_option("--triple", triple_text, "three comma-separated elements")->required();
    assoc_cmd->add_option("--sign", assoc_sign, "minus (associator) or plus")
        ->check(CLI::IsMember({"minus", "plus"}));
    assoc_cmd->callback([&] {
        AlgebraPtr alg = resolve_algebra(alg_name, alg_file);
        std::vector<std::string> parts = split_csv(triple_text);
        if (parts.size() != 3)
            throw CLI::ValidationError("--triple needs exactly three comma-separated elements");
        Element a = parse_element(alg, parts[0]);
        Element b = parse_element(alg, parts[1]);
        Element c = parse_element(alg, parts[2]);
        Element left = mul(mul(a, b), c), right = mul(a, mul(b, c));
        Element res = assoc_sign == "minus" ? left - right : left + right;
        if (json)
            emit_json(element_to_json(res));
        else
            std::cout << res.str() << "\n";
    });

    // ---- nucleus ---------------------------------------------------------
    CLI::App* nucleus_cmd = add_sub(&app, "nucleus", "elements associating with all pairs");
    add_algebra_opts(nucleus_cmd);
    nucleus_cmd->callback(
        [&] { print_subspace(nucleus(resolve_algebra(alg_name, alg_file)), json); });

    // ---- subalgebra ------------------------------------------------------
    CLI::App* subalg_cmd = add_sub(&app, "subalgebra", "product closure of generators");
    add_algebra_opts(subalg_cmd);
    std::vector<std::string> gen_texts;
    subalg_cmd->add_option("--gen", gen_texts, "generator element (repeatable)")->required();
    subalg_cmd->callback([&] {
        AlgebraPtr alg = resolve_algebra(alg_name, alg_file);
        print_subspace(generated_subalgebra(parse_generators(alg, gen_texts)), json);
    });

    // ---- classify --------------------------------------------------------
    CLI::App* classify_cmd = add_sub(&app, "classify", "observability of a generated closure");
    add_algebra_opts(classify_cmd);
    classify_cmd->add_option("--gen", gen_texts, "generator element (repeatable)")->required();
    classify_cmd->callback([&] {
        AlgebraPtr alg = resolve_algebra(alg_name, alg_file);
        ObservabilityReport rep = classify(parse_generators(alg, gen_texts));
        if (json) {
            emit_json(report_to_json(rep));
            return;
        }
        std::cout << (rep.observable ? styled("observable", "32")
                                     : styled("not observable", "31"))
                  << ": closure dim " << rep.closure.dim() << "\n";
        if (rep.witness) {
            const auto& w = *rep.witness;
            std::cout << "witness: basis triple (" << w[0] << ", " << w[1] << ", " << w[2]
                      << ")\n";
        }
        if (rep.involution_closed)
            std::cout << "involution closed: " << (*rep.involution_closed ? "yes" : "no") << "\n";
    });

    // ---- expect ----------------------------------------------------------
    CLI::App* expect_cmd = add_sub(&app, "expect", "bracketed expectation value over a state");
    add_algebra_opts(expect_cmd);
    std::vector<std::string> site_texts;
    std::string op_text, bracketing = "left";
    expect_cmd->add_option("--site", site_texts, "WEIGHT:ELEMENT site (repeatable)")->required();
    expect_cmd->add_option("--op", op_text, "operator element")->required();
    expect_cmd->add_option("--bracketing", bracketing, "(psi* M) psi or psi* (M psi)")
        ->check(CLI::IsMember({"left", "right"}));
    expect_cmd->callback([&] {
        AlgebraPtr alg = resolve_algebra(alg_name, alg_file);
        Element res = expectation(parse_state(alg, site_texts), parse_element(alg, op_text),
                                  bracketing == "left" ? Bracketing::left : Bracketing::right);
        if (json)
            emit_json(element_to_json(res));
        else
            std::cout << res.str() << "\n";
    });

    // ---- defect ----------------------------------------------------------
    CLI::App* defect_cmd = add_sub(&app, "defect", "left minus right bracketed expectation");
    add_algebra_opts(defect_cmd);
    defect_cmd->add_option("--site", site_texts, "WEIGHT:ELEMENT site (repeatable)")->required();
    defect_cmd->add_option("--op", op_text, "operator element")->required();
    defect_cmd->callback([&] {
        AlgebraPtr alg = resolve_algebra(alg_name, alg_file);
        Element res = bracketing_defect(parse_state(alg, site_texts), parse_element(alg, op_text));
        if (json)
            emit_json(element_to_json(res));
        else
            std::cout << res.str() << "\n";
    });

    // ---- commutator ------------------------------------------------------
    CLI::App* comm_cmd = add_sub(&app, "commutator", "composite (anti)commutator in normal form");
    std::string a_text, b_text, comm_sign = "minus", nesting_name = "left";
    comm_cmd->add_option("--a", a_text, "left composite operand")->required();
    comm_cmd->add_option("--b", b_text, "right composite operand")->required();
    comm_cmd->add_option("--sign", comm_sign, "minus (commutator) or plus (anticommutator)")
        ->check(CLI::IsMember({"minus", "plus"}));
    comm_cmd->add_option("--nesting", nesting_name, "normal-form comb direction")
        ->check(CLI::IsMember({"left", "right"}));
    comm_cmd->callback([&] {
        CommutatorResult res = composite_commutator(
            comm_sign == "minus" ? Sign::minus : Sign::plus, parse_composite(a_text),
            parse_composite(b_text),
            nesting_name == "left" ? Nesting::left : Nesting::right);
        if (json) {
            emit_json(commutator_to_json(res));
            return;
        }
        std::cout << "raw: " << print(res.raw) << "\n";
        std::cout << "normal: " << print(res.normal) << "\n";
        std::cout << "associators: " << res.associators.size() << "\n";
        for (const AssocAtom& atom : res.associators)
            std::cout << "  " << atom.label << ": "
                      << print(make_assoc_atom(atom.sign, atom.slots[0], atom.slots[1],
                                               atom.slots[2]))
                      << "\n";
    });

    // ---- normalform ------------------------------------------------------
    CLI::App* nf_cmd = add_sub(&app, "normalform", "reassociate into comb + associator atoms");
    std::string expr_text;
    nf_cmd->add_option("--expr", expr_text, "expression to rewrite")->required();
    nf_cmd->add_option("--nesting", nesting_name, "left or right comb")
        ->check(CLI::IsMember({"left", "right"}));
    nf_cmd->callback([&] {
        Expr normal = normal_form(parse(expr_text),
                                  nesting_name == "left" ? Nesting::left : Nesting::right);
        if (json)
            emit_json(expr_to_json(normal));
        else
            std::cout << print(normal) << "\n";
    });

    // ---- ym --------------------------------------------------------------
    CLI::App* ym_cmd = add_sub(&app, "ym", "gauge field equations and symbolic derivatives");
    ym_cmd->require_subcommand(1);

    CLI::App* ym_eq = add_sub(ym_cmd, "equations", "derive d_nu F^{a mu nu} = 0");
    std::string group = "abelian", gauge_symbol = "A", factor = "phi";
    int colors = 1, decompose_depth = 0, inner_range = 2;
    bool covariant = false;
    ym_eq->add_option("--group", group, "gauge group")
        ->check(CLI::IsMember({"abelian", "su2"}));
    CLI::Option* colors_opt =
        ym_eq->add_option("--colors", colors, "number of abelian colors")->check(CLI::Range(1, 16));
    ym_eq->add_flag("--covariant", covariant, "use the gauge-covariant divergence");
    ym_eq->add_option("--gauge", gauge_symbol, "gauge potential symbol");
    ym_eq->add_option("--decompose", decompose_depth,
                      "replace the potential by nested factor products of this depth")
        ->check(CLI::Range(1, 6));
    ym_eq->add_option("--factor", factor, "factor symbol for the decomposition");
    ym_eq->add_option("--range", inner_range, "number of values per inner dummy index")
        ->check(CLI::Range(1, 8));
    ym_eq->add_option("--nesting", nesting_name, "bracketing of the decomposed products")
        ->check(CLI::IsMember({"left", "right"}));
    ym_eq->callback([&] {
        if (group == "su2" && colors_opt->count() > 0)
            throw CLI::ValidationError("--colors applies to the abelian group only");
        GaugeContext ctx = group == "su2" ? GaugeContext::su2() : GaugeContext::abelian(colors);
        std::vector<DerivedEquation> eqs = ym_equations(ctx, gauge_symbol, covariant);
        if (decompose_depth > 0) {
            Decomposition dec;
            dec.depth = decompose_depth;
            dec.nesting = nesting_name == "left" ? Nesting::left : Nesting::right;
            dec.target = gauge_symbol;
            dec.factor = factor;
            dec.inner_range = inner_range;
            eqs = substitute_decomposition(ctx, eqs, dec);
        }
        for (const DerivedEquation& eq : eqs) {
            IndexLint lint = lint_equation(eq);
            if (!lint.ok) throw Error("index lint failed: " + lint.message);
        }
        if (json) {
            ordered_json j;
            j["group"] = ctx.group();
            j["equations"] = ordered_json::array();
            for (const DerivedEquation& eq : eqs) j["equations"].push_back(equation_to_json(eq));
            emit_json(j);
            return;
        }
        for (const DerivedEquation& eq : eqs)
            std::cout << "eq[a=" << eq.color << ",mu=" << eq.mu << "]: " << equation_str(eq)
                      << "\n";
    });

    CLI::App* ym_d = add_sub(ym_cmd, "derive", "partial derivative of an expression");
    std::string index;
    ym_d->add_option("--expr", expr_text, "expression to differentiate")->required();
    ym_d->add_option("--index", index, "derivative index label")->required();
    ym_d->callback([&] {
        Expr res = derive(parse(expr_text), index);
        if (json)
            emit_json(expr_to_json(res));
        else
            std::cout << print(res) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

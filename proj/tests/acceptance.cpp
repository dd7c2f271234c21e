// Acceptance gate. Runs every guarantee the artifact makes end to end and
// prints exactly one PASS/FAIL line per criterion. Usage:
//
//   acceptance <path-to-cli> <golden-dir> [--write-golden]
//
// --write-golden refreshes the stored command-line fixtures instead of
// comparing against them. Tolerances are zero everywhere: all arithmetic is
// exact, so every comparison is equality. Runtime budgets are asserted with
// wall-clock measurements.

#include "helpers.hpp"

#include "nonassoc/algebra.hpp"
#include "nonassoc/assoc.hpp"
#include "nonassoc/expr.hpp"
#include "nonassoc/observability.hpp"
#include "nonassoc/parse.hpp"
#include "nonassoc/ym.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace nonassoc;
using namespace testutil;

namespace {

std::string g_cli;
std::string g_golden;
bool g_write_golden = false;

int g_checks_failed = 0;

void expect(bool cond, const std::string& what) {
    if (cond) return;
    ++g_checks_failed;
    std::cerr << "  check failed: " << what << "\n";
}

QVec unit_vec(int n, int k) {
    QVec v = QVec::Zero(n);
    v[k] = Rational(1);
    return v;
}

Element lin_combo(std::mt19937& rng, const std::vector<Element>& basis) {
    Element out = Element::zero(basis.front().algebra());
    for (const Element& b : basis) out += random_rational(rng) * b;
    return out;
}

// a few nonzero coordinates with small exact values
Element sparse_element(std::mt19937& rng, const AlgebraPtr& alg, int nnz) {
    while (true) {
        QVec v = QVec::Zero(alg->dim());
        for (int t = 0; t < nnz; ++t)
            v[rand_int(rng, 0, alg->dim() - 1)] =
                Rational(rand_int(rng, -3, 3), rand_int(rng, 1, 2));
        Element e(alg, std::move(v));
        if (!e.is_zero()) return e;
    }
}

bool has_atom(const Term& t) {
    if (t.is_leaf()) return false;
    if (t.is_atom()) return true;
    return has_atom(t.left()) || has_atom(t.right());
}

// ---- criterion bodies ----------------------------------------------------

void c1_tables_vs_oracle() {
    const std::vector<std::pair<std::string, std::vector<int>>> cases = {
        {"oct", {-1, -1, -1}},
        {"sed", {-1, -1, -1, -1}},
    };
    for (const auto& [name, gammas] : cases) {
        AlgebraPtr alg = named_algebra(name);
        int n = alg->dim();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                QVec want = oracle_mul(gammas, unit_vec(n, i), unit_vec(n, j));
                Element got = mul(Element::basis(alg, i), Element::basis(alg, j));
                expect(got == Element(alg, std::move(want)),
                       name + " e" + std::to_string(i) + " * e" + std::to_string(j));
            }
    }
}

void c2_identity_structure() {
    AlgebraPtr quat = named_algebra("quat");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                Element x = Element::basis(quat, i), y = Element::basis(quat, j),
                        z = Element::basis(quat, k);
                expect(mul(mul(x, y), z) == mul(x, mul(y, z)), "quat associativity");
            }

    AlgebraPtr oct = named_algebra("oct");
    bool oct_assoc_fails = false;
    for (int i = 0; i < 8 && !oct_assoc_fails; ++i)
        for (int j = 0; j < 8 && !oct_assoc_fails; ++j)
            for (int k = 0; k < 8 && !oct_assoc_fails; ++k)
                if (!associator_minus(Element::basis(oct, i), Element::basis(oct, j),
                                      Element::basis(oct, k))
                         .is_zero())
                    oct_assoc_fails = true;
    expect(oct_assoc_fails, "octonions must not associate");

    // alternativity, polarized to a trilinear identity in each variable
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) {
                Element x = Element::basis(oct, i), y = Element::basis(oct, j),
                        z = Element::basis(oct, k);
                expect(mul(mul(x, y) + mul(y, x), z) == mul(x, mul(y, z)) + mul(y, mul(x, z)),
                       "oct left alternativity");
                expect(mul(z, mul(x, y) + mul(y, x)) == mul(mul(z, x), y) + mul(mul(z, y), x),
                       "oct right alternativity");
            }

    // left Moufang z(x(zy)) = ((zx)z)y, polarized in the repeated variable
    for (int zi = 0; zi < 8; ++zi)
        for (int wi = 0; wi < 8; ++wi)
            for (int xi = 0; xi < 8; ++xi)
                for (int yi = 0; yi < 8; ++yi) {
                    Element z = Element::basis(oct, zi), w = Element::basis(oct, wi),
                            x = Element::basis(oct, xi), y = Element::basis(oct, yi);
                    Element lhs = mul(z, mul(x, mul(w, y))) + mul(w, mul(x, mul(z, y)));
                    Element rhs = mul(mul(mul(z, x), w), y) + mul(mul(mul(w, x), z), y);
                    expect(lhs == rhs, "oct Moufang");
                }

    // alternativity is quadratic in the repeated slot, so the failure shows
    // in the polarized form; the diagonal basis instances all vanish
    AlgebraPtr sed = named_algebra("sed");
    bool sed_alt_fails = false;
    for (int i = 0; i < 16 && !sed_alt_fails; ++i)
        for (int j = 0; j < 16 && !sed_alt_fails; ++j)
            for (int k = 0; k < 16 && !sed_alt_fails; ++k) {
                Element x = Element::basis(sed, i), y = Element::basis(sed, j),
                        z = Element::basis(sed, k);
                if (mul(mul(x, y) + mul(y, x), z) != mul(x, mul(y, z)) + mul(y, mul(x, z)) ||
                    mul(z, mul(x, y) + mul(y, x)) != mul(mul(z, x), y) + mul(mul(z, y), x))
                    sed_alt_fails = true;
            }
    expect(sed_alt_fails, "sedenions must not be alternative");

    Element u = parse_element(sed, "e1 + e10");
    Element v = parse_element(sed, "e4 - e15");
    expect(!u.is_zero() && !v.is_zero() && mul(u, v).is_zero(), "sedenion zero divisor");
    std::cout << "  sedenion zero divisor: (" << u.str() << ") * (" << v.str() << ") = 0\n";
}

void c3_defect_identity() {
    std::mt19937 rng(20260823);
    int instances = 0;
    for (const char* name : {"oct", "sed"}) {
        AlgebraPtr alg = named_algebra(name);
        for (int it = 0; it < 500; ++it) {
            std::vector<StateVector::Site> sites;
            int n_sites = rand_int(rng, 1, 3);
            for (int s = 0; s < n_sites; ++s)
                sites.push_back({Rational(rand_int(rng, 1, 5), rand_int(rng, 1, 3)),
                                 sparse_element(rng, alg, 4)});
            StateVector st(sites);
            Element M = sparse_element(rng, alg, 4);

            Element defect = bracketing_defect(st, M);
            Element oracle = Element::zero(alg);
            for (const StateVector::Site& site : st.sites())
                oracle += site.weight * associator_minus(conj(site.value), M, site.value);
            expect(defect == oracle, "defect equals the weighted associator sum");
            expect(defect == expectation(st, M, Bracketing::left) -
                                 expectation(st, M, Bracketing::right),
                   "defect equals the bracketing difference");
            ++instances;
        }
    }
    expect(instances >= 1000, "at least 1000 randomized instances");

    // vanishes identically when the operator sits in the nucleus
    AlgebraPtr oct = named_algebra("oct");
    std::vector<Element> nuc = nucleus(oct).basis();
    for (int it = 0; it < 50; ++it) {
        StateVector st({{Rational(1), random_nonzero_element(rng, oct)},
                        {Rational(rand_int(rng, 1, 4)), random_nonzero_element(rng, oct)}});
        expect(bracketing_defect(st, lin_combo(rng, nuc)).is_zero(), "nucleus operator defect");
    }

    // and when every operand lives in a closure classified as observable
    std::vector<Element> gens = {parse_element(oct, "e1"), parse_element(oct, "e2")};
    ObservabilityReport rep = classify(gens);
    expect(rep.observable, "e1,e2 closure is observable");
    std::vector<Element> cb = rep.closure.basis();
    for (int it = 0; it < 50; ++it) {
        Element psi = lin_combo(rng, cb);
        if (psi.is_zero()) continue;
        StateVector st({{Rational(1, 2), psi}, {Rational(2), lin_combo(rng, cb) + cb[0]}});
        expect(bracketing_defect(st, lin_combo(rng, cb)).is_zero(),
               "defect inside an observable closure");
    }
}

void c4_nucleus_dims() {
    AlgebraPtr oct = named_algebra("oct");
    Subspace n_oct = nucleus(oct);
    expect(n_oct.dim() == 1, "oct nucleus is one-dimensional");
    expect(n_oct.basis().at(0) == Element::basis(oct, 0), "oct nucleus is spanned by e0");
    AlgebraPtr sed = named_algebra("sed");
    Subspace n_sed = nucleus(sed);
    expect(n_sed.dim() == 1, "sed nucleus is one-dimensional");
    expect(n_sed.basis().at(0) == Element::basis(sed, 0), "sed nucleus is spanned by e0");
    expect(nucleus(named_algebra("quat")).dim() == 4, "quat nucleus is everything");
}

void c5_classification() {
    AlgebraPtr oct = named_algebra("oct");
    ObservabilityReport good =
        classify({parse_element(oct, "e1"), parse_element(oct, "e2")});
    expect(good.observable, "e1,e2 closure is observable");
    expect(good.closure.dim() == 4, "e1,e2 closure has dimension 4");
    expect(!good.witness.has_value(), "no witness for an observable closure");

    ObservabilityReport bad =
        classify({parse_element(oct, "e1"), parse_element(oct, "e2"), parse_element(oct, "e4")});
    expect(!bad.observable, "e1,e2,e4 closure is not observable");
    expect(bad.closure.dim() == 8, "e1,e2,e4 closure has dimension 8");
    expect(bad.witness.has_value(), "a witness triple is reported");
    if (bad.witness) {
        std::vector<Element> b = bad.closure.basis();
        const auto& w = *bad.witness;
        Element a = associator_minus(b.at(w[0]), b.at(w[1]), b.at(w[2]));
        expect(!a.is_zero(), "the witness associator is nonzero");
        expect(bad.closure.contains(b.at(w[0])) && bad.closure.contains(b.at(w[1])) &&
                   bad.closure.contains(b.at(w[2])),
               "the witness lives inside the closure");
    }
}

void c6_commutator_normal_forms() {
    std::mt19937 rng(60221409);
    AlgebraPtr oct = named_algebra("oct");

    auto shapes = [](const std::string& prefix) {
        Generator g1, g2, g3;
        g1.symbol = prefix + "1";
        g2.symbol = prefix + "2";
        g3.symbol = prefix + "3";
        Term l1 = Term::leaf(g1), l2 = Term::leaf(g2), l3 = Term::leaf(g3);
        return std::vector<Term>{l1, Term::product(l1, l2),
                                 Term::product(Term::product(l1, l2), l3),
                                 Term::product(l1, Term::product(l2, l3))};
    };

    auto check_pair = [&](const Term& ta, const Term& tb, Sign sign, Nesting nesting) {
        CommutatorResult res =
            composite_commutator(sign, CompositeOp(ta), CompositeOp(tb), nesting);
        Expr ab(Term::product(ta, tb)), ba(Term::product(tb, ta));
        Expr want_raw = sign == Sign::minus ? ab - ba : ab + ba;
        expect(res.raw == want_raw, "raw commutator is the product difference");
        expect(expand_assoc_atoms(res.normal) == expand_assoc_atoms(res.raw),
               "expanding the associator symbols reproduces the raw difference");
        GenAssignment asg;
        for (const Generator& g : generators_in(res.raw))
            asg.insert_or_assign(g, random_element(rng, oct, 2));
        expect(evaluate(res.normal, oct, asg) == evaluate(res.raw, oct, asg),
               "concrete octonion evaluation agrees");
    };

    for (const Term& ta : shapes("a"))
        for (const Term& tb : shapes("b"))
            for (Sign sign : {Sign::minus, Sign::plus})
                for (Nesting nesting : {Nesting::left, Nesting::right})
                    check_pair(ta, tb, sign, nesting);

    // randomized degree-4 operands
    for (int it = 0; it < 60; ++it)
        check_pair(random_product_tree(rng, 4), random_product_tree(rng, rand_int(rng, 1, 4)),
                   rand_int(rng, 0, 1) ? Sign::minus : Sign::plus,
                   rand_int(rng, 0, 1) ? Nesting::left : Nesting::right);
}

void c7_all_bracketings() {
    const std::vector<std::size_t> catalan = {0, 1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 6; ++n) {
        std::vector<Term> leaves = simple_leaves(n);
        std::vector<Term> brs = all_bracketings(leaves);
        expect(brs.size() == catalan[static_cast<std::size_t>(n)],
               "Catalan count at degree " + std::to_string(n));
        Term comb = leaves[0];
        for (int k = 1; k < n; ++k) comb = Term::product(comb, leaves[static_cast<std::size_t>(k)]);
        for (const Term& br : brs) {
            Expr nf = normal_form(Expr(br), Nesting::left);
            expect(expand_assoc_atoms(nf) == Expr(br),
                   "definitional expansion returns the original bracketing");
            for (const auto& [t, c] : nf.terms()) {
                if (has_atom(t)) continue;
                expect(t == comb && c == Scalar::one(),
                       "the only associator-free part is the left comb");
            }
        }
    }
}

void c8_field_equations() {
    std::vector<DerivedEquation> ab = ym_equations(GaugeContext::abelian(1));
    expect(ab.size() == 4, "one abelian equation per spacetime index");
    for (const DerivedEquation& eq : ab)
        expect(eq.raw_term_count == 8, "8 derivative terms before cancellation");

    GaugeContext su2 = GaugeContext::su2();
    std::vector<DerivedEquation> sd = ym_equations(su2);
    std::vector<DerivedEquation> ab3 = ym_equations(GaugeContext::abelian(3));
    expect(sd.size() == 12, "su2 equation census");
    for (std::size_t k = 0; k < sd.size(); ++k)
        expect(print(substitute_symbol(sd[k].lhs, "g", Rational(0))) == print(ab3[k].lhs),
               "the g -> 0 limit reproduces the abelian system byte for byte");

    // commuting square: decompose-then-evaluate equals evaluate-then-compose
    std::mt19937 rng(271828);
    AlgebraPtr oct = named_algebra("oct");
    Decomposition dec{2, Nesting::left, "A", "phi", 2};
    SymbolValues g_val{{"g", Rational(1, 2)}};

    std::vector<DerivedEquation> sd_dec = substitute_decomposition(su2, sd, dec);
    for (std::size_t k = 0; k < sd.size(); ++k) {
        GenAssignment phi_asg;
        for (const Generator& g : generators_in(sd_dec[k].lhs, "phi"))
            phi_asg.insert_or_assign(g, random_element(rng, oct, 2));
        GenAssignment full = phi_asg;
        for (const Generator& g : generators_in(sd[k].lhs, "A"))
            full.insert_or_assign(g, evaluate(decompose_generator(su2, g, dec), oct, phi_asg));
        expect(evaluate(sd[k].lhs, oct, full, g_val) ==
                   evaluate(sd_dec[k].lhs, oct, phi_asg, g_val),
               "su2 evaluation commutes with the depth-2 decomposition");
    }

    GaugeContext ab1 = GaugeContext::abelian(1);
    std::vector<DerivedEquation> ab_dec = substitute_decomposition(ab1, ab, dec);
    for (std::size_t k = 0; k < ab.size(); ++k) {
        GenAssignment phi_asg;
        for (const Generator& g : generators_in(ab_dec[k].lhs, "phi"))
            phi_asg.insert_or_assign(g, random_element(rng, oct, 2));
        GenAssignment full = phi_asg;
        for (const Generator& g : generators_in(ab[k].lhs, "A"))
            full.insert_or_assign(g, evaluate(decompose_generator(ab1, g, dec), oct, phi_asg));
        expect(evaluate(ab[k].lhs, oct, full) == evaluate(ab_dec[k].lhs, oct, phi_asg),
               "abelian evaluation commutes with the depth-2 decomposition");
    }
}

void c9_round_trips_and_goldens() {
    std::mt19937 rng(299792458);
    for (int it = 0; it < 10000; ++it) {
        Expr e = random_expr(rng, 8, 4);
        expect(parse(print(e)) == e, "parse(print(e)) == e");
    }

    const std::string data_dir = g_golden + "/../data";
    const std::vector<std::pair<std::string, std::vector<std::string>>> goldens = {
        {"nucleus_oct.txt", {"nucleus", "--algebra", "oct"}},
        {"nucleus_quat.json", {"nucleus", "--algebra", "quat", "--json"}},
        {"assoc_oct_e1e2e4.txt", {"assoc", "--algebra", "oct", "--triple", "e1,e2,e4"}},
        {"classify_oct_e1e2e4.txt",
         {"classify", "--algebra", "oct", "--gen", "e1", "--gen", "e2", "--gen", "e4"}},
        {"classify_oct_e1e2.json",
         {"classify", "--algebra", "oct", "--gen", "e1", "--gen", "e2", "--json"}},
        {"algebra_quat_table.txt", {"algebra", "--algebra", "quat", "--table"}},
        {"algebra_sed_alternative.txt", {"algebra", "--algebra", "sed", "--check", "alternative"}},
        {"algebra_sed_zero_divisor.txt", {"algebra", "--algebra", "sed", "--zero-divisor"}},
        {"commutator_fields.txt",
         {"commutator", "--sign", "minus", "--a", "[phi(x1) phi(x2)]", "--b",
          "[phi(x3) phi(x4)]"}},
        {"normalform_deep.txt", {"normalform", "--expr", "[a [b [c e]]]"}},
        {"ym_abelian.txt", {"ym", "equations"}},
        {"ym_su2.txt", {"ym", "equations", "--group", "su2"}},
        {"ym_abelian_decomposed.txt", {"ym", "equations", "--decompose", "2"}},
        {"ym_derive.txt", {"ym", "derive", "--expr", "[a b]", "--index", "0"}},
        {"defect_nonflex.txt",
         {"defect", "--algebra-file", data_dir + "/nonflex3.json", "--site", "1:e2", "--op",
          "e1"}},
    };

    if (g_write_golden) std::filesystem::create_directories(g_golden);
    for (const auto& [file, args] : goldens) {
        CliResult first = run_cli(g_cli, args);
        CliResult second = run_cli(g_cli, args);
        expect(first.exit_code == 0, file + ": exit code 0");
        expect(first.out == second.out, file + ": identical bytes across two runs");
        if (g_write_golden) {
            std::ofstream out(g_golden + "/" + file, std::ios::binary);
            out << first.out;
            continue;
        }
        std::string want;
        try {
            want = read_file(g_golden + "/" + file);
        } catch (const std::exception& ex) {
            expect(false, std::string(ex.what()));
            continue;
        }
        expect(first.out == want, file + ": matches the stored fixture");
    }
}

// ---- harness -------------------------------------------------------------

struct Criterion {
    int number;
    std::string label;
    double limit_seconds; // 0 = no budget asserted
    std::function<void()> body;
};

bool run(const Criterion& c) {
    g_checks_failed = 0;
    auto t0 = std::chrono::steady_clock::now();
    c.body();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = g_checks_failed == 0 && (c.limit_seconds == 0 || secs < c.limit_seconds);
    if (c.limit_seconds > 0 && secs >= c.limit_seconds)
        std::cerr << "  over budget: " << secs << "s >= " << c.limit_seconds << "s\n";
    std::printf("%s criterion %d: %s [%.2fs]\n", ok ? "PASS" : "FAIL", c.number, c.label.c_str(),
                secs);
    std::fflush(stdout);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <path-to-cli> <golden-dir> [--write-golden]\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];
    g_golden = argv[2];
    g_write_golden = argc > 3 && std::string(argv[3]) == "--write-golden";

    const std::vector<Criterion> criteria = {
        {1, "multiplication tables match the independent doubling recursion", 1.0,
         c1_tables_vs_oracle},
        {2, "associativity ladder quat/oct/sed with a concrete zero divisor", 10.0,
         c2_identity_structure},
        {3, "bracketing defect equals the weighted associator sum exactly", 0,
         c3_defect_identity},
        {4, "nucleus computation", 1.0, c4_nucleus_dims},
        {5, "observability classification with verified witness", 0, c5_classification},
        {6, "commutator normal forms expand back and evaluate consistently", 0,
         c6_commutator_normal_forms},
        {7, "all bracketings to degree 6 reduce to the left normal form", 0, c7_all_bracketings},
        {8, "field equations: census, abelian limit, decomposition square", 30.0,
         c8_field_equations},
        {9, "parser round trips and byte-stable command-line fixtures", 0,
         c9_round_trips_and_goldens},
    };

    int failed = 0;
    for (const Criterion& c : criteria)
        if (!run(c)) ++failed;
    if (failed) {
        std::printf("%d of %zu criteria failed\n", failed, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}

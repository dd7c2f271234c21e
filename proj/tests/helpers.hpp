// Shared machinery for the test binaries: seeded random builders for terms,
// scalars and elements, an independent Cayley-Dickson product oracle working
// directly on coefficient halves, a Catalan bracketing enumerator, and a
// small subprocess runner for the command-line tool.
#pragma once

#include "nonassoc/algebra.hpp"
#include "nonassoc/expr.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace testutil {

using namespace nonassoc;

// ---- randomized builders -------------------------------------------------

inline int rand_int(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational random_rational(std::mt19937& rng, int max_num = 6, int max_den = 4) {
    int num = rand_int(rng, -max_num, max_num);
    int den = rand_int(rng, 1, max_den);
    return Rational(num, den);
}

inline Rational random_nonzero_rational(std::mt19937& rng, int max_num = 6, int max_den = 4) {
    while (true) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline Element random_element(std::mt19937& rng, const AlgebraPtr& alg, int max_coeff = 3) {
    QVec v = QVec::Zero(alg->dim());
    for (int k = 0; k < alg->dim(); ++k) v[k] = Rational(rand_int(rng, -max_coeff, max_coeff));
    return Element(alg, std::move(v));
}

inline Element random_nonzero_element(std::mt19937& rng, const AlgebraPtr& alg,
                                      int max_coeff = 3) {
    while (true) {
        Element e = random_element(rng, alg, max_coeff);
        if (!e.is_zero()) return e;
    }
}

// Symbol pools. "d" is deliberately excluded: a generator named d followed
// by a lower index group is read back as a derivative prefix.
inline const std::vector<std::string>& symbol_pool() {
    static const std::vector<std::string> pool = {"a", "b", "c", "phi", "psi", "Q"};
    return pool;
}

inline Generator random_generator(std::mt19937& rng) {
    static const std::vector<std::string> indices = {"1", "2", "mu", "nu"};
    static const std::vector<std::string> points = {"x1", "x2", "y"};
    Generator g;
    g.symbol = symbol_pool()[static_cast<std::size_t>(
        rand_int(rng, 0, static_cast<int>(symbol_pool().size()) - 1))];
    int n_upper = rand_int(rng, 0, 2);
    for (int k = 0; k < n_upper; ++k)
        g.upper.push_back(indices[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(indices.size()) - 1))]);
    int n_lower = rand_int(rng, 0, 2);
    for (int k = 0; k < n_lower; ++k)
        g.lower.push_back(indices[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(indices.size()) - 1))]);
    if (rand_int(rng, 0, 2) == 0)
        g.point = points[static_cast<std::size_t>(
            rand_int(rng, 0, static_cast<int>(points.size()) - 1))];
    if (rand_int(rng, 0, 3) == 0) g.conjugated = true;
    int n_derivs = rand_int(rng, 0, 2);
    Generator out = g;
    for (int k = 0; k < n_derivs; ++k)
        out = out.with_deriv(std::to_string(rand_int(rng, 0, 3)));
    return out;
}

// Random product tree of exactly `degree` leaves.
inline Term random_product_tree(std::mt19937& rng, int degree) {
    if (degree <= 1) return Term::leaf(random_generator(rng));
    int left = rand_int(rng, 1, degree - 1);
    return Term::product(random_product_tree(rng, left), random_product_tree(rng, degree - left));
}

// Random term: usually a product tree, sometimes a formal associator atom
// with small product slots.
inline Term random_term(std::mt19937& rng, int max_degree) {
    int degree = rand_int(rng, 1, max_degree);
    if (degree >= 3 && rand_int(rng, 0, 3) == 0) {
        Expr s0 = Expr(random_product_tree(rng, rand_int(rng, 1, 2)));
        Expr s1 = Expr(random_product_tree(rng, 1));
        Expr s2 = Expr(random_product_tree(rng, rand_int(rng, 1, 2)));
        Sign sign = rand_int(rng, 0, 1) ? Sign::minus : Sign::plus;
        return make_assoc_atom(sign, s0, s1, s2).terms().begin()->first;
    }
    return random_product_tree(rng, degree);
}

inline Scalar random_scalar(std::mt19937& rng) {
    Scalar s = Scalar::zero();
    int pieces = rand_int(rng, 1, 2);
    static const std::vector<std::string> syms = {"g", "h"};
    for (int p = 0; p < pieces; ++p) {
        Scalar piece(random_nonzero_rational(rng));
        if (rand_int(rng, 0, 2) == 0) piece = piece * Scalar::i();
        int n_syms = rand_int(rng, 0, 2);
        for (int k = 0; k < n_syms; ++k)
            piece = piece * Scalar::symbol(syms[static_cast<std::size_t>(
                                rand_int(rng, 0, static_cast<int>(syms.size()) - 1))]);
        s = s + piece;
    }
    return s;
}

inline Expr random_expr(std::mt19937& rng, int max_degree, int max_terms) {
    Expr e;
    int n = rand_int(rng, 1, max_terms);
    for (int k = 0; k < n; ++k)
        e.add_term(random_scalar(rng), random_term(rng, max_degree));
    return e;
}

// ---- generator harvesting -------------------------------------------------

inline void collect_generators(const Term& t, const std::string& symbol,
                               std::set<Generator>& out) {
    if (t.is_leaf()) {
        if (symbol.empty() || t.generator().symbol == symbol) out.insert(t.generator());
        return;
    }
    if (t.is_atom()) {
        for (const Expr& slot : t.assoc().slots)
            for (const auto& [st, sc] : slot.terms()) {
                (void)sc;
                collect_generators(st, symbol, out);
            }
        return;
    }
    collect_generators(t.left(), symbol, out);
    collect_generators(t.right(), symbol, out);
}

// Every generator with the given symbol (empty = all symbols) occurring
// anywhere in the expression, including inside associator-atom slots.
inline std::set<Generator> generators_in(const Expr& e, const std::string& symbol = "") {
    std::set<Generator> out;
    for (const auto& [t, c] : e.terms()) {
        (void)c;
        collect_generators(t, symbol, out);
    }
    return out;
}

// ---- Catalan bracketing enumeration --------------------------------------

// All binary bracketings over the given leaf segment [lo, hi).
inline std::vector<Term> bracketings_over(const std::vector<Term>& leaves, std::size_t lo,
                                          std::size_t hi) {
    std::vector<Term> out;
    if (hi - lo == 1) {
        out.push_back(leaves[lo]);
        return out;
    }
    for (std::size_t split = lo + 1; split < hi; ++split)
        for (const Term& l : bracketings_over(leaves, lo, split))
            for (const Term& r : bracketings_over(leaves, split, hi))
                out.push_back(Term::product(l, r));
    return out;
}

inline std::vector<Term> all_bracketings(const std::vector<Term>& leaves) {
    return bracketings_over(leaves, 0, leaves.size());
}

// Distinct plain leaves g1..gn.
inline std::vector<Term> simple_leaves(int n) {
    std::vector<Term> out;
    for (int k = 1; k <= n; ++k) {
        Generator g;
        g.symbol = "g" + std::to_string(k);
        out.push_back(Term::leaf(g));
    }
    return out;
}

// ---- independent Cayley-Dickson oracle -----------------------------------

// Conjugation and product by direct recursion on coefficient halves:
// (a,b)* = (conj a, -b), (a,b)(c,d) = (ac + g conj(d) b, da + b conj(c)).
// Shares no code with the library's doubling construction.
inline QVec oracle_conj(const std::vector<int>& gammas, const QVec& x) {
    if (gammas.empty()) return x;
    std::vector<int> inner(gammas.begin(), gammas.end() - 1);
    Eigen::Index n = x.size() / 2;
    QVec out(x.size());
    out.head(n) = oracle_conj(inner, QVec(x.head(n)));
    out.tail(n) = -x.tail(n);
    return out;
}

inline QVec oracle_mul(const std::vector<int>& gammas, const QVec& x, const QVec& y) {
    if (gammas.empty()) {
        QVec out(1);
        out[0] = x[0] * y[0];
        return out;
    }
    std::vector<int> inner(gammas.begin(), gammas.end() - 1);
    Eigen::Index n = x.size() / 2;
    QVec a(x.head(n)), b(x.tail(n)), c(y.head(n)), d(y.tail(n));
    Rational gamma(gammas.back());
    QVec out(x.size());
    out.head(n) = oracle_mul(inner, a, c) + gamma * oracle_mul(inner, oracle_conj(inner, d), b);
    out.tail(n) = oracle_mul(inner, d, a) + oracle_mul(inner, b, oracle_conj(inner, c));
    return out;
}

// ---- subprocess runner ---------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string out;
};

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) {
        if (ch == '\'')
            out += "'\\''";
        else
            out += ch;
    }
    return out + "'";
}

// Runs the tool with the given arguments, capturing stdout; stderr is
// discarded. Returns the process exit code.
inline CliResult run_cli(const std::string& cli_path, const std::vector<std::string>& args) {
    std::string cmd = shell_quote(cli_path);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace testutil

#include "nonassoc/ym.hpp"

#include "nonassoc/assoc.hpp"
#include "nonassoc/parse.hpp"

#include <map>
#include <set>

namespace nonassoc {

namespace {

std::size_t f_index(int n, int a, int b, int c) {
    return (static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(b - 1)) *
               static_cast<std::size_t>(n) +
           static_cast<std::size_t>(c - 1);
}

void validate_structure_constants(int n, const std::vector<Rational>& f) {
    auto at = [&](int a, int b, int c) -> const Rational& { return f[f_index(n, a, b, c)]; };
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                if (at(a, b, c) != -at(b, a, c) || at(a, b, c) != -at(a, c, b))
                    throw Error("structure constants are not totally antisymmetric at (" +
                                std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            for (int c = 1; c <= n; ++c)
                for (int e = 1; e <= n; ++e) {
                    Rational s(0);
                    for (int d = 1; d <= n; ++d)
                        s += at(a, b, d) * at(d, c, e) + at(b, c, d) * at(d, a, e) +
                             at(c, a, d) * at(d, b, e);
                    if (!s.is_zero())
                        throw Error("structure constants fail the Jacobi identity at (" +
                                    std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + "," + std::to_string(e) + ")");
                }
}

} // namespace

GaugeContext GaugeContext::abelian(int n_colors) {
    if (n_colors < 1)
        throw Error("gauge context needs at least one color");
    GaugeContext c;
    c.group_ = "abelian";
    c.n_ = n_colors;
    c.f_.assign(static_cast<std::size_t>(n_colors) * static_cast<std::size_t>(n_colors) *
                    static_cast<std::size_t>(n_colors),
                Rational(0));
    return c;
}

GaugeContext GaugeContext::su2() {
    GaugeContext c;
    c.group_ = "su2";
    c.n_ = 3;
    c.f_.assign(27, Rational(0));
    auto set = [&](int a, int b, int g, int v) { c.f_[f_index(3, a, b, g)] = Rational(v); };
    set(1, 2, 3, 1);
    set(2, 3, 1, 1);
    set(3, 1, 2, 1);
    set(2, 1, 3, -1);
    set(3, 2, 1, -1);
    set(1, 3, 2, -1);
    return c;
}

GaugeContext GaugeContext::from_table(std::string group, int n_colors,
                                      std::vector<Rational> f_flat) {
    if (n_colors < 1)
        throw Error("gauge context needs at least one color");
    std::size_t want = static_cast<std::size_t>(n_colors) * static_cast<std::size_t>(n_colors) *
                       static_cast<std::size_t>(n_colors);
    if (f_flat.size() != want)
        throw Error("structure constant table has " + std::to_string(f_flat.size()) +
                    " entries, expected " + std::to_string(want));
    validate_structure_constants(n_colors, f_flat);
    GaugeContext c;
    c.group_ = std::move(group);
    c.n_ = n_colors;
    c.f_ = std::move(f_flat);
    return c;
}

Rational GaugeContext::f(int a, int b, int c) const {
    if (a < 1 || a > n_ || b < 1 || b > n_ || c < 1 || c > n_)
        throw Error("color index out of range 1.." + std::to_string(n_));
    return f_[f_index(n_, a, b, c)];
}

namespace {

Expr derive_term(const Term& t, const std::string& mu) {
    if (t.is_leaf())
        return Expr(Term::leaf(t.generator().with_deriv(mu)));
    if (t.is_atom()) {
        const AssocAtom& a = t.assoc();
        Expr out;
        for (int s = 0; s < 3; ++s) {
            AssocAtom da = a;
            da.slots[static_cast<std::size_t>(s)] =
                derive(a.slots[static_cast<std::size_t>(s)], mu);
            if (da.slots[static_cast<std::size_t>(s)].is_zero())
                continue; // a zero slot kills the whole (multilinear) atom
            da.label = assoc_label(da);
            out += Expr(Term::atom(std::move(da)));
        }
        return out;
    }
    return product(derive_term(t.left(), mu), Expr(t.right())) +
           product(Expr(t.left()), derive_term(t.right(), mu));
}

} // namespace

Expr derive(const Expr& e, const std::string& mu) {
    Expr out;
    for (const auto& [t, c] : e.terms())
        out += c * derive_term(t, mu);
    return out;
}

namespace {

void check_spacetime(int idx, const char* what) {
    if (idx < 0 || idx > 3)
        throw Error(std::string(what) + " index must lie in 0..3, got " + std::to_string(idx));
}

Generator gauge_gen(const std::string& A, int color, int idx) {
    Generator g(A);
    g.upper = {std::to_string(color)};
    g.lower = {std::to_string(idx)};
    return g;
}

/// F^a_{mu nu} as an explicit contribution list, uncancelled.
std::vector<std::pair<Scalar, Term>> field_strength_raw(const GaugeContext& ctx,
                                                        const std::string& A, int color, int mu,
                                                        int nu) {
    if (color < 1 || color > ctx.n_colors())
        throw Error("color index out of range 1.." + std::to_string(ctx.n_colors()));
    check_spacetime(mu, "mu");
    check_spacetime(nu, "nu");
    std::vector<std::pair<Scalar, Term>> out;
    out.emplace_back(Scalar::one(),
                     Term::leaf(gauge_gen(A, color, nu).with_deriv(std::to_string(mu))));
    out.emplace_back(Scalar(-1),
                     Term::leaf(gauge_gen(A, color, mu).with_deriv(std::to_string(nu))));
    for (int b = 1; b <= ctx.n_colors(); ++b) {
        for (int c = 1; c <= ctx.n_colors(); ++c) {
            Rational fv = ctx.f(color, b, c);
            if (fv.is_zero())
                continue;
            Scalar coeff(GaussRat{fv, Rational(0)}, Monomial{ctx.coupling()});
            out.emplace_back(coeff, Term::product(Term::leaf(gauge_gen(A, b, mu)),
                                                  Term::leaf(gauge_gen(A, c, nu))));
        }
    }
    return out;
}

} // namespace

Expr field_strength(const GaugeContext& ctx, const std::string& A, int color, int mu, int nu) {
    Expr e;
    for (const auto& [s, t] : field_strength_raw(ctx, A, color, mu, nu))
        e.add_term(s, t);
    return e;
}

std::vector<DerivedEquation> ym_equations(const GaugeContext& ctx, const std::string& A,
                                          bool covariant) {
    std::vector<DerivedEquation> eqs;
    for (int color = 1; color <= ctx.n_colors(); ++color) {
        for (int mu = 0; mu <= 3; ++mu) {
            Expr lhs;
            int raw = 0;
            for (int nu = 0; nu <= 3; ++nu) {
                Rational m(ctx.metric()[static_cast<std::size_t>(mu)] *
                           ctx.metric()[static_cast<std::size_t>(nu)]);
                auto fraw = field_strength_raw(ctx, A, color, mu, nu);
                for (const auto& [s, t] : fraw) {
                    Expr contrib =
                        derive(Expr::from_term(Scalar(m) * s, t), std::to_string(nu));
                    raw += static_cast<int>(contrib.size());
                    lhs += contrib;
                }
                if (!covariant)
                    continue;
                for (int b = 1; b <= ctx.n_colors(); ++b) {
                    for (int c = 1; c <= ctx.n_colors(); ++c) {
                        Rational fv = ctx.f(color, b, c);
                        if (fv.is_zero())
                            continue;
                        Scalar outer(GaussRat{fv * m, Rational(0)}, Monomial{ctx.coupling()});
                        Term an = Term::leaf(gauge_gen(A, b, nu));
                        for (const auto& [s, t] : field_strength_raw(ctx, A, c, mu, nu)) {
                            lhs += Expr::from_term(outer * s, Term::product(an, t));
                            raw += 1;
                        }
                    }
                }
            }
            eqs.push_back(DerivedEquation{A, color, mu, std::move(lhs), raw});
        }
    }
    return eqs;
}

namespace {

void validate_decomposition(const Decomposition& d) {
    if (d.depth < 1)
        throw Error("decomposition depth must be at least 1");
    if (d.inner_range < 1)
        throw Error("inner index range must be at least 1");
    if (d.target.empty() || d.factor.empty())
        throw Error("decomposition needs target and factor symbols");
}

} // namespace

Expr decompose_generator(const GaugeContext& ctx, const Generator& gen, const Decomposition& d) {
    (void)ctx;
    validate_decomposition(d);
    if (gen.symbol != d.target)
        throw Error("decomposition targets '" + d.target + "' but generator is '" + gen.str() +
                    "'");
    if (gen.upper.size() != 1 || gen.lower.size() != 1)
        throw Error("target generator must carry one color and one spacetime index: " +
                    gen.str());
    const std::string& color = gen.upper[0];
    const std::string& mu = gen.lower[0];
    auto inner_label = [](int v) { return "i" + std::to_string(v); };

    Expr sum;
    std::vector<int> vals(static_cast<std::size_t>(d.depth - 1), 1);
    bool done = false;
    while (!done) {
        std::vector<Generator> factors;
        factors.reserve(static_cast<std::size_t>(d.depth));
        for (int k = 0; k < d.depth; ++k) {
            Generator f(d.factor);
            f.upper = {k == 0 ? color : inner_label(vals[static_cast<std::size_t>(k - 1)])};
            f.lower = {k == d.depth - 1 ? mu : inner_label(vals[static_cast<std::size_t>(k)])};
            factors.push_back(std::move(f));
        }
        sum += Expr(CompositeOp(std::move(factors), d.nesting).bracketing());
        done = true;
        for (std::size_t pos = vals.size(); pos-- > 0;) {
            if (++vals[pos] <= d.inner_range) {
                done = false;
                break;
            }
            vals[pos] = 1;
        }
    }
    for (const auto& idx : gen.derivs)
        sum = derive(sum, idx);
    if (gen.conjugated)
        sum = conjugate(sum);
    return sum;
}

namespace {

void collect_target_gens(const Term& t, const std::string& symbol, std::set<Generator>& out) {
    if (t.is_leaf()) {
        if (t.generator().symbol == symbol)
            out.insert(t.generator());
        return;
    }
    if (t.is_atom()) {
        for (const Expr& slot : t.assoc().slots)
            for (const auto& [st, sc] : slot.terms())
                collect_target_gens(st, symbol, out);
        return;
    }
    collect_target_gens(t.left(), symbol, out);
    collect_target_gens(t.right(), symbol, out);
}

} // namespace

std::vector<DerivedEquation> substitute_decomposition(const GaugeContext& ctx,
                                                      const std::vector<DerivedEquation>& eqs,
                                                      const Decomposition& d) {
    validate_decomposition(d);
    std::vector<DerivedEquation> out;
    out.reserve(eqs.size());
    for (const DerivedEquation& eq : eqs) {
        if (eq.gauge_symbol != d.target)
            throw Error("equations are for symbol '" + eq.gauge_symbol +
                        "' but the decomposition targets '" + d.target + "'");
        std::set<Generator> targets;
        for (const auto& [t, c] : eq.lhs.terms())
            collect_target_gens(t, d.target, targets);
        std::map<Generator, Expr> repl;
        for (const Generator& g : targets)
            repl.emplace(g, decompose_generator(ctx, g, d));
        Expr lhs;
        int raw = 0;
        for (const auto& [t, c] : eq.lhs.terms()) {
            Expr st = substitute(Expr::from_term(c, t), repl);
            raw += static_cast<int>(st.size());
            lhs += st;
        }
        out.push_back(DerivedEquation{d.factor, eq.color, eq.mu, std::move(lhs), raw});
    }
    return out;
}

namespace {

bool is_inner_label(const std::string& s) {
    if (s.size() < 2 || s[0] != 'i')
        return false;
    for (std::size_t k = 1; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            return false;
    return true;
}

struct Tally {
    std::map<std::string, int> spacetime;
    std::map<std::string, int> inner;
};

void tally_term(const Term& t, Tally& tally) {
    if (t.is_leaf()) {
        const Generator& g = t.generator();
        for (const auto& dmark : g.derivs)
            tally.spacetime[dmark] += 1;
        for (const auto& u : g.upper)
            if (is_inner_label(u))
                tally.inner[u] += 1;
        for (const auto& l : g.lower) {
            if (is_inner_label(l))
                tally.inner[l] += 1;
            else
                tally.spacetime[l] += 1;
        }
        return;
    }
    if (t.is_atom()) {
        for (const Expr& slot : t.assoc().slots)
            for (const auto& [st, sc] : slot.terms())
                tally_term(st, tally);
        return;
    }
    tally_term(t.left(), tally);
    tally_term(t.right(), tally);
}

} // namespace

IndexLint lint_equation(const DerivedEquation& eq) {
    const std::string want_free = std::to_string(eq.mu);
    for (const auto& [t, c] : eq.lhs.terms()) {
        Tally tally;
        tally_term(t, tally);
        for (const auto& [label, count] : tally.inner)
            if (count % 2 != 0)
                return {false, "inner index '" + label + "' appears " + std::to_string(count) +
                                   " times in term " + t.key()};
        std::vector<std::string> frees;
        for (const auto& [label, count] : tally.spacetime)
            if (count % 2 != 0)
                frees.push_back(label);
        if (frees.size() != 1 || frees.front() != want_free) {
            std::string got;
            for (const auto& f : frees) {
                if (!got.empty())
                    got += ",";
                got += f;
            }
            return {false, "term " + t.key() + " has free spacetime indices {" + got +
                               "}, expected {" + want_free + "}"};
        }
    }
    return {};
}

std::string equation_str(const DerivedEquation& eq) { return print(eq.lhs) + " = 0"; }

} // namespace nonassoc

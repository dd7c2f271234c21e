#include "nonassoc/assoc.hpp"

namespace nonassoc {

Expr associator(Sign sign, const Expr& a, const Expr& b, const Expr& c) {
    Expr left = product(product(a, b), c);
    Expr right = product(a, product(b, c));
    return sign == Sign::minus ? left - right : left + right;
}

namespace {

Term comb_over(const std::vector<Generator>& factors, Nesting shape) {
    if (factors.empty())
        throw Error("composite operator needs at least one factor");
    if (shape == Nesting::left) {
        Term t = Term::leaf(factors.front());
        for (std::size_t k = 1; k < factors.size(); ++k)
            t = Term::product(t, Term::leaf(factors[k]));
        return t;
    }
    Term t = Term::leaf(factors.back());
    for (std::size_t k = factors.size() - 1; k-- > 0;)
        t = Term::product(Term::leaf(factors[k]), t);
    return t;
}

void collect_factors(const Term& t, std::vector<Generator>& out) {
    if (t.is_leaf()) {
        out.push_back(t.generator());
        return;
    }
    if (t.is_atom())
        throw Error("composite operators contain only generator leaves");
    collect_factors(t.left(), out);
    collect_factors(t.right(), out);
}

} // namespace

CompositeOp::CompositeOp(std::vector<Generator> factors, Nesting shape)
    : factors_(std::move(factors)), shape_(comb_over(factors_, shape)) {}

CompositeOp::CompositeOp(const Term& shape) : factors_(), shape_(shape) {
    collect_factors(shape_, factors_);
}

Term CompositeOp::rendered(Nesting shape) const { return comb_over(factors_, shape); }

CommutatorResult composite_commutator(Sign sign, const CompositeOp& A, const CompositeOp& B,
                                      Nesting nesting) {
    Expr ab = product(Expr(A.bracketing()), Expr(B.bracketing()));
    Expr ba = product(Expr(B.bracketing()), Expr(A.bracketing()));
    CommutatorResult r{sign == Sign::minus ? ab - ba : ab + ba, Expr::zero(), {}};
    r.normal = normal_form(r.raw, nesting);
    r.associators = list_assoc_atoms(r.normal);
    return r;
}

Rational scalar_rational(const Scalar& s, const SymbolValues& symbols) {
    Scalar v = s;
    for (const auto& [name, value] : symbols)
        v = v.substitute(name, value);
    if (!v.is_rational())
        throw Error("coefficient '" + v.str() + "' has no rational value" +
                    (symbols.empty() ? "" : " after symbol substitution"));
    return v.rational_value();
}

namespace {

Element evaluate_term(const Term& t, const AlgebraPtr& alg, const GenAssignment& assignment,
                      const SymbolValues& symbols);

Element evaluate_expr(const Expr& e, const AlgebraPtr& alg, const GenAssignment& assignment,
                      const SymbolValues& symbols) {
    Element out = Element::zero(alg);
    for (const auto& [t, c] : e.terms())
        out += scalar_rational(c, symbols) * evaluate_term(t, alg, assignment, symbols);
    return out;
}

Element evaluate_term(const Term& t, const AlgebraPtr& alg, const GenAssignment& assignment,
                      const SymbolValues& symbols) {
    if (t.is_leaf()) {
        const Generator& g = t.generator();
        auto it = assignment.find(g);
        if (it != assignment.end()) {
            if (!same_algebra(*it->second.algebra(), *alg))
                throw Error("assignment for '" + g.str() + "' lives in algebra '" +
                            it->second.algebra()->name() + "', expected '" + alg->name() + "'");
            return it->second;
        }
        if (g.conjugated) {
            auto base = assignment.find(g.without_conj());
            if (base != assignment.end()) {
                if (!same_algebra(*base->second.algebra(), *alg))
                    throw Error("assignment for '" + g.without_conj().str() +
                                "' lives in algebra '" + base->second.algebra()->name() +
                                "', expected '" + alg->name() + "'");
                return conj(base->second);
            }
        }
        throw Error("generator '" + g.str() + "' has no assigned value");
    }
    if (t.is_atom())
        return evaluate_expr(expand_atom(t.assoc()), alg, assignment, symbols);
    return mul(evaluate_term(t.left(), alg, assignment, symbols),
               evaluate_term(t.right(), alg, assignment, symbols));
}

} // namespace

Element evaluate(const Expr& e, const AlgebraPtr& alg, const GenAssignment& assignment,
                 const SymbolValues& symbols) {
    if (!alg)
        throw Error("evaluate needs an algebra");
    return evaluate_expr(e, alg, assignment, symbols);
}

} // namespace nonassoc

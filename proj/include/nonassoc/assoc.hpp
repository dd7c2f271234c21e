#pragma once

#include "nonassoc/algebra.hpp"
#include "nonassoc/expr.hpp"

#include <map>
#include <vector>

namespace nonassoc {

/// (ab)c ± a(bc), expanded and canonicalized. Trilinear in every slot; the
/// minus sign gives the standard associator.
Expr associator(Sign sign, const Expr& a, const Expr& b, const Expr& c);

/// Ordered generator factors together with an explicit bracketing tree.
/// The tree is the identity of the operator; the factor list is derived and
/// kept for re-rendering with a different bracketing.
class CompositeOp {
public:
    CompositeOp(std::vector<Generator> factors, Nesting shape = Nesting::left);
    explicit CompositeOp(const Term& shape);

    const std::vector<Generator>& factors() const { return factors_; }
    const Term& bracketing() const { return shape_; }
    int degree() const { return static_cast<int>(factors_.size()); }

    /// Left or right comb over the same factors.
    Term rendered(Nesting shape) const;

private:
    std::vector<Generator> factors_;
    Term shape_;
};

/// A·B ± B·A of two composites, raw and in associator normal form.
/// Expanding every associator atom in `normal` reproduces `raw` exactly.
struct CommutatorResult {
    Expr raw;
    Expr normal;
    std::vector<AssocAtom> associators; // distinct atoms appearing in normal
};

CommutatorResult composite_commutator(Sign sign, const CompositeOp& A, const CompositeOp& B,
                                      Nesting nesting = Nesting::left);

using GenAssignment = std::map<Generator, Element>;
using SymbolValues = std::map<std::string, Rational>;

/// Scalar with all symbols substituted; throws if the result is not a plain
/// rational (leftover symbols or an imaginary part).
Rational scalar_rational(const Scalar& s, const SymbolValues& symbols = {});

/// Concrete instantiation: generators map to assigned Elements, conjugated
/// generators fall back to the involution of their unstarred assignment,
/// associator atoms evaluate through their definitional expansion, products
/// through the algebra table. Derivative-marked generators are independent
/// symbols and need their own assignments.
Element evaluate(const Expr& e, const AlgebraPtr& alg, const GenAssignment& assignment,
                 const SymbolValues& symbols = {});

} // namespace nonassoc

#pragma once

#include "nonassoc/expr.hpp"

#include <array>
#include <string>
#include <vector>

namespace nonassoc {

/// Gauge data for the field-equation pipeline: adjoint dimension, exact
/// structure constants f^{abc} (colors 1..n), diagonal metric signs for
/// raising spacetime indices 0..3, and the name of the coupling symbol.
/// Construction validates total antisymmetry and the Jacobi identity of f
/// exactly; both are hard errors.
class GaugeContext {
public:
    static GaugeContext abelian(int n_colors = 1);
    static GaugeContext su2();
    /// f_flat[(a-1)*n*n + (b-1)*n + (c-1)] = f^{abc}.
    static GaugeContext from_table(std::string group, int n_colors, std::vector<Rational> f_flat);

    const std::string& group() const { return group_; }
    int n_colors() const { return n_; }
    const std::array<int, 4>& metric() const { return metric_; }
    const std::string& coupling() const { return coupling_; }

    Rational f(int a, int b, int c) const;

private:
    GaugeContext() = default;

    std::string group_;
    int n_ = 1;
    std::array<int, 4> metric_{{1, -1, -1, -1}};
    std::string coupling_ = "g";
    std::vector<Rational> f_; // n^3 entries
};

/// Formal spacetime derivative: linear, Leibniz over the binary product
/// (bracketing preserved), slot-wise over associator atoms; markers
/// accumulate as a sorted multiset, so mixed derivatives commute.
Expr derive(const Expr& e, const std::string& mu);

/// F^a_{mu nu} = d_mu A^a_nu - d_nu A^a_mu + g f^{abc} [A^b_mu A^c_nu]
/// with the dummy colors b,c expanded against the structure constants.
Expr field_strength(const GaugeContext& ctx, const std::string& A, int color, int mu, int nu);

/// One derived field equation lhs = 0 for the free index pair (color, mu).
/// raw_term_count censuses the contributions produced by the expansion
/// before any cancellation or merging; lhs is the canonicalized sum.
struct DerivedEquation {
    std::string gauge_symbol;
    int color = 1;
    int mu = 0;
    Expr lhs;
    int raw_term_count = 0;
};

/// d_nu F^{a mu nu} = 0 for every free (a, mu), the dummy nu summed
/// explicitly over 0..3 and raised through the metric. With `covariant` the
/// divergence is gauge-covariant: an extra g f^{abc} [A^b_nu F^{c mu nu}]
/// per nu.
std::vector<DerivedEquation> ym_equations(const GaugeContext& ctx, const std::string& A = "A",
                                          bool covariant = false);

/// Nested-factor decomposition of the gauge potential at one point:
/// depth n replaces A^a_mu by products of n `factor` generators chained by
/// inner dummy indices i1..i{inner_range}, combined left- or right-nested.
struct Decomposition {
    int depth = 2;
    Nesting nesting = Nesting::left;
    std::string target = "A";
    std::string factor = "phi";
    int inner_range = 2;
};

/// The replacement Expr for one underived target generator carrying
/// (color, mu): the explicit sum over all inner index values.
Expr decompose_generator(const GaugeContext& ctx, const Generator& gen, const Decomposition& d);

/// Applies the decomposition to every equation: each target generator
/// (including derivative-marked ones, via Leibniz) is replaced by its
/// nested-product expansion; results are canonicalized and recounted.
std::vector<DerivedEquation> substitute_decomposition(const GaugeContext& ctx,
                                                      const std::vector<DerivedEquation>& eqs,
                                                      const Decomposition& d);

/// Index-hygiene lint over one equation. Occurrences are tallied per term:
/// derivative markers and non-inner lower indices count as spacetime, "i"-
/// prefixed indices as inner; upper color indices are exempt because the
/// structure constants are materialized into coefficients. Every inner label
/// must occur an even number of times (adjacent contraction pairs); the
/// spacetime labels with odd counts are the free indices and must be exactly
/// {mu of the equation} in every term.
struct IndexLint {
    bool ok = true;
    std::string message;
};

IndexLint lint_equation(const DerivedEquation& eq);

/// "<lhs> = 0".
std::string equation_str(const DerivedEquation& eq);

} // namespace nonassoc

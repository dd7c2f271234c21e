#pragma once

#include "nonassoc/algebra.hpp"
#include "nonassoc/linalg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace nonassoc {

/// Exact linear subspace of an algebra with a canonical echelon basis.
class Subspace {
public:
    Subspace(AlgebraPtr alg, EchelonBasis basis);

    const AlgebraPtr& algebra() const { return alg_; }
    const EchelonBasis& echelon() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.rank()); }

    std::vector<Element> basis() const;
    bool contains(const Element& v) const;

private:
    AlgebraPtr alg_;
    EchelonBasis basis_;
};

/// Discretized state: finitely many sites, each a positive rational weight
/// and a value; the integral over the volume becomes the weighted sum.
class StateVector {
public:
    struct Site {
        Rational weight;
        Element value;
    };

    explicit StateVector(std::vector<Site> sites);

    const std::vector<Site>& sites() const { return sites_; }
    const AlgebraPtr& algebra() const { return sites_.front().value.algebra(); }

private:
    std::vector<Site> sites_;
};

struct ObservabilityReport {
    bool observable = true;
    Subspace closure;
    /// First closure-basis triple (i,j,k) with nonzero minus-associator.
    std::optional<std::array<int, 3>> witness;
    /// Whether the closure is mapped into itself by the involution; only
    /// reported when the algebra declares one.
    std::optional<bool> involution_closed;
};

/// {n : associator_minus with n in any slot vanishes against all basis
/// pairs}; exact kernel computation. Always contains e0 and is associative.
Subspace nucleus(const AlgebraPtr& alg);

/// Smallest product-closed subspace containing the generators.
Subspace generated_subalgebra(const std::vector<Element>& gens);

/// Observable iff the minus-associator vanishes on all basis triples of the
/// generated closure.
ObservabilityReport classify(const std::vector<Element>& gens);

enum class Bracketing { left, right };

/// left: sum of w * (psi* M) psi; right: sum of w * psi* (M psi).
Element expectation(const StateVector& psi, const Element& M, Bracketing how);

/// expectation(left) - expectation(right)
///   = sum of w * associator_minus(conj(psi), M, psi), exactly.
Element bracketing_defect(const StateVector& psi, const Element& M);

} // namespace nonassoc

#pragma once

#include "nonassoc/rational.hpp"

#include <vector>

namespace nonassoc {

/// Incrementally maintained reduced row echelon basis of a subspace of Q^dim.
/// Rows are kept fully reduced (pivot entries 1, pivot columns otherwise 0)
/// and sorted by pivot column, so the row list is a canonical basis of the
/// span no matter the insertion order.
class EchelonBasis {
public:
    explicit EchelonBasis(Eigen::Index dim) : dim_(dim) {}

    Eigen::Index dim() const { return dim_; }
    Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }

    const std::vector<QVec>& rows() const { return rows_; }
    const std::vector<Eigen::Index>& pivots() const { return pivots_; }

    /// Residual of v after eliminating all pivots; zero iff v is in the span.
    QVec reduce(QVec v) const;
    bool contains(const QVec& v) const;

    /// Adds v to the span. Returns true if the rank grew.
    bool insert(const QVec& v);

private:
    Eigen::Index dim_;
    std::vector<QVec> rows_;
    std::vector<Eigen::Index> pivots_;
};

/// Canonical basis of {x : row·x = 0 for every inserted row}, built from the
/// free columns of the reduced echelon form. Deterministic: depends only on
/// the row span.
std::vector<QVec> kernel_basis(const EchelonBasis& rowspace);

/// Kernel of m (vectors x with m·x = 0) as a canonical list of basis vectors.
std::vector<QVec> nullspace(const QMat& m);

} // namespace nonassoc

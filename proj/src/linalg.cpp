#include "nonassoc/linalg.hpp"

#include <algorithm>

namespace nonassoc {

namespace {

Eigen::Index first_nonzero(const QVec& v) {
    for (Eigen::Index k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
            return k;
    return -1;
}

} // namespace

QVec EchelonBasis::reduce(QVec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational c = v[pivots_[k]]; // copy: v aliases the multiplier
        if (!c.is_zero())
            v -= c * rows_[k];
    }
    return v;
}

bool EchelonBasis::contains(const QVec& v) const {
    return first_nonzero(reduce(v)) < 0;
}

bool EchelonBasis::insert(const QVec& v) {
    QVec r = reduce(v);
    Eigen::Index p = first_nonzero(r);
    if (p < 0)
        return false;
    const Rational piv = r[p]; // copy: r aliases the divisor
    r /= piv;
    for (QVec& row : rows_) {
        const Rational c = row[p];
        if (!c.is_zero())
            row -= c * r;
    }
    auto at = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(at - pivots_.begin());
    pivots_.insert(at, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(r));
    return true;
}

std::vector<QVec> kernel_basis(const EchelonBasis& rowspace) {
    const Eigen::Index d = rowspace.dim();
    std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
    for (Eigen::Index p : rowspace.pivots())
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<QVec> out;
    for (Eigen::Index f = 0; f < d; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        QVec x = QVec::Zero(d);
        x[f] = Rational(1);
        for (std::size_t k = 0; k < rowspace.rows().size(); ++k)
            x[rowspace.pivots()[k]] = -rowspace.rows()[k][f];
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<QVec> nullspace(const QMat& m) {
    EchelonBasis rowspace(m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        rowspace.insert(m.row(r).transpose());
    return kernel_basis(rowspace);
}

} // namespace nonassoc

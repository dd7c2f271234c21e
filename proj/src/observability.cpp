#include "nonassoc/observability.hpp"

namespace nonassoc {

Subspace::Subspace(AlgebraPtr alg, EchelonBasis basis) : alg_(std::move(alg)), basis_(std::move(basis)) {
    if (!alg_)
        throw Error("subspace needs an algebra");
    if (basis_.dim() != alg_->dim())
        throw Error("subspace basis dimension does not match the algebra");
}

std::vector<Element> Subspace::basis() const {
    std::vector<Element> out;
    out.reserve(basis_.rows().size());
    for (const QVec& row : basis_.rows())
        out.emplace_back(alg_, row);
    return out;
}

bool Subspace::contains(const Element& v) const {
    if (!same_algebra(*v.algebra(), *alg_))
        throw Error("membership test: algebra mismatch ('" + v.algebra()->name() + "' vs '" +
                    alg_->name() + "')");
    return basis_.contains(v.coeffs());
}

StateVector::StateVector(std::vector<Site> sites) : sites_(std::move(sites)) {
    if (sites_.empty())
        throw Error("state needs at least one site");
    for (const Site& s : sites_) {
        if (s.weight.sign() <= 0)
            throw Error("state weights must be positive (got " + s.weight.str() + ")");
        if (!same_algebra(*s.value.algebra(), *sites_.front().value.algebra()))
            throw Error("state sites live in different algebras");
    }
}

Subspace nucleus(const AlgebraPtr& alg) {
    if (!alg)
        throw Error("nucleus needs an algebra");
    const int d = alg->dim();
    auto unit = [&](int k) {
        QVec v = QVec::Zero(d);
        v[k] = Rational(1);
        return v;
    };
    // The constraint rows (one per slot, basis pair and output coordinate)
    // vastly outnumber the dimension, so instead of stacking them we carry
    // the running kernel: a row either annihilates every kernel vector (a
    // no-op) or cuts the kernel dimension by one. Once the kernel has
    // stabilized each remaining row costs a handful of dot products.
    std::vector<QVec> kern;
    kern.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        kern.push_back(unit(k));
    auto restrict_kernel = [&](const QVec& row) {
        std::vector<Rational> dots(kern.size(), Rational(0));
        std::size_t pivot = kern.size();
        for (std::size_t v = 0; v < kern.size(); ++v) {
            Rational acc(0);
            for (int c = 0; c < d; ++c)
                if (!row[c].is_zero() && !kern[v][c].is_zero())
                    acc += row[c] * kern[v][c];
            dots[v] = std::move(acc);
            if (pivot == kern.size() && !dots[v].is_zero())
                pivot = v;
        }
        if (pivot == kern.size())
            return;
        for (std::size_t v = 0; v < kern.size(); ++v) {
            if (v == pivot || dots[v].is_zero())
                continue;
            Rational f = dots[v] / dots[pivot];
            kern[v] -= f * kern[pivot];
        }
        kern.erase(kern.begin() + static_cast<std::ptrdiff_t>(pivot));
    };
    // Columns of each block: associator with e_k placed in one of the three
    // slots against the basis pair (e_i, e_j).
    for (int slot = 0; slot < 3 && !kern.empty(); ++slot) {
        for (int i = 0; i < d && !kern.empty(); ++i) {
            QVec ei = unit(i);
            for (int j = 0; j < d && !kern.empty(); ++j) {
                QVec ej = unit(j);
                std::vector<QVec> cols;
                cols.reserve(static_cast<std::size_t>(d));
                for (int k = 0; k < d; ++k) {
                    QVec ek = unit(k);
                    const QVec& a = slot == 0 ? ek : ei;
                    const QVec& b = slot == 1 ? ek : (slot == 0 ? ei : ej);
                    const QVec& c = slot == 2 ? ek : ej;
                    cols.push_back(QVec(mul_vec(*alg, mul_vec(*alg, a, b), c) -
                                        mul_vec(*alg, a, mul_vec(*alg, b, c))));
                }
                for (int out = 0; out < d; ++out) {
                    QVec row(d);
                    for (int k = 0; k < d; ++k)
                        row[k] = cols[static_cast<std::size_t>(k)][out];
                    restrict_kernel(row);
                }
            }
        }
    }
    EchelonBasis kernel(d);
    for (const QVec& v : kern)
        kernel.insert(v);
    return Subspace(alg, std::move(kernel));
}

Subspace generated_subalgebra(const std::vector<Element>& gens) {
    if (gens.empty())
        throw Error("generated_subalgebra needs at least one generator");
    const AlgebraPtr& alg = gens.front().algebra();
    for (const Element& g : gens)
        if (!same_algebra(*g.algebra(), *alg))
            throw Error("generators live in different algebras");
    EchelonBasis span(alg->dim());
    for (const Element& g : gens)
        span.insert(g.coeffs());
    bool grew = true;
    while (grew && span.rank() < alg->dim()) {
        grew = false;
        std::vector<QVec> rows = span.rows();
        for (const QVec& x : rows)
            for (const QVec& y : rows)
                grew |= span.insert(mul_vec(*alg, x, y));
    }
    return Subspace(alg, std::move(span));
}

ObservabilityReport classify(const std::vector<Element>& gens) {
    Subspace closure = generated_subalgebra(gens);
    const Algebra& alg = *closure.algebra();
    const auto& rows = closure.echelon().rows();
    const int r = closure.dim();
    std::optional<std::array<int, 3>> witness;
    for (int i = 0; i < r && !witness; ++i) {
        for (int j = 0; j < r && !witness; ++j) {
            for (int k = 0; k < r && !witness; ++k) {
                QVec a = QVec(mul_vec(alg, mul_vec(alg, rows[i], rows[j]), rows[k]) -
                              mul_vec(alg, rows[i], mul_vec(alg, rows[j], rows[k])));
                bool zero = true;
                for (Eigen::Index c = 0; c < a.size(); ++c)
                    if (!a[c].is_zero()) {
                        zero = false;
                        break;
                    }
                if (!zero)
                    witness = std::array<int, 3>{i, j, k};
            }
        }
    }
    std::optional<bool> inv_closed;
    if (alg.has_involution()) {
        bool closed = true;
        for (const QVec& row : rows) {
            QVec c = row;
            for (int k = 0; k < alg.dim(); ++k)
                c[k] *= Rational(alg.involution_signs()[static_cast<std::size_t>(k)]);
            if (!closure.echelon().contains(c)) {
                closed = false;
                break;
            }
        }
        inv_closed = closed;
    }
    return ObservabilityReport{!witness.has_value(), std::move(closure), witness, inv_closed};
}

Element expectation(const StateVector& psi, const Element& M, Bracketing how) {
    if (!same_algebra(*psi.algebra(), *M.algebra()))
        throw Error("expectation: algebra mismatch ('" + psi.algebra()->name() + "' vs '" +
                    M.algebra()->name() + "')");
    Element acc = Element::zero(M.algebra());
    for (const auto& site : psi.sites()) {
        Element star = conj(site.value);
        Element one = how == Bracketing::left ? mul(mul(star, M), site.value)
                                              : mul(star, mul(M, site.value));
        acc += site.weight * one;
    }
    return acc;
}

Element bracketing_defect(const StateVector& psi, const Element& M) {
    return expectation(psi, M, Bracketing::left) - expectation(psi, M, Bracketing::right);
}

} // namespace nonassoc

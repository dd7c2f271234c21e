#pragma once

#include "nonassoc/error.hpp"
#include "nonassoc/linalg.hpp"
#include "nonassoc/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nonassoc {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional algebra over the rationals with distinguished basis
/// e0..e{dim-1}, e0 a two-sided identity. Either built by Cayley-Dickson
/// doubling from the reals (monomial structure constants, gammas recorded)
/// or loaded from a user table (dense structure constants). Immutable.
class Algebra {
public:
    /// Monomial structure constant: e_i e_j = sign * e_index.
    struct Mono {
        int sign = 1;
        int index = 0;
    };

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }

    /// Doubling signs, outermost last; empty for the reals and user tables.
    const std::vector<int>& gammas() const { return gammas_; }

    /// True when a monomial table exists (reals or any doubling of them).
    bool cd_constructed() const { return !mono_.empty(); }

    bool has_involution() const { return !inv_signs_.empty(); }
    /// Diagonal signs of the involution e_k -> inv_signs[k] * e_k.
    const std::vector<int>& involution_signs() const { return inv_signs_; }

    /// Coefficient vector of e_i e_j.
    const QVec& basis_product(int i, int j) const { return dense_[idx(i, j)]; }
    /// Monomial form of e_i e_j; empty for user tables.
    std::optional<Mono> mono_product(int i, int j) const;

    /// Throws Error unless 0 <= k < dim().
    void check_basis(int k) const;

    static AlgebraPtr make_reals();
    static AlgebraPtr from_gammas(const std::vector<int>& gammas, std::string name = "");
    /// table[i][j] = coefficient vector of e_i e_j. Validates the identity
    /// law for e0 and, when involution signs are given, that they define an
    /// antiautomorphism: (e_i e_j)* = e_j* e_i*.
    static AlgebraPtr from_table(std::string name, std::vector<std::vector<QVec>> table,
                                 std::vector<int> involution_signs = {});

private:
    friend AlgebraPtr cd_double(const AlgebraPtr& base, int gamma);

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(j);
    }
    void build_dense_from_mono();

    std::string name_;
    int dim_ = 1;
    std::vector<int> gammas_;
    std::vector<Mono> mono_;    // dim^2 entries when cd_constructed
    std::vector<QVec> dense_;   // dim^2 entries, always present
    std::vector<int> inv_signs_;
};

/// One Cayley-Dickson doubling step with the fixed convention
/// (a,b)(c,d) = (ac + gamma * conj(d) b, da + b conj(c)), (a,b)* = (conj(a), -b).
/// Requires a CD-constructed base (monomial table); gamma must be +1 or -1.
AlgebraPtr cd_double(const AlgebraPtr& base, int gamma);

/// Builtin names and aliases: reals (r), complex (c), quaternions (quat, h),
/// octonions (oct, o), split-octonions (soct), sedenions (sed, s).
AlgebraPtr named_algebra(std::string_view name);
std::vector<std::string> algebra_names();

/// Same object or structurally identical (dimension, tables, involution).
bool same_algebra(const Algebra& a, const Algebra& b);

/// Vector in a fixed algebra with exact rational coordinates.
class Element {
public:
    Element(AlgebraPtr alg, QVec coeffs);

    static Element zero(const AlgebraPtr& alg);
    static Element basis(const AlgebraPtr& alg, int k);

    const AlgebraPtr& algebra() const { return alg_; }
    const QVec& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// Rational multiple of e0 ("real" in the observables sense).
    bool is_real() const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { a += b; return a; }
    friend Element operator-(Element a, const Element& b) { a -= b; return a; }
    friend Element operator*(const Rational& c, Element a) { a.coeffs_ *= c; return a; }

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// "0", "e1 + 2 e3 - 1/2 e7".
    std::string str() const;

private:
    AlgebraPtr alg_;
    QVec coeffs_;
};

/// Bilinear product from the structure-constant table. Elements must belong
/// to the same algebra.
Element mul(const Element& a, const Element& b);

/// Same product on raw coefficient vectors of one algebra.
QVec mul_vec(const Algebra& alg, const QVec& x, const QVec& y);

/// Involution; requires the algebra to declare one.
Element conj(const Element& a);

/// Identity component of a * conj(a).
Rational norm_sq(const Element& a);

/// (ab)c - a(bc).
Element associator_minus(const Element& a, const Element& b, const Element& c);

/// Parses "e3", "2 e3", "1/2*e7", "e1 + 2 e3 - 1/2 e7", "0". Throws Error.
Element parse_element(const AlgebraPtr& alg, std::string_view text);

enum class Identity { alternative, flexible, moufang, associative, commutative };

Identity identity_from_name(std::string_view name);
const char* identity_name(Identity which);

/// Verdict of an exhaustive basis-tuple scan. `counterexample` holds the
/// first failing tuple in lexicographic order: (i,j) for commutative,
/// (i,j,k,l) for moufang, (i,j,k) otherwise. The quadratic laws
/// (alternative, flexible, moufang) are checked in polarized form, which
/// over the rationals is equivalent to the original identity.
struct IdentityCheck {
    bool holds = true;
    std::vector<int> counterexample;
};

IdentityCheck check_identity(const AlgebraPtr& alg, Identity which);

struct ZeroDivisorPair {
    Element u;
    Element v;
};

/// Searches u = e_i ± e_j, v = e_k ± e_l (i<j, k<l) for a pair of nonzero
/// elements with u v = 0; deterministic first hit, nullopt if none exists in
/// that family.
std::optional<ZeroDivisorPair> find_zero_divisor(const AlgebraPtr& alg);

} // namespace nonassoc

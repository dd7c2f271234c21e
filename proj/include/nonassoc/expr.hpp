#pragma once

#include "nonassoc/error.hpp"
#include "nonassoc/generator.hpp"
#include "nonassoc/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace nonassoc {

class Expr;
class Term;

enum class Sign { minus, plus };

inline const char* sign_suffix(Sign s) { return s == Sign::minus ? "_-" : "_+"; }

/// Formal associator symbol {s1, s2, s3}_± with Expr slots. Stands for the
/// (yet unknown) value of (s1 s2) s3 ± s1 (s2 s3); expand_assoc_atoms
/// substitutes that definition. `label` is decorative metadata and takes no
/// part in equality or ordering.
struct AssocAtom {
    Sign sign = Sign::minus;
    std::vector<Expr> slots; // exactly 3
    std::string label;
};

bool operator==(const AssocAtom& a, const AssocAtom& b);

/// Element of the free magma over generators and formal associator atoms:
/// either a leaf or a strictly binary product of two Terms. Binary structure
/// is the whole point; there is no flat n-ary product and no implied
/// associativity. Immutable, cheap to copy (shared nodes), ordered by its
/// canonical serialization.
class Term {
public:
    static Term leaf(Generator g);
    static Term atom(AssocAtom a);
    static Term product(const Term& l, const Term& r);

    bool is_leaf() const;
    bool is_atom() const;
    bool is_product() const;

    const Generator& generator() const; // leaf only
    const AssocAtom& assoc() const;     // atom only
    const Term& left() const;           // product only
    const Term& right() const;

    /// Number of structural leaves (generators and atoms each count 1).
    int degree() const;

    /// Canonical text, e.g. "[[a b] c]"; doubles as the total-order sort key.
    const std::string& key() const;

    friend bool operator==(const Term& a, const Term& b) { return a.key() == b.key(); }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b) { return a.key() < b.key(); }

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Products whose combined degree exceeds the cap throw (bracketing shapes
/// grow as Catalan numbers; runaway expansions should fail loudly). Default
/// cap 12, adjustable process-wide.
int degree_cap();
void set_degree_cap(int cap);

/// Finite linear combination of Terms with exact Scalar coefficients, stored
/// canonically: no zero coefficients, terms in serialization order. Addition
/// and scalar ops keep the form canonical; the Term-level product is bilinear
/// and deliberately not associative.
class Expr {
public:
    Expr() = default;
    Expr(const Term& t) { add_term(Scalar::one(), t); }
    Expr(const Generator& g) : Expr(Term::leaf(g)) {}

    static Expr zero() { return Expr(); }
    static Expr from_term(const Scalar& c, const Term& t);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const;
    const std::map<Term, Scalar>& terms() const { return terms_; }

    void add_term(const Scalar& c, const Term& t);

    Expr operator-() const;
    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    friend Expr operator+(Expr a, const Expr& b) { a += b; return a; }
    friend Expr operator-(Expr a, const Expr& b) { a -= b; return a; }

    friend bool operator==(const Expr& a, const Expr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    /// Canonical text form; re-parses to this Expr.
    std::string str() const;

private:
    std::map<Term, Scalar> terms_;
};

/// Bilinear non-associative product.
Expr product(const Expr& a, const Expr& b);
inline Expr operator*(const Expr& a, const Expr& b) { return product(a, b); }
Expr operator*(const Scalar& c, const Expr& e);

/// Rebuilds the canonical form (merge like terms, drop zeros). Exprs are
/// canonical by construction, so this is idempotent by inspection; it exists
/// as the explicit normalization point for deserialized or hand-built data.
Expr canonicalize(const Expr& e);

/// Star operation: antilinear in coefficients, (ab)* = b*a*, flips generator
/// stars; on formal associators {a,b,c}_-* = -{c*,b*,a*}_- and
/// {a,b,c}_+* = {c*,b*,a*}_+. Involutive.
Expr conjugate(const Expr& e);

enum class Nesting { left, right };

/// Result of reassociating one Term: t = comb + corrections once every
/// formal associator in `corrections` is expanded by its definition.
struct NormalForm {
    Term comb;
    Expr corrections;
    int applications = 0; // number of associator rewrites used
};

/// Rewrites t to the left comb ((...(g1 g2) g3)...gn) over its leaves in
/// order, collecting -{x,y,z}_- correction atoms for every rewrite
/// x(yz) -> (xy)z - {x,y,z}_-. At most (n-1)(n-2)/2 rewrites for degree n.
NormalForm to_left_normal_form(const Term& t);

/// Mirror image: target (g1 (g2 (... gn))), rewrites (xy)z -> x(yz) + {x,y,z}_-.
NormalForm to_right_normal_form(const Term& t);

/// Term-wise normal form of a whole Expr (comb + corrections, summed).
Expr normal_form(const Expr& e, Nesting nesting);

/// Builds the formal symbol {a,b,c}_± as a one-term Expr, labelling it by
/// slot shape (all-simple -> "A", composite first slot -> "A1", composite
/// third slot -> "A2").
Expr make_assoc_atom(Sign sign, const Expr& a, const Expr& b, const Expr& c);
std::string assoc_label(const AssocAtom& atom);

/// Definitional expansion (s1 s2) s3 ± s1 (s2 s3) of one atom.
Expr expand_atom(const AssocAtom& atom);

/// Replaces every formal associator (recursively, slots included) by its
/// definitional expansion; the result is associator-free.
Expr expand_assoc_atoms(const Expr& e);

/// Distinct associator atoms appearing anywhere in e, in canonical order.
std::vector<AssocAtom> list_assoc_atoms(const Expr& e);

/// Replaces generator leaves by whole Exprs (exact-match on the full
/// Generator including indices, point, star and derivative markers),
/// extending multiplicatively over products and into atom slots.
Expr substitute(const Expr& e, const std::map<Generator, Expr>& replacements);

/// Replaces a scalar symbol by a rational in every coefficient.
Expr substitute_symbol(const Expr& e, const std::string& name, const Rational& value);

} // namespace nonassoc

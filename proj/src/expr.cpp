#include "nonassoc/expr.hpp"

#include <atomic>
#include <variant>

namespace nonassoc {

namespace {
std::atomic<int> g_degree_cap{12};
} // namespace

int degree_cap() { return g_degree_cap.load(); }

void set_degree_cap(int cap) {
    if (cap < 1)
        throw Error("degree cap must be positive");
    g_degree_cap.store(cap);
}

struct Term::Node {
    std::variant<Generator, AssocAtom, std::pair<Term, Term>> data;
    int degree = 1;
    std::string key;
};

Term Term::leaf(Generator g) {
    auto n = std::make_shared<Node>();
    n->key = g.str();
    n->data = std::move(g);
    n->degree = 1;
    return Term(std::move(n));
}

Term Term::atom(AssocAtom a) {
    if (a.slots.size() != 3)
        throw Error("associator atom needs exactly 3 slots");
    auto n = std::make_shared<Node>();
    n->key = "{" + a.slots[0].str() + ", " + a.slots[1].str() + ", " + a.slots[2].str() + "}" +
             sign_suffix(a.sign);
    n->degree = 1;
    n->data = std::move(a);
    return Term(std::move(n));
}

Term Term::product(const Term& l, const Term& r) {
    int deg = l.degree() + r.degree();
    if (deg > degree_cap())
        throw Error("degree cap exceeded: product of degree " + std::to_string(deg) +
                    " (cap " + std::to_string(degree_cap()) + ", see set_degree_cap)");
    auto n = std::make_shared<Node>();
    n->key = "[" + l.key() + " " + r.key() + "]";
    n->degree = deg;
    n->data = std::make_pair(l, r);
    return Term(std::move(n));
}

bool Term::is_leaf() const { return std::holds_alternative<Generator>(node_->data); }
bool Term::is_atom() const { return std::holds_alternative<AssocAtom>(node_->data); }
bool Term::is_product() const { return std::holds_alternative<std::pair<Term, Term>>(node_->data); }

const Generator& Term::generator() const { return std::get<Generator>(node_->data); }
const AssocAtom& Term::assoc() const { return std::get<AssocAtom>(node_->data); }
const Term& Term::left() const { return std::get<std::pair<Term, Term>>(node_->data).first; }
const Term& Term::right() const { return std::get<std::pair<Term, Term>>(node_->data).second; }

int Term::degree() const { return node_->degree; }
const std::string& Term::key() const { return node_->key; }

bool operator==(const AssocAtom& a, const AssocAtom& b) {
    return a.sign == b.sign && a.slots == b.slots;
}

Expr Expr::from_term(const Scalar& c, const Term& t) {
    Expr e;
    e.add_term(c, t);
    return e;
}

void Expr::add_term(const Scalar& c, const Term& t) {
    if (c.is_zero())
        return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

int Expr::degree() const {
    int d = 0;
    for (const auto& [t, c] : terms_)
        d = std::max(d, t.degree());
    return d;
}

Expr Expr::operator-() const {
    Expr r;
    for (const auto& [t, c] : terms_)
        r.terms_.emplace(t, -c);
    return r;
}

Expr& Expr::operator+=(const Expr& o) {
    for (const auto& [t, c] : o.terms_)
        add_term(c, t);
    return *this;
}

Expr& Expr::operator-=(const Expr& o) {
    for (const auto& [t, c] : o.terms_)
        add_term(-c, t);
    return *this;
}

std::string Expr::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        for (const auto& piece : scalar_pieces(c)) {
            bool neg = piece.coeff.sign() < 0;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            bool unit = !piece.imaginary && piece.monomial.empty() && abs(piece.coeff) == Rational(1);
            if (!unit) {
                out += piece_magnitude_str(piece);
                out += '*';
            }
            out += t.key();
        }
    }
    return out;
}

Expr product(const Expr& a, const Expr& b) {
    Expr r;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            r.add_term(ca * cb, Term::product(ta, tb));
    return r;
}

Expr operator*(const Scalar& c, const Expr& e) {
    Expr r;
    for (const auto& [t, ct] : e.terms())
        r.add_term(c * ct, t);
    return r;
}

Expr canonicalize(const Expr& e) {
    Expr r;
    for (const auto& [t, c] : e.terms())
        r.add_term(c, t);
    return r;
}

namespace {

// (ab)* = b*a*; a formal minus-associator picks up a sign:
// ((ab)c - a(bc))* = c*(b*a*) - (c*b*)a* = -{c*,b*,a*}_-.
std::pair<Scalar, Term> conjugate_term(const Term& t) {
    if (t.is_leaf())
        return {Scalar::one(), Term::leaf(t.generator().starred())};
    if (t.is_atom()) {
        const AssocAtom& a = t.assoc();
        Expr s1 = conjugate(a.slots[2]);
        Expr s2 = conjugate(a.slots[1]);
        Expr s3 = conjugate(a.slots[0]);
        Scalar c = a.sign == Sign::minus ? Scalar(-1) : Scalar::one();
        AssocAtom flipped{a.sign, {std::move(s1), std::move(s2), std::move(s3)}, ""};
        flipped.label = assoc_label(flipped);
        return {c, Term::atom(std::move(flipped))};
    }
    auto [cl, l] = conjugate_term(t.left());
    auto [cr, r] = conjugate_term(t.right());
    return {cl * cr, Term::product(r, l)};
}

} // namespace

Expr conjugate(const Expr& e) {
    Expr out;
    for (const auto& [t, c] : e.terms()) {
        auto [cc, tc] = conjugate_term(t);
        out.add_term(c.conj() * cc, tc);
    }
    return out;
}

namespace {

NormalForm reassociate_left(const Term& t) {
    if (!t.is_product())
        return {t, Expr::zero(), 0};
    const Term& a = t.left();
    const Term& b = t.right();
    if (!b.is_product()) {
        // right factor already a leaf: normalize the left factor, then append.
        NormalForm inner = reassociate_left(a);
        return {Term::product(inner.comb, b), product(inner.corrections, Expr(b)),
                inner.applications};
    }
    // a(b1 b2) = (a b1) b2 - {a, b1, b2}_-
    Expr atom = make_assoc_atom(Sign::minus, Expr(a), Expr(b.left()), Expr(b.right()));
    NormalForm rest = reassociate_left(Term::product(Term::product(a, b.left()), b.right()));
    rest.corrections -= atom;
    rest.applications += 1;
    return rest;
}

NormalForm reassociate_right(const Term& t) {
    if (!t.is_product())
        return {t, Expr::zero(), 0};
    const Term& a = t.left();
    const Term& b = t.right();
    if (!a.is_product()) {
        NormalForm inner = reassociate_right(b);
        return {Term::product(a, inner.comb), product(Expr(a), inner.corrections),
                inner.applications};
    }
    // (a1 a2) b = a1 (a2 b) + {a1, a2, b}_-
    Expr atom = make_assoc_atom(Sign::minus, Expr(a.left()), Expr(a.right()), Expr(b));
    NormalForm rest = reassociate_right(Term::product(a.left(), Term::product(a.right(), b)));
    rest.corrections += atom;
    rest.applications += 1;
    return rest;
}

} // namespace

NormalForm to_left_normal_form(const Term& t) { return reassociate_left(t); }
NormalForm to_right_normal_form(const Term& t) { return reassociate_right(t); }

Expr normal_form(const Expr& e, Nesting nesting) {
    Expr out;
    for (const auto& [t, c] : e.terms()) {
        NormalForm nf = nesting == Nesting::left ? to_left_normal_form(t) : to_right_normal_form(t);
        out.add_term(c, nf.comb);
        out += c * nf.corrections;
    }
    return out;
}

std::string assoc_label(const AssocAtom& atom) {
    auto simple = [](const Expr& slot) {
        return slot.size() == 1 && slot.terms().begin()->first.is_leaf() &&
               slot.terms().begin()->second.is_one();
    };
    auto composite = [](const Expr& slot) {
        return slot.size() == 1 && slot.terms().begin()->first.is_product();
    };
    bool s0 = simple(atom.slots[0]), s1 = simple(atom.slots[1]), s2 = simple(atom.slots[2]);
    if (s0 && s1 && s2)
        return "A";
    if (composite(atom.slots[0]) && s1 && s2)
        return "A1";
    if (s0 && s1 && composite(atom.slots[2]))
        return "A2";
    return "";
}

Expr make_assoc_atom(Sign sign, const Expr& a, const Expr& b, const Expr& c) {
    AssocAtom atom{sign, {a, b, c}, ""};
    atom.label = assoc_label(atom);
    return Expr(Term::atom(std::move(atom)));
}

Expr expand_atom(const AssocAtom& atom) {
    const Expr& a = atom.slots[0];
    const Expr& b = atom.slots[1];
    const Expr& c = atom.slots[2];
    Expr left = product(product(a, b), c);
    Expr right = product(a, product(b, c));
    return atom.sign == Sign::minus ? left - right : left + right;
}

namespace {

Expr expand_term(const Term& t) {
    if (t.is_leaf())
        return Expr(t);
    if (t.is_atom()) {
        AssocAtom a = t.assoc();
        for (Expr& slot : a.slots)
            slot = expand_assoc_atoms(slot);
        return expand_atom(a);
    }
    return product(expand_term(t.left()), expand_term(t.right()));
}

} // namespace

Expr expand_assoc_atoms(const Expr& e) {
    Expr out;
    for (const auto& [t, c] : e.terms())
        out += c * expand_term(t);
    return out;
}

namespace {

void collect_atoms(const Term& t, std::map<std::string, AssocAtom>& acc) {
    if (t.is_atom()) {
        acc.emplace(t.key(), t.assoc());
        for (const Expr& slot : t.assoc().slots)
            for (const auto& [st, sc] : slot.terms())
                collect_atoms(st, acc);
        return;
    }
    if (t.is_product()) {
        collect_atoms(t.left(), acc);
        collect_atoms(t.right(), acc);
    }
}

} // namespace

std::vector<AssocAtom> list_assoc_atoms(const Expr& e) {
    std::map<std::string, AssocAtom> acc;
    for (const auto& [t, c] : e.terms())
        collect_atoms(t, acc);
    std::vector<AssocAtom> out;
    out.reserve(acc.size());
    for (auto& [k, a] : acc)
        out.push_back(std::move(a));
    return out;
}

namespace {

Expr substitute_term(const Term& t, const std::map<Generator, Expr>& repl) {
    if (t.is_leaf()) {
        auto it = repl.find(t.generator());
        return it != repl.end() ? it->second : Expr(t);
    }
    if (t.is_atom()) {
        AssocAtom a = t.assoc();
        for (Expr& slot : a.slots)
            slot = substitute(slot, repl);
        a.label = assoc_label(a);
        return Expr(Term::atom(std::move(a)));
    }
    return product(substitute_term(t.left(), repl), substitute_term(t.right(), repl));
}

} // namespace

Expr substitute(const Expr& e, const std::map<Generator, Expr>& replacements) {
    Expr out;
    for (const auto& [t, c] : e.terms())
        out += c * substitute_term(t, replacements);
    return out;
}

Expr substitute_symbol(const Expr& e, const std::string& name, const Rational& value) {
    Expr out;
    for (const auto& [t, c] : e.terms())
        out.add_term(c.substitute(name, value), t);
    return out;
}

} // namespace nonassoc

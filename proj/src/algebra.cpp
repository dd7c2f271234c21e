#include "nonassoc/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace nonassoc {

namespace {

bool vec_equal(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        return false;
    for (Eigen::Index k = 0; k < a.size(); ++k)
        if (a[k] != b[k])
            return false;
    return true;
}

bool vec_zero(const QVec& a) {
    for (Eigen::Index k = 0; k < a.size(); ++k)
        if (!a[k].is_zero())
            return false;
    return true;
}

std::string canonical_cd_name(const std::vector<int>& gammas) {
    static const std::map<std::vector<int>, std::string> known = {
        {{}, "reals"},
        {{-1}, "complex"},
        {{-1, -1}, "quaternions"},
        {{-1, -1, -1}, "octonions"},
        {{-1, -1, 1}, "split-octonions"},
        {{-1, -1, -1, -1}, "sedenions"},
    };
    auto it = known.find(gammas);
    if (it != known.end())
        return it->second;
    std::string out = "cd(";
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        if (k)
            out += ',';
        out += gammas[k] > 0 ? '+' : '-';
    }
    out += ')';
    return out;
}

} // namespace

void Algebra::check_basis(int k) const {
    if (k < 0 || k >= dim_)
        throw Error("basis index " + std::to_string(k) + " out of range for " + name_ +
                    " (dim " + std::to_string(dim_) + ")");
}

std::optional<Algebra::Mono> Algebra::mono_product(int i, int j) const {
    check_basis(i);
    check_basis(j);
    if (mono_.empty())
        return std::nullopt;
    return mono_[idx(i, j)];
}

void Algebra::build_dense_from_mono() {
    dense_.assign(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_), QVec());
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            QVec v = QVec::Zero(dim_);
            const Mono& m = mono_[idx(i, j)];
            v[m.index] = Rational(m.sign);
            dense_[idx(i, j)] = std::move(v);
        }
    }
}

AlgebraPtr Algebra::make_reals() {
    auto a = std::make_shared<Algebra>();
    a->name_ = "reals";
    a->dim_ = 1;
    a->mono_ = {Mono{1, 0}};
    a->inv_signs_ = {1};
    a->build_dense_from_mono();
    return a;
}

AlgebraPtr cd_double(const AlgebraPtr& base, int gamma) {
    if (!base)
        throw Error("cd_double: no base algebra");
    if (gamma != 1 && gamma != -1)
        throw Error("cd_double: gamma must be +1 or -1");
    if (!base->cd_constructed())
        throw Error("cd_double: base '" + base->name() +
                    "' is not Cayley-Dickson constructed");
    const int n = base->dim();
    auto a = std::make_shared<Algebra>();
    a->dim_ = 2 * n;
    a->gammas_ = base->gammas();
    a->gammas_.push_back(gamma);
    a->name_ = canonical_cd_name(a->gammas_);
    a->inv_signs_.assign(static_cast<std::size_t>(2 * n), -1);
    for (int k = 0; k < n; ++k)
        a->inv_signs_[static_cast<std::size_t>(k)] = base->involution_signs()[static_cast<std::size_t>(k)];

    auto bm = [&](int i, int j) { return *base->mono_product(i, j); };
    auto binv = [&](int k) { return base->involution_signs()[static_cast<std::size_t>(k)]; };

    a->mono_.assign(static_cast<std::size_t>(4 * n * n), Algebra::Mono{});
    for (int i = 0; i < 2 * n; ++i) {
        for (int j = 0; j < 2 * n; ++j) {
            Algebra::Mono out;
            if (i < n && j < n) {
                // (x,0)(y,0) = (xy, 0)
                Algebra::Mono m = bm(i, j);
                out = {m.sign, m.index};
            } else if (i < n && j >= n) {
                // (x,0)(0,y) = (0, yx)
                Algebra::Mono m = bm(j - n, i);
                out = {m.sign, n + m.index};
            } else if (i >= n && j < n) {
                // (0,x)(y,0) = (0, x conj(y))
                Algebra::Mono m = bm(i - n, j);
                out = {binv(j) * m.sign, n + m.index};
            } else {
                // (0,x)(0,y) = (gamma conj(y) x, 0)
                Algebra::Mono m = bm(j - n, i - n);
                out = {gamma * binv(j - n) * m.sign, m.index};
            }
            a->mono_[a->idx(i, j)] = out;
        }
    }
    a->build_dense_from_mono();
    return a;
}

AlgebraPtr Algebra::from_gammas(const std::vector<int>& gammas, std::string name) {
    AlgebraPtr a = make_reals();
    for (int g : gammas)
        a = cd_double(a, g);
    if (!name.empty() && name != a->name()) {
        auto renamed = std::make_shared<Algebra>(*a);
        renamed->name_ = std::move(name);
        return renamed;
    }
    return a;
}

AlgebraPtr Algebra::from_table(std::string name, std::vector<std::vector<QVec>> table,
                               std::vector<int> involution_signs) {
    const int d = static_cast<int>(table.size());
    if (d < 1)
        throw Error("algebra table is empty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != d)
            throw Error("algebra table is not square");
        for (const auto& v : row)
            if (v.size() != d)
                throw Error("algebra table entry has wrong length");
    }
    auto unit = [&](int k) {
        QVec v = QVec::Zero(d);
        v[k] = Rational(1);
        return v;
    };
    for (int k = 0; k < d; ++k) {
        if (!vec_equal(table[0][static_cast<std::size_t>(k)], unit(k)) ||
            !vec_equal(table[static_cast<std::size_t>(k)][0], unit(k)))
            throw Error("algebra table: e0 is not a two-sided identity");
    }
    if (!involution_signs.empty()) {
        if (static_cast<int>(involution_signs.size()) != d)
            throw Error("involution sign list has wrong length");
        for (int s : involution_signs)
            if (s != 1 && s != -1)
                throw Error("involution signs must be +1 or -1");
        if (involution_signs[0] != 1)
            throw Error("involution must fix e0");
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) {
                // (e_i e_j)* must equal e_j* e_i*
                const QVec& v = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const QVec& w = table[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                Rational outer(involution_signs[static_cast<std::size_t>(i)] *
                               involution_signs[static_cast<std::size_t>(j)]);
                for (int k = 0; k < d; ++k) {
                    if (v[k] * Rational(involution_signs[static_cast<std::size_t>(k)]) !=
                        outer * w[k])
                        throw Error("involution signs do not define an antiautomorphism "
                                    "(fails at basis pair " + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
                }
            }
        }
    }
    auto a = std::make_shared<Algebra>();
    a->name_ = name.empty() ? "table" : std::move(name);
    a->dim_ = d;
    a->inv_signs_ = std::move(involution_signs);
    a->dense_.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), QVec());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            a->dense_[a->idx(i, j)] = std::move(table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return a;
}

AlgebraPtr named_algebra(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    static const std::map<std::string, std::vector<int>> table = {
        {"r", {}}, {"real", {}}, {"reals", {}},
        {"c", {-1}}, {"complex", {-1}},
        {"h", {-1, -1}}, {"quat", {-1, -1}}, {"quaternion", {-1, -1}}, {"quaternions", {-1, -1}},
        {"o", {-1, -1, -1}}, {"oct", {-1, -1, -1}}, {"octonion", {-1, -1, -1}},
        {"octonions", {-1, -1, -1}},
        {"soct", {-1, -1, 1}}, {"split-oct", {-1, -1, 1}}, {"split-octonion", {-1, -1, 1}},
        {"split-octonions", {-1, -1, 1}},
        {"s", {-1, -1, -1, -1}}, {"sed", {-1, -1, -1, -1}}, {"sedenion", {-1, -1, -1, -1}},
        {"sedenions", {-1, -1, -1, -1}},
    };
    auto it = table.find(key);
    if (it == table.end()) {
        std::string names;
        for (const auto& n : algebra_names()) {
            if (!names.empty())
                names += ", ";
            names += n;
        }
        throw Error("unknown algebra '" + std::string(name) + "' (expected one of: " + names + ")");
    }
    return Algebra::from_gammas(it->second);
}

std::vector<std::string> algebra_names() {
    return {"reals", "complex", "quaternions", "octonions", "split-octonions", "sedenions"};
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    if (&a == &b)
        return true;
    if (a.dim() != b.dim() || a.involution_signs() != b.involution_signs())
        return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!vec_equal(a.basis_product(i, j), b.basis_product(i, j)))
                return false;
    return true;
}

Element::Element(AlgebraPtr alg, QVec coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    if (!alg_)
        throw Error("element needs an algebra");
    if (coeffs_.size() != alg_->dim())
        throw Error("element has " + std::to_string(coeffs_.size()) + " coefficients, algebra '" +
                    alg_->name() + "' has dimension " + std::to_string(alg_->dim()));
}

Element Element::zero(const AlgebraPtr& alg) {
    if (!alg)
        throw Error("element needs an algebra");
    return Element(alg, QVec::Zero(alg->dim()));
}

Element Element::basis(const AlgebraPtr& alg, int k) {
    Element e = zero(alg);
    alg->check_basis(k);
    e.coeffs_[k] = Rational(1);
    return e;
}

bool Element::is_zero() const { return vec_zero(coeffs_); }

bool Element::is_real() const {
    for (Eigen::Index k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            return false;
    return true;
}

Element Element::operator-() const { return Element(alg_, -coeffs_); }

namespace {

void require_same_algebra(const Element& a, const Element& b, const char* what) {
    if (!same_algebra(*a.algebra(), *b.algebra()))
        throw Error(std::string(what) + ": algebra mismatch ('" + a.algebra()->name() + "' vs '" +
                    b.algebra()->name() + "')");
}

} // namespace

Element& Element::operator+=(const Element& o) {
    require_same_algebra(*this, o, "add");
    coeffs_ += o.coeffs_;
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_algebra(*this, o, "subtract");
    coeffs_ -= o.coeffs_;
    return *this;
}

bool operator==(const Element& a, const Element& b) {
    return same_algebra(*a.alg_, *b.alg_) && vec_equal(a.coeffs_, b.coeffs_);
}

std::string Element::str() const {
    std::string out;
    for (Eigen::Index k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        bool neg = c.sign() < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        Rational mag = abs(c);
        if (mag != Rational(1)) {
            out += mag.str();
            out += ' ';
        }
        out += 'e';
        out += std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

QVec mul_vec(const Algebra& alg, const QVec& x, const QVec& y) {
    QVec out = QVec::Zero(alg.dim());
    for (int i = 0; i < alg.dim(); ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < alg.dim(); ++j) {
            if (y[j].is_zero())
                continue;
            Rational c = x[i] * y[j];
            const QVec& p = alg.basis_product(i, j);
            // basis products are usually signed units; skip their zeros
            for (int k = 0; k < alg.dim(); ++k)
                if (!p[k].is_zero())
                    out[k] += c * p[k];
        }
    }
    return out;
}

Element mul(const Element& a, const Element& b) {
    require_same_algebra(a, b, "mul");
    return Element(a.algebra(), mul_vec(*a.algebra(), a.coeffs(), b.coeffs()));
}

Element conj(const Element& a) {
    const Algebra& alg = *a.algebra();
    if (!alg.has_involution())
        throw Error("algebra '" + alg.name() + "' declares no involution");
    QVec out = a.coeffs();
    for (int k = 0; k < alg.dim(); ++k)
        out[k] *= Rational(alg.involution_signs()[static_cast<std::size_t>(k)]);
    return Element(a.algebra(), std::move(out));
}

Rational norm_sq(const Element& a) { return mul(a, conj(a)).coeffs()[0]; }

Element associator_minus(const Element& a, const Element& b, const Element& c) {
    return mul(mul(a, b), c) - mul(a, mul(b, c));
}

Element parse_element(const AlgebraPtr& alg, std::string_view text) {
    if (!alg)
        throw Error("element needs an algebra");
    QVec acc = QVec::Zero(alg->dim());
    std::size_t p = 0;
    auto fail = [&](const std::string& why) -> Error {
        return Error("bad element '" + std::string(text) + "': " + why + " at offset " +
                     std::to_string(p));
    };
    auto skip_ws = [&] {
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p])))
            ++p;
    };
    auto read_int = [&]() -> std::string {
        std::size_t s = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
            ++p;
        if (p == s)
            throw fail("expected a number");
        if (p - s > 6)
            throw fail("number is too long");
        return std::string(text.substr(s, p - s));
    };
    skip_ws();
    if (p == text.size())
        throw Error("empty element");
    bool first = true;
    while (true) {
        skip_ws();
        if (p >= text.size())
            break;
        int sign = 1;
        bool signed_here = text[p] == '+' || text[p] == '-';
        if (signed_here) {
            sign = text[p] == '-' ? -1 : 1;
            ++p;
            skip_ws();
        } else if (!first) {
            throw fail("expected '+' or '-' between terms");
        }
        first = false;
        Rational coeff(1);
        bool have_coeff = false;
        if (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            coeff = Rational::from_string(read_int());
            if (p < text.size() && text[p] == '/') {
                ++p;
                Rational den = Rational::from_string(read_int());
                if (den.is_zero())
                    throw fail("zero denominator");
                coeff /= den;
            }
            have_coeff = true;
            skip_ws();
            if (p < text.size() && text[p] == '*') {
                ++p;
                skip_ws();
            }
        }
        if (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p]))) {
            if (text[p] != 'e')
                throw fail("basis elements are named e<k>");
            ++p;
            int k = std::stoi(read_int());
            alg->check_basis(k);
            acc[k] += Rational(sign) * coeff;
        } else if (!(have_coeff && coeff.is_zero())) {
            // a bare 0 term contributes nothing; anything else must name a basis element
            throw fail("expected a basis element like 'e3'");
        }
    }
    return Element(alg, std::move(acc));
}

Identity identity_from_name(std::string_view name) {
    if (name == "alternative")
        return Identity::alternative;
    if (name == "flexible")
        return Identity::flexible;
    if (name == "moufang")
        return Identity::moufang;
    if (name == "associative")
        return Identity::associative;
    if (name == "commutative")
        return Identity::commutative;
    throw Error("unknown identity '" + std::string(name) +
                "' (expected alternative, flexible, moufang, associative or commutative)");
}

const char* identity_name(Identity which) {
    switch (which) {
    case Identity::alternative: return "alternative";
    case Identity::flexible: return "flexible";
    case Identity::moufang: return "moufang";
    case Identity::associative: return "associative";
    case Identity::commutative: return "commutative";
    }
    return "?";
}

IdentityCheck check_identity(const AlgebraPtr& alg, Identity which) {
    const int d = alg->dim();
    auto unit = [&](int k) {
        QVec v = QVec::Zero(d);
        v[k] = Rational(1);
        return v;
    };
    auto mulv = [&](const QVec& x, const QVec& y) { return mul_vec(*alg, x, y); };
    auto assoc = [&](const QVec& x, const QVec& y, const QVec& z) {
        return QVec(mulv(mulv(x, y), z) - mulv(x, mulv(y, z)));
    };

    if (which == Identity::commutative) {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!vec_equal(alg->basis_product(i, j), alg->basis_product(j, i)))
                    return {false, {i, j}};
        return {};
    }
    if (which == Identity::moufang) {
        // (xy)(zx) = (x(yz))x, polarized in x over basis quadruples:
        // x -> e_i, w -> e_l cross terms.
        for (int i = 0; i < d; ++i) {
            QVec ei = unit(i);
            for (int j = 0; j < d; ++j) {
                QVec ej = unit(j);
                for (int k = 0; k < d; ++k) {
                    QVec ek = unit(k);
                    QVec jk = mulv(ej, ek);
                    for (int l = 0; l < d; ++l) {
                        QVec el = unit(l);
                        QVec lhs = mulv(mulv(ei, ej), mulv(ek, el)) +
                                   mulv(mulv(el, ej), mulv(ek, ei));
                        QVec rhs = mulv(mulv(ei, jk), el) + mulv(mulv(el, jk), ei);
                        if (!vec_equal(lhs, rhs))
                            return {false, {i, j, k, l}};
                    }
                }
            }
        }
        return {};
    }
    for (int i = 0; i < d; ++i) {
        QVec ei = unit(i);
        for (int j = 0; j < d; ++j) {
            QVec ej = unit(j);
            for (int k = 0; k < d; ++k) {
                QVec ek = unit(k);
                bool ok = true;
                switch (which) {
                case Identity::associative:
                    ok = vec_zero(assoc(ei, ej, ek));
                    break;
                case Identity::alternative:
                    // [x,x,y] = 0 and [y,x,x] = 0, polarized.
                    ok = vec_zero(QVec(assoc(ei, ej, ek) + assoc(ej, ei, ek))) &&
                         vec_zero(QVec(assoc(ei, ej, ek) + assoc(ei, ek, ej)));
                    break;
                case Identity::flexible:
                    // [x,y,x] = 0, polarized.
                    ok = vec_zero(QVec(assoc(ei, ej, ek) + assoc(ek, ej, ei)));
                    break;
                default:
                    break;
                }
                if (!ok)
                    return {false, {i, j, k}};
            }
        }
    }
    return {};
}

std::optional<ZeroDivisorPair> find_zero_divisor(const AlgebraPtr& alg) {
    const int d = alg->dim();
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            for (int si : {1, -1}) {
                Element u = Element::basis(alg, i) + Rational(si) * Element::basis(alg, j);
                for (int k = 0; k < d; ++k) {
                    for (int l = k + 1; l < d; ++l) {
                        for (int sk : {1, -1}) {
                            Element v =
                                Element::basis(alg, k) + Rational(sk) * Element::basis(alg, l);
                            if (mul(u, v).is_zero())
                                return ZeroDivisorPair{u, v};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace nonassoc

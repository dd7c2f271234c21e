#include "nonassoc/parse.hpp"

#include <cctype>
#include <vector>

namespace nonassoc {

const char* parse_error_kind_name(ParseErrorKind kind) {
    switch (kind) {
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::UnbalancedBracket: return "UnbalancedBracket";
    case ParseErrorKind::EmptyProduct: return "EmptyProduct";
    case ParseErrorKind::BadIndex: return "BadIndex";
    case ParseErrorKind::BadScalar: return "BadScalar";
    }
    return "ParseError";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, const std::string& detail)
    : Error(std::string(parse_error_kind_name(kind)) + " at byte " + std::to_string(span.start) +
            ".." + std::to_string(span.end) + ": " + detail),
      kind_(kind), span_(span) {}

namespace {

enum class Tok { Name, Number, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t start = 0;
    std::size_t end = 0;
};

bool is_punct(char c) {
    return std::string_view("+-*/[]{}(),^_").find(c) != std::string_view::npos;
}

std::vector<Token> lex(std::string_view in) {
    std::vector<Token> out;
    std::size_t p = 0;
    while (p < in.size()) {
        unsigned char c = static_cast<unsigned char>(in[p]);
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++p;
            continue;
        }
        if (c >= 0x80)
            throw ParseError(ParseErrorKind::BadIndex, {p, p + 1},
                             "non-ASCII byte; the surface syntax is ASCII-only");
        std::size_t start = p;
        if (std::isdigit(c)) {
            while (p < in.size() && std::isdigit(static_cast<unsigned char>(in[p])))
                ++p;
            out.push_back({Tok::Number, std::string(in.substr(start, p - start)), start, p});
            continue;
        }
        if (std::isalpha(c)) {
            while (p < in.size() && std::isalnum(static_cast<unsigned char>(in[p])))
                ++p;
            out.push_back({Tok::Name, std::string(in.substr(start, p - start)), start, p});
            continue;
        }
        if (is_punct(in[p])) {
            out.push_back({Tok::Punct, std::string(1, in[p]), start, p + 1});
            ++p;
            continue;
        }
        throw ParseError(ParseErrorKind::UnexpectedToken, {p, p + 1},
                         "unexpected character '" + std::string(1, in[p]) + "'");
    }
    out.push_back({Tok::End, "", in.size(), in.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view input) : len_(input.size()), toks_(lex(input)) {}

    Expr run() {
        Expr e = parse_sum();
        if (!at_end()) {
            const Token& t = peek();
            if (t.text == "]" || t.text == "}" || t.text == ")")
                fail(ParseErrorKind::UnbalancedBracket, t, "closing bracket with no opener");
            fail(ParseErrorKind::UnexpectedToken, t, "trailing input after expression");
        }
        return e;
    }

private:
    std::size_t len_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    const Token& advance() { return toks_[pos_++]; }
    bool at_end() const { return peek().kind == Tok::End; }

    bool is_punct_tok(const Token& t, char c) const {
        return t.kind == Tok::Punct && t.text[0] == c;
    }
    bool accept(char c) {
        if (is_punct_tok(peek(), c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(ParseErrorKind kind, const Token& at, const std::string& detail) const {
        SourceSpan span{at.start, at.end};
        // End-of-input spans still have to point inside the input.
        if (span.start == len_ && len_ > 0)
            span.start = len_ - 1;
        throw ParseError(kind, span, detail);
    }

    void expect(char c, const std::string& what) {
        if (!accept(c))
            fail(ParseErrorKind::UnexpectedToken, peek(), "expected '" + std::string(1, c) +
                                                              "' " + what);
    }

    Expr parse_sum() {
        Expr e;
        bool neg = accept('-');
        Expr first = parse_prodterm();
        e += neg ? -first : first;
        while (true) {
            if (accept('+'))
                e += parse_prodterm();
            else if (accept('-'))
                e -= parse_prodterm();
            else
                break;
        }
        return e;
    }

    Expr parse_prodterm() {
        if (peek().kind != Tok::Number)
            return parse_factor();
        Scalar coeff = parse_scalar();
        if (accept('*'))
            return coeff * parse_factor();
        if (coeff.is_zero())
            return Expr::zero();
        fail(ParseErrorKind::UnexpectedToken, peek(), "expected '*' after a scalar coefficient");
    }

    Scalar parse_scalar() {
        const Token& num = advance();
        Rational q = Rational::from_string(num.text);
        if (accept('/')) {
            const Token& den = peek();
            if (den.kind != Tok::Number)
                fail(ParseErrorKind::BadScalar, den, "expected a denominator");
            ++pos_;
            Rational d = Rational::from_string(den.text);
            if (d.is_zero())
                fail(ParseErrorKind::BadScalar, {Tok::Number, "", num.start, den.end},
                     "zero denominator");
            q /= d;
        }
        bool imaginary = false;
        Monomial mono;
        bool first_name = true;
        while (peek().kind == Tok::Name) {
            const Token& n = advance();
            if (n.text == "i") {
                if (!first_name || imaginary)
                    fail(ParseErrorKind::BadScalar, n, "'i' is reserved for the imaginary unit");
                imaginary = true;
            } else {
                mono.push_back(n.text);
            }
            first_name = false;
        }
        GaussRat g = imaginary ? GaussRat{Rational(0), q} : GaussRat{q, Rational(0)};
        return Scalar(g, std::move(mono));
    }

    Expr parse_factor() {
        const Token& t = peek();
        if (t.kind == Tok::Name)
            return parse_derivgen();
        if (is_punct_tok(t, '['))
            return parse_product();
        if (is_punct_tok(t, '{'))
            return parse_assoc();
        if (is_punct_tok(t, ']') || is_punct_tok(t, '}') || is_punct_tok(t, ')'))
            fail(ParseErrorKind::UnbalancedBracket, t, "closing bracket with no opener");
        fail(ParseErrorKind::UnexpectedToken, t, "expected a generator, '[' product or '{' associator");
    }

    Expr parse_product() {
        const Token open = advance(); // '['
        if (is_punct_tok(peek(), ']'))
            fail(ParseErrorKind::EmptyProduct, peek(), "product has no factors");
        if (at_end())
            fail(ParseErrorKind::UnbalancedBracket, open, "product bracket '[' is never closed");
        Expr a = parse_factor();
        if (is_punct_tok(peek(), ']'))
            fail(ParseErrorKind::EmptyProduct, peek(), "product needs exactly two factors");
        if (at_end())
            fail(ParseErrorKind::UnbalancedBracket, open, "product bracket '[' is never closed");
        Expr b = parse_factor();
        if (!accept(']'))
            fail(ParseErrorKind::UnbalancedBracket, at_end() ? open : peek(),
                 "product bracket '[' is never closed");
        return product(a, b);
    }

    Expr parse_assoc() {
        const Token open = advance(); // '{'
        Expr s1 = parse_sum();
        expect(',', "between associator slots");
        Expr s2 = parse_sum();
        expect(',', "between associator slots");
        Expr s3 = parse_sum();
        if (!accept('}'))
            fail(ParseErrorKind::UnbalancedBracket, at_end() ? open : peek(),
                 "associator brace '{' is never closed");
        expect('_', "after associator braces");
        Sign sign;
        if (accept('+'))
            sign = Sign::plus;
        else if (accept('-'))
            sign = Sign::minus;
        else
            fail(ParseErrorKind::UnexpectedToken, peek(), "expected '+' or '-' associator sign");
        return make_assoc_atom(sign, s1, s2, s3);
    }

    // "d" "_{" idx "}" is a derivative prefix only when a further name
    // follows; otherwise it is a generator named d with a lower index.
    bool deriv_prefix_ahead() const {
        return peek().kind == Tok::Name && peek().text == "d" && is_punct_tok(peek(1), '_') &&
               is_punct_tok(peek(2), '{') &&
               (peek(3).kind == Tok::Name || peek(3).kind == Tok::Number) &&
               is_punct_tok(peek(4), '}') && peek(5).kind == Tok::Name;
    }

    Expr parse_derivgen() {
        std::vector<std::string> dmarks;
        while (deriv_prefix_ahead()) {
            pos_ += 3; // d _ {
            dmarks.push_back(advance().text);
            ++pos_; // }
        }
        Generator g = parse_generator();
        for (const auto& idx : dmarks)
            g = g.with_deriv(idx);
        return Expr(Term::leaf(g));
    }

    std::string parse_index() {
        const Token& t = peek();
        if (t.kind != Tok::Name && t.kind != Tok::Number)
            fail(ParseErrorKind::BadIndex, t, "expected an index name or number");
        return advance().text;
    }

    std::vector<std::string> parse_index_group() {
        const Token& open = peek();
        expect('{', "to open an index group");
        if (is_punct_tok(peek(), '}'))
            fail(ParseErrorKind::BadIndex, {Tok::Punct, "", open.start, peek().end},
                 "empty index group");
        std::vector<std::string> idx;
        idx.push_back(parse_index());
        while (accept(','))
            idx.push_back(parse_index());
        if (!accept('}'))
            fail(ParseErrorKind::BadIndex, peek(), "expected ',' or '}' in an index group");
        return idx;
    }

    Generator parse_generator() {
        Generator g(advance().text);
        if (accept('^'))
            g.upper = parse_index_group();
        if (is_punct_tok(peek(), '_') && is_punct_tok(peek(1), '{')) {
            ++pos_;
            g.lower = parse_index_group();
        }
        if (accept('(')) {
            const Token& pt = peek();
            if (pt.kind != Tok::Name && pt.kind != Tok::Number)
                fail(ParseErrorKind::BadIndex, pt, "expected a point label");
            g.point = advance().text;
            if (!accept(')'))
                fail(ParseErrorKind::UnbalancedBracket, peek(), "point '(' is never closed");
        }
        if (accept('*'))
            g.conjugated = true;
        return g;
    }
};

} // namespace

Expr parse(std::string_view input) {
    Parser p(input);
    return p.run();
}

std::string print(const Expr& e) { return e.str(); }

} // namespace nonassoc

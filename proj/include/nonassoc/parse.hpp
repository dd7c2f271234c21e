#pragma once

#include "nonassoc/error.hpp"
#include "nonassoc/expr.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace nonassoc {

/// Byte range [start, end) into the parsed input.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

enum class ParseErrorKind {
    UnexpectedToken,
    UnbalancedBracket,
    EmptyProduct,
    BadIndex,
    BadScalar,
};

const char* parse_error_kind_name(ParseErrorKind kind);

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, SourceSpan span, const std::string& detail);

    ParseErrorKind kind() const { return kind_; }
    SourceSpan span() const { return span_; }

private:
    ParseErrorKind kind_;
    SourceSpan span_;
};

/// Parses the expression language. Grammar (ASCII-only surface syntax):
///
///   expr      := ["-"] prodterm (("+" | "-") prodterm)*
///   prodterm  := scalar "*" factor | factor | "0"
///   factor    := derivgen | "[" factor factor "]" | assoc
///   assoc     := "{" expr "," expr "," expr "}" "_" ("+" | "-")
///   derivgen  := ("d" "_{" idx "}")* generator
///   generator := name ["^{" idx ("," idx)* "}"] ["_{" idx ("," idx)* "}"]
///                ["(" point ")"] ["*"]
///   scalar    := rational ["i"] name*
///   rational  := int ["/" int]
///
/// Products are always explicit two-factor brackets; "a b c" is an error, by
/// design — no associativity is ever inferred. The name "i" directly after a
/// rational is the imaginary unit and is reserved (not usable as a scalar
/// symbol). A "d_{mu}" prefix is a derivative marker when a generator
/// follows; otherwise "d" is an ordinary generator name.
Expr parse(std::string_view input);

/// Canonical text form; parse(print(e)) == canonicalize(e).
std::string print(const Expr& e);

} // namespace nonassoc

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dnl {

struct ExpressionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Closed-form expression in x1, x2.
///
/// Grammar (whitespace ignored):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' ['-'] integer)?
///   primary := number | 'x1' | 'x2' | '(' expr ')'
///
/// The exponent of '^' must be an integer literal, so no branch cuts arise.
class Expression {
public:
    static Expression parse(std::string_view text);

    double operator()(double x1, double x2) const;
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace dnl

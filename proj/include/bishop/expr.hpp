#pragma once

// Expression trees for the calculator.
//
// Grammar (unary minus binds tighter than * and /, which bind tighter than + and -):
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | primary
//   primary := number | 'e' | '(' sum ')'
//            | ('abs' | 'inv') '(' sum ')'
//            | ('max' | 'min') '(' sum ',' sum ')'
//            | 'exp' '(' ['-'] number ')'
//
// A number is an integer, a decimal d.ddd, or p/q written as two digit runs
// joined by '/' with no whitespace. Anything else using '/' is division, so
// "1/3" is one rational literal while "1 / 3" and "(1)/3" divide.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bishop/rat.hpp"

namespace bishop {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// exp() applied to something other than a rational or decimal literal.
class UnsupportedArgument : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Expr {
    enum class Kind { Literal, E, Add, Sub, Mul, Div, Neg, Abs, Max, Min, Inv, Exp };

    Kind kind = Kind::Literal;
    Rat value;               // Literal, and the argument of Exp
    std::vector<Expr> args;  // operands in source order
    std::string text;        // source slice, for error messages
};

Expr parse_expr(std::string_view text);

/// Prefix rendering such as add(rat 1/3, rat 1/6), for tests and diagnostics.
std::string to_string(const Expr& e);

}  // namespace bishop

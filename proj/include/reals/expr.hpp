#pragma once

#include "reals/rational.hpp"
#include "reals/signed_real.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reals {

struct SyntaxError : std::invalid_argument {
    SyntaxError(std::size_t offset, const std::string& expected, const std::string& found)
        : std::invalid_argument("syntax error at byte " + std::to_string(offset) +
                                ": expected " + expected + ", found " + found),
          offset(offset), expected(expected) {}
    std::size_t offset;
    std::string expected;
};

/// Expression AST. Grammar (left-associative, unary binds tightest):
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | primary ['*']
///   primary := number | '(' expr ')' | 'sqrt' '(' expr ')'
///            | 'root' '(' nat ',' expr ')' | 'e'
///   number  := int ['.' digits ['(' digits ')']] | int '/' int
/// A postfix '*' is read as the star (additive inverse) only when the
/// next token cannot start a factor.
struct Expr {
    enum class Kind { Literal, Add, Sub, Mul, Div, Neg, Star, Sqrt, Root, ConstE };

    Kind kind;
    Rational literal;           // Kind::Literal (periodic literals normalized here)
    std::string literal_text;   // original spelling, for printing
    unsigned root_degree = 0;   // Kind::Root
    std::shared_ptr<const Expr> lhs, rhs;

    std::string to_string() const;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(const std::string& text);

struct EvalConfig {
    int precision_cap = kDefaultPrecisionCap;
};

struct EvalResult {
    SignedReal value;
    /// Present when the expression reduces exactly to a rational
    /// (literals combined by +,-,*,/, and roots of perfect powers).
    std::optional<Rational> exact;
};

struct NegativeRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EvalResult evaluate(const ExprPtr& e, const EvalConfig& cfg = {});

enum class SignNotation { Minus, Star };

struct DigitReport {
    std::string text;  // rendered digits with sign and markers
    std::string digits;
    std::optional<std::int64_t> indeterminate_at;
    int precision_used = 0;
    bool exact_terminating = false;
    bool starred = false;
};

/// Renders n decimal digits of an evaluation result. Appends "..." when
/// more digits exist, "?" at an undecided position. A value whose sign is
/// unresolved at the cap but whose magnitude is below 10^-n prints its
/// zeros with a trailing "?" (zero within cap).
DigitReport render_digits(const EvalResult& r, std::int64_t n, const EvalConfig& cfg,
                          SignNotation notation = SignNotation::Minus);

}  // namespace reals

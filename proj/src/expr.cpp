#include "reals/expr.hpp"

#include "reals/gallery.hpp"
#include "reals/periodic.hpp"

#include <cctype>

namespace reals {

namespace {

struct Token {
    enum class Kind { Number, Ident, LParen, RParen, Comma, Plus, Minus, Times, Slash, End };
    Kind kind;
    std::size_t offset;
    std::string text;            // ident spelling or literal spelling
    Rational value;              // Kind::Number
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    const Token& peek2() {
        if (!lookahead_) lookahead_ = lex();
        return *lookahead_;
    }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        if (lookahead_) {
            current_ = *lookahead_;
            lookahead_.reset();
        } else {
            current_ = lex();
        }
    }

    Token lex() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return {Token::Kind::End, start, "<end>", {}};
        const char c = text_[pos_];
        switch (c) {
            case '(': ++pos_; return {Token::Kind::LParen, start, "(", {}};
            case ')': ++pos_; return {Token::Kind::RParen, start, ")", {}};
            case ',': ++pos_; return {Token::Kind::Comma, start, ",", {}};
            case '+': ++pos_; return {Token::Kind::Plus, start, "+", {}};
            case '-': ++pos_; return {Token::Kind::Minus, start, "-", {}};
            case '*': ++pos_; return {Token::Kind::Times, start, "*", {}};
            case '/': ++pos_; return {Token::Kind::Slash, start, "/", {}};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {Token::Kind::Ident, start, text_.substr(start, pos_ - start), {}};
        }
        throw SyntaxError(start, "a token", std::string(1, c));
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Token lex_number(std::size_t start) {
        const std::string ipart = digits();
        // rational literal int '/' int
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            const std::string den = digits();
            Token t{Token::Kind::Number, start, ipart + "/" + den, {}};
            t.value = Rational(BigInt(ipart), BigInt(den));
            return t;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            const std::string pre = digits();
            std::string per;
            bool periodic = false;
            if (pos_ < text_.size() && text_[pos_] == '(') {
                const std::size_t open = pos_;
                ++pos_;
                per = digits();
                if (pos_ >= text_.size() || text_[pos_] != ')')
                    throw SyntaxError(pos_, "')' closing the period", "end of period digits");
                if (per.empty()) throw SyntaxError(open + 1, "period digits", "')'");
                ++pos_;
                periodic = true;
            }
            if (pre.empty() && !periodic)
                throw SyntaxError(pos_, "decimal digits after '.'", "none");
            std::string spelling = ipart + "." + pre + (periodic ? "(" + per + ")" : "");
            // nines tails are identified with their finite form here,
            // at the parser level
            const PeriodicDecimal d = normalize_nines(PeriodicDecimal::parse(spelling));
            Token t{Token::Kind::Number, start, spelling, {}};
            t.value = periodic_to_rat(d);
            return t;
        }
        Token t{Token::Kind::Number, start, ipart, {}};
        t.value = Rational(BigInt(ipart));
        return t;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_{Token::Kind::End, 0, "", {}};
    std::optional<Token> lookahead_;
};

ExprPtr make_leaf(Expr::Kind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}

ExprPtr make_unary(Expr::Kind k, ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(child);
    return e;
}

ExprPtr make_binary(Expr::Kind k, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw SyntaxError(lex_.peek().offset, "end of input or an operator", lex_.peek().text);
        return e;
    }

private:
    ExprPtr expr() {
        ExprPtr e = term();
        while (true) {
            const auto k = lex_.peek().kind;
            if (k == Token::Kind::Plus) {
                lex_.take();
                e = make_binary(Expr::Kind::Add, e, term());
            } else if (k == Token::Kind::Minus) {
                lex_.take();
                e = make_binary(Expr::Kind::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (true) {
            const auto k = lex_.peek().kind;
            if (k == Token::Kind::Times && !star_follows()) {
                lex_.take();
                e = make_binary(Expr::Kind::Mul, e, factor());
            } else if (k == Token::Kind::Slash) {
                lex_.take();
                e = make_binary(Expr::Kind::Div, e, factor());
            } else {
                return e;
            }
        }
    }

    // A '*' is the postfix star when what follows it cannot start a factor.
    bool star_follows() {
        if (lex_.peek().kind != Token::Kind::Times) return false;
        switch (lex_.peek2().kind) {
            case Token::Kind::Number:
            case Token::Kind::Ident:
            case Token::Kind::LParen:
            case Token::Kind::Minus:
                return false;
            default:
                return true;
        }
    }

    ExprPtr factor() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            return make_unary(Expr::Kind::Neg, factor());
        }
        ExprPtr e = primary();
        if (star_follows()) {
            lex_.take();
            e = make_unary(Expr::Kind::Star, e);
        }
        return e;
    }

    void expect(Token::Kind k, const char* what) {
        if (lex_.peek().kind != k)
            throw SyntaxError(lex_.peek().offset, what, lex_.peek().text);
        lex_.take();
    }

    ExprPtr primary() {
        const Token t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            lex_.take();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::Literal;
            e->literal = t.value;
            e->literal_text = t.text;
            return e;
        }
        if (t.kind == Token::Kind::LParen) {
            lex_.take();
            ExprPtr e = expr();
            expect(Token::Kind::RParen, "')'");
            return e;
        }
        if (t.kind == Token::Kind::Ident) {
            if (t.text == "e") {
                lex_.take();
                return make_leaf(Expr::Kind::ConstE);
            }
            if (t.text == "sqrt") {
                lex_.take();
                expect(Token::Kind::LParen, "'(' after sqrt");
                ExprPtr arg = expr();
                expect(Token::Kind::RParen, "')'");
                return make_unary(Expr::Kind::Sqrt, std::move(arg));
            }
            if (t.text == "root") {
                lex_.take();
                expect(Token::Kind::LParen, "'(' after root");
                const Token deg = lex_.peek();
                if (deg.kind != Token::Kind::Number || !deg.value.is_integer() ||
                    deg.value < Rational(1))
                    throw SyntaxError(deg.offset, "a positive integer root degree", deg.text);
                lex_.take();
                expect(Token::Kind::Comma, "','");
                ExprPtr arg = expr();
                expect(Token::Kind::RParen, "')'");
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::Root;
                e->root_degree = deg.value.num().convert_to<unsigned>();
                e->lhs = std::move(arg);
                return e;
            }
            throw SyntaxError(t.offset, "'sqrt', 'root' or 'e'", t.text);
        }
        throw SyntaxError(t.offset, "a number, '(', 'sqrt', 'root' or 'e'", t.text);
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string Expr::to_string() const {
    switch (kind) {
        case Kind::Literal: return literal_text.empty() ? literal.to_string() : literal_text;
        case Kind::Add: return "(" + lhs->to_string() + "+" + rhs->to_string() + ")";
        case Kind::Sub: return "(" + lhs->to_string() + "-" + rhs->to_string() + ")";
        case Kind::Mul: return "(" + lhs->to_string() + "*" + rhs->to_string() + ")";
        // spaces keep a printed division distinct from a rational literal
        case Kind::Div: return "(" + lhs->to_string() + " / " + rhs->to_string() + ")";
        case Kind::Neg: return "(-" + lhs->to_string() + ")";
        case Kind::Star: return "(" + lhs->to_string() + "*)";
        case Kind::Sqrt: return "sqrt(" + lhs->to_string() + ")";
        case Kind::Root: return "root(" + std::to_string(root_degree) + "," + lhs->to_string() + ")";
        case Kind::ConstE: return "e";
    }
    return "?";
}

namespace {

// exact k-th root of a rational, when both numerator and denominator are
// perfect k-th powers
std::optional<Rational> exact_root(const Rational& r, unsigned k) {
    const BigInt rn = iroot(r.num(), k);
    const BigInt rd = iroot(r.den(), k);
    BigInt pn = 1, pd = 1;
    for (unsigned i = 0; i < k; ++i) {
        pn *= rn;
        pd *= rd;
    }
    if (pn == r.num() && pd == r.den()) return Rational(rn, rd);
    return std::nullopt;
}

SignedReal root_value(const EvalResult& operand, unsigned k, const EvalConfig& cfg) {
    if (operand.exact) {
        if (operand.exact->is_negative())
            throw NegativeRoot("root of a negative value: " + operand.exact->to_string());
        return SignedReal(root_of_rational(*operand.exact, k), false);
    }
    if (operand.value.starred() && !operand.value.zero_within_cap()) {
        // starred operand is only admissible if its magnitude may be zero
        for (int m = 0; m <= cfg.precision_cap; m = m == 0 ? 1 : m * 2) {
            if (operand.value.magnitude().bounds(m).lo > Rational(0))
                throw NegativeRoot("root of a negative value");
            if (m >= cfg.precision_cap) break;
        }
    }
    return SignedReal(interval_root(operand.value.magnitude(), k), false);
}

}  // namespace

EvalResult evaluate(const ExprPtr& e, const EvalConfig& cfg) {
    switch (e->kind) {
        case Expr::Kind::Literal:
            return {SignedReal::from_rational(e->literal), e->literal};
        case Expr::Kind::Add: {
            const EvalResult a = evaluate(e->lhs, cfg);
            const EvalResult b = evaluate(e->rhs, cfg);
            std::optional<Rational> exact;
            if (a.exact && b.exact) exact = *a.exact + *b.exact;
            if (exact) return {SignedReal::from_rational(*exact), exact};
            return {signed_add(a.value, b.value, cfg.precision_cap), exact};
        }
        case Expr::Kind::Sub: {
            const EvalResult a = evaluate(e->lhs, cfg);
            const EvalResult b = evaluate(e->rhs, cfg);
            std::optional<Rational> exact;
            if (a.exact && b.exact) exact = *a.exact - *b.exact;
            if (exact) return {SignedReal::from_rational(*exact), exact};
            return {signed_add(a.value, b.value.star(), cfg.precision_cap), exact};
        }
        case Expr::Kind::Mul: {
            const EvalResult a = evaluate(e->lhs, cfg);
            const EvalResult b = evaluate(e->rhs, cfg);
            std::optional<Rational> exact;
            if (a.exact && b.exact) exact = *a.exact * *b.exact;
            if (exact) return {SignedReal::from_rational(*exact), exact};
            return {signed_mul(a.value, b.value), exact};
        }
        case Expr::Kind::Div: {
            const EvalResult a = evaluate(e->lhs, cfg);
            const EvalResult b = evaluate(e->rhs, cfg);
            if (b.exact) {
                if (b.exact->is_zero()) throw DivisionByZero();
                if (a.exact) {
                    const Rational q = *a.exact / *b.exact;
                    return {SignedReal::from_rational(q), q};
                }
                return {signed_mul(a.value, SignedReal::from_rational(Rational(1) / *b.exact)),
                        std::nullopt};
            }
            const Enclosure inv = interval_inv(b.value.magnitude(), cfg.precision_cap);
            return {signed_mul(a.value, SignedReal(inv, b.value.starred())), std::nullopt};
        }
        case Expr::Kind::Neg:
        case Expr::Kind::Star: {
            EvalResult a = evaluate(e->lhs, cfg);
            if (a.exact) {
                const Rational neg = -*a.exact;
                return {SignedReal::from_rational(neg), neg};
            }
            return {a.value.star(), std::nullopt};
        }
        case Expr::Kind::Sqrt:
        case Expr::Kind::Root: {
            const unsigned k = e->kind == Expr::Kind::Sqrt ? 2u : e->root_degree;
            const EvalResult a = evaluate(e->lhs, cfg);
            if (a.exact) {
                if (a.exact->is_negative())
                    throw NegativeRoot("root of a negative value: " + a.exact->to_string());
                if (auto r = exact_root(*a.exact, k)) return {SignedReal::from_rational(*r), r};
            }
            return {root_value(a, k, cfg), std::nullopt};
        }
        case Expr::Kind::ConstE:
            return {SignedReal(e_real(), false), std::nullopt};
    }
    throw std::logic_error("evaluate: unhandled node");
}

DigitReport render_digits(const EvalResult& r, std::int64_t n, const EvalConfig& cfg,
                          SignNotation notation) {
    DigitReport rep;
    rep.starred = r.value.starred() && !r.value.zero_within_cap();

    if (r.exact) {
        const Rational mag = r.exact->abs();
        rep.digits = mag.to_decimal_string(static_cast<unsigned>(n));
        rep.exact_terminating =
            (pow10_int(static_cast<unsigned>(n)) % mag.den()) == 0;
        rep.precision_used = static_cast<int>(n);
        rep.starred = r.exact->is_negative();
        rep.text = rep.digits;
        if (!rep.exact_terminating) rep.text += "…";
    } else {
        const DigitResult dr =
            digits_from_enclosure(r.value.magnitude(), n, cfg.precision_cap);
        rep.digits = dr.digits;
        rep.indeterminate_at = dr.indeterminate_at;
        rep.precision_used = dr.precision_used;
        rep.text = dr.digits;
        if (r.value.zero_within_cap()) {
            rep.text += "?";
            if (!rep.indeterminate_at) rep.indeterminate_at = n + 1;
        } else if (dr.indeterminate_at) {
            rep.text += "?";
        } else {
            rep.text += "…";
        }
    }

    if (rep.starred && !rep.digits.empty()) {
        if (notation == SignNotation::Minus)
            rep.text.insert(0, "-");
        else
            rep.text += "*";
    }
    return rep;
}

}  // namespace reals

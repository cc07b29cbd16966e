#include "polycf/dsl.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace polycf {
namespace dsl {

namespace {

struct Token {
    enum class Kind { ident, integer, symbol, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    Lexer(const std::string& text, std::string origin)
        : text_(text), origin_(std::move(origin)) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c))) {
                t.kind = Token::Kind::ident;
                while (pos_ < text_.size() &&
                       std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
                    t.text += take();
                }
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Token::Kind::integer;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    t.text += take();
                }
            } else if (c == '.') {
                take();
                if (pos_ >= text_.size() || text_[pos_] != '.') {
                    throw ParseError("expected '..'", origin_, t.line, t.col);
                }
                take();
                t.kind = Token::Kind::symbol;
                t.text = "..";
            } else if (c == '>') {
                take();
                if (pos_ >= text_.size() || text_[pos_] != '=') {
                    throw ParseError("expected '>='", origin_, t.line, t.col);
                }
                take();
                t.kind = Token::Kind::symbol;
                t.text = ">=";
            } else if (std::string("=;(){}+-*/^").find(c) != std::string::npos) {
                t.kind = Token::Kind::symbol;
                t.text = take();
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", origin_,
                                 t.line, t.col);
            }
            out.push_back(std::move(t));
        }
    }

private:
    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            take();
        }
    }

    const std::string& text_;
    std::string origin_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string origin)
        : tokens_(std::move(tokens)), origin_(std::move(origin)) {}

    ContinuedFraction parse_fraction() {
        expect_ident("b0");
        expect_symbol("=");
        Rational b0 = parse_signed_rational();
        expect_symbol(";");
        PiecewiseSequence a = parse_sequence_def("a", 1);
        expect_symbol(";");
        PiecewiseSequence b = parse_sequence_def("b", 1);
        expect_end();
        return ContinuedFraction(origin_, std::move(b0), std::move(a), std::move(b));
    }

    ScalingSequence parse_scaling() {
        PiecewiseSequence r = parse_sequence_def("r", 0);
        expect_end();
        return ScalingSequence(std::move(r));
    }

private:
    const Token& peek(int ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }

    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const Token& at, const std::string& message) const {
        throw ParseError(message, origin_, at.line, at.col);
    }

    bool at_symbol(const std::string& s) const {
        return peek().kind == Token::Kind::symbol && peek().text == s;
    }

    void expect_symbol(const std::string& s) {
        if (!at_symbol(s)) fail(peek(), "expected '" + s + "'");
        advance();
    }

    void expect_ident(const std::string& name) {
        if (peek().kind != Token::Kind::ident || peek().text != name) {
            fail(peek(), "expected '" + name + "'");
        }
        advance();
    }

    void expect_end() {
        if (peek().kind != Token::Kind::end) fail(peek(), "trailing input");
    }

    std::int64_t parse_bound() {
        bool negative = false;
        if (at_symbol("-")) {
            negative = true;
            advance();
        }
        if (peek().kind != Token::Kind::integer) fail(peek(), "expected an integer");
        const Token& t = advance();
        if (t.text.size() > 18) fail(t, "range bound out of range");
        std::int64_t v = std::stoll(t.text);
        return negative ? -v : v;
    }

    Rational parse_signed_rational() {
        bool negative = false;
        if (at_symbol("-")) {
            negative = true;
            advance();
        }
        Rational r = parse_rational_literal();
        return negative ? -r : r;
    }

    Rational parse_rational_literal() {
        if (peek().kind != Token::Kind::integer) fail(peek(), "expected a number");
        const Token& num_tok = advance();
        BigInt num = bigint_from_digits(num_tok.text);
        if (at_symbol("/") && peek(1).kind == Token::Kind::integer) {
            const Token& slash = peek();
            advance();
            const Token& den_tok = advance();
            BigInt den = bigint_from_digits(den_tok.text);
            if (den == 0) fail(slash, "zero denominator in rational literal");
            return Rational(num, den);
        }
        return Rational(num);
    }

    RationalFunction parse_expr() {
        RationalFunction value = parse_term();
        while (at_symbol("+") || at_symbol("-")) {
            bool plus = peek().text == "+";
            advance();
            RationalFunction rhs = parse_term();
            value = plus ? value + rhs : value - rhs;
        }
        return value;
    }

    RationalFunction parse_term() {
        RationalFunction value = parse_factor();
        while (at_symbol("*") || at_symbol("/")) {
            const Token& op = peek();
            bool mul = op.text == "*";
            advance();
            RationalFunction rhs = parse_factor();
            if (mul) {
                value = value * rhs;
            } else {
                if (rhs.is_zero()) {
                    fail(op, "division by an identically zero expression");
                }
                value = value / rhs;
            }
        }
        return value;
    }

    RationalFunction parse_factor() {
        if (at_symbol("-")) {
            advance();
            return -parse_factor();
        }
        return parse_power();
    }

    RationalFunction parse_power() {
        RationalFunction base = parse_primary();
        while (at_symbol("^")) {
            const Token& op = peek();
            advance();
            if (peek().kind != Token::Kind::integer) {
                fail(peek(), "expected an unsigned integer exponent");
            }
            const Token& e = advance();
            if (e.text.size() > 4 || std::stoll(e.text) > 1000) {
                fail(op, "exponent too large");
            }
            base = base.pow(static_cast<int>(std::stoll(e.text)));
        }
        return base;
    }

    RationalFunction parse_primary() {
        if (peek().kind == Token::Kind::integer) {
            return RationalFunction(Polynomial(parse_rational_literal()));
        }
        if (peek().kind == Token::Kind::ident && peek().text == "n") {
            advance();
            return RationalFunction(Polynomial::variable());
        }
        if (at_symbol("(")) {
            advance();
            RationalFunction inner = parse_expr();
            expect_symbol(")");
            return inner;
        }
        fail(peek(), "expected a number, 'n', or '('");
    }

    PiecewiseSequence parse_sequence_def(const std::string& name, std::int64_t start) {
        const Token& name_tok = peek();
        expect_ident(name);
        expect_symbol("(");
        expect_ident("n");
        expect_symbol(")");
        expect_symbol("=");

        std::vector<Piece> pieces;
        if (at_symbol("{")) {
            advance();
            while (true) {
                pieces.push_back(parse_piece());
                if (at_symbol(";")) {
                    advance();
                    continue;
                }
                break;
            }
            expect_symbol("}");
        } else {
            RationalFunction rule = parse_expr();
            pieces.push_back(Piece{start, std::nullopt, std::move(rule)});
        }
        try {
            return PiecewiseSequence(start, std::move(pieces));
        } catch (const CoverageError& e) {
            fail(name_tok, std::string(e.what()) + " in '" + name + "'");
        }
    }

    Piece parse_piece() {
        RationalFunction rule = parse_expr();
        expect_ident("for");
        expect_ident("n");
        if (peek().kind == Token::Kind::ident && peek().text == "in") {
            advance();
            std::int64_t lo = parse_bound();
            expect_symbol("..");
            std::int64_t hi = parse_bound();
            return Piece{lo, hi, std::move(rule)};
        }
        if (at_symbol(">=")) {
            advance();
            std::int64_t lo = parse_bound();
            return Piece{lo, std::nullopt, std::move(rule)};
        }
        fail(peek(), "expected 'in lo..hi' or '>= lo'");
    }

    std::vector<Token> tokens_;
    std::string origin_;
    std::size_t pos_ = 0;
};

std::string piece_to_string(const Piece& p, bool sole, std::int64_t start) {
    std::string rule = p.rule.to_expression_string();
    if (sole && p.lo == start && !p.hi) return rule;
    std::string range = p.hi ? "n in " + std::to_string(p.lo) + ".." + std::to_string(*p.hi)
                             : "n >= " + std::to_string(p.lo);
    return rule + " for " + range;
}

std::string sequence_to_string(const PiecewiseSequence& seq) {
    const auto& pieces = seq.pieces();
    if (pieces.size() == 1) {
        return piece_to_string(pieces[0], true, seq.start_index());
    }
    std::string out = "{ ";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += "; ";
        out += piece_to_string(pieces[i], false, seq.start_index());
    }
    return out + " }";
}

}  // namespace

ContinuedFraction parse_cf_spec(const std::string& text, const std::string& origin) {
    Parser parser(Lexer(text, origin).run(), origin);
    return parser.parse_fraction();
}

ScalingSequence parse_scaling_spec(const std::string& text, const std::string& origin) {
    Parser parser(Lexer(text, origin).run(), origin);
    return parser.parse_scaling();
}

std::string to_dsl(const ContinuedFraction& cf) {
    return "b0 = " + cf.head().to_string() + "; a(n) = " +
           sequence_to_string(cf.numerators()) + "; b(n) = " +
           sequence_to_string(cf.denominators());
}

std::string to_dsl(const ScalingSequence& scaling) {
    return "r(n) = " + sequence_to_string(scaling.seq());
}

}  // namespace dsl
}  // namespace polycf

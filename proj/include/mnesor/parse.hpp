#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "mnesor/errors.hpp"
#include "mnesor/expr.hpp"

namespace mnesor {

// Grammar, lowest precedence first:
//
//   union     := intersect ( '|' intersect )*
//   intersect := complement ( '&' complement )*
//   complement:= '~' complement | postfix
//   postfix   := primary ( '*' NUMBER )*
//   primary   := IDENT | 'EMPTY' | 'FULL' | '(' union ')'
//
// Binary operators are left-associative; NUMBER is a positive decimal;
// whitespace is insignificant.

namespace detail {

struct Token {
    enum class Type { Pipe, Amp, Tilde, Star, LParen, RParen, Ident, Number, Empty, Full, End };
    Type type = Type::End;
    std::string text;
    double number = 0.0;
    int line = 1;
    int column = 1;
};

inline const char* token_name(Token::Type t) {
    switch (t) {
        case Token::Type::Pipe: return "'|'";
        case Token::Type::Amp: return "'&'";
        case Token::Type::Tilde: return "'~'";
        case Token::Type::Star: return "'*'";
        case Token::Type::LParen: return "'('";
        case Token::Type::RParen: return "')'";
        case Token::Type::Ident: return "identifier";
        case Token::Type::Number: return "number";
        case Token::Type::Empty: return "'EMPTY'";
        case Token::Type::Full: return "'FULL'";
        case Token::Type::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws();
        Token tok;
        tok.line = line_;
        tok.column = col_;
        if (pos_ >= src_.size()) return tok;  // End

        const char c = src_[pos_];
        switch (c) {
            case '|': return symbol(tok, Token::Type::Pipe, c);
            case '&': return symbol(tok, Token::Type::Amp, c);
            case '~': return symbol(tok, Token::Type::Tilde, c);
            case '*': return symbol(tok, Token::Type::Star, c);
            case '(': return symbol(tok, Token::Type::LParen, c);
            case ')': return symbol(tok, Token::Type::RParen, c);
            default: break;
        }
        const auto uc = static_cast<unsigned char>(c);
        if (std::isalpha(uc) != 0 || c == '_') return identifier(tok);
        if (std::isdigit(uc) != 0 || c == '.') return number(tok);
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

private:
    Token symbol(Token& tok, Token::Type type, char c) {
        tok.type = type;
        tok.text = c;
        advance();
        return tok;
    }

    Token identifier(Token& tok) {
        const std::size_t start = pos_;
        while (pos_ < src_.size()) {
            const auto uc = static_cast<unsigned char>(src_[pos_]);
            if (std::isalnum(uc) == 0 && src_[pos_] != '_') break;
            advance();
        }
        tok.text = std::string(src_.substr(start, pos_ - start));
        if (tok.text == "EMPTY")
            tok.type = Token::Type::Empty;
        else if (tok.text == "FULL")
            tok.type = Token::Type::Full;
        else
            tok.type = Token::Type::Ident;
        return tok;
    }

    Token number(Token& tok) {
        const std::size_t start = pos_;
        bool digits = false;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
            digits = true;
            advance();
        }
        if (pos_ < src_.size() && src_[pos_] == '.') {
            advance();
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])) != 0) {
                digits = true;
                advance();
            }
        }
        tok.text = std::string(src_.substr(start, pos_ - start));
        if (!digits) throw ParseError(tok.line, tok.column, "malformed number '" + tok.text + "'");
        double value = 0.0;
        const char* first = tok.text.data();
        const char* last = first + tok.text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || !std::isfinite(value))
            throw ParseError(tok.line, tok.column, "malformed number '" + tok.text + "'");
        tok.type = Token::Type::Number;
        tok.number = value;
        return tok;
    }

    void skip_ws() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c != ' ' && c != '\t' && c != '\r' && c != '\n') break;
            advance();
        }
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src), tok_(lex_.next()) {}

    ExprPtr parse() {
        ExprPtr e = parse_union();
        if (tok_.type != Token::Type::End)
            throw ParseError(tok_.line, tok_.column, "expected end of input, got " + got());
        return e;
    }

private:
    ExprPtr parse_union() {
        ExprPtr e = parse_intersect();
        while (tok_.type == Token::Type::Pipe) {
            advance();
            e = Expr::make_union(std::move(e), parse_intersect());
        }
        return e;
    }

    ExprPtr parse_intersect() {
        ExprPtr e = parse_complement();
        while (tok_.type == Token::Type::Amp) {
            advance();
            e = Expr::make_intersect(std::move(e), parse_complement());
        }
        return e;
    }

    ExprPtr parse_complement() {
        if (tok_.type == Token::Type::Tilde) {
            advance();
            return Expr::make_complement(parse_complement());
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (tok_.type == Token::Type::Star) {
            advance();
            if (tok_.type != Token::Type::Number)
                throw ParseError(tok_.line, tok_.column, "expected number after '*', got " + got());
            if (!(tok_.number > 0.0))
                throw ParseError(tok_.line, tok_.column, "scale factor must be positive, got " + tok_.text);
            e = Expr::make_scale(std::move(e), tok_.number);
            advance();
        }
        return e;
    }

    ExprPtr parse_primary() {
        switch (tok_.type) {
            case Token::Type::Ident: {
                ExprPtr v = Expr::variable(tok_.text);
                advance();
                return v;
            }
            case Token::Type::Empty:
                advance();
                return Expr::empty();
            case Token::Type::Full:
                advance();
                return Expr::full();
            case Token::Type::LParen: {
                advance();
                ExprPtr e = parse_union();
                if (tok_.type != Token::Type::RParen)
                    throw ParseError(tok_.line, tok_.column, "expected ')', got " + got());
                advance();
                return e;
            }
            default:
                throw ParseError(tok_.line, tok_.column,
                                 "expected expression (identifier, EMPTY, FULL, '~' or '('), got " + got());
        }
    }

    std::string got() const {
        if (tok_.type == Token::Type::End) return "end of input";
        return std::string("'") + tok_.text + "'";
    }

    void advance() { tok_ = lex_.next(); }

    Lexer lex_;
    Token tok_;
};

}  // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse(); }

}  // namespace mnesor

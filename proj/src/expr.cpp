#include "qlax/expr.hpp"

#include <cctype>
#include <string>

#include "qlax/error.hpp"

namespace qlax {

namespace {

struct Token {
    enum class Type { Number, Ident, Op, End };
    Type type = Type::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token tok;
            tok.line = line_;
            tok.column = col_;
            if (pos_ >= src_.size()) {
                out.push_back(tok);
                return out;
            }
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                tok.type = Token::Type::Number;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    tok.text += advance();
                }
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                tok.type = Token::Type::Ident;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    tok.text += advance();
                }
            } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
                tok.type = Token::Type::Op;
                tok.text = std::string(1, advance());
            } else {
                throw SyntaxError(std::string("unexpected character '") + c + "'", line_, col_);
            }
            out.push_back(std::move(tok));
        }
    }

private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            advance();
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Expr parse() {
        Expr e = expr();
        if (peek().type != Token::Type::End) {
            fail("unexpected '" + peek().text + "'");
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at_op(char c) const { return peek().type == Token::Type::Op && peek().text[0] == c; }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, peek().line, peek().column); }

    static Expr node(Expr::Kind kind, const Token& at) {
        Expr e;
        e.kind = kind;
        e.line = at.line;
        e.column = at.column;
        return e;
    }

    Expr binary(Expr::Kind kind, const Token& at, Expr lhs, Expr rhs) {
        Expr e = node(kind, at);
        e.args.push_back(std::move(lhs));
        e.args.push_back(std::move(rhs));
        return e;
    }

    Expr expr() {
        Expr lhs = term();
        while (at_op('+') || at_op('-')) {
            const Token op = take();
            lhs = binary(op.text[0] == '+' ? Expr::Kind::Add : Expr::Kind::Sub, op, std::move(lhs), term());
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (at_op('*')) {
            const Token op = take();
            lhs = binary(Expr::Kind::Mul, op, std::move(lhs), factor());
        }
        return lhs;
    }

    Expr factor() {
        if (at_op('-')) {
            const Token op = take();
            Expr e = node(Expr::Kind::Neg, op);
            e.args.push_back(factor());
            return e;
        }
        Expr base = atom();
        if (at_op('^')) {
            const Token op = take();
            Expr e = node(Expr::Kind::Pow, op);
            e.index = nat("exponent");
            e.args.push_back(std::move(base));
            return e;
        }
        return base;
    }

    int nat(const char* what) {
        if (peek().type != Token::Type::Number) {
            fail(std::string("expected a non-negative integer ") + what);
        }
        const Token t = take();
        if (t.text.size() > 9) {
            throw SyntaxError(std::string(what) + " too large", t.line, t.column);
        }
        return std::stoi(t.text);
    }

    Expr atom() {
        const Token& t = peek();
        switch (t.type) {
        case Token::Type::Number: {
            const Token num = take();
            Expr e = node(Expr::Kind::Number, num);
            std::string text = num.text;
            if (at_op('/')) {
                take();
                if (peek().type != Token::Type::Number) {
                    fail("expected a denominator");
                }
                const Token den = take();
                if (den.text.find_first_not_of('0') == std::string::npos) {
                    throw SyntaxError("zero denominator", den.line, den.column);
                }
                text += "/" + den.text;
            }
            e.number = Rational::parse(text);
            return e;
        }
        case Token::Type::Ident: {
            const Token id = take();
            if (id.text == "d") {
                return node(Expr::Kind::D, id);
            }
            if (id.text == "u") {
                return node(Expr::Kind::Jet, id);
            }
            if (id.text.size() > 2 && id.text.rfind("u_", 0) == 0 &&
                id.text.find_first_not_of("0123456789", 2) == std::string::npos && id.text.size() <= 11) {
                Expr e = node(Expr::Kind::Jet, id);
                e.index = std::stoi(id.text.substr(2));
                return e;
            }
            throw UnboundIdentifier(id.text, id.line, id.column);
        }
        case Token::Type::Op:
            if (t.text[0] == '(') {
                take();
                Expr inner = expr();
                if (!at_op(')')) {
                    fail("expected ')'");
                }
                take();
                return inner;
            }
            fail("unexpected '" + t.text + "'");
        case Token::Type::End:
            fail("unexpected end of input");
        }
        fail("unreachable");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

template <class T, class Leaf>
T elaborate(const Expr& e, const Leaf& leaf) {
    switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Jet:
    case Expr::Kind::D:
        return leaf(e);
    case Expr::Kind::Add:
        return elaborate<T>(e.args[0], leaf) + elaborate<T>(e.args[1], leaf);
    case Expr::Kind::Sub:
        return elaborate<T>(e.args[0], leaf) - elaborate<T>(e.args[1], leaf);
    case Expr::Kind::Mul:
        return elaborate<T>(e.args[0], leaf) * elaborate<T>(e.args[1], leaf);
    case Expr::Kind::Neg:
        return -elaborate<T>(e.args[0], leaf);
    case Expr::Kind::Pow: {
        const T base = elaborate<T>(e.args[0], leaf);
        T acc = T::one();
        for (int i = 0; i < e.index; ++i) {
            acc = acc * base;
        }
        return acc;
    }
    }
    throw SyntaxError("malformed expression", e.line, e.column);
}

} // namespace

Expr parse_expr(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

PsdoSymbol elaborate_psdo(const Expr& e) {
    return elaborate<PsdoSymbol>(e, [](const Expr& leaf) {
        switch (leaf.kind) {
        case Expr::Kind::Number:
            return PsdoSymbol::multiplication(DiffPoly(leaf.number));
        case Expr::Kind::Jet:
            return PsdoSymbol::multiplication(DiffPoly::u(leaf.index));
        default:
            return PsdoSymbol::xi(1);
        }
    });
}

DiffPoly elaborate_diffpoly(const Expr& e) {
    return elaborate<DiffPoly>(e, [](const Expr& leaf) {
        switch (leaf.kind) {
        case Expr::Kind::Number:
            return DiffPoly(leaf.number);
        case Expr::Kind::Jet:
            return DiffPoly::u(leaf.index);
        default:
            throw UnboundIdentifier("d", leaf.line, leaf.column);
        }
    });
}

} // namespace qlax

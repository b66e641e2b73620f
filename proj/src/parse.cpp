#include "kemae/parse.hpp"

#include <cctype>
#include <map>

namespace kemae {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Tok::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Tok::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        tok_ = {k, s_.substr(i_, 1), start};
        ++i_;
    }

    const std::string& s_;
    size_t i_ = 0;
    Token tok_{Tok::End, "", 0};
};

class Parser {
  public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lex_(text), n_(static_cast<int>(vars.size())) {
        if (vars.empty()) throw std::invalid_argument("parse_expression: empty variable list");
        for (int i = 0; i < n_; ++i) {
            auto [it, inserted] = var_index_.emplace(vars[i], i);
            if (!inserted)
                throw std::invalid_argument("parse_expression: duplicate variable name '" +
                                            vars[i] + "'");
        }
    }

    Polynomial run() {
        Polynomial p = expression();
        if (lex_.peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return p;
    }

  private:
    Polynomial expression() {
        bool negate = false;
        if (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus)
            negate = lex_.take().kind == Tok::Minus;
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take().kind;
            Polynomial rhs = term();
            if (op == Tok::Plus)
                acc += rhs;
            else
                acc -= rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Star) {
                lex_.take();
                acc = acc * factor();
            } else if (k == Tok::Slash) {
                Token slash = lex_.take();
                Polynomial d = factor();
                if (d.total_degree() > 0)
                    throw ParseError("'/' divides by a rational constant only", slash.pos);
                Rational c = d.constant_term();
                if (c.is_zero()) throw ParseError("division by zero", slash.pos);
                acc *= c.inverse();
            } else if (k == Tok::Ident || k == Tok::LParen) {
                acc = acc * factor();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.take();
            if (lex_.peek().kind == Tok::Minus)
                throw ParseError("negative exponent", lex_.peek().pos);
            if (lex_.peek().kind != Tok::Number)
                throw ParseError("expected non-negative integer exponent", caret.pos);
            Token e = lex_.take();
            long v;
            try {
                v = std::stol(e.text);
            } catch (const std::exception&) {
                throw ParseError("exponent too large", e.pos);
            }
            return pow(b, static_cast<int>(v));
        }
        return b;
    }

    Polynomial base() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Number:
                return Polynomial::constant(n_, Rational::from_string(t.text));
            case Tok::Ident: {
                auto it = var_index_.find(t.text);
                if (it == var_index_.end())
                    throw ParseError("unknown variable '" + t.text + "'", t.pos);
                return Polynomial::variable(n_, it->second);
            }
            case Tok::LParen: {
                Polynomial p = expression();
                if (lex_.peek().kind != Tok::RParen)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.take();
                return p;
            }
            default:
                throw ParseError("expected number, variable or '('", t.pos);
        }
    }

    Lexer lex_;
    int n_;
    std::map<std::string, int> var_index_;
};

}  // namespace

Polynomial parse_expression(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).run();
}

}  // namespace kemae

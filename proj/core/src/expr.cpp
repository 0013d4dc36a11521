#include "lievar/expr.hpp"

#include <cctype>
#include <vector>

namespace lievar {

Expr::Ptr Expr::integer(std::string digits) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Integer;
    e->text_ = std::move(digits);
    return e;
}

Expr::Ptr Expr::symbol(std::string name) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Symbol;
    e->text_ = std::move(name);
    return e;
}

Expr::Ptr Expr::binary(Kind k, Ptr a, Ptr b) {
    auto e = std::make_shared<Expr>();
    e->kind_ = k;
    e->a_ = std::move(a);
    e->b_ = std::move(b);
    return e;
}

Expr::Ptr Expr::neg(Ptr a) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Neg;
    e->a_ = std::move(a);
    return e;
}

Expr::Ptr Expr::pow(Ptr base, long ex) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::Pow;
    e->a_ = std::move(base);
    e->exp_ = ex;
    return e;
}

namespace {

struct Token {
    enum Type { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } type;
    std::string text;
    int col; // 1-based
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Int, s.substr(i, j - i), col});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), col});
            i = j;
        } else {
            Token::Type t;
            switch (c) {
            case '+': t = Token::Plus; break;
            case '-': t = Token::Minus; break;
            case '*': t = Token::Star; break;
            case '/': t = Token::Slash; break;
            case '^': t = Token::Caret; break;
            case '(': t = Token::LParen; break;
            case ')': t = Token::RParen; break;
            default: throw parse_error(std::string("unexpected character '") + c + "'", col);
            }
            out.push_back({t, std::string(1, c), col});
            ++i;
        }
    }
    out.push_back({Token::End, "", static_cast<int>(s.size()) + 1});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(lex(s)) {}

    Expr::Ptr run() {
        Expr::Ptr e = sum();
        expect(Token::End, "end of expression");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Token::Type t, const std::string& what) {
        if (peek().type != t)
            throw parse_error("expected " + what + " near '" + peek().text + "'", peek().col);
        ++pos_;
    }

    Expr::Ptr sum() {
        Expr::Ptr e = product();
        while (peek().type == Token::Plus || peek().type == Token::Minus) {
            Token op = take();
            Expr::Ptr r = product();
            e = Expr::binary(op.type == Token::Plus ? Expr::Kind::Add : Expr::Kind::Sub,
                             std::move(e), std::move(r));
        }
        return e;
    }

    Expr::Ptr product() {
        Expr::Ptr e = unary();
        while (peek().type == Token::Star || peek().type == Token::Slash) {
            Token op = take();
            Expr::Ptr r = unary();
            e = Expr::binary(op.type == Token::Star ? Expr::Kind::Mul : Expr::Kind::Div,
                             std::move(e), std::move(r));
        }
        return e;
    }

    Expr::Ptr unary() {
        if (peek().type == Token::Minus) {
            take();
            return Expr::neg(unary());
        }
        if (peek().type == Token::Plus) {
            take();
            return unary();
        }
        return power();
    }

    Expr::Ptr power() {
        Expr::Ptr base = atom();
        if (peek().type == Token::Caret) {
            take();
            bool neg = false;
            if (peek().type == Token::Minus) {
                take();
                neg = true;
            }
            if (peek().type != Token::Int)
                throw parse_error("expected integer exponent near '" + peek().text + "'",
                                  peek().col);
            Token e = take();
            long ex = std::stol(e.text);
            return Expr::pow(std::move(base), neg ? -ex : ex);
        }
        return base;
    }

    Expr::Ptr atom() {
        const Token& t = peek();
        switch (t.type) {
        case Token::Int: return Expr::integer(take().text);
        case Token::Ident: return Expr::symbol(take().text);
        case Token::LParen: {
            take();
            Expr::Ptr e = sum();
            expect(Token::RParen, "')'");
            return e;
        }
        default:
            throw parse_error("expected value near '" + t.text + "'", t.col);
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
    switch (k) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
    }
}

void render(const Expr& e, std::string& out, int parent_prec) {
    int prec = precedence(e.kind());
    bool paren = prec < parent_prec;
    if (paren) out += "(";
    switch (e.kind()) {
    case Expr::Kind::Integer:
    case Expr::Kind::Symbol: out += e.text(); break;
    case Expr::Kind::Add:
        render(*e.lhs(), out, prec);
        out += "+";
        render(*e.rhs(), out, prec + 1);
        break;
    case Expr::Kind::Sub:
        render(*e.lhs(), out, prec);
        out += "-";
        render(*e.rhs(), out, prec + 1);
        break;
    case Expr::Kind::Mul:
        render(*e.lhs(), out, prec);
        out += "*";
        render(*e.rhs(), out, prec + 1);
        break;
    case Expr::Kind::Div:
        render(*e.lhs(), out, prec);
        out += "/";
        render(*e.rhs(), out, prec + 1);
        break;
    case Expr::Kind::Neg:
        out += "-";
        render(*e.lhs(), out, prec + 1);
        break;
    case Expr::Kind::Pow:
        render(*e.lhs(), out, prec + 1);
        out += "^";
        if (e.exponent() < 0) out += "-";
        out += std::to_string(e.exponent() < 0 ? -e.exponent() : e.exponent());
        break;
    }
    if (paren) out += ")";
}

} // namespace

Expr::Ptr Expr::parse(const std::string& src) { return Parser(src).run(); }

std::string Expr::str() const {
    std::string out;
    render(*this, out, 0);
    return out;
}

void Expr::collect_params(std::map<std::string, int>& out) const {
    switch (kind_) {
    case Kind::Symbol:
        if (text_ != "w") out[text_]++;
        break;
    case Kind::Integer: break;
    default:
        if (a_) a_->collect_params(out);
        if (b_) b_->collect_params(out);
    }
}

} // namespace lievar

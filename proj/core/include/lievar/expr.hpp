#ifndef LIEVAR_EXPR_HPP
#define LIEVAR_EXPR_HPP

#include "lievar/fields.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace lievar {

struct parse_error : std::runtime_error {
    int line = 0;   // 1-based, 0 when unknown
    int column = 0; // 1-based
    parse_error(std::string msg, int col) : std::runtime_error(std::move(msg)), column(col) {}
    parse_error(std::string msg, int ln, int col)
        : std::runtime_error(std::move(msg)), line(ln), column(col) {}
};

/// Scalar literal expression: integers, `p/q`, parameter symbols, `w`,
/// operators + - * / ^ and parentheses.
class Expr {
public:
    enum class Kind { Integer, Symbol, Add, Sub, Mul, Div, Neg, Pow };

    using Ptr = std::shared_ptr<const Expr>;

    static Ptr integer(std::string digits);
    static Ptr symbol(std::string name);
    static Ptr binary(Kind k, Ptr a, Ptr b);
    static Ptr neg(Ptr a);
    static Ptr pow(Ptr base, long e);

    Kind kind() const { return kind_; }
    const std::string& text() const { return text_; } // Integer digits or Symbol name
    const Ptr& lhs() const { return a_; }
    const Ptr& rhs() const { return b_; }
    long exponent() const { return exp_; }

    /// Parses a scalar expression; throws parse_error with 1-based column.
    static Ptr parse(const std::string& src);

    /// Canonical text; parse(str(e)) evaluates identically.
    std::string str() const;

    /// All symbols other than "w" occurring in the expression.
    void collect_params(std::map<std::string, int>& out) const;

    template <class F>
    F eval(const std::map<std::string, F>& env) const {
        switch (kind_) {
        case Kind::Integer: {
            if constexpr (std::is_same_v<F, Rat>) {
                return Rat::from_string(text_);
            } else {
                static_assert(std::is_same_v<F, QuadExt>, "unhandled scalar field");
                return QuadExt(Rat::from_string(text_));
            }
        }
        case Kind::Symbol: {
            auto it = env.find(text_);
            if (it != env.end()) return it->second;
            if (text_ == "w") {
                if constexpr (has_omega_v<F>)
                    return omega_value<F>();
                else
                    throw arithmetic_error("w is not an element of this field");
            }
            throw arithmetic_error("unbound symbol: " + text_);
        }
        case Kind::Add: return a_->eval(env) + b_->eval(env);
        case Kind::Sub: return a_->eval(env) - b_->eval(env);
        case Kind::Mul: return a_->eval(env) * b_->eval(env);
        case Kind::Div: {
            F d = b_->eval(env);
            if (d.is_zero()) throw arithmetic_error("division by zero in expression");
            return a_->eval(env) / d;
        }
        case Kind::Neg: return -a_->eval(env);
        case Kind::Pow: return a_->eval(env).pow(exp_);
        }
        throw arithmetic_error("corrupt expression");
    }

private:
    Kind kind_;
    std::string text_;
    Ptr a_, b_;
    long exp_ = 0;
};

// Integer literals need a direct path for rational-function fields.
template <>
inline RatFunc<Rat> Expr::eval<RatFunc<Rat>>(const std::map<std::string, RatFunc<Rat>>& env) const {
    switch (kind_) {
    case Kind::Integer: return RatFunc<Rat>(Rat::from_string(text_));
    case Kind::Symbol: {
        auto it = env.find(text_);
        if (it != env.end()) return it->second;
        throw arithmetic_error("unbound symbol: " + text_);
    }
    case Kind::Add: return a_->eval(env) + b_->eval(env);
    case Kind::Sub: return a_->eval(env) - b_->eval(env);
    case Kind::Mul: return a_->eval(env) * b_->eval(env);
    case Kind::Div: {
        RatFunc<Rat> d = b_->eval(env);
        if (d.is_zero()) throw arithmetic_error("division by zero in expression");
        return a_->eval(env) / d;
    }
    case Kind::Neg: return -a_->eval(env);
    case Kind::Pow: return a_->eval(env).pow(exp_);
    }
    throw arithmetic_error("corrupt expression");
}

template <>
inline RatFunc<QuadExt>
Expr::eval<RatFunc<QuadExt>>(const std::map<std::string, RatFunc<QuadExt>>& env) const {
    switch (kind_) {
    case Kind::Integer: return RatFunc<QuadExt>(QuadExt(Rat::from_string(text_)));
    case Kind::Symbol: {
        auto it = env.find(text_);
        if (it != env.end()) return it->second;
        if (text_ == "w") return omega_value<RatFunc<QuadExt>>();
        throw arithmetic_error("unbound symbol: " + text_);
    }
    case Kind::Add: return a_->eval(env) + b_->eval(env);
    case Kind::Sub: return a_->eval(env) - b_->eval(env);
    case Kind::Mul: return a_->eval(env) * b_->eval(env);
    case Kind::Div: {
        RatFunc<QuadExt> d = b_->eval(env);
        if (d.is_zero()) throw arithmetic_error("division by zero in expression");
        return a_->eval(env) / d;
    }
    case Kind::Neg: return -a_->eval(env);
    case Kind::Pow: return a_->eval(env).pow(exp_);
    }
    throw arithmetic_error("corrupt expression");
}

} // namespace lievar

#endif

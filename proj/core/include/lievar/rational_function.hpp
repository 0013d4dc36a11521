#ifndef LIEVAR_RATIONAL_FUNCTION_HPP
#define LIEVAR_RATIONAL_FUNCTION_HPP

#include "lievar/polynomial.hpp"

#include <string>
#include <utility>

namespace lievar {

/// A rational-function limit that does not exist at 0; carries the
/// (negative) order of the offending entry.
struct limit_error : arithmetic_error {
    int order;
    explicit limit_error(int ord)
        : arithmetic_error("limit at 0 does not exist (order " + std::to_string(ord) + ")"),
          order(ord) {}
};

struct pole_error : arithmetic_error {
    using arithmetic_error::arithmetic_error;
};

/// Reduced rational function num/den over the field K: den monic and
/// nonzero, gcd(num, den) = 1.
template <class K>
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long n) : num_(Poly<K>(K(n))) {}
    RatFunc(K c) : num_(Poly<K>(std::move(c))) {}
    RatFunc(Poly<K> p) : num_(std::move(p)) {}
    RatFunc(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static RatFunc variable() { return RatFunc(Poly<K>::variable()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    K constant_value() const {
        if (!is_constant()) throw arithmetic_error("not a constant rational function");
        return num_.coeff(0); // den is monic, so = 1 here
    }

    int degree_size() const { return std::max(num_.degree(), 0) + den_.degree(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw arithmetic_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inv() const {
        if (is_zero()) throw arithmetic_error("inverse of zero");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long e) const {
        if (e == 0) return RatFunc(1);
        if (e < 0) return inv().pow(-e);
        RatFunc base = *this, acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// ord_0(num) - ord_0(den); error on the zero function.
    int order_at_zero() const {
        if (is_zero()) throw arithmetic_error("order at 0 of the zero function is +infinity");
        return num_.order_at_zero() - den_.order_at_zero();
    }

    /// Value at 0 when regular there: 0 if order > 0, the ratio of the
    /// lowest surviving coefficients if order = 0.
    K limit_at_zero() const {
        if (is_zero()) return K(0);
        int ord = order_at_zero();
        if (ord < 0) throw limit_error(ord);
        if (ord > 0) return K(0);
        return num_.coeff(num_.order_at_zero()) / den_.coeff(den_.order_at_zero());
    }

    /// Exact evaluation; pole_error when the denominator vanishes.
    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw pole_error("pole at evaluation point");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var) const {
        if (is_polynomial()) return num_.str(var);
        std::string n = num_.str(var), d = den_.str(var);
        auto atomic = [](const std::string& s) {
            return s.find('+') == std::string::npos && s.find('-', 1) == std::string::npos &&
                   s.find('*') == std::string::npos && s.find('/') == std::string::npos &&
                   (s.empty() || s[0] != '-');
        };
        if (!atomic(n)) n = "(" + n + ")";
        if (!atomic(d)) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void reduce() {
        if (den_.is_zero()) throw arithmetic_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<K>::one();
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly<K>::divmod(num_, g).first;
            den_ = Poly<K>::divmod(den_, g).first;
        }
        K lead = den_.leading();
        if (!lead.is_one()) {
            K inv = K(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly<K> num_;
    Poly<K> den_ = Poly<K>::one();
};

using RatFuncQ = RatFunc<Rat>;
using RatFuncW = RatFunc<QuadExt>;

} // namespace lievar

#endif

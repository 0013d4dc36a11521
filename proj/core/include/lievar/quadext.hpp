#ifndef LIEVAR_QUADEXT_HPP
#define LIEVAR_QUADEXT_HPP

#include "lievar/rational.hpp"

#include <string>

namespace lievar {

/// Element a + b*w of the quadratic extension Q[w]/(w^2 - w + 1).
///
/// w is a primitive sixth root of unity; the reduction rule is
/// w^2 -> w - 1.  Conjugation swaps the two roots of x^2 - x + 1:
/// conj(a + b*w) = (a + b) - b*w.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long n) : a_(n) {}
    QuadExt(Rat a) : a_(std::move(a)) {}
    QuadExt(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt omega() { return QuadExt(Rat(0), Rat(1)); }

    const Rat& re() const { return a_; }
    const Rat& wc() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadExt conj() const { return QuadExt(a_ + b_, -b_); }

    /// (a+bw)(a+b-bw) = a^2 + ab + b^2, always rational.
    Rat norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }
    QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        // (a1 + b1 w)(a2 + b2 w) with w^2 = w - 1
        Rat a = a_ * o.a_ - b_ * o.b_;
        Rat b = a_ * o.b_ + b_ * o.a_ + b_ * o.b_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inv(); }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    QuadExt inv() const {
        if (is_zero()) throw arithmetic_error("inverse of zero");
        Rat n = norm();
        QuadExt c = conj();
        return QuadExt(c.a_ / n, c.b_ / n);
    }

    QuadExt pow(long e) const {
        if (e == 0) return QuadExt(1);
        if (e < 0) return inv().pow(-e);
        QuadExt base = *this, acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Canonical literal, e.g. "2", "w", "-1/2+3*w", "1-1*w".
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str();
        if (b_.sign() < 0)
            s += "-" + (-b_).str() + "*w";
        else {
            if (!s.empty()) s += "+";
            s += b_.str() + "*w";
        }
        return s;
    }

private:
    Rat a_, b_;
};

} // namespace lievar

#endif

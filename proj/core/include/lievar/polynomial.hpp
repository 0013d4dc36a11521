#ifndef LIEVAR_POLYNOMIAL_HPP
#define LIEVAR_POLYNOMIAL_HPP

#include "lievar/quadext.hpp"
#include "lievar/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace lievar {

/// Dense univariate polynomial over a field K, coefficients by ascending
/// degree, leading coefficient nonzero unless the polynomial is zero.
/// The variable name is supplied by callers when printing.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(K c) { c_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K(1)); }
    /// The monomial c * x^k.
    static Poly monomial(K c, int k) {
        std::vector<K> v(static_cast<size_t>(k) + 1, K(0));
        v.back() = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(K(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const K& leading() const { return c_.back(); }
    K coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<K>& coeffs() const { return c_; }

    /// Multiplicity of the root 0; -1 for the zero polynomial.
    int order_at_zero() const {
        if (is_zero()) return -1;
        int k = 0;
        while (c_[static_cast<size_t>(k)].is_zero()) ++k;
        return k;
    }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const K& s, Poly p) {
        for (auto& c : p.c_) c = s * c;
        p.trim();
        return p;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw arithmetic_error("polynomial division by zero");
        Poly rem = a;
        if (a.degree() < b.degree()) return {Poly(), rem};
        std::vector<K> q(static_cast<size_t>(a.degree() - b.degree()) + 1, K(0));
        K binv = K(1) / b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int k = rem.degree() - b.degree();
            K f = rem.leading() * binv;
            q[static_cast<size_t>(k)] = f;
            // rem -= f * x^k * b, dropping the leading term exactly
            for (int i = 0; i <= b.degree(); ++i)
                rem.c_[static_cast<size_t>(i + k)] -= f * b.c_[static_cast<size_t>(i)];
            rem.trim();
        }
        return {Poly(std::move(q)), rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / leading();
        return inv * *this;
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const K& c = c_[static_cast<size_t>(k)];
            if (c.is_zero()) continue;
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
            if (!s.empty()) {
                s += neg && !composite ? "-" : "+";
                if (neg && !composite) cs = cs.substr(1);
            }
            if (composite) cs = "(" + cs + ")";
            if (k == 0)
                s += cs;
            else {
                if (cs != "1") s += cs + "*";
                s += var;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

namespace detail {

/// Subresultant polynomial remainder sequence over Z, entered through the
/// primitive parts of the inputs.  Keeps coefficient growth polynomial.
inline std::vector<mpz_class> subresultant_gcd_z(std::vector<mpz_class> a,
                                                 std::vector<mpz_class> b) {
    auto deg = [](const std::vector<mpz_class>& p) { return static_cast<int>(p.size()) - 1; };
    auto trim = [](std::vector<mpz_class>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    auto content = [](const std::vector<mpz_class>& p) {
        mpz_class g = 0;
        for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
    };
    auto primitive = [&](std::vector<mpz_class>& p) {
        mpz_class g = content(p);
        if (g == 0) return;
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    };
    // pseudo-remainder: lc(b)^(da-db+1) * a mod b
    auto prem = [&](std::vector<mpz_class> a0, const std::vector<mpz_class>& b0) {
        int da = deg(a0), db = deg(b0);
        const mpz_class& lb = b0.back();
        for (int k = da; k >= db; --k) {
            if (static_cast<int>(a0.size()) - 1 < k) continue;
            mpz_class top = a0[static_cast<size_t>(k)];
            for (auto& c : a0) c *= lb;
            for (int i = 0; i <= db; ++i)
                a0[static_cast<size_t>(i + k - db)] -= top * b0[static_cast<size_t>(i)];
            trim(a0);
        }
        return a0;
    };

    trim(a);
    trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (deg(a) < deg(b)) std::swap(a, b);
    primitive(a);
    primitive(b);
    mpz_class g = 1, h = 1;
    while (true) {
        int d = deg(a) - deg(b);
        std::vector<mpz_class> r = prem(a, b);
        if (r.empty()) break;
        if (deg(r) == 0) return {mpz_class(1)};
        a = b;
        b = std::move(r);
        mpz_class denom = g;
        for (int i = 0; i < d; ++i) denom *= h;
        for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
        g = a.back();
        if (d >= 1) {
            mpz_class hp = 1;
            for (int i = 0; i < d; ++i) hp *= g;
            mpz_class hd = 1;
            for (int i = 0; i < d - 1; ++i) hd *= h;
            h = hp / hd;
        }
    }
    primitive(b);
    return b;
}

} // namespace detail

/// gcd over Q via the subresultant sequence on cleared denominators;
/// result is monic.
inline Poly<Rat> poly_gcd(const Poly<Rat>& a, const Poly<Rat>& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto clear = [](const Poly<Rat>& p) {
        mpz_class l = 1;
        for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        std::vector<mpz_class> v;
        v.reserve(p.coeffs().size());
        for (const auto& c : p.coeffs()) v.push_back(c.num() * (l / c.den()));
        return v;
    };
    std::vector<mpz_class> gz = detail::subresultant_gcd_z(clear(a), clear(b));
    std::vector<Rat> rc;
    rc.reserve(gz.size());
    for (auto& c : gz) rc.emplace_back(Rat(c));
    return Poly<Rat>(std::move(rc)).monic();
}

/// Monic Euclid for other coefficient fields.
template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
    Poly<K> x = a, y = b;
    while (!y.is_zero()) {
        Poly<K> r = Poly<K>::divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

} // namespace lievar

#endif

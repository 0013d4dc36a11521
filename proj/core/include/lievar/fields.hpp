#ifndef LIEVAR_FIELDS_HPP
#define LIEVAR_FIELDS_HPP

#include "lievar/rational_function.hpp"

#include <concepts>
#include <string>

namespace lievar {

/// The scalar interface every field type implements: exact arithmetic,
/// equality, and zero/one tests.  Instances: Rat, QuadExt, RatFunc<Rat>,
/// RatFunc<QuadExt>.
template <class F>
concept FieldScalar = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    F(1);
    F(0);
};

template <class F>
struct field_traits {
    static constexpr bool is_rational_function = false;
    static int measure(const F&) { return 0; }
};

template <class K>
struct field_traits<RatFunc<K>> {
    static constexpr bool is_rational_function = true;
    /// Total degree, the pivot-selection measure during elimination.
    static int measure(const RatFunc<K>& f) { return f.degree_size(); }
};

template <class F>
inline std::string scalar_str(const F& x, const std::string& var = "t") {
    if constexpr (field_traits<F>::is_rational_function)
        return x.str(var);
    else
        return x.str();
}

/// Base field of a scalar type (coefficients for rational functions).
template <class F>
struct base_field {
    using type = F;
};
template <class K>
struct base_field<RatFunc<K>> {
    using type = K;
};
template <class F>
using base_field_t = typename base_field<F>::type;

/// True if the field contains w with w^2 = w - 1.
template <class F>
constexpr bool has_omega_v = std::is_same_v<base_field_t<F>, QuadExt>;

template <class F>
F omega_value() {
    static_assert(has_omega_v<F>, "field has no sixth root of unity");
    if constexpr (std::is_same_v<F, QuadExt>)
        return QuadExt::omega();
    else
        return F(QuadExt::omega());
}

} // namespace lievar

#endif

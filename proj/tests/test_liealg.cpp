#include <doctest.h>

#include "lievar/fingerprint.hpp"

#include <random>

using namespace lievar;

namespace {

struct B {
    int i, j, k;
    long num = 1, den = 1;
};

LieAlgebra<Rat> make(int n, std::initializer_list<B> bs, const char* label = "") {
    LieAlgebra<Rat> L(n, label);
    for (const auto& b : bs) L.add_c(b.i - 1, b.j - 1, b.k - 1, Rat(b.num, b.den));
    return L;
}

LieAlgebra<Rat> filiform7(std::initializer_list<B> extra, const char* label = "") {
    LieAlgebra<Rat> L(7, label);
    for (int i = 2; i <= 6; ++i) L.add_c(0, i - 1, i, Rat(1));
    for (const auto& b : extra) L.add_c(b.i - 1, b.j - 1, b.k - 1, Rat(b.num, b.den));
    return L;
}

Vec<Rat> e(int n, int i, Rat c = Rat(1)) {
    Vec<Rat> v(static_cast<size_t>(n), Rat(0));
    v[static_cast<size_t>(i) - 1] = c;
    return v;
}

Vec<Rat> add(Vec<Rat> a, const Vec<Rat>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

} // namespace

TEST_CASE("bracket expands structure constants bilinearly") {
    LieAlgebra<Rat> n3 = make(3, {{1, 2, 3}});
    CHECK(n3.bracket(e(3, 1), e(3, 2)) == e(3, 3));
    CHECK(n3.bracket(e(3, 2), e(3, 1)) == e(3, 3, Rat(-1)));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Vec<Rat> x(3);
        for (auto& c : x) c = Rat(static_cast<long>(rng() % 11) - 5);
        auto xx = n3.bracket(x, x);
        for (const auto& c : xx) CHECK(c.is_zero());
    }

    // [a x1 + b x2, a x4 + b x5] = a^2 x5 + 2ab x6 + b^2 x7 in the chain
    // algebra with [x2,x3]=x5, [x2,x4]=x6, [x2,x5]=x7
    LieAlgebra<Rat> gG = filiform7({{2, 3, 5}, {2, 4, 6}, {2, 5, 7}}, "gG");
    REQUIRE(gG.jacobi_check().empty());
    Vec<Rat> y = add(e(7, 1), e(7, 2));
    Vec<Rat> z = add(e(7, 4), e(7, 5));
    Vec<Rat> expect = add(add(e(7, 5), e(7, 6, Rat(2))), e(7, 7));
    CHECK(gG.bracket(y, z) == expect);
    // and it is [y, [y, x3]]
    CHECK(gG.bracket(y, gG.bracket(y, e(7, 3))) == expect);
}

TEST_CASE("jacobi violations are reported as data") {
    // flipping the sign of [x3,x4] in the product-rule family breaks Jacobi
    LieAlgebra<Rat> bad = filiform7({{2, 3, 6}, {2, 4, 7}, {2, 5, 7}, {3, 4, 7, +1}});
    auto v = bad.jacobi_check();
    CHECK(!v.empty());

    LieAlgebra<Rat> good = filiform7({{2, 3, 6}, {2, 4, 7}, {2, 5, 7}, {3, 4, 7, -1}});
    CHECK(good.jacobi_check().empty());
}

TEST_CASE("parametric jacobi holds identically") {
    using R = RatFunc<Rat>;
    R a = R::variable();
    LieAlgebra<R> gI(7, "gI");
    for (int i = 2; i <= 6; ++i) gI.add_c(0, i - 1, i, R(1));
    gI.add_c(1, 2, 4, R(1));     // [x2,x3] = x5
    gI.add_c(1, 3, 5, R(1));     // [x2,x4] = x6
    gI.add_c(1, 4, 6, R(1) - a); // [x2,x5] = (1-a) x7
    gI.add_c(2, 3, 6, a);        // [x3,x4] = a x7
    CHECK(gI.jacobi_check().empty());
}

TEST_CASE("characteristic series") {
    LieAlgebra<Rat> gA = filiform7({}, "gA");
    std::vector<int> dims;
    for (const auto& s : gA.lower_central_series()) dims.push_back(s.dim());
    CHECK(dims == std::vector<int>{7, 5, 4, 3, 2, 1, 0});
    CHECK(gA.nilpotency_class() == 6);

    auto c5 = abelian<Rat>(5);
    std::vector<int> adims;
    for (const auto& s : c5.lower_central_series()) adims.push_back(s.dim());
    CHECK(adims == std::vector<int>{5, 0});
    CHECK(c5.nilpotency_class() == 1);
    CHECK(c5.solvability_class() == 1);

    LieAlgebra<Rat> g22 =
        make(7, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {2, 5, 7, -1}, {3, 4, 7}}, "g22");
    REQUIRE(g22.jacobi_check().empty());
    CHECK(g22.nilpotency_class() == 5);

    LieAlgebra<Rat> gH = filiform7({{2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {2, 5, 7}}, "gH");
    CHECK(gH.solvability_class() == 2);
    LieAlgebra<Rat> gF = filiform7({{2, 3, 6}, {2, 4, 7}, {2, 5, 7}, {3, 4, 7, -1}}, "gF");
    CHECK(gF.solvability_class() == 3);
    CHECK(gF.solvability_class() <= gF.nilpotency_class());

    // upper central series
    CHECK(gF.center().dim() == 1);
    LieAlgebra<Rat> g13 =
        make(7, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {2, 3, 6}, {2, 5, 7, -1}, {3, 4, 7}},
             "g13");
    REQUIRE(g13.jacobi_check().empty());
    CHECK(g13.center().dim() == 2);

    auto ucs = abelian<Rat>(4).upper_central_series();
    CHECK(ucs.back().dim() == 4);
    CHECK(ucs.size() == 2);
}

TEST_CASE("quotients and direct sums") {
    LieAlgebra<Rat> gA = filiform7({}, "gA");
    LieAlgebra<Rat> q = gA.central_quotient();
    CHECK(q.dim() == 6);
    // the quotient is the 6-dimensional chain algebra
    LieAlgebra<Rat> g6A(6);
    for (int i = 2; i <= 5; ++i) g6A.add_c(0, i - 1, i, Rat(1));
    CHECK(fingerprint(q) == fingerprint(g6A));

    // L / L is the zero algebra
    LieAlgebra<Rat> n3 = make(3, {{1, 2, 3}});
    auto full = Subspace<Rat>::full(3);
    CHECK(n3.quotient(full).dim() == 0);

    // central quotients of the two product-rule deformations agree
    LieAlgebra<Rat> gH = filiform7({{2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {2, 5, 7}}, "gH");
    LieAlgebra<Rat> gG = filiform7({{2, 3, 5}, {2, 4, 6}, {2, 5, 7}}, "gG");
    CHECK(fingerprint(gH.central_quotient()) == fingerprint(gG.central_quotient()));

    // non-ideal rejected
    auto notideal = Subspace<Rat>::span(3, {e(3, 1)});
    CHECK_THROWS_AS(n3.quotient(notideal), not_an_ideal_error);

    // direct sums
    auto n3c2 = n3.direct_sum_abelian(2);
    CHECK(n3c2.dim() == 5);
    CHECK(n3c2.center().dim() == 3);
    CHECK(fingerprint(n3.direct_sum_abelian(0)) == fingerprint(n3));
    CHECK(fingerprint(abelian<Rat>(1).direct_sum_abelian(2)) == fingerprint(abelian<Rat>(3)));
}

TEST_CASE("adjoint matrices and traces") {
    LieAlgebra<Rat> gA = filiform7({});
    std::mt19937_64 rng(17);
    for (int t = 0; t < 5; ++t) {
        Vec<Rat> x(7);
        for (auto& c : x) c = Rat(static_cast<long>(rng() % 7) - 3);
        auto ad = gA.adjoint_matrix(x);
        CHECK(matrix_trace(ad).is_zero());
        CHECK(matrix_power(ad, 7).is_zero()); // nilpotent
    }

    LieAlgebra<Rat> r2 = make(2, {{1, 2, 2}});
    CHECK(matrix_trace(r2.adjoint_matrix(e(2, 1))) == Rat(1));

    // r_{3,alpha}: tr ad(e1) = 1 + alpha at alpha = 5/7
    LieAlgebra<Rat> r3a(3);
    r3a.add_c(0, 1, 1, Rat(1));
    r3a.add_c(0, 2, 2, Rat(5, 7));
    CHECK(matrix_trace(r3a.adjoint_matrix(e(3, 1))) == Rat(12, 7));
}

TEST_CASE("trace quotients on solvable non-nilpotent algebras") {
    // r_{3,alpha} + C at several rational alpha matches the closed form
    std::mt19937_64 seed_rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Rat alpha(static_cast<long>(seed_rng() % 17) - 8, 1 + static_cast<long>(seed_rng() % 5));
        if (alpha.is_zero() || alpha == Rat(-1)) alpha = Rat(3 + trial);
        LieAlgebra<Rat> L(4);
        L.add_c(0, 1, 1, Rat(1));
        L.add_c(0, 2, 2, alpha);
        std::mt19937_64 rng(1234 + trial);
        for (int i2 = 1; i2 <= 3; ++i2)
            for (int j2 = 1; j2 <= 3; ++j2) {
                auto c = c_invariant(L, i2, j2, 6, rng);
                REQUIRE(c.has_value());
                Rat ai = alpha.pow(i2), aj = alpha.pow(j2), aij = alpha.pow(i2 + j2);
                CHECK(*c == Rat(1) + (ai + aj) / (Rat(1) + aij));
            }
    }

    // c_11 = 1 + 2a/(1+a^2) and c_23 at a = 2
    LieAlgebra<Rat> L(4);
    L.add_c(0, 1, 1, Rat(1));
    L.add_c(0, 2, 2, Rat(2));
    std::mt19937_64 rng(99);
    auto c11 = c_invariant(L, 1, 1, 8, rng);
    REQUIRE(c11.has_value());
    CHECK(*c11 == Rat(1) + Rat(4, 5));
    auto c23 = c_invariant(L, 2, 3, 8, rng);
    REQUIRE(c23.has_value());
    CHECK(*c23 == Rat(15, 11));

    // nilpotent algebras have identically vanishing traces
    LieAlgebra<Rat> n3 = make(3, {{1, 2, 3}});
    std::mt19937_64 rng2(7);
    CHECK_THROWS_AS(c_invariant(n3, 1, 1, 6, rng2), c_invariant_degenerate_error);
}

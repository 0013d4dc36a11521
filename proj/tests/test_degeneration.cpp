#include <doctest.h>

#include "lievar/degeneration.hpp"

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

LieAlgebra<Rat> gF() { return filiform7({{2, 3, 6}, {2, 4, 7}, {2, 5, 7}, {3, 4, 7, -1}}, "gF"); }
LieAlgebra<Rat> gC() { return filiform7({{2, 5, 7}, {3, 4, 7, -1}}, "gC"); }
LieAlgebra<Rat> gD() { return filiform7({{2, 3, 6}, {2, 4, 7}}, "gD"); }
LieAlgebra<Rat> gE() { return filiform7({{2, 3, 6}, {2, 3, 7}, {2, 4, 7}}, "gE"); }
LieAlgebra<Rat> gG() { return filiform7({{2, 3, 5}, {2, 4, 6}, {2, 5, 7}}, "gG"); }

using R = RatFunc<Rat>;

Matrix<R> diag_powers(std::initializer_list<long> exps) {
    Matrix<R> m(static_cast<int>(exps.size()), static_cast<int>(exps.size()));
    int i = 0;
    for (long e : exps) {
        m.at(i, i) = R::variable().pow(e);
        ++i;
    }
    return m;
}

Matrix<Rat> random_invertible(std::mt19937_64& rng, int n) {
    while (true) {
        Matrix<Rat> g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                g.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
        try {
            inverse(g);
            return g;
        } catch (const singular_matrix_error&) {
        }
    }
}

} // namespace

TEST_CASE("base change is a left action and identity fixes the law") {
    LieAlgebra<Rat> L = gF();
    CHECK(apply_base_change(L, Matrix<Rat>::identity(7)) == L);

    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Rat> g = random_invertible(rng, 5);
        Matrix<Rat> h = random_invertible(rng, 5);
        LieAlgebra<Rat> M = make(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}});
        auto lhs = apply_base_change(apply_base_change(M, h), g);
        auto rhs = apply_base_change(M, g * h);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("scaling by t^-1 I contracts everything to the abelian law") {
    // g_t = t^-1 I, so g_t^-1 = t I and the constants are scaled by t
    Matrix<R> ginv(7, 7);
    for (int i = 0; i < 7; ++i) ginv.at(i, i) = R::variable();
    LieAlgebra<Rat> lim = psg_limit(gF(), ginv, /*given_inverse=*/true);
    CHECK(lim == abelian<Rat>(7));
}

TEST_CASE("printed diagonal matrices realize the classified limits") {
    // gF -> gC
    CHECK(psg_limit(gF(), diag_powers({-1, -2, -3, -4, -5, -6, -7}), true) == gC());
    // gF -> gD
    CHECK(psg_limit(gF(), diag_powers({1, 3, 4, 5, 6, 7, 8}), true) == gD());
    // the gF -> gC matrix does not produce gE
    CHECK(psg_limit(gF(), diag_powers({-1, -2, -3, -4, -5, -6, -7}), true) != gE());
    // gF -> g13 with a sign in the last diagonal entry
    Matrix<R> g13m = diag_powers({-1, -3, -4, -5, -6, -7, -9});
    g13m.at(6, 6) = -g13m.at(6, 6);
    LieAlgebra<Rat> g13 = make(
        7, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {2, 3, 6}, {2, 5, 7, -1}, {3, 4, 7}});
    CHECK(psg_limit(gF(), g13m, true) == g13);
}

TEST_CASE("triangular matrix with half-entries realizes the deformation limit") {
    R t = R::variable();
    Matrix<R> g(7, 7);
    long d[7] = {1, 3, 4, 5, 6, 7, 8};
    for (int i = 0; i < 7; ++i) g.at(i, i) = t.pow(d[i]);
    Rat half(1, 2);
    g.at(3, 1) = R(half) * t.pow(4);
    g.at(4, 2) = R(half) * t.pow(5);
    g.at(5, 3) = R(half) * t.pow(6);
    g.at(6, 4) = R(half) * t.pow(7);
    CHECK(psg_limit(gF(), g, true) == gE());
}

TEST_CASE("poles are reported with the offending constants") {
    // inverse scaling blows the constants up
    Matrix<R> ginv(3, 3);
    for (int i = 0; i < 3; ++i) ginv.at(i, i) = R::variable().pow(-1);
    LieAlgebra<Rat> n3 = make(3, {{1, 2, 3}});
    try {
        psg_limit(n3, ginv, true);
        CHECK(false);
    } catch (const limit_does_not_exist_error& e) {
        REQUIRE(e.poles.size() == 1);
        CHECK(e.poles[0].i == 0);
        CHECK(e.poles[0].j == 1);
        CHECK(e.poles[0].k == 2);
        CHECK(e.poles[0].order == -1);
    }
}

TEST_CASE("fingerprints are base-change invariant") {
    std::mt19937_64 rng(2024);
    LieAlgebra<Rat> L = make(5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
    Fingerprint fp = fingerprint(L);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix<Rat> g = random_invertible(rng, 5);
        CHECK(fingerprint(apply_base_change(L, g)) == fp);
    }
}

TEST_CASE("obstruction battery flags the classified inequalities") {
    LieAlgebra<Rat> g7 = make(7, {{1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 7},
                                  {2, 3, 5}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7, -1}},
                              "g7");
    LieAlgebra<Rat> g9 = make(7, {{1, 2, 3}, {1, 3, 4}, {1, 3, 6}, {1, 5, 6}, {1, 6, 7},
                                  {2, 3, 5}, {2, 4, 6}, {3, 4, 7}},
                              "g9");
    REQUIRE(g7.jacobi_check().empty());
    REQUIRE(g9.jacobi_check().empty());
    Fingerprint f7 = fingerprint(g7), f9 = fingerprint(g9);
    CHECK(f7.h[5] == 15);
    CHECK(f9.h[5] == 13);
    auto rep = obstruction_battery(f7, f9);
    CHECK(rep.obstructed());
    CHECK(rep.has("h5"));

    LieAlgebra<Rat> gH = filiform7({{2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {2, 5, 7}}, "gH");
    LieAlgebra<Rat> g22 = make(
        7, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {2, 5, 7, -1}, {3, 4, 7}}, "g22");
    auto repS = obstruction_battery(fingerprint(gH), fingerprint(g22));
    CHECK(repS.has("s"));

    // equal fingerprints pass: a trivial degeneration is never excluded
    auto same = obstruction_battery(f7, f7);
    CHECK(!same.obstructed());
}

TEST_CASE("codimension-1 ideal property") {
    // the deformation family at parameter 1: [x2,x5] drops out
    LieAlgebra<Rat> gI1 = filiform7({{2, 3, 5}, {2, 4, 6}, {3, 4, 7}}, "gI(1)");
    REQUIRE(gI1.jacobi_check().empty());
    auto r1 = ideal_property_R(gI1);
    CHECK(r1.kind == IdealRKind::Witness);
    REQUIRE(r1.witness.has_value());
    // the witness is span{x2..x7}
    CHECK(r1.witness->dim() == 6);
    Vec<Rat> x1(7, Rat(0));
    x1[0] = Rat(1);
    CHECK(!r1.witness->contains(x1));

    auto rF = ideal_property_R(gF());
    CHECK(rF.kind == IdealRKind::Witness);

    auto rG = ideal_property_R(gG());
    CHECK(rG.kind == IdealRKind::None);

    LieAlgebra<Rat> g8 = make(7, {{1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 7},
                                  {2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {2, 5, 7}},
                              "g8");
    REQUIRE(g8.jacobi_check().empty());
    auto r8 = ideal_property_R(g8);
    CHECK(r8.kind == IdealRKind::None);

    auto rAb = ideal_property_R(abelian<Rat>(5));
    CHECK(rAb.kind == IdealRKind::Witness);
}

#include <doctest.h>

#include "lievar/fingerprint.hpp"

using namespace lievar;

namespace {

struct B {
    int i, j, k; // 1-based: [x_i, x_j] = coef * x_k
    long num = 1;
    long den = 1;
};

LieAlgebra<Rat> make(int n, std::initializer_list<B> bs, const char* label = "") {
    LieAlgebra<Rat> L(n, label);
    for (const auto& b : bs) L.add_c(b.i - 1, b.j - 1, b.k - 1, Rat(b.num, b.den));
    return L;
}

// chain [x1, xi] = x_{i+1} for 2 <= i <= 6 plus extra brackets
LieAlgebra<Rat> filiform7(std::initializer_list<B> extra, const char* label = "") {
    LieAlgebra<Rat> L(7, label);
    for (int i = 2; i <= 6; ++i) L.add_c(0, i - 1, i, Rat(1));
    for (const auto& b : extra) L.add_c(b.i - 1, b.j - 1, b.k - 1, Rat(b.num, b.den));
    return L;
}

} // namespace

TEST_CASE("d compose d vanishes on both modules") {
    LieAlgebra<Rat> gF = filiform7({{2, 3, 6}, {2, 4, 7}, {2, 5, 7}, {3, 4, 7, -1}});
    REQUIRE(gF.jacobi_check().empty());
    for (Module kind : {Module::Trivial, Module::Adjoint})
        for (int j = 0; j + 1 <= 7; ++j) {
            auto d1 = coboundary_matrix(gF, j + 1, kind);
            auto d0 = coboundary_matrix(gF, j, kind);
            CHECK((d1 * d0).is_zero());
        }
}

TEST_CASE("abelian trivial cohomology is binomial") {
    for (int n : {1, 3, 5}) {
        auto L = abelian<Rat>(n);
        auto p = cohomology_profile(L, Module::Trivial);
        for (int j = 0; j <= n; ++j) CHECK(p.h[static_cast<size_t>(j)] == p.cdim[static_cast<size_t>(j)]);
    }
    // derivations of the abelian algebra are everything
    auto a4 = abelian<Rat>(4);
    CHECK(derivation_dim(a4) == 16);
    CHECK(orbit_dim(a4) == 0);
}

TEST_CASE("splitting Heisenberg values") {
    LieAlgebra<Rat> n3 = make(3, {{1, 2, 3}});
    auto triv = cohomology_profile(n3, Module::Trivial);
    CHECK(triv.h == std::vector<int>{1, 2, 2, 1});
    auto adj = cohomology_profile(n3, Module::Adjoint);
    CHECK(adj.z[0] == 1); // z_0 = dim Z
    CHECK(orbit_dim(n3) == 9 - derivation_dim(n3));
}

TEST_CASE("seven-dimensional table rows computed exactly") {
    // top of the filiform chain with no extra bracket
    LieAlgebra<Rat> gA = filiform7({}, "gA");
    REQUIRE(gA.jacobi_check().empty());
    auto adjA = cohomology_profile(gA, Module::Adjoint);
    CHECK(adjA.h == std::vector<int>{1, 7, 17, 25, 23, 14, 7, 2});
    auto trivA = cohomology_profile(gA, Module::Trivial);
    CHECK(trivA.h == std::vector<int>{1, 2, 4, 6, 6, 4, 2, 1});
    CHECK(orbit_dim(gA) == 36);
    CHECK(derivation_dim(gA) == 13);
    // rank of the degree-0 adjoint differential is n - dim Z
    auto d0 = coboundary_matrix(gA, 0, Module::Adjoint);
    CHECK(rank(d0) == 6);

    LieAlgebra<Rat> g31 =
        make(7, {{1, 2, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 7}, {2, 3, 7}}, "g31");
    REQUIRE(g31.jacobi_check().empty());
    auto adj31 = cohomology_profile(g31, Module::Adjoint);
    CHECK(adj31.h == std::vector<int>{1, 8, 20, 28, 28, 21, 11, 3});
    auto triv31 = cohomology_profile(g31, Module::Trivial);
    CHECK(triv31.h == std::vector<int>{1, 3, 5, 7, 7, 5, 3, 1});
    CHECK(orbit_dim(g31) == 35);
    CHECK(g31.nilpotency_class() == 5);
    CHECK(g31.solvability_class() == 2);
}

TEST_CASE("spot cocycle dimensions from the classification") {
    LieAlgebra<Rat> gF = filiform7({{2, 3, 6}, {2, 4, 7}, {2, 5, 7}, {3, 4, 7, -1}}, "gF");
    CHECK(adjoint_cocycle_dim(gF, 3) == 114);

    LieAlgebra<Rat> gH = filiform7({{2, 3, 5}, {2, 3, 7}, {2, 4, 6}, {2, 5, 7}}, "gH");
    REQUIRE(gH.jacobi_check().empty());
    CHECK(adjoint_cocycle_dim(gH, 2) == 49);

    LieAlgebra<Rat> gC = filiform7({{2, 5, 7}, {3, 4, 7, -1}}, "gC");
    REQUIRE(gC.jacobi_check().empty());
    CHECK(adjoint_cocycle_dim(gC, 2) == 48);
}

TEST_CASE("profile identities") {
    LieAlgebra<Rat> gE = filiform7({{2, 3, 6}, {2, 3, 7}, {2, 4, 7}}, "gE");
    REQUIRE(gE.jacobi_check().empty());
    Fingerprint fp = fingerprint(gE);
    CHECK(fp.h == std::vector<int>{1, 5, 12, 19, 20, 14, 7, 2});
    CHECK(fp.b == std::vector<int>{1, 2, 4, 6, 6, 4, 2, 1});
    CHECK(fp.orbit_dim == 38);
    // z_0 = h_0 = dim Z
    CHECK(fp.z[0] == fp.h[0]);
    CHECK(fp.z[0] == fp.dim_center);
    // b_1 = n - dim [g,g]
    CHECK(fp.b[1] == fp.n - fp.dim_derived);
    // h_1 = dim Der - (n - dim Z)
    CHECK(fp.h[1] == fp.der_dim - (fp.n - fp.dim_center));
    // Euler characteristics vanish
    int eh = 0, eb = 0;
    for (int j = 0; j <= fp.n; ++j) {
        int s = (j % 2 == 0) ? 1 : -1;
        eh += s * fp.h[static_cast<size_t>(j)];
        eb += s * fp.b[static_cast<size_t>(j)];
    }
    CHECK(eh == 0);
    CHECK(eb == 0);
    // dimension formula for d: h_j = z_j - (dim C^{j-1} - z_{j-1})
    auto adj = cohomology_profile(gE, Module::Adjoint);
    CHECK(adj.h[0] == adj.z[0]);
    for (int j = 1; j <= fp.n; ++j)
        CHECK(adj.h[static_cast<size_t>(j)] ==
              adj.z[static_cast<size_t>(j)] - adj.cdim[static_cast<size_t>(j) - 1] +
                  adj.z[static_cast<size_t>(j) - 1]);
}

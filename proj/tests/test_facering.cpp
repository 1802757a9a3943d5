#include <doctest.h>

#include <random>

#include "torfacet/corpus.hpp"
#include "torfacet/facering.hpp"
#include "torfacet/koszul.hpp"

using namespace torfacet;

TEST_CASE("monomial_in_ideal") {
    FaceRing R = FaceRing::of(mgon(4));
    CHECK(monomial_in_ideal(R, {1, 0, 1, 0}));       // v1 v3
    CHECK_FALSE(monomial_in_ideal(R, {0, 0, 0, 0})); // the constant 1
    CHECK_FALSE(monomial_in_ideal(R, {5, 0, 0, 0})); // v1^5: square-free support {1}
    CHECK(monomial_in_ideal(R, {2, 0, 3, 0}));
}

TEST_CASE("induced homomorphism") {
    SUBCASE("identity map") {
        SimplicialComplex K = mgon(5);
        SimplicialMap id(K, K, {1, 2, 3, 4, 5});
        InducedHom h = induced_hom(id);
        for (int j = 1; j <= 5; ++j) CHECK(h.generator_images[j - 1] == Subset({j}));
        CHECK_FALSE(h.check());
    }
    SUBCASE("square onto an edge") {
        SimplicialMap phi(mgon(4), simplex(2), {1, 2, 1, 2});
        InducedHom h = induced_hom(phi);
        CHECK(h.generator_images[0] == Subset({1, 3}));  // φ*(w1) = v1 + v3
        CHECK(h.generator_images[1] == Subset({2, 4}));
        CHECK_FALSE(h.check());  // Δ¹ has no non-faces; vacuous
    }
    SUBCASE("collapse with a real ideal on the target") {
        // mgon(4) -> points(2): 1,3 -> 1 and 2,4 -> 2 is NOT simplicial ({1,2} -> {1,2} non-face)
        CHECK_THROWS_AS(SimplicialMap(mgon(4), points(2), {1, 2, 1, 2}), std::invalid_argument);
        // a valid map into a target with non-faces: square into square, rotation
        SimplicialMap rot(mgon(4), mgon(4), {2, 3, 4, 1});
        CHECK_FALSE(induced_hom(rot).check());
    }
}

TEST_CASE("induced homomorphism checker on random simplicial maps") {
    std::mt19937_64 rng(17);
    int built = 0;
    for (int trial = 0; trial < 400 && built < 40; ++trial) {
        SimplicialComplex K1 = random_complex(1 + trial % 5, rat_from_string("3/5"), 1000 + trial);
        SimplicialComplex K2 = random_complex(1 + (trial * 3) % 6, rat_from_string("3/5"), 2000 + trial);
        std::vector<int> vmap(K1.vertex_count());
        for (auto& v : vmap) v = 1 + rng() % K2.vertex_count();
        try {
            SimplicialMap phi(K1, K2, vmap);
            ++built;
            CHECK_FALSE(induced_hom(phi).check());  // the Proposition: never fails for valid maps
        } catch (const std::invalid_argument&) {
            // not simplicial; skip
        }
    }
    CHECK(built > 0);
}

TEST_CASE("functoriality of composition") {
    SimplicialComplex sq = mgon(4);
    SimplicialMap phi(sq, sq, {2, 3, 4, 1});   // rotation
    SimplicialMap psi(sq, simplex(2), {1, 2, 1, 2});
    std::vector<int> comp(4);
    for (int v = 1; v <= 4; ++v) comp[v - 1] = psi.apply(phi.apply(v));
    SimplicialMap psiphi(sq, simplex(2), comp);
    InducedHom direct = induced_hom(psiphi);
    // (ψ∘φ)*(w_j) = φ*(ψ*(w_j)): the fiber of j under ψ∘φ
    InducedHom hpsi = induced_hom(psi);
    InducedHom hphi = induced_hom(phi);
    for (int j = 1; j <= 2; ++j) {
        Subset composite;
        for (int l : hpsi.generator_images[j - 1].vertices())
            composite = composite | hphi.generator_images[l - 1];
        CHECK(composite == direct.generator_images[j - 1]);
    }
}

TEST_CASE("integer lsop criterion on the triangle boundary") {
    SimplicialComplex K = boundary_simplex(3);
    SUBCASE("t1 = v1 - v3, t2 = v2 - v3 passes") {
        CharMatrix L{2, {{1, 0, -1}, {0, 1, -1}}};
        LsopResult r = lsop_check_integer(K, L);
        CHECK(r.pass);
    }
    SUBCASE("(v1, v2) fails with witness {1,3}") {
        CharMatrix L{2, {{1, 0, 0}, {0, 1, 0}}};
        LsopResult r = lsop_check_integer(K, L);
        CHECK_FALSE(r.pass);
        CHECK(r.witness_facet == Subset({1, 3}));
        CHECK(r.witness_det == 0);
    }
    SUBCASE("single full simplex with identity passes") {
        CharMatrix L{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        CHECK(lsop_check_integer(simplex(3), L).pass);
    }
    SUBCASE("shape errors") {
        CharMatrix wrong_n{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        CHECK_THROWS_WITH_AS(lsop_check_integer(K, wrong_n).pass,
                             doctest::Contains("matrix shape mismatch"), std::invalid_argument);
        SimplicialComplex nonpure = SimplicialComplex::from_facets(3, {Subset({1, 2}), Subset({3})});
        CharMatrix L{2, {{1, 0, 0}, {0, 1, 0}}};
        CHECK_THROWS_WITH_AS(lsop_check_integer(nonpure, L).pass,
                             doctest::Contains("matrix shape mismatch"), std::invalid_argument);
    }
}

TEST_CASE("field lsop criterion") {
    SimplicialComplex K = boundary_simplex(3);
    // minors: {1,2} -> det -2, {1,3} -> det -1, {2,3} -> det 1
    CharMatrix L{2, {{1, 1, 1}, {1, -1, 0}}};
    SUBCASE("fails over F_2 at the det -2 facet, passes over Q") {
        LsopResult f2 = lsop_check_field(K, L, Coefficients::fp(2));
        CHECK_FALSE(f2.pass);
        CHECK(f2.witness_facet == Subset({1, 2}));
        CHECK(f2.witness_det == -2);
        CHECK(lsop_check_field(K, L, Coefficients::q()).pass);
        CHECK_FALSE(lsop_check_integer(K, L).pass);  // -2 is not a unit in Z
    }
    SUBCASE("the paper's hsop passes over F_3 and every other field") {
        CharMatrix good{2, {{1, 0, -1}, {0, 1, -1}}};
        CHECK(lsop_check_field(K, good, Coefficients::fp(3)).pass);
        CHECK(lsop_check_field(K, good, Coefficients::fp(2)).pass);
        CHECK(lsop_check_field(K, good, Coefficients::q()).pass);
    }
    SUBCASE("integers rejected") {
        CHECK_THROWS_AS(lsop_check_field(K, L, Coefficients::z()), std::invalid_argument);
    }
}

TEST_CASE("integer pass implies field pass") {
    std::mt19937_64 rng(23);
    int passed = 0;
    for (int trial = 0; trial < 300 && passed < 20; ++trial) {
        SimplicialComplex K = boundary_simplex(3 + trial % 2);
        int n = K.dim() + 1, m = K.vertex_count();
        CharMatrix L{n, {}};
        L.rows.assign(n, std::vector<long long>(m));
        for (auto& row : L.rows)
            for (auto& v : row) v = static_cast<long long>(rng() % 5) - 2;
        if (!lsop_check_integer(K, L).pass) continue;
        ++passed;
        for (std::int64_t p : {2, 3, 5, 7})
            CHECK(lsop_check_field(K, L, Coefficients::fp(p)).pass);
        CHECK(lsop_check_field(K, L, Coefficients::q()).pass);
    }
    CHECK(passed > 0);
}

TEST_CASE("reisner criterion") {
    SUBCASE("spheres are Cohen-Macaulay over Q") {
        for (const SimplicialComplex& K :
             {boundary_simplex(3), boundary_simplex(4), mgon(5), mgon(7), cross_polytope(3), cut_cube_dual()})
            CHECK(reisner_cm_test(K, Coefficients::q()).cohen_macaulay);
    }
    SUBCASE("two disjoint edges fail at (∅, 0)") {
        SimplicialComplex K = SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}});
        ReisnerResult r = reisner_cm_test(K, Coefficients::q());
        CHECK_FALSE(r.cohen_macaulay);
        CHECK(r.witness_sigma == Subset());
        CHECK(r.witness_degree == 0);
    }
    SUBCASE("RP^2: CM over Q, fails over F_2 at (∅, 1)") {
        SimplicialComplex K = SimplicialComplex::from_facets(
            6, {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}});
        CHECK(reisner_cm_test(K, Coefficients::q()).cohen_macaulay);
        ReisnerResult f2 = reisner_cm_test(K, Coefficients::fp(2));
        CHECK_FALSE(f2.cohen_macaulay);
        CHECK(f2.witness_sigma == Subset());
        CHECK(f2.witness_degree == 1);
    }
}

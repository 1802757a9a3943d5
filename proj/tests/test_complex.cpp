#include <doctest.h>

#include <set>

#include "torfacet/complex.hpp"
#include "torfacet/corpus.hpp"
#include "torfacet/homology.hpp"
#include "torfacet/koszul.hpp"
#include "torfacet/serialize.hpp"

using namespace torfacet;

TEST_CASE("is_face basics") {
    SimplicialComplex K = boundary_simplex(3);
    CHECK(K.is_face(Subset({1, 2})));
    CHECK_FALSE(K.is_face(Subset({1, 2, 3})));  // the unique non-face of ∂Δ²
    CHECK(K.is_face(Subset()));
    CHECK_THROWS_AS((void)K.is_face(Subset({4})), std::invalid_argument);
}

TEST_CASE("full subcomplex of the square") {
    SimplicialComplex K = mgon(4);
    auto r = full_subcomplex(K, Subset({1, 3}));
    CHECK(r.complex.vertex_count() == 2);
    CHECK(r.complex == points(2));
    CHECK(r.global_vertex == std::vector<int>{1, 3});

    auto empty = full_subcomplex(K, Subset());
    CHECK(empty.complex.vertex_count() == 0);
    CHECK(empty.complex.dim() == -1);

    auto all = full_subcomplex(K, Subset::full(4));
    CHECK(all.complex == K);
}

TEST_CASE("full subcomplex agrees with brute force for m <= 6") {
    for (int seed = 0; seed < 8; ++seed) {
        SimplicialComplex K = random_complex(6, rat_from_string("1/2"), 100 + seed);
        for (Subset omega : SubsetRange(6)) {
            SimplicialComplex R = full_subcomplex_global(K, omega);
            for (Subset s : SubsetRange(6))
                CHECK(R.is_face(s) == (K.is_face(s) && s.subset_of(omega)));
        }
    }
}

TEST_CASE("link and star") {
    SimplicialComplex K = boundary_simplex(3);
    CHECK(link(K, Subset()) == K);
    SimplicialComplex lk = link(K, Subset({1}));
    CHECK(lk.facets() == std::vector<Subset>{Subset({2}), Subset({3})});
    CHECK_THROWS_AS(link(mgon(4), Subset({1, 3})), std::invalid_argument);

    // star σ = σ̄ * link σ, checked via face sets on random complexes
    for (int seed = 0; seed < 6; ++seed) {
        SimplicialComplex R = random_complex(6, rat_from_string("1/2"), 200 + seed);
        for (Subset sigma : R.all_faces()) {
            SimplicialComplex st = star(R, sigma);
            SimplicialComplex lk2 = link(R, sigma);
            for (Subset tau : SubsetRange(6)) {
                bool in_star = st.is_face(tau);
                Subset rest = tau - sigma;
                bool in_join = lk2.is_face(rest) && R.is_face(sigma | tau);
                CHECK(in_star == in_join);
            }
        }
    }
}

TEST_CASE("star of a vertex is the cone over its link") {
    SimplicialComplex K = mgon(5);
    for (int v = 1; v <= 5; ++v) {
        SimplicialComplex st = star(K, Subset({v}));
        CHECK(st.cone_apex().has_value());
        auto groups = reduced_homology(st, Coefficients::q());
        CHECK(groups.empty());  // cones are acyclic
    }
}

TEST_CASE("join of three S^0 is the octahedron") {
    SimplicialComplex oct = join(join(boundary_simplex(2), boundary_simplex(2)), boundary_simplex(2));
    CHECK(oct == cross_polytope(3));
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.facets().size() == 8);
    CHECK(oct.dim() == 2);
}

TEST_CASE("join identities") {
    SimplicialComplex K = mgon(4);
    SimplicialComplex empty0(SimplicialComplex::from_facets(0, {}));
    CHECK(join(K, empty0) == K);

    // cone = Δ⁰ * K is acyclic
    SimplicialComplex cone = join(simplex(1), K);
    CHECK(reduced_homology(cone, Coefficients::q()).empty());
    CHECK(reduced_homology(cone, Coefficients::z()).empty());
}

TEST_CASE("stellar subdivision at a maximal simplex replaces one facet by d+1") {
    SimplicialComplex K = simplex(3);  // single facet {1,2,3}
    SimplicialComplex sub = stellar_subdivision(K, Subset({1, 2, 3}));
    CHECK(sub.vertex_count() == 4);
    CHECK(sub.facets().size() == 3);
    CHECK_THROWS_AS(stellar_subdivision(K, Subset()), std::invalid_argument);
    CHECK_THROWS_AS(stellar_subdivision(mgon(4), Subset({1, 3})), std::invalid_argument);
}

TEST_CASE("octahedron subdivided at two disjoint edges is the cut-cube dual") {
    SimplicialComplex oct = cross_polytope(3);
    // e = {1,3}, e' = {2,5}: disjoint edges whose union contains the non-face {1,2}
    Subset e({1, 3}), e2({2, 5});
    REQUIRE(oct.is_face(e));
    REQUIRE(oct.is_face(e2));
    REQUIRE_FALSE(oct.is_face(e | e2));
    SimplicialComplex sub = stellar_subdivision(stellar_subdivision(oct, e), e2);
    CHECK(sub.vertex_count() == 8);
    CHECK(sub.facets().size() == 12);
    CHECK(find_isomorphism(sub, cut_cube_dual()).has_value());
}

TEST_CASE("stellar subdivision preserves reduced homology") {
    for (int seed = 0; seed < 10; ++seed) {
        SimplicialComplex K = random_complex(5, rat_from_string("3/5"), 300 + seed);
        auto faces = K.all_faces();
        if (faces.size() <= 1) continue;
        Subset sigma = faces[1 + seed % (faces.size() - 1)];
        SimplicialComplex sub = stellar_subdivision(K, sigma);
        CHECK(sub.vertex_count() == K.vertex_count() + 1);
        CHECK(reduced_homology(K, Coefficients::z()) == reduced_homology(sub, Coefficients::z()));
    }
}

TEST_CASE("dual complex") {
    CHECK(dual_complex(boundary_simplex(4)).dim() == -1);  // only the empty face
    CHECK(dual_complex(boundary_simplex(4)).vertex_count() == 4);

    // m points: dual is the (m-3)-skeleton of Δ^{m-1}
    for (int m = 3; m <= 6; ++m) {
        SimplicialComplex dual = dual_complex(points(m));
        CHECK(dual.dim() == m - 3);
        for (Subset f : dual.facets()) CHECK(f.size() == m - 2);
    }

    CHECK_THROWS_AS(dual_complex(simplex(3)), std::invalid_argument);

    for (int seed = 0; seed < 10; ++seed) {
        SimplicialComplex K = random_complex(6, rat_from_string("2/5"), 400 + seed);
        if (minimal_nonfaces(K).empty()) continue;
        CHECK(dual_complex(dual_complex(K)) == K);
    }
}

TEST_CASE("generators") {
    CHECK(mgon(4).facets() == std::vector<Subset>{Subset({1, 2}), Subset({1, 4}), Subset({2, 3}), Subset({3, 4})});
    CHECK(boundary_simplex(3).facets() == std::vector<Subset>{Subset({1, 2}), Subset({1, 3}), Subset({2, 3})});
    CHECK_THROWS_AS(mgon(2), std::invalid_argument);
    CHECK_THROWS_AS(simplex(0), std::invalid_argument);

    std::vector<Subset> expected = {{1, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6},
                                    {7, 8}, {3, 7}, {6, 7}, {2, 8}, {4, 8}};
    auto got = minimal_nonfaces(cut_cube_dual());
    CHECK(std::set<Subset>(got.begin(), got.end()) == std::set<Subset>(expected.begin(), expected.end()));
}

TEST_CASE("minimal nonfaces") {
    auto nf = minimal_nonfaces(mgon(4));
    CHECK(nf == std::vector<Subset>{Subset({1, 3}), Subset({2, 4})});
    CHECK(minimal_nonfaces(simplex(4)).empty());

    auto fig1 = minimal_nonfaces(SimplicialComplex::from_minimal_nonfaces(
        5, {{1, 5}, {3, 4}, {1, 2, 3}, {2, 4, 5}}));
    CHECK(fig1 == std::vector<Subset>{Subset({1, 5}), Subset({3, 4}), Subset({1, 2, 3}), Subset({2, 4, 5})});
}

TEST_CASE("nonfaces and facets determine each other") {
    for (int seed = 0; seed < 12; ++seed) {
        SimplicialComplex K = random_complex(6, rat_from_string("1/2"), 500 + seed);
        CHECK(SimplicialComplex::from_minimal_nonfaces(6, minimal_nonfaces(K)) == K);
    }
}

TEST_CASE("ghost vertices are representable") {
    SimplicialComplex K = SimplicialComplex::from_facets(3, {Subset({1})});
    CHECK(K.is_ghost_vertex(2));
    CHECK(K.is_ghost_vertex(3));
    CHECK_FALSE(K.is_ghost_vertex(1));
    CHECK(K.is_face(Subset()));
}

TEST_CASE("simplicial map validation") {
    SimplicialComplex sq = mgon(4);
    SimplicialComplex edge = simplex(2);
    // collapse 1,3 -> 1 and 2,4 -> 2
    SimplicialMap phi(sq, edge, {1, 2, 1, 2});
    CHECK(phi.fiber(1) == Subset({1, 3}));
    CHECK(phi.apply(Subset({1, 2})) == Subset({1, 2}));
    // mapping a non-edge {1,3} onto an edge is impossible: {1,2}->{1,1}={1} fine,
    // but sending adjacent vertices to a non-face must throw
    CHECK_THROWS_AS(SimplicialMap(edge, points(2), {1, 2}), std::invalid_argument);
}

TEST_CASE("complex JSON round trip is byte stable") {
    for (const CorpusEntry& e : corpus()) {
        std::string once = canonical_dump(complex_to_json(e.complex));
        SimplicialComplex parsed = complex_from_json(Json::parse(once));
        CHECK(parsed == e.complex);
        CHECK(canonical_dump(complex_to_json(parsed)) == once);
    }
    // facets emitted in lex order regardless of input order
    SimplicialComplex K = SimplicialComplex::from_facets(4, {Subset({3, 4}), Subset({1, 2})});
    CHECK(canonical_dump(complex_to_json(K)) == R"({"m":4,"facets":[[1,2],[3,4]]})");
}

TEST_CASE("the empty complex is a first-class value") {
    SimplicialComplex empty = SimplicialComplex::from_facets(0, {});
    CHECK(empty.dim() == -1);
    CHECK(empty.is_face(Subset()));
    auto groups = reduced_homology(empty, Coefficients::q());
    CHECK(groups.at(-1).rank == 1);
}

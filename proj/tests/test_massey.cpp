#include <doctest.h>

#include "torfacet/corpus.hpp"
#include "torfacet/massey.hpp"

using namespace torfacet;

namespace {
RatCtx ctx;
}

TEST_CASE("cut cube demo: the paper's nontrivial triple product") {
    MasseyProblem p = massey_demo_p3();
    MasseyResult r = triple_massey(p);

    // a1 a2 = 0 on the nose, so e = 0
    CHECK(r.e.zero());
    // f solves df = a2 a3 = v3v5 u4u6
    RatKoszulElement df = differential(ctx, p.K, r.f);
    RatKoszulElement want = chain_product(ctx, p.K, p.a2, p.a3);
    CHECK_FALSE(want.zero());
    for (auto& [mn, c] : want.terms) df.add_term(ctx, mn, ctx.neg(c));
    CHECK(df.zero());

    // the representative class equals [v1v5 u2u3u4u6] up to indeterminacy
    CHECK_FALSE(r.trivial);
    CHECK(is_cocycle(ctx, p.K, r.representative));
    CHECK(r.representative.bidegree() == std::pair<int, int>{4, 12});

    // v5 u3u4u6 is one valid f; check it satisfies the same equation
    RatKoszulElement paper_f;
    paper_f.add_term(ctx, {Subset({3, 4, 6}), Subset({5})}, Rat(1));
    RatKoszulElement check_df = differential(ctx, p.K, paper_f);
    for (auto& [mn, c] : want.terms) check_df.add_term(ctx, mn, ctx.neg(c));
    CHECK(check_df.zero());

    // and the paper's representative is in the same class modulo indeterminacy:
    // swap in paper_f and the result must stay nontrivial with the same verdict
    RatKoszulElement paper_w = chain_product(ctx, p.K, p.a1, paper_f);
    CHECK(paper_w.terms.size() == 1);
    CHECK(paper_w.terms.begin()->first.str() == "v1v5 u2u3u4u6");
}

TEST_CASE("zero middle class gives the trivial product") {
    MasseyProblem p{mgon(4), {}, {}, {}};
    p.a1.add_term(ctx, {Subset({1}), Subset({3})}, Rat(1));  // v3 u1, a (-1,4) cocycle
    p.a3 = p.a1;
    // a2 stays zero
    MasseyResult r = triple_massey(p);
    CHECK(r.e.zero());
    CHECK(r.f.zero());
    CHECK(r.representative.zero());
    CHECK(r.trivial);
}

TEST_CASE("undefined product reports the obstructing pair") {
    // square boundary: α1 α2 generates H^{-2,8}, so ⟨α1, α2, α3⟩ is undefined
    SimplicialComplex K = mgon(4);
    MasseyProblem p{K, {}, {}, {}};
    p.a1.add_term(ctx, {Subset({1}), Subset({3})}, Rat(1));  // v3 u1
    p.a2.add_term(ctx, {Subset({2}), Subset({4})}, Rat(1));  // v4 u2
    p.a3 = p.a1;
    CHECK_THROWS_AS(triple_massey(p), MasseyUndefined);
    try {
        triple_massey(p);
    } catch (const MasseyUndefined& e) {
        CHECK(e.obstruction() == "a1*a2");
    }
    // and with the roles swapped the second pair obstructs
    MasseyProblem q{K, {}, {}, {}};
    q.a1.add_term(ctx, {Subset({1}), Subset({3})}, Rat(1));
    q.a2 = q.a1;  // a1 a2 = v3v3... = 0 (shared v), defined
    q.a3.add_term(ctx, {Subset({2}), Subset({4})}, Rat(1));
    try {
        triple_massey(q);
        CHECK(false);
    } catch (const MasseyUndefined& e) {
        CHECK(e.obstruction() == "a2*a3");
    }
}

TEST_CASE("non-cocycle input rejected") {
    MasseyProblem p{mgon(4), {}, {}, {}};
    p.a1.add_term(ctx, {Subset({1}), Subset()}, Rat(1));  // u1: du1 = v1 ≠ 0
    CHECK_THROWS_AS(triple_massey(p), std::invalid_argument);
}

TEST_CASE("representative lands in the same coset under a different pivot order") {
    MasseyProblem p = massey_demo_p3();
    MasseyResult a = triple_massey(p);
    MasseyResult b = triple_massey(p, {.reverse_pivots = true});
    CHECK(a.trivial == b.trivial);
    // difference of representatives lies in indeterminacy + coboundaries: a
    // triple product with representative w and the SAME indeterminacy basis
    // must see (w_a - w_b) as a zero coset
    RatKoszulElement diff = a.representative;
    for (auto& [mn, c] : b.representative.terms) diff.add_term(ctx, mn, ctx.neg(c));
    KoszulWorkspace<RatCtx> ws(p.K, ctx);
    if (!diff.zero()) {
        // reduce against indeterminacy: diff must be a combination of the
        // indeterminacy basis classes modulo coboundaries; verify by checking
        // that appending diff to the indeterminacy span does not increase its rank
        auto coords_of = [&](const RatKoszulElement& x) {
            auto c = ws.class_coords(x);
            REQUIRE(c);
            std::vector<Rat> flat;
            for (auto& [k, v] : *c) flat.insert(flat.end(), v.begin(), v.end());
            return flat;
        };
        // all elements live in the same total degree; the coordinate layout is
        // identical only when every element passes through the same component
        // set, so embed each into the full H^D coordinate system
        int D = a.representative.bidegree() ? a.representative.bidegree()->second -
                                                  a.representative.bidegree()->first
                                            : 0;
        auto full_coords = [&](const RatKoszulElement& x) {
            std::vector<Rat> flat;
            for (Subset omega : SubsetRange(p.K.vertex_count())) {
                int i = 2 * omega.size() - D;
                if (i < 0 || i > omega.size()) continue;
                long width = static_cast<long>(ws.block_classes(omega, i).size());
                if (width == 0) continue;
                RatKoszulElement component;
                for (auto& [mn, c] : x.terms)
                    if (mn.multidegree() == omega && mn.i() == i) component.add_term(ctx, mn, c);
                auto cc = ws.class_coords(component);
                REQUIRE(cc);
                std::vector<Rat> block(width, Rat(0));
                auto it = cc->find({omega, i});
                if (it != cc->end()) block = it->second;
                flat.insert(flat.end(), block.begin(), block.end());
            }
            return flat;
        };
        (void)coords_of;
        std::vector<std::vector<Rat>> echelon;
        std::vector<std::size_t> pivots;
        auto reduce = [&](std::vector<Rat> v, bool insert) {
            for (std::size_t i = 0; i < echelon.size(); ++i)
                if (v[pivots[i]] != 0) {
                    Rat f = v[pivots[i]];
                    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon[i][c];
                }
            std::size_t piv = 0;
            while (piv < v.size() && v[piv] == 0) ++piv;
            if (piv == v.size()) return true;  // reduced to zero
            if (insert) {
                Rat inv = 1 / v[piv];
                for (auto& c : v) c *= inv;
                echelon.push_back(std::move(v));
                pivots.push_back(piv);
            }
            return false;
        };
        for (auto& e : a.indeterminacy_basis) reduce(full_coords(e), true);
        CHECK(reduce(full_coords(diff), false));
    }
}

TEST_CASE("ntmas construction") {
    SUBCASE("three S^0 factors recover the cut cube dual") {
        SimplicialComplex s0 = boundary_simplex(2);
        NtmasComplex nt = build_ntmas_complex(s0, s0, s0, Subset({1}), Subset({1}), Subset({2}),
                                              Subset({1}));
        CHECK(nt.complex.vertex_count() == 8);
        CHECK(find_isomorphism(nt.complex, cut_cube_dual()).has_value());
        NtmasClasses cls = ntmas_classes(nt);
        // classes in bidegree (-1, 4)
        CHECK(cls.a1.bidegree() == std::pair<int, int>{1, 4});
        CHECK(cls.a2.bidegree() == std::pair<int, int>{1, 4});
        CHECK(cls.a3.bidegree() == std::pair<int, int>{1, 4});
        MasseyResult r = triple_massey({nt.complex, cls.a1, cls.a2, cls.a3});
        CHECK_FALSE(r.trivial);
    }
    SUBCASE("precondition violations") {
        SimplicialComplex s0 = boundary_simplex(2);
        CHECK_THROWS_AS(build_ntmas_complex(s0, s0, s0, Subset({1}), Subset({1}), Subset({1}),
                                            Subset({1})),
                        std::invalid_argument);  // σ2' = σ2''
        CHECK_THROWS_AS(build_ntmas_complex(s0, s0, s0, Subset({1, 2}), Subset({1}), Subset({2}),
                                            Subset({1})),
                        std::invalid_argument);  // σ1 not a facet
    }
    SUBCASE("mixed factors: classes exist in the predicted bidegrees") {
        SimplicialComplex s1 = boundary_simplex(3);  // S^1, m=3, n=2
        SimplicialComplex s0 = boundary_simplex(2);
        NtmasComplex nt = build_ntmas_complex(s1, s0, s0, Subset({1, 2}), Subset({1}), Subset({2}),
                                              Subset({1}));
        CHECK(nt.complex.vertex_count() == 9);
        NtmasClasses cls = ntmas_classes(nt);
        // α1 in (n1-m1, 2m1) = (-1, 6); α2, α3 in (-1, 4)
        CHECK(cls.a1.bidegree() == std::pair<int, int>{1, 6});
        CHECK(cls.a2.bidegree() == std::pair<int, int>{1, 4});
        CHECK(cls.a3.bidegree() == std::pair<int, int>{1, 4});
        MasseyResult r = triple_massey({nt.complex, cls.a1, cls.a2, cls.a3});
        CHECK_FALSE(r.trivial);
    }
}

TEST_CASE("polygon boundaries have only trivial definable triple products") {
    SimplicialComplex K = mgon(5);
    KoszulWorkspace<RatCtx> ws(K, ctx);
    // basis classes in every positive total degree
    std::vector<RatKoszulElement> classes;
    for (int deg = 1; deg <= 2 * 5; ++deg)
        for (auto& c : ws.cohomology_basis_total_degree(deg)) classes.push_back(c);
    int defined = 0, examined = 0;
    for (auto& a1 : classes)
        for (auto& a2 : classes)
            for (auto& a3 : classes) {
                ++examined;
                try {
                    MasseyResult r = triple_massey({K, a1, a2, a3});
                    ++defined;
                    CHECK(r.trivial);
                } catch (const MasseyUndefined&) {
                }
            }
    CHECK(examined > 0);
    CHECK(defined > 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affinemod/family.hpp"
#include "affinemod/grading.hpp"
#include "affinemod/poly_parse.hpp"
#include "support/gen.hpp"

using namespace affinemod;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

FamilyParams default_family() {
    FamilyParams p;
    p.k = 3;
    p.l = 2;
    p.exponents = {2};
    p.tails = {"0"};
    return p;
}

} // namespace

TEST_CASE("convention weight synthesis") {
    ConventionWeights cw = convention51_weights(3, 2, {2});
    const WeightFunction& w = cw.weights;
    const RingPtr& r = w.ring();
    auto of = [&](const std::string& n) {
        return w.of_variable(r->index_checked(n));
    };
    CHECK(of("y") == WeightVector({2, 0}));
    CHECK(of("z") == WeightVector({3, 0}));
    CHECK(of("y") * 3 == of("z") * 2);
    SUBCASE("with e = 60 the arithmetic matches the worked values") {
        ConventionWeights cw60 = convention51_weights(3, 2, {2}, {}, 10, 60LL);
        auto of60 = [&](const std::string& n) {
            return cw60.weights.of_variable(cw60.weights.ring()->index_checked(n));
        };
        CHECK(of60("x") == WeightVector({-60, 1}));
        CHECK(of60("v1") == WeightVector({66, -1}));
        CHECK(of60("v1") + of60("x") == of60("y") * 3);
        CHECK(of60("v2") == WeightVector({192, -3}));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(convention51_weights(4, 2, {2}), PreconditionError);
        CHECK_THROWS_AS(convention51_weights(2, 3, {2}), PreconditionError);
    }
}

TEST_CASE("graded ideal of the tower") {
    SUBCASE("a tail drops out of the graded system") {
        FamilyParams p = default_family();
        p.tails = {"y"};
        BuiltFamily fam = build_family(p);
        RingPtr r = fam.xblock.ring();
        Ideal expected(r, {P(r, "x*v1 - y^3 + z^2"), P(r, "x*v2 - v1^2")});
        CHECK(ideal_equal(fam.xhat.graded, expected));
        // Every graded generator is weight-homogeneous.
        for (const auto& g : fam.xhat.graded.generators())
            CHECK(is_weight_homogeneous(g, fam.xhat.weights));
    }
    SUBCASE("an already homogeneous relation is its own graded system") {
        ConventionWeights cw = convention51_weights(3, 2, {2});
        RingPtr r = convention_ring(2);
        PresentedAlgebra pres(r, Ideal(r, {P(r, "x*v1 - y^3 + z^2")}));
        GradedPresentation gp = graded_ideal(pres, cw.weights.transported(r));
        CHECK(ideal_equal(gp.graded, Ideal(r, {P(r, "x*v1 - y^3 + z^2")})));
    }
    SUBCASE("extra root blocks degenerate to their coordinates") {
        FamilyParams p = default_family();
        FamilyBlock blk;
        blk.root_offset = Rational(1);
        blk.exponents = {2};
        blk.tails = {"y^3 - z^2", "y"};
        p.blocks = {blk};
        BuiltFamily fam = build_family(p);
        GradedPresentation full = graded_ideal(fam.xprime, fam.weights.weights);
        RingPtr r = fam.xprime.ring();
        Ideal expected(r, {P(r, "x*v1 - y^3 + z^2"), P(r, "x*v2 - v1^2"),
                           P(r, "u1_1"), P(r, "u1_2")});
        CHECK(ideal_equal(full.graded, expected));
    }
}

TEST_CASE("gr map") {
    BuiltFamily fam = build_family(default_family());
    RingPtr r = fam.xblock.ring();
    SUBCASE("variables are their own minimal representatives") {
        CHECK(gr_element(P(r, "y"), fam.xhat) == P(r, "y"));
    }
    SUBCASE("y^3 - z^2 and x*v1 share a graded class") {
        Polynomial g = gr_element(P(r, "y^3 - z^2"), fam.xhat);
        CHECK(g == P(r, "x*v1"));
        // The oracle behind the expectation: the difference of the two
        // candidate representatives lies in the graded ideal and neither
        // principal component does.
        CHECK(membership(P(r, "y^3 - z^2") - P(r, "x*v1"), fam.xhat.graded));
        CHECK(!membership(P(r, "y^3 - z^2"), fam.xhat.graded));
        CHECK(!membership(P(r, "x*v1"), fam.xhat.graded));
    }
    SUBCASE("x*v2 equals the square of v1 in the graded algebra") {
        Polynomial g = gr_element(P(r, "x*v2"), fam.xhat);
        CHECK(membership(g - P(r, "v1^2"), fam.xhat.graded));
        CHECK(membership(P(r, "x*v2") - P(r, "v1^2"), fam.xhat.graded));
    }
    SUBCASE("zero elements are rejected") {
        CHECK_THROWS_AS(gr_element(P(r, "x*v1 - y^3 + z^2"), fam.xhat),
                        PreconditionError);
    }
}

TEST_CASE("graded generators certify as a regular sequence") {
    BuiltFamily fam = build_family(default_family());
    CHECK(fam.xhat.status == CertStatus::RegularSequenceCertified);
}

TEST_CASE("gr is multiplicative on the certified tower") {
    BuiltFamily fam = build_family(default_family());
    RingPtr r = fam.xblock.ring();
    std::mt19937_64 rng(34343);
    int checked = 0;
    for (int trial = 0; trial < 600 && checked < 200; ++trial) {
        Polynomial a = testgen::random_polynomial(rng, r, 3, 2, 4);
        Polynomial b = testgen::random_polynomial(rng, r, 3, 2, 4);
        if (fam.xblock.is_zero_element(a) || fam.xblock.is_zero_element(b)) continue;
        Polynomial ga = gr_element(a, fam.xhat);
        Polynomial gb = gr_element(b, fam.xhat);
        Polynomial gab = gr_element(a * b, fam.xhat);
        CHECK(weight_degree(gab, fam.xhat.weights)
              == weight_degree(ga, fam.xhat.weights) + weight_degree(gb, fam.xhat.weights));
        CHECK(membership(gab - ga * gb, fam.xhat.graded));
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("weight degree of algebra elements is additive") {
    BuiltFamily fam = build_family(default_family());
    RingPtr r = fam.xblock.ring();
    std::mt19937_64 rng(35353);
    int checked = 0;
    for (int trial = 0; trial < 600 && checked < 200; ++trial) {
        Polynomial a = testgen::random_polynomial(rng, r, 3, 2, 4);
        Polynomial b = testgen::random_polynomial(rng, r, 3, 2, 4);
        if (fam.xblock.is_zero_element(a) || fam.xblock.is_zero_element(b)) continue;
        WeightVector da = algebra_weight_degree(a, fam.xhat);
        WeightVector db = algebra_weight_degree(b, fam.xhat);
        WeightVector dab = algebra_weight_degree(a * b, fam.xhat);
        CHECK(dab == da + db);
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("graded ideal does not depend on the admissible magnitude") {
    FamilyParams p = default_family();
    p.tails = {"y"};
    BuiltFamily fam = build_family(p);
    ConventionWeights w60 = convention51_weights(3, 2, {2}, {}, 10, 60LL);
    ConventionWeights w777 = convention51_weights(3, 2, {2}, {}, 10, 777LL);
    RingPtr r = fam.xblock.ring();
    GradedPresentation g1 = graded_ideal(fam.xblock, w60.weights.transported(r));
    GradedPresentation g2 = graded_ideal(fam.xblock, w777.weights.transported(r));
    CHECK(ideal_equal(g1.graded, g2.graded));
}

TEST_CASE("candidate enumeration") {
    BuiltFamily fam = build_family(default_family());
    auto cand = homogeneous_irreducible_candidates(fam.xhat, 3, 2, 2);
    REQUIRE(cand.size() == 6); // x, y, z, v1, v2 and the pencil
    int pencils = 0;
    for (const auto& c : cand)
        if (c.kind == Candidate::Kind::PencilYZ) ++pencils;
    CHECK(pencils == 1);
    SUBCASE("non-family presentations are rejected") {
        RingPtr r2 = Ring::make({"a", "b"});
        GradedPresentation fake;
        fake.source = PresentedAlgebra::free_algebra(r2);
        CHECK_THROWS_AS(homogeneous_irreducible_candidates(fake, 3, 2, 2),
                        PreconditionError);
    }
}

TEST_CASE("algebraic dependence test") {
    RingPtr r = Ring::make({"x", "y"});
    GradedPresentation free_gp;
    free_gp.source = PresentedAlgebra::free_algebra(r);
    free_gp.graded = Ideal(r, {});
    SUBCASE("y and y^2 are dependent") {
        CHECK(algebraically_dependent(free_gp, P(r, "y"), P(r, "y^2")));
    }
    SUBCASE("x and y are independent") {
        CHECK(!algebraically_dependent(free_gp, P(r, "x"), P(r, "y")));
    }
    SUBCASE("tower pairs used by the case analysis are independent") {
        BuiltFamily fam = build_family(default_family());
        RingPtr fr = fam.xblock.ring();
        CHECK(!algebraically_dependent(fam.xhat, P(fr, "v1"), P(fr, "v2")));
        CHECK(!algebraically_dependent(fam.xhat, P(fr, "y"), P(fr, "v1")));
    }
}

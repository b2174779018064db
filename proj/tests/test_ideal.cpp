#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affinemod/algebra.hpp"
#include "affinemod/poly_parse.hpp"
#include "support/gen.hpp"

using namespace affinemod;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(r, g));
    return Ideal(r, std::move(ps));
}

bool contains_poly(const std::vector<Polynomial>& basis, const Polynomial& p) {
    for (const auto& b : basis)
        if (b == p) return true;
    return false;
}

// Evaluation oracle for non-membership: a point where all generators
// vanish but the candidate does not certainly proves p is not in I.
Rational eval(const Polynomial& p, const std::vector<Rational>& point) {
    Rational acc(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (const auto& [v, e] : m.entries())
            for (int i = 0; i < e; ++i) t *= point[static_cast<std::size_t>(v)];
        acc += t;
    }
    return acc;
}

} // namespace

TEST_CASE("groebner examples") {
    RingPtr r3 = Ring::make({"x", "y", "z"});
    SUBCASE("single generator is its own basis") {
        Ideal id = I(r3, {"x*z - y^2 + y"});
        auto basis = groebner_basis(id, MonomialOrder::lex(r3));
        REQUIRE(basis.size() == 1);
        // Monic normalization under lex (leading monomial xz).
        CHECK(basis[0] == P(r3, "x*z - y^2 + y"));
    }
    SUBCASE("already a basis") {
        RingPtr r = Ring::make({"x", "y"});
        auto basis = groebner_basis(I(r, {"x", "y^2 - y"}), MonomialOrder::lex(r));
        REQUIRE(basis.size() == 2);
        CHECK(contains_poly(basis, P(r, "x")));
        CHECK(contains_poly(basis, P(r, "y^2 - y")));
    }
    SUBCASE("one S-polynomial, frozen hand computation") {
        // S(xy-1, y^2-1) = x - y reduces to itself; then xy-1 reduces away.
        RingPtr r = Ring::make({"x", "y"});
        auto basis = groebner_basis(I(r, {"x*y - 1", "y^2 - 1"}), MonomialOrder::lex(r));
        REQUIRE(basis.size() == 2);
        CHECK(contains_poly(basis, P(r, "y^2 - 1")));
        CHECK(contains_poly(basis, P(r, "x - y")));
    }
}

TEST_CASE("normal form examples") {
    SUBCASE("single reduction") {
        RingPtr r = Ring::make({"x", "y", "z"});
        Ideal id = I(r, {"x*z - y^2 + y"});
        CHECK(normal_form(P(r, "x*z"), id, MonomialOrder::lex(r)) == P(r, "y^2 - y"));
    }
    SUBCASE("single-step division under lex y>x>u") {
        RingPtr r = Ring::make({"y", "x", "u"});
        Ideal id = I(r, {"x*u - y"});
        CHECK(normal_form(P(r, "y"), id, MonomialOrder::lex(r)) == P(r, "x*u"));
    }
    SUBCASE("generator reduces to zero") {
        RingPtr r = Ring::make({"x", "y"});
        Ideal id = I(r, {"x^2*y - x + 1"});
        CHECK(normal_form(P(r, "x^2*y - x + 1"), id, MonomialOrder::lex(r)).is_zero());
    }
}

TEST_CASE("membership") {
    RingPtr r = Ring::make({"x", "y"});
    Ideal id = I(r, {"x", "y^2 - y"});
    CHECK(membership(P(r, "y^2 - y"), id));
    SUBCASE("refutation with an evaluation witness") {
        Polynomial cand = P(r, "y");
        std::vector<Rational> witness{Rational(0), Rational(1)};
        for (const auto& g : id.generators())
            REQUIRE(eval(g, witness) == 0);
        REQUIRE(eval(cand, witness) != 0);
        CHECK(!membership(cand, id));
    }
    SUBCASE("certificate recombines to the member") {
        Polynomial p = P(r, "x*y^3 + y^2 - y");
        auto cert = membership_certificate(p, id);
        REQUIRE(cert.has_value());
        Polynomial rebuilt(r);
        for (std::size_t i = 0; i < cert->basis.size(); ++i)
            rebuilt = rebuilt + cert->cofactors[i] * cert->basis[i];
        CHECK(rebuilt == p);
    }
}

TEST_CASE("ideal equality and unit test") {
    RingPtr r = Ring::make({"x", "y"});
    CHECK(ideal_equal(I(r, {"x", "y^2 - y"}), I(r, {"x", "y^2 - y", "x*y"})));
    CHECK(is_unit_ideal(I(r, {"x - 1", "x"})));
    CHECK(!ideal_equal(I(r, {"x^2", "y^2"}), I(r, {"x", "y"})));
}

TEST_CASE("elimination") {
    SUBCASE("xz reduces through x") {
        RingPtr r = Ring::make({"x", "y", "z"});
        Ideal e = eliminate(I(r, {"x", "x*z - y^2 + y"}), std::vector<std::string>{"z"});
        CHECK(ideal_equal(e, I(r, {"x", "y^2 - y"})));
    }
    SUBCASE("projection of a graph is the whole plane") {
        RingPtr r = Ring::make({"x", "y", "u"});
        Ideal e = eliminate(I(r, {"x*u - y"}), std::vector<std::string>{"u"});
        CHECK(!e.has_generators());
    }
    SUBCASE("eliminating nothing") {
        RingPtr r = Ring::make({"x", "y"});
        Ideal id = I(r, {"x^2 - y"});
        CHECK(ideal_equal(eliminate(id, std::vector<int>{}), id));
    }
}

TEST_CASE("colon ideals") {
    RingPtr r = Ring::make({"x", "y"});
    SUBCASE("(x^2) : x = (x)") {
        CHECK(ideal_equal(colon_ideal(I(r, {"x^2"}), P(r, "x")), I(r, {"x"})));
    }
    SUBCASE("(x^2, xy) : x = (x, y), both inclusions") {
        Ideal q = colon_ideal(I(r, {"x^2", "x*y"}), P(r, "x"));
        Ideal expected = I(r, {"x", "y"});
        // Direct generator check of both inclusions.
        for (const auto& g : expected.generators())
            CHECK(membership(g * P(r, "x"), I(r, {"x^2", "x*y"})));
        CHECK(ideal_equal(q, expected));
    }
    SUBCASE("(x) : y = (x) by unique factorization") {
        CHECK(ideal_equal(colon_ideal(I(r, {"x"}), P(r, "y")), I(r, {"x"})));
    }
}

TEST_CASE("dimension") {
    RingPtr r = Ring::make({"x", "y", "z"});
    CHECK(dimension(I(r, {"x", "y^3 - z^2"})) == 1);
    CHECK(dimension(Ideal(r, {})) == 3);
    CHECK(dimension(I(r, {"x", "x - 1"})) == -1);
}

TEST_CASE("regular sequences") {
    RingPtr r3 = Ring::make({"x", "y", "z"});
    PresentedAlgebra free3 = PresentedAlgebra::free_algebra(r3);
    CHECK(is_regular_sequence({P(r3, "x"), P(r3, "y")}, free3));
    CHECK(!is_regular_sequence({P(r3, "x"), P(r3, "x*y")}, free3));
    RingPtr r2 = Ring::make({"x", "y"});
    PresentedAlgebra free2 = PresentedAlgebra::free_algebra(r2);
    SUBCASE("(x^2, y^2) with the colon oracle") {
        // (x^2) : y^2 = (x^2): y^2*f in (x^2) forces x^2 | f.
        Ideal q = colon_ideal(I(r2, {"x^2"}), P(r2, "y^2"));
        CHECK(ideal_equal(q, I(r2, {"x^2"})));
        CHECK(is_regular_sequence({P(r2, "x^2"), P(r2, "y^2")}, free2));
    }
    SUBCASE("unit ideal is rejected") {
        CHECK(!is_regular_sequence({P(r2, "x"), P(r2, "x - 1")}, free2));
    }
}

TEST_CASE("semi-regular sequences") {
    RingPtr r = Ring::make({"x", "y", "z"});
    PresentedAlgebra free3 = PresentedAlgebra::free_algebra(r);
    CHECK(is_semiregular_sequence({P(r, "x"), P(r, "y^3 - z^2")}, free3));
    SUBCASE("height-1 pair fails") {
        // V(x, xy) is the whole plane x = 0.
        CHECK(dimension(I(r, {"x", "x*y"})) == 2);
        CHECK(!is_semiregular_sequence({P(r, "x"), P(r, "x*y")}, free3));
    }
    CHECK(is_semiregular_sequence({P(r, "x"), P(r, "y"), P(r, "z")}, free3));
}

TEST_CASE("gradient generic independence") {
    RingPtr r3 = Ring::make({"x", "y", "z"});
    PresentedAlgebra free3 = PresentedAlgebra::free_algebra(r3);
    CHECK(gradient_generic_independence({P(r3, "x"), P(r3, "y")}, free3));
    SUBCASE("(x^2, y^2): the 2x2 minor 4xy vanishes on the whole zero set") {
        RingPtr r2 = Ring::make({"x", "y"});
        PresentedAlgebra free2 = PresentedAlgebra::free_algebra(r2);
        Polynomial minor = jacobian_determinant({P(r2, "x^2"), P(r2, "y^2")}, {0, 1});
        CHECK(minor == P(r2, "4*x*y"));
        CHECK(membership(minor, I(r2, {"x", "y"})));
        CHECK(!gradient_generic_independence({P(r2, "x^2"), P(r2, "y^2")}, free2));
    }
    SUBCASE("cusp curve: minors vanish only at the tip") {
        // Minors {3y^2, -2z} vanish on the center only at y = z = 0.
        CHECK(dimension(I(r3, {"x", "y^3 - z^2", "3*y^2", "2*z"})) == 0);
        CHECK(gradient_generic_independence({P(r3, "x"), P(r3, "y^3 - z^2")}, free3));
    }
}

TEST_CASE("generic semi-regular extension") {
    SUBCASE("two points in the plane") {
        RingPtr r = Ring::make({"x", "y"});
        Ideal id = I(r, {"x", "y^2 - y"});
        auto bs = generic_semiregular_extension(id, P(r, "x"), 2, 42);
        REQUIRE(bs.size() == 2);
        CHECK(bs[0] == P(r, "x"));
        CHECK(dimension(Ideal(r, bs)) == 0);
        // Deterministic for a fixed seed.
        auto again = generic_semiregular_extension(id, P(r, "x"), 2, 42);
        CHECK(bs[1] == again[1]);
    }
    SUBCASE("coordinate case") {
        RingPtr r = Ring::make({"x", "y", "z"});
        auto bs = generic_semiregular_extension(I(r, {"x", "y", "z"}), P(r, "x"), 3, 7);
        CHECK(bs.size() == 3);
        PresentedAlgebra free3 = PresentedAlgebra::free_algebra(r);
        CHECK(is_semiregular_sequence(bs, free3));
    }
    SUBCASE("length beyond the codimension") {
        RingPtr r = Ring::make({"x", "y"});
        CHECK_THROWS_AS(generic_semiregular_extension(I(r, {"x"}), P(r, "x"), 2, 1),
                        PreconditionError);
    }
    SUBCASE("f outside I") {
        RingPtr r = Ring::make({"x", "y"});
        CHECK_THROWS_AS(generic_semiregular_extension(I(r, {"x"}), P(r, "y"), 1, 1),
                        PreconditionError);
    }
}

// --- property suites --------------------------------------------------------

namespace {

struct Term2 {
    Monomial mon;
    Rational coeff;
};

Term2 lead(const Polynomial& p, const MonomialOrder& ord) {
    auto it = p.terms().begin();
    const Monomial* m = &it->first;
    const Rational* c = &it->second;
    for (++it; it != p.terms().end(); ++it)
        if (ord.less(*m, it->first)) { m = &it->first; c = &it->second; }
    return {*m, *c};
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    Term2 lf = lead(f, ord), lg = lead(g, ord);
    Monomial l = Monomial::lcm(lf.mon, lg.mon);
    return f * Polynomial::monomial(f.ring(), l.divided_by(lf.mon), Rational(1 / lf.coeff))
         - g * Polynomial::monomial(g.ring(), l.divided_by(lg.mon), Rational(1 / lg.coeff));
}

} // namespace

TEST_CASE("buchberger soundness on random ideals") {
    RingPtr r = Ring::make({"x", "y", "z"});
    std::mt19937_64 rng(424242);
    MonomialOrder ord = MonomialOrder::degrevlex(r);
    int checked = 0;
    for (int trial = 0; trial < 500 && checked < 200; ++trial) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) {
            Polynomial g = testgen::random_polynomial(rng, r, 3, 2, 4);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        Ideal id(r, gens);
        const auto& basis = groebner_basis(id, ord);
        if (basis.empty()) continue;
        for (const auto& g : gens)
            CHECK(normal_form(g, id, ord).is_zero());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                Polynomial s = spoly(basis[i], basis[j], ord);
                if (!s.is_zero())
                    CHECK(reduce_full(s, basis, ord, default_config()).is_zero());
            }
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("normal form idempotence") {
    RingPtr r = Ring::make({"x", "y", "z"});
    std::mt19937_64 rng(515151);
    MonomialOrder ord = MonomialOrder::degrevlex(r);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Polynomial> gens{testgen::random_nonzero(rng, r, 3, 2),
                                     testgen::random_nonzero(rng, r, 3, 2)};
        Ideal id(r, gens);
        Polynomial p = testgen::random_polynomial(rng, r, 4, 3);
        Polynomial n1 = normal_form(p, id, ord);
        CHECK(normal_form(n1, id, ord) == n1);
    }
}

TEST_CASE("membership is multiplicative") {
    RingPtr r = Ring::make({"x", "y"});
    std::mt19937_64 rng(616161);
    for (int trial = 0; trial < 200; ++trial) {
        Ideal id(r, {testgen::random_nonzero(rng, r, 3, 2),
                     testgen::random_nonzero(rng, r, 2, 2)});
        Polynomial member = id.generators()[0] * testgen::random_polynomial(rng, r, 2, 2)
                          + id.generators().back() * testgen::random_polynomial(rng, r, 2, 2);
        Polynomial q = testgen::random_polynomial(rng, r, 3, 2);
        CHECK(membership(member, id));
        CHECK(membership(member * q, id));
    }
}

TEST_CASE("elimination soundness") {
    RingPtr r = Ring::make({"x", "y", "z"});
    std::mt19937_64 rng(717171);
    for (int trial = 0; trial < 100; ++trial) {
        Ideal id(r, {testgen::random_nonzero(rng, r, 3, 2),
                     testgen::random_nonzero(rng, r, 3, 2)});
        Ideal e = eliminate(id, std::vector<std::string>{"z"});
        for (const auto& g : e.generators()) {
            CHECK(!g.uses_variable(r->index("z")));
            CHECK(membership(g, id));
        }
    }
}

TEST_CASE("colon monotonicity") {
    RingPtr r = Ring::make({"x", "y"});
    std::mt19937_64 rng(818181);
    for (int trial = 0; trial < 100; ++trial) {
        Ideal id(r, {testgen::random_nonzero(rng, r, 3, 2),
                     testgen::random_nonzero(rng, r, 2, 2)});
        Polynomial f = testgen::random_nonzero(rng, r, 2, 2);
        Ideal q = colon_ideal(id, f);
        for (const auto& g : id.generators())
            CHECK(membership(g, q));
        Ideal q1 = colon_ideal(id, Polynomial::constant(r, Rational(1)));
        CHECK(ideal_equal(q1, id));
    }
}

TEST_CASE("random hyperplane drops the dimension by one") {
    RingPtr r = Ring::make({"x", "y", "z"});
    std::mt19937_64 rng(919191);
    std::uniform_int_distribution<int> c(-7, 7);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        Ideal id(r, {testgen::random_nonzero(rng, r, 2, 2)});
        int d = dimension(id);
        if (d <= 0) continue;
        bool witnessed = false;
        for (int retry = 0; retry < 8 && !witnessed; ++retry) {
            Polynomial h = Polynomial::constant(r, Rational(c(rng)));
            for (std::size_t v = 0; v < r->size(); ++v)
                h = h + Polynomial::variable(r, static_cast<int>(v)) * Rational(c(rng));
            if (h.is_zero()) continue;
            if (dimension(id.with_extra({h})) == d - 1) witnessed = true;
        }
        CHECK(witnessed);
        ++done;
    }
    CHECK(done >= 40);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "agsg/curve.hpp"

using namespace agsg;

namespace {

// random product of generators with a random nonzero constant
Func random_func(const Curve& c, std::mt19937_64& rng, int max_factors = 4) {
    std::vector<Func> gens = {c.x()};
    if (c.kind() == CurveKind::ProjectiveLine) {
        gens.push_back(c.x().inv());
    } else {
        gens.push_back(c.y());
        gens.push_back(c.x() / c.y());
    }
    std::uniform_int_distribution<int> nf(0, max_factors);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<uint32_t> cf(1, c.field().card() - 1);
    Func f = c.constant(c.field().from_index(cf(rng)));
    int n = nf(rng);
    for (int i = 0; i < n; ++i) f = f * gens[pick(rng)];
    return f;
}

}  // namespace

TEST_CASE("Hermitian(2): y*y reduces via the curve equation") {
    Curve c = Curve::hermitian(2);
    Func y = c.y(), x = c.x();
    CHECK(y * y == x.pow(3) + y);  // char 2: y^2 = x^3 - y = x^3 + y
}

TEST_CASE("ring identities and random inverses") {
    std::mt19937_64 rng(42);
    for (Curve c : {Curve::hermitian(2), Curve::projective_line(Field(2, 2))}) {
        CHECK(c.x() + c.zero() == c.x());
        for (int i = 0; i < 50; ++i) {
            Func f = random_func(c, rng);
            REQUIRE(!f.is_zero());
            CHECK(f * f.inv() == c.one());
        }
    }
}

TEST_CASE("expansion at Q on Hermitian(2)") {
    Curve c = Curve::hermitian(2);
    Place Q = c.placeQ();

    LocalExpansion ey = c.y().expand_at(Q, 12);
    CHECK(ey.lead() == 3);
    // the series satisfies s^2 + s - t^3 = 0 through the window
    Series s = ey.series;
    Series rel = s * s + s - Series::monomial(c.field(), c.field().one(), 3, s.known_until());
    CHECK(rel.known_zero());
    CHECK(s.coeff(3).is_one());
    CHECK(s.coeff(6).is_one());  // -1 in char 2

    LocalExpansion ex = c.x().expand_at(Q, 5);
    CHECK(ex.lead() == 1);
    CHECK(ex.series.coeff(1).is_one());
    CHECK(ex.series.coeff(2).is_zero());

    LocalExpansion e1 = c.one().expand_at(Q, 1);
    CHECK(e1.lead() == 0);
    CHECK(e1.series.lead_coeff().is_one());
}

TEST_CASE("valuations on Hermitian(2)") {
    Curve c = Curve::hermitian(2);
    Place P = c.placeP(), Q = c.placeQ();
    CHECK(c.x().valuation(P) == -2);
    CHECK(c.y().valuation(P) == -3);
    CHECK(c.one().valuation(Q) == 0);
    CHECK(c.y().valuation(Q) == 3);
    CHECK(c.x().valuation(Q) == 1);
    CHECK((c.x() / c.y()).valuation(P) == 1);
    CHECK((c.x() / c.y()).valuation(Q) == -2);
    CHECK_THROWS_AS(c.zero().valuation(P), DomainError);

    // degree balance: -v_P(x) equals the total zero order of x at affine places
    long zeros = 0;
    for (auto& pt : c.rational_points())
        if (pt.x.is_zero()) zeros += c.x().valuation(Place{false, pt.x, pt.y});
    CHECK(zeros == -c.x().valuation(P));
    zeros = 0;
    for (auto& pt : c.rational_points())
        if (pt.y.is_zero()) zeros += c.y().valuation(Place{false, pt.x, pt.y});
    CHECK(zeros == -c.y().valuation(P));
}

TEST_CASE("rational point counts") {
    CHECK(Curve::hermitian(2).rational_points().size() == 8);
    CHECK(Curve::projective_line(Field(2, 2)).rational_points().size() == 4);
    CHECK(Curve::hermitian(3).rational_points().size() == 27);
}

TEST_CASE("evaluation at rational points") {
    Curve c = Curve::hermitian(2);
    Field f = c.field();
    Felt w = f.gen();
    AffinePoint pt{f.one(), w};
    CHECK(c.x().evaluate(pt) == f.one());
    CHECK(c.one().evaluate(pt) == f.one());
    CHECK((c.x() / c.y()).evaluate(pt) == w.inv());
    // pole detection: 1/(x-1) at a point with x = 1
    Func g = c.one() / (c.x() - c.one());
    CHECK_THROWS_AS(g.evaluate(pt), PoleError);
    // evaluation at the designated place Q is rejected
    CHECK_THROWS_AS(c.x().evaluate(AffinePoint{f.zero(), f.zero()}), DomainError);
}

TEST_CASE("indeterminate denominator is re-resolved by expansion") {
    Curve c = Curve::hermitian(2);
    Field f = c.field();
    // h = y*(x-1) / (x-1): stored denominator vanishes at x=1 unless cancelled;
    // normalization cancels the x-only gcd, so force a mixed form instead.
    Func h = (c.y() * (c.x() - c.one()) + c.y() * c.y() - c.y() * c.y()) / (c.x() - c.one());
    AffinePoint pt{f.one(), f.gen()};
    CHECK(h.evaluate(pt) == f.gen());
}

TEST_CASE("valuation is a discrete valuation on random samples") {
    std::mt19937_64 rng(7);
    for (Curve c : {Curve::hermitian(2), Curve::projective_line(Field(2, 2)), Curve::hermitian(3)}) {
        Place P = c.placeP(), Q = c.placeQ();
        for (int i = 0; i < 200; ++i) {
            Func f = random_func(c, rng), g = random_func(c, rng);
            for (const Place& pl : {P, Q}) {
                CHECK((f * g).valuation(pl) == f.valuation(pl) + g.valuation(pl));
                Func s = f + g;
                if (!s.is_zero()) CHECK(s.valuation(pl) >= std::min(f.valuation(pl), g.valuation(pl)));
            }
        }
    }
}

TEST_CASE("expansion commutes with multiplication") {
    std::mt19937_64 rng(11);
    Curve c = Curve::hermitian(2);
    Place Q = c.placeQ();
    for (int i = 0; i < 20; ++i) {
        Func f = random_func(c, rng), g = random_func(c, rng);
        LocalExpansion ef = f.expand_at(Q, 8), eg = g.expand_at(Q, 8), efg = (f * g).expand_at(Q, 8);
        Series prod = ef.series * eg.series;
        Series diff = prod - efg.series.truncated(prod.known_until());
        CHECK(diff.known_zero());
    }
}

TEST_CASE("function parsing round-trips") {
    Curve c = Curve::hermitian(2);
    Func f = c.parse("(x^2 + w*y)/(x)");
    CHECK(f == (c.x() * c.x() + c.y() * c.field().gen()) / c.x());
    CHECK(c.parse("x/y") == c.x() / c.y());
    CHECK(c.parse("x^-2") == c.x().pow(-2));
    CHECK(c.parse(f.str()) == f);
    CHECK_THROWS_AS(c.parse("x +"), ParseError);
    CHECK_THROWS_AS(c.parse("z"), ParseError);
    Curve p1 = Curve::projective_line(Field(2, 2));
    CHECK_THROWS_AS(p1.parse("y"), DomainError);
}

TEST_CASE("custom plane backend") {
    // the Hermitian(2) equation as a custom curve, with two affine places
    Field f(2, 2);
    BiPoly eq(f);
    eq.set(0, 2, f.one());
    eq.add_term(0, 1, f.one());
    eq.add_term(3, 0, f.one());  // y^2 + y + x^3 = y^2 + y - x^3 in char 2
    Place P{false, f.zero(), f.zero()};
    Place Q{false, f.zero(), f.one()};
    Curve c = Curve::custom_plane(f, eq, P, Q, 1);
    CHECK(c.x().valuation(P) == 1);
    CHECK(c.x().valuation(Q) == 1);
    CHECK(c.y().valuation(P) == 3);  // y vanishes to order 3 at (0,0)
    CHECK_THROWS_AS(Curve::custom_plane(f, eq, P, P, 1), DomainError);
    CHECK_THROWS_AS(c.x().valuation(Place{true, f.zero(), f.zero()}), DomainError);
}

TEST_CASE("zero denominators and mixed curves are rejected") {
    Curve c = Curve::hermitian(2);
    CHECK_THROWS_AS(c.one() / c.zero(), DivisionByZero);
    CHECK_THROWS_AS(c.zero().inv(), DivisionByZero);
    Curve d = Curve::hermitian(2);
    CHECK_THROWS_AS(c.x() + d.x(), DomainError);
}

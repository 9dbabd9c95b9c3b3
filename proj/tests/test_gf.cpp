#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "agsg/gf.hpp"

using agsg::Felt;
using agsg::Field;

TEST_CASE("GF(4): forced products and identities") {
    Field f(2, 2);  // t^2+t+1
    Felt w = f.gen();
    CHECK(w * w == w + f.one());  // w^2 = w+1 under t^2+t+1
    for (auto a : f.elements()) {
        CHECK(a + f.zero() == a);
        CHECK(a * f.one() == a);
    }
}

TEST_CASE("enumerate: cardinality and leading elements") {
    Field f2(2, 1);
    auto e2 = f2.elements();
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].is_zero());
    CHECK(e2[1].is_one());

    Field f4(2, 2);
    auto e4 = f4.elements();
    REQUIRE(e4.size() == 4);
    std::set<uint32_t> seen;
    for (auto& a : e4) seen.insert(a.index());
    CHECK(seen.size() == 4);
}

TEST_CASE("GF(9): closure and full associativity/distributivity scan") {
    Field f(3, 2);
    auto es = f.elements();
    REQUIRE(es.size() == 9);
    std::set<uint32_t> idx;
    for (auto& a : es) idx.insert(a.index());
    for (auto& a : es)
        for (auto& b : es) {
            CHECK(idx.count((a + b).index()) == 1);
            CHECK(idx.count((a * b).index()) == 1);
        }
    // 729 triples
    for (auto& a : es)
        for (auto& b : es)
            for (auto& c : es) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
}

TEST_CASE("inverses and powers") {
    for (Field f : {Field(2, 2), Field(3, 2), Field(2, 3), Field(5, 1)}) {
        for (auto a : f.elements()) {
            if (a.is_zero()) {
                CHECK_THROWS_AS(a.inv(), agsg::DivisionByZero);
                continue;
            }
            CHECK(a * a.inv() == f.one());
            CHECK(a.pow(static_cast<long long>(f.card()) - 1) == f.one());
            CHECK(a.pow(-1) == a.inv());
        }
    }
}

TEST_CASE("Frobenius is additive for p^k <= 81") {
    for (Field f : {Field(2, 2), Field(2, 3), Field(2, 4), Field(3, 2), Field(3, 3), Field(5, 2)}) {
        for (auto a : f.elements())
            for (auto b : f.elements()) CHECK((a + b).pow(f.p()) == a.pow(f.p()) + b.pow(f.p()));
    }
}

TEST_CASE("mixed field specs are rejected") {
    Field f4(2, 2), f9(3, 2);
    CHECK_THROWS_AS(f4.one() + f9.one(), agsg::DomainError);
    // two separately constructed instances of GF(4) are distinct specs
    Field g4(2, 2);
    CHECK_THROWS_AS(f4.one() + g4.one(), agsg::DomainError);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Field(4, 1), agsg::DomainError);                          // 4 not prime
    CHECK_THROWS_AS(Field(2, 2, std::vector<int>{0, 0, 1}), agsg::DomainError);  // t^2 reducible
    CHECK_NOTHROW(Field(2, 2, std::vector<int>{1, 1, 1}));
    CHECK_THROWS_AS(Field(2, 17), agsg::DomainError);  // over the 2^16 bound
}

TEST_CASE("text round-trip") {
    Field f9(3, 2);
    for (auto a : f9.elements()) CHECK(f9.parse(a.str()) == a);
    Field f4(2, 2);
    CHECK(f4.parse("w+1") == f4.gen() + f4.one());
    CHECK(f4.parse("0").is_zero());
    CHECK(f9.parse("2*w+2") == f9.from_coeffs({2, 2}));
    CHECK_THROWS_AS(f4.parse("q"), agsg::ParseError);
}

TEST_CASE("rank over GF(4)") {
    Field f(2, 2);
    Felt w = f.gen(), o = f.one(), z = f.zero();
    std::vector<std::vector<Felt>> rows = {{o, w, z}, {w, w * w, z}, {z, z, o}};
    // row2 = w*row1, so rank 2
    CHECK(agsg::rank_of(rows, f) == 2);
    std::vector<std::vector<Felt>> rows2 = {{o, z}, {w, o}};
    CHECK(agsg::rank_of(rows2, f) == 2);
}

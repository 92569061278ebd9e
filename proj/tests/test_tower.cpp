#include <catch2/catch_amalgamated.hpp>

#include "branchdiv/factor.hpp"
#include "branchdiv/rng.hpp"
#include "branchdiv/tower.hpp"
#include "branchdiv/upoly.hpp"

using namespace branchdiv;

namespace {

UPoly qpoly(std::initializer_list<long> cs) {
    std::vector<AlgNum> v;
    for (long c : cs) v.emplace_back(c);
    return UPoly(std::move(v));
}

}  // namespace

TEST_CASE("rational arithmetic and canonical form") {
    AlgNum a(rat_of(1, 3)), b(rat_of(2, 5));
    CHECK((a + b).rat() == rat_of(11, 15));
    CHECK((a * b).rat() == rat_of(2, 15));
    CHECK((a - a).is_zero());
    CHECK(a.inverse().rat() == rat_of(3, 1));
}

TEST_CASE("quadratic extension arithmetic") {
    // Q(s), s^2 = 2
    Tower qs = make_level(nullptr, "s", {AlgNum(-2), AlgNum(0), AlgNum(1)});
    AlgNum s = generator(qs);
    CHECK((s * s).rat() == 2);
    CHECK(((s + AlgNum(1)) * (s - AlgNum(1))).rat() == 1);
    AlgNum inv = s.inverse();
    CHECK((inv * s).is_one());
    CHECK(inv == s * AlgNum(rat_of(1, 2)));
    CHECK(tower_degree(qs) == 2);
}

TEST_CASE("height-two tower: Q(s, t) with t^2 = s") {
    Tower qs = make_level(nullptr, "s", {AlgNum(-2), AlgNum(0), AlgNum(1)});
    AlgNum s = generator(qs);
    Tower qt = make_level(qs, "t", {-s, AlgNum(0), AlgNum(1)});
    AlgNum t = generator(qt);
    CHECK(t * t == s);
    CHECK((t.pow(4)).rat() == 2);
    CHECK(tower_degree(qt) == 4);
    // mixed-level arithmetic
    AlgNum mixed = t + s;
    CHECK(mixed - t == s);
    CHECK((mixed * t) == s + s * t);
    // inverse in the top level
    AlgNum u = (t + AlgNum(1)).inverse();
    CHECK((u * (t + AlgNum(1))).is_one());
}

TEST_CASE("field axioms on random elements across towers of degree <= 8") {
    Tower qs = make_level(nullptr, "s", {AlgNum(-2), AlgNum(0), AlgNum(1)});
    AlgNum s = generator(qs);
    Tower qt = make_level(qs, "t", {-s, AlgNum(0), AlgNum(1)});
    // degree 8: adjoin u with u^2 = t + 1
    AlgNum t = generator(qt);
    Tower qu = make_level(qt, "u", {-(t + AlgNum(1)), AlgNum(0), AlgNum(1)});
    AlgNum u = generator(qu);
    Rng rng(42);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        AlgNum e = AlgNum(rng.windowed(4)) + AlgNum(rng.windowed(4)) * s + AlgNum(rng.windowed(4)) * t +
                   AlgNum(rng.windowed(4)) * u + AlgNum(rng.windowed(4)) * t * u;
        if (e.is_zero()) continue;
        CHECK((e * e.inverse()).is_one());
        ++checked;
    }
    CHECK(checked >= 190);
}

TEST_CASE("upoly division, gcd, resultant") {
    UPoly f = qpoly({-1, 0, 0, 0, 1});  // x^4 - 1
    UPoly g = qpoly({-1, 0, 1});        // x^2 - 1
    UPoly q, r;
    divrem(f, g, q, r);
    CHECK(r.is_zero());
    CHECK(q == qpoly({1, 0, 1}));
    CHECK(gcd(f, g) == g.monic());

    // resultant examples
    UPoly a = qpoly({-2, 1});  // x - 2
    UPoly b = qpoly({-3, 1});  // x - 3
    CHECK(resultant(a, b).rat() == -1);  // Res(x-2, x-3) = g(2) = -1
    CHECK(resultant(f, f).is_zero());
    // Res(x^2 - 2, x^2 - 3) = (sqrt2^2-3)(...) = 1
    CHECK(resultant(qpoly({-2, 0, 1}), qpoly({-3, 0, 1})).rat() == 1);
}

TEST_CASE("squarefree decomposition") {
    UPoly f = qpoly({0, 1}) * qpoly({0, 1}) * qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({1, 1});
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].second == 1);
    CHECK(dec[0].first == qpoly({1, 1}));
    CHECK(dec[1].second == 2);
    CHECK(dec[1].first == qpoly({0, 1}));
    CHECK(dec[2].second == 3);
    CHECK(dec[2].first == qpoly({-1, 1}));
}

TEST_CASE("rel_coords flattens over a base") {
    Tower qs = make_level(nullptr, "s", {AlgNum(-2), AlgNum(0), AlgNum(1)});
    AlgNum s = generator(qs);
    Tower qt = make_level(qs, "t", {-s, AlgNum(0), AlgNum(1)});
    AlgNum t = generator(qt);
    AlgNum e = AlgNum(3) + AlgNum(5) * s + AlgNum(7) * t + AlgNum(11) * s * t;
    auto co = rel_coords(e, qt, nullptr);
    REQUIRE(co.size() == 4);
    CHECK(co[0].rat() == 3);
    CHECK(co[1].rat() == 5);
    CHECK(co[2].rat() == 7);
    CHECK(co[3].rat() == 11);
}

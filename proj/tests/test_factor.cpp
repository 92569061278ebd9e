#include <catch2/catch_amalgamated.hpp>

#include "branchdiv/factor.hpp"
#include "branchdiv/rng.hpp"

using namespace branchdiv;

namespace {

UPoly qpoly(std::initializer_list<long> cs) {
    std::vector<AlgNum> v;
    for (long c : cs) v.emplace_back(c);
    return UPoly(std::move(v));
}

UPoly reassemble(const Factorization& f) {
    UPoly p = UPoly::constant(f.unit);
    for (const auto& [g, m] : f.factors)
        for (int i = 0; i < m; ++i) p = p * g;
    return p;
}

}  // namespace

TEST_CASE("x^2 - 2 is irreducible over Q") {
    auto fac = factor_univariate(qpoly({-2, 0, 1}));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == qpoly({-2, 0, 1}));
    CHECK(fac.factors[0].second == 1);
}

TEST_CASE("x^4 - 1 over Q") {
    auto fac = factor_univariate(qpoly({-1, 0, 0, 0, 1}));
    REQUIRE(fac.factors.size() == 3);
    // ordered by degree then coefficient-lex
    CHECK(fac.factors[0].first == qpoly({-1, 1}));
    CHECK(fac.factors[1].first == qpoly({1, 1}));
    CHECK(fac.factors[2].first == qpoly({1, 0, 1}));
    CHECK(reassemble(fac) == qpoly({-1, 0, 0, 0, 1}));
}

TEST_CASE("swinnerton-dyer style: x^4 - 10x^2 + 1 (irreducible, splits mod every p)") {
    UPoly f = qpoly({1, 0, -10, 0, 1});
    auto fac = factor_univariate(f);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == f);
}

TEST_CASE("multiplicities and content") {
    // 6*(x-1)^2*(2x+3)
    UPoly f = UPoly::constant(AlgNum(3)) * qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({3, 2}) * UPoly::constant(AlgNum(2));
    auto fac = factor_univariate(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(reassemble(fac) == f);
    CHECK(fac.unit.rat() == 12);  // 6 * lc(2x+3)
}

TEST_CASE("bigger Zassenhaus case with recombination pressure") {
    // product of two irreducible quartics
    UPoly a = qpoly({2, 0, 0, 0, 1});    // x^4 + 2
    UPoly b = qpoly({1, 1, 0, 0, 1});    // x^4 + x + 1
    auto fac = factor_univariate(a * b);
    REQUIRE(fac.factors.size() == 2);
    CHECK(reassemble(fac) == a * b);
}

TEST_CASE("factorization over Q(s), s^2=2: its own minimal polynomial splits") {
    Tower qs = make_level(nullptr, "s", {AlgNum(-2), AlgNum(0), AlgNum(1)});
    AlgNum s = generator(qs);
    UPoly f = qpoly({-2, 0, 1});
    auto fac = factor_univariate(f, qs);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first == UPoly({-s, AlgNum(1)}));
    CHECK(fac.factors[1].first == UPoly({s, AlgNum(1)}));
}

TEST_CASE("Trager over Q(s): x^2 - s needs the degree-4 norm") {
    Tower qs = make_level(nullptr, "s", {AlgNum(-2), AlgNum(0), AlgNum(1)});
    AlgNum s = generator(qs);
    UPoly f({-s, AlgNum(0), AlgNum(1)});  // x^2 - s, irreducible over Q(s)
    auto fac = factor_univariate(f);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first == f);
}

TEST_CASE("Trager over Q(i): x^2 + 1 splits") {
    Tower qi = make_level(nullptr, "j", {AlgNum(1), AlgNum(0), AlgNum(1)});
    UPoly f = qpoly({1, 0, 1});  // x^2 + 1, factored over Q(j)
    auto fac = factor_univariate(f, qi);
    REQUIRE(fac.factors.size() == 2);
    UPoly prod = UPoly::constant(fac.unit);
    for (auto& [g, m] : fac.factors) {
        CHECK(m == 1);
        prod = prod * g;
    }
    CHECK(prod == f);
}

TEST_CASE("extend_field behaviour") {
    // (Q, a^2 - 2) -> degree-2 tower
    auto r1 = extend_field(nullptr, qpoly({-2, 0, 1}));
    CHECK(tower_degree(r1.tower) == 2);
    CHECK(r1.degree == 2);
    CHECK((r1.root * r1.root).rat() == 2);

    // (Q(a), b^2 - a) -> degree-4 tower
    auto r2 = extend_field(r1.tower, UPoly({-r1.root, AlgNum(0), AlgNum(1)}));
    CHECK(tower_degree(r2.tower) == 4);
    CHECK(r2.root * r2.root == r1.root);

    // (Q, a - 3) -> unchanged, root 3
    auto r3 = extend_field(nullptr, qpoly({-3, 1}));
    CHECK(r3.tower == nullptr);
    CHECK(r3.root.rat() == 3);
    CHECK(r3.degree == 1);

    // reducible input picks a maximal-degree irreducible factor: x^4 - 1
    auto r4 = extend_field(nullptr, qpoly({-1, 0, 0, 0, 1}));
    CHECK(tower_degree(r4.tower) == 2);  // x^2 + 1
    CHECK((r4.root * r4.root).rat() == -1);
}

TEST_CASE("factor output re-multiplies to input on random products") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        UPoly f = UPoly::constant(AlgNum(rng.nonzero(5)));
        int nf = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < nf; ++i) {
            int d = 1 + static_cast<int>(rng.below(3));
            std::vector<AlgNum> cs;
            for (int j = 0; j < d; ++j) cs.emplace_back(rng.windowed(4));
            cs.emplace_back(1 + static_cast<long>(rng.below(3)));
            f = f * UPoly(std::move(cs));
        }
        if (f.deg() < 1) continue;
        auto fac = factor_univariate(f);
        CHECK(reassemble(fac) == f);
    }
}

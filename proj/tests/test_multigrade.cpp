#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "syz/multigrade.hpp"

using namespace syz;

static Setting mk(int n1, int n2, int d1, int d2) {
    Setting s;
    s.n1 = n1;
    s.n2 = n2;
    s.d1 = d1;
    s.d2 = d2;
    return s;
}

static Monomial randomMonomial(const Setting& s, std::mt19937& rng, int maxExp) {
    std::uniform_int_distribution<int> e(0, maxExp);
    Monomial m = Monomial::one(s);
    for (int v = 0; v < m.nvars(); ++v) m.raw(v) = e(rng);
    return m;
}

TEST_CASE("setting validation") {
    CHECK_NOTHROW(mk(1, 1, 1, 1).validate(false));
    CHECK_THROWS_AS(mk(0, 1, 1, 1).validate(false), HypothesisViolation);
    CHECK_NOTHROW(mk(0, 1, 1, 1).validate(true));
    CHECK_THROWS_AS(mk(0, 0, 1, 1).validate(true), HypothesisViolation);
    CHECK_THROWS_AS(mk(1, 1, 0, 2).validate(), HypothesisViolation);
    Setting s = mk(1, 1, 1, 1);
    s.ch = 12;
    CHECK_THROWS_AS(s.validate(), HypothesisViolation);
    s.ch = 0;
    CHECK_NOTHROW(s.validate());
    s.ch = 2;
    CHECK_NOTHROW(s.validate());
    // message names the invariant
    try {
        mk(1, 1, 0, 2).validate();
        FAIL("expected throw");
    } catch (const HypothesisViolation& e) {
        CHECK(std::string(e.what()).find("d1 >= 1") != std::string::npos);
    }
}

TEST_CASE("bidegree") {
    Setting s = mk(1, 1, 3, 3);
    Monomial m = parseMonomial(s, "x0^2*x1^4*y0^5*y1");
    CHECK(bidegree(m) == BiDegree{6, 6});
    CHECK(bidegree(Monomial::one(s)) == BiDegree{0, 0});
    Monomial g = Monomial::x(s, 1, 3) * Monomial::y(s, 0, 3);
    CHECK(bidegree(g) == BiDegree{3, 3});
}

TEST_CASE("index weighted degree") {
    Setting s = mk(2, 2, 3, 5);
    CHECK(indexWeightedDegree(s, parseMonomial(s, "x2*y1")) == 13);
    CHECK(indexWeightedDegree(s, Monomial::one(s)) == 0);
    Setting t = mk(2, 4, 3, 2);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 4; ++j) {
            Monomial m = Monomial::x(t, i, 3) * Monomial::y(t, j, 2);
            CHECK(indexWeightedDegree(t, m) == 3 * 2 * (i + j));
        }
}

TEST_CASE("modular degree and remd") {
    Setting s = mk(1, 2, 3, 5);
    // y0^5 has residue 0 mod 5, so f lands in ((2,0),(0,1,3))
    Monomial f = parseMonomial(s, "x0^5*x1^3*y0^5*y1^11*y2^8");
    ModularDegree md = modularDegree(s, f);
    CHECK(md.xres == std::vector<int>{2, 0});
    CHECK(md.yres == std::vector<int>{0, 1, 3});
    CHECK(toText(remd(s, f)) == "x0^2*y1*y2^3");
    Monomial g = parseMonomial(s, "x0^11*y0*y1^6*y2^103");
    ModularDegree mg = modularDegree(s, g);
    CHECK(mg.xres == std::vector<int>{2, 0});
    CHECK(mg.yres == std::vector<int>{1, 1, 3});
    CHECK(toText(remd(s, g)) == "x0^2*y0*y1*y2^3");
    CHECK(remd(s, g) * parseMonomial(s, "x0^9*y1^5*y2^100") == g);
    Monomial p = parseMonomial(s, "x0^3*y1^10");
    CHECK(remd(s, p).isOne());
    CHECK(remd(s, remd(s, f)) == remd(s, f));
}

TEST_CASE("dth root") {
    Setting s = mk(1, 1, 3, 5);
    CHECK(toText(dthRoot(s, parseMonomial(s, "x0^9*y1^5"))) == "x0^3*y1");
    CHECK(dthRoot(s, Monomial::one(s)).isOne());
    CHECK_THROWS_AS(dthRoot(s, parseMonomial(s, "x0^2")), NotInSubring);
    std::mt19937 rng(7);
    for (int t = 0; t < 100; ++t) {
        Monomial m = randomMonomial(s, rng, 4);
        CHECK(dthRoot(s, dthPower(s, m)) == m);
    }
}

TEST_CASE("enumeration") {
    Setting s = mk(1, 1, 1, 1);
    auto all = enumerateMonomials(s, {1, 1});
    CHECK(all.size() == 4);
    auto k1 = enumerateMonomials(s, {1, 1}, 1);
    REQUIRE(k1.size() == 2);
    std::set<std::string> txt{toText(k1[0]), toText(k1[1])};
    CHECK(txt == std::set<std::string>{"x0*y1", "x1*y0"});
    CHECK(enumerateMonomials(s, {-1, 2}).empty());
    Setting t = mk(2, 4, 2, 3);
    CHECK((long long)enumerateMonomials(t, {2, 3}).size() == binomial(4, 2) * binomial(7, 4));
    CHECK(rND(t) + 1 == binomial(4, 2) * binomial(7, 4));
    // grevlex: ordering strict, first element x0^a y0^b
    auto e = enumerateMonomials(t, {2, 2});
    std::set<std::string> seen;
    for (std::size_t i = 0; i < e.size(); ++i) {
        seen.insert(toText(e[i]));
        if (i) CHECK(grevlexGreater(e[i - 1], e[i]));
    }
    CHECK(seen.size() == e.size());
    CHECK(toText(e.front()) == "x0^2*y0^2");
    CHECK(toText(e.back()) == "x2^2*y4^2");
}

TEST_CASE("grevlex tie breaks on last variable") {
    Setting s = mk(1, 1, 1, 1);
    // x0*y1 vs x1*y0: last differing variable is y1; smaller exponent wins
    CHECK(grevlexGreater(parseMonomial(s, "x1*y0"), parseMonomial(s, "x0*y1")));
    CHECK(grevlexGreater(parseMonomial(s, "x0^3"), parseMonomial(s, "x0*y0")));
}

TEST_CASE("rND") {
    CHECK(rND(1, 1, 2, 2) == 8);
    CHECK(rND(1, 1, 1, 1) == 3);
    CHECK(rND(2, 4, 1, 1) == 14);
    CHECK(rND(1, 1, 3, 3) == 15);
}

TEST_CASE("binomial overflow is loud") {
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == 118264581564861424LL);
    CHECK_THROWS_AS(binomial(200, 100), OutOfRange);
    CHECK_THROWS_AS(checkedMul(1LL << 40, 1LL << 40), OutOfRange);
}

TEST_CASE("additivity properties") {
    Setting s = mk(2, 3, 3, 4);
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        Monomial a = randomMonomial(s, rng, 7), b = randomMonomial(s, rng, 7);
        Monomial ab = a * b;
        CHECK(bidegree(ab) == bidegree(a) + bidegree(b));
        CHECK(indexWeightedDegree(s, ab) == indexWeightedDegree(s, a) + indexWeightedDegree(s, b));
        ModularDegree ma = modularDegree(s, a), mb = modularDegree(s, b), mab = modularDegree(s, ab);
        for (int i = 0; i < s.nx(); ++i) CHECK(mab.xres[i] == (ma.xres[i] + mb.xres[i]) % s.d1);
        for (int j = 0; j < s.ny(); ++j) CHECK(mab.yres[j] == (ma.yres[j] + mb.yres[j]) % s.d2);
        Monomial r = remd(s, a);
        CHECK(r.divides(a));
        CHECK_NOTHROW(dthRoot(s, a / r));
        CHECK((modularDegree(s, a) == modularDegree(s, b)) == (remd(s, a) == remd(s, b)));
    }
}

TEST_CASE("text round trip") {
    Setting s = mk(1, 1, 3, 3);
    CHECK(toText(Monomial::one(s)) == "1");
    CHECK(parseMonomial(s, "1").isOne());
    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        Monomial m = randomMonomial(s, rng, 5);
        CHECK(parseMonomial(s, toText(m)) == m);
    }
    CHECK_THROWS_AS(parseMonomial(s, "x2"), OutOfRange);
    CHECK_THROWS_AS(parseMonomial(s, "z0"), OutOfRange);
    CHECK_THROWS_AS(parseMonomial(s, "x0^a"), OutOfRange);
}

#include <doctest.h>

#include <random>

#include "qg2/rewrite.hpp"

using namespace qg2;

namespace {

const Algebra& sourceAlgebra() {
    static Algebra alg(Params::source(), 8);
    return alg;
}

RatFunc R() { return RatFunc::r(); }
RatFunc S() { return RatFunc::s(); }

NcPoly gen(Gen g) { return NcPoly::fromGen(g); }
NcPoly word(std::initializer_list<Gen> gs, RatFunc c = RatFunc(1)) {
    return NcPoly::fromWord(wordOf(gs), std::move(c));
}

NcPoly E12() { return word({Gen::E1, Gen::E2}) - word({Gen::E2, Gen::E1}, S().pow(3)); }
NcPoly E112() {
    return gen(Gen::E1) * E12() - (E12() * gen(Gen::E1)).scaled(R() * S().pow(2));
}
NcPoly E1112() {
    RatFunc delta = R().pow(2) + R() * S() + S().pow(2);
    return word({Gen::E1, Gen::E1, Gen::E1, Gen::E2}) -
           word({Gen::E1, Gen::E1, Gen::E2, Gen::E1}, S() * delta) +
           word({Gen::E1, Gen::E2, Gen::E1, Gen::E1}, R() * S().pow(3) * delta) -
           word({Gen::E2, Gen::E1, Gen::E1, Gen::E1}, (R() * S().pow(2)).pow(3));
}
NcPoly E21() { return word({Gen::E2, Gen::E1}) - word({Gen::E1, Gen::E2}, R().pow(-3)); }

std::mt19937 rng(777);

Word randomWord(int maxLen) {
    std::uniform_int_distribution<int> len(0, maxLen);
    std::uniform_int_distribution<int> letter(0, kNumGens - 1);
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back((uint8_t)letter(rng));
    return w;
}

}  // namespace

TEST_CASE("straighten: commutation relation [e1,f1]") {
    const Algebra& alg = sourceAlgebra();
    NcPoly lhs = alg.straighten(NcPoly::commutator(gen(Gen::E1), gen(Gen::F1)));
    NcPoly rhs = (word({Gen::W1}) - word({Gen::WP1})).scaled((R() - S()).inv());
    CHECK(lhs == alg.straighten(rhs));
    // cross-index pairs commute
    CHECK(alg.isZero(NcPoly::commutator(gen(Gen::E1), gen(Gen::F2))));
    CHECK(alg.isZero(NcPoly::commutator(gen(Gen::E2), gen(Gen::F1))));
}

TEST_CASE("straighten: omega conjugation") {
    const Algebra& alg = sourceAlgebra();
    // w1 e1 = (r/s) e1 w1, already triangular on the left side
    NcPoly lhs = word({Gen::W1, Gen::E1});
    NcPoly rhs = word({Gen::E1, Gen::W1}, R() / S());
    CHECK(alg.isZero(lhs - rhs));
    // the group relation w w^-1 = 1
    CHECK(alg.straighten(word({Gen::W1, Gen::W1I})) == NcPoly::one());
    CHECK(alg.straighten(word({Gen::WP2I, Gen::WP2})) == NcPoly::one());
}

TEST_CASE("straighten kills the Serre relators") {
    const Algebra& alg = sourceAlgebra();
    CHECK(alg.isZero(Algebra::serreE1(alg.params())));
    CHECK(alg.isZero(Algebra::serreE2(alg.params())));
    CHECK(alg.isZero(Algebra::serreF1(alg.params())));
    CHECK(alg.isZero(Algebra::serreF2(alg.params())));
    CHECK_FALSE(alg.isZero(gen(Gen::E1)));
}

TEST_CASE("completion with small bound keeps the oriented inputs") {
    RuleSet rs = RuleSet::complete({{Algebra::serreE1(Params::source()), "deg2"},
                                    {Algebra::serreE2(Params::source()), "deg4"}},
                                   4);
    REQUIRE(rs.rules().size() >= 2);
    bool has3 = false, has5 = false;
    for (auto& r : rs.rules()) {
        if (r.lead == wordOf({Gen::E2, Gen::E2, Gen::E1})) has3 = true;
        if (r.lead == wordOf({Gen::E2, Gen::E1, Gen::E1, Gen::E1, Gen::E1})) has5 = true;
    }
    CHECK(has3);
    CHECK(has5);
}

TEST_CASE("deep root-vector identities reduce to zero") {
    const Algebra& alg = sourceAlgebra();
    SUBCASE("E1112*E112 - r^3*E112*E1112 = 0 (degree 7)") {
        NcPoly p = E1112() * E112() - (E112() * E1112()).scaled(R().pow(3));
        CHECK(alg.isZero(p));
        CHECK_FALSE(p.isZero());  // nontrivial in the free algebra
    }
    SUBCASE("e1*E21^3 - s*Delta*E21*e1*E21^2 + r*s^3*Delta*E21^2*e1*E21 - (r*s^2)^3*E21^3*e1 = 0") {
        RatFunc delta = R().pow(2) + R() * S() + S().pow(2);
        NcPoly e21 = E21();
        NcPoly p = gen(Gen::E1) * e21 * e21 * e21 -
                   (e21 * gen(Gen::E1) * e21 * e21).scaled(S() * delta) +
                   (e21 * e21 * gen(Gen::E1) * e21).scaled(R() * S().pow(3) * delta) -
                   (e21 * e21 * e21 * gen(Gen::E1)).scaled((R() * S().pow(2)).pow(3));
        CHECK(alg.isZero(p));
    }
}

TEST_CASE("straighten is a projection and respects weight") {
    const Algebra& alg = sourceAlgebra();
    for (int t = 0; t < 40; ++t) {
        Word w = randomWord(6);
        NcPoly p = NcPoly::fromWord(w);
        NcPoly nf = alg.straighten(p);
        CHECK(alg.straighten(nf) == nf);
        if (!nf.isZero()) {
            auto wt = nf.weight();
            REQUIRE(wt.has_value());
            CHECK(*wt == weightOfWord(w));
        }
    }
}

TEST_CASE("defining relations are weight-homogeneous") {
    auto p = Params::source();
    CHECK(Algebra::serreE1(p).weight().has_value());
    CHECK(Algebra::serreE2(p).weight().has_value());
    CHECK(Algebra::serreF1(p).weight().has_value());
    CHECK(Algebra::serreF2(p).weight().has_value());
    CHECK(*Algebra::serreE2(p).weight() == Weight{4, 1});
}

TEST_CASE("confluence witnesses re-check") {
    const Algebra& alg = sourceAlgebra();
    CHECK(alg.eRules().recheckWitnesses());
    CHECK(alg.fRules().recheckWitnesses());
}

TEST_CASE("degree bound overflow is an explicit error") {
    Algebra alg(Params::source(), 5);
    Word w;
    for (int i = 0; i < 7; ++i) w.push_back((uint8_t)Gen::E1);
    CHECK_THROWS_AS(alg.straighten(NcPoly::fromWord(w)), DegreeBoundError);
}

TEST_CASE("swapped-parameter instance completes as well") {
    Algebra alg(Params::swapped(), 6);
    CHECK(alg.isZero(Algebra::serreE1(alg.params())));
    CHECK(alg.isZero(Algebra::serreF1(alg.params())));
}

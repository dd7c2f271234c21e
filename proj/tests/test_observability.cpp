#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

#include "nonassoc/observability.hpp"

#include <random>

using namespace nonassoc;
using namespace testutil;

namespace {

AlgebraPtr nonflex3() {
    auto row = [](int a, int b, int c) {
        QVec v(3);
        v << Rational(a), Rational(b), Rational(c);
        return v;
    };
    std::vector<std::vector<QVec>> table = {
        {row(1, 0, 0), row(0, 1, 0), row(0, 0, 1)},
        {row(0, 1, 0), row(1, 0, 0), row(0, 0, 1)},
        {row(0, 0, 1), row(0, 0, -1), row(-1, 0, 0)},
    };
    return Algebra::from_table("nonflex3", table, {1, -1, -1});
}

StateVector one_site(const Element& v, Rational w = Rational(1)) {
    return StateVector({{std::move(w), v}});
}

StateVector random_state(std::mt19937& rng, const AlgebraPtr& alg) {
    std::vector<StateVector::Site> sites;
    int n = rand_int(rng, 1, 4);
    for (int k = 0; k < n; ++k)
        sites.push_back({Rational(rand_int(rng, 1, 9), rand_int(rng, 1, 4)),
                         random_element(rng, alg)});
    return StateVector(std::move(sites));
}

// direct associator-sum form of the defect, written independently
Element defect_oracle(const StateVector& psi, const Element& M) {
    Element acc = Element::zero(psi.algebra());
    for (const auto& site : psi.sites())
        acc = acc + site.weight * associator_minus(conj(site.value), M, site.value);
    return acc;
}

} // namespace

TEST_CASE("nucleus dimensions across the doubling chain") {
    CHECK(nucleus(named_algebra("r")).dim() == 1);
    CHECK(nucleus(named_algebra("complex")).dim() == 2);
    CHECK(nucleus(named_algebra("quat")).dim() == 4);
    Subspace oct_nuc = nucleus(named_algebra("oct"));
    CHECK(oct_nuc.dim() == 1);
    REQUIRE(oct_nuc.basis().size() == 1);
    CHECK(oct_nuc.basis()[0].str() == "e0");
    CHECK(nucleus(named_algebra("sed")).dim() == 1);
    CHECK(nucleus(named_algebra("split-oct")).dim() == 1);
    CHECK(nucleus(nonflex3()).dim() == 1);
}

TEST_CASE("the nucleus really associates with everything") {
    AlgebraPtr quat = named_algebra("quat");
    Subspace nuc = nucleus(quat);
    for (const Element& n : nuc.basis())
        for (int i = 0; i < quat->dim(); ++i)
            for (int j = 0; j < quat->dim(); ++j) {
                Element x = Element::basis(quat, i), y = Element::basis(quat, j);
                CHECK(associator_minus(n, x, y).is_zero());
                CHECK(associator_minus(x, n, y).is_zero());
                CHECK(associator_minus(x, y, n).is_zero());
            }
}

TEST_CASE("generated subalgebras close under the product") {
    AlgebraPtr oct = named_algebra("oct");
    auto e = [&](int k) { return Element::basis(oct, k); };

    Subspace quaternionic = generated_subalgebra({e(1), e(2)});
    CHECK(quaternionic.dim() == 4);
    CHECK(quaternionic.contains(e(0)));
    CHECK(quaternionic.contains(e(3)));
    CHECK(!quaternionic.contains(e(4)));

    CHECK(generated_subalgebra({e(1), e(2), e(4)}).dim() == 8);
    CHECK(generated_subalgebra({e(1)}).dim() == 2); // span{e0, e1}
    CHECK(generated_subalgebra({e(0)}).dim() == 1);
    CHECK(generated_subalgebra({Element::zero(oct)}).dim() == 0);
    CHECK_THROWS_AS(generated_subalgebra({}), Error);

    // closure is monotone in the generators
    Subspace small = generated_subalgebra({e(1), e(2)});
    Subspace big = generated_subalgebra({e(1), e(2), e(5)});
    for (const Element& b : small.basis()) CHECK(big.contains(b));

    // product of any two closure basis vectors stays inside
    for (const Element& x : quaternionic.basis())
        for (const Element& y : quaternionic.basis()) CHECK(quaternionic.contains(mul(x, y)));
}

TEST_CASE("subspace membership is algebra-aware") {
    AlgebraPtr oct = named_algebra("oct");
    Subspace sub = generated_subalgebra({Element::basis(oct, 1)});
    CHECK_THROWS_AS(sub.contains(Element::basis(named_algebra("sed"), 1)), Error);
}

TEST_CASE("classification of octonion closures") {
    AlgebraPtr oct = named_algebra("oct");
    auto e = [&](int k) { return Element::basis(oct, k); };

    ObservabilityReport good = classify({e(1), e(2)});
    CHECK(good.observable);
    CHECK(good.closure.dim() == 4);
    CHECK(!good.witness.has_value());
    REQUIRE(good.involution_closed.has_value());
    CHECK(*good.involution_closed);

    ObservabilityReport bad = classify({e(1), e(2), e(4)});
    CHECK(!bad.observable);
    CHECK(bad.closure.dim() == 8);
    REQUIRE(bad.witness.has_value());
    auto [i, j, k] = *bad.witness;
    std::vector<Element> basis = bad.closure.basis();
    CHECK(!associator_minus(basis[static_cast<std::size_t>(i)],
                            basis[static_cast<std::size_t>(j)],
                            basis[static_cast<std::size_t>(k)])
               .is_zero());
}

TEST_CASE("sedenion and quaternion closures classify correctly") {
    AlgebraPtr sed = named_algebra("sed");
    ObservabilityReport r = classify({Element::basis(sed, 1), Element::basis(sed, 2)});
    CHECK(r.observable);
    CHECK(r.closure.dim() == 4);
    AlgebraPtr quat = named_algebra("quat");
    ObservabilityReport q = classify({Element::basis(quat, 1), Element::basis(quat, 2)});
    CHECK(q.observable);
    CHECK(q.closure.dim() == 4);
}

TEST_CASE("classification without an involution leaves that field empty") {
    AlgebraPtr nf = nonflex3();
    std::vector<std::vector<QVec>> table(3, std::vector<QVec>(3, QVec::Zero(3)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) table[i][j] = nf->basis_product(i, j);
    AlgebraPtr bare = Algebra::from_table("bare", table); // no involution
    ObservabilityReport r = classify({Element::basis(bare, 1)});
    CHECK(!r.involution_closed.has_value());
    ObservabilityReport nf_r = classify({Element::basis(nf, 2)});
    REQUIRE(nf_r.involution_closed.has_value());
    CHECK(*nf_r.involution_closed);
}

TEST_CASE("state vectors validate their sites") {
    AlgebraPtr oct = named_algebra("oct");
    CHECK_THROWS_AS(StateVector({}), Error);
    CHECK_THROWS_AS(StateVector({{Rational(0), Element::basis(oct, 1)}}), Error);
    CHECK_THROWS_AS(StateVector({{Rational(-1), Element::basis(oct, 1)}}), Error);
    CHECK_THROWS_AS(StateVector({{Rational(1), Element::basis(oct, 1)},
                                 {Rational(1), Element::basis(named_algebra("sed"), 1)}}),
                    Error);
    CHECK_NOTHROW(StateVector({{Rational(1, 2), Element::basis(oct, 1)}}));
}

TEST_CASE("expectation values by explicit bracketing") {
    AlgebraPtr oct = named_algebra("oct");
    Element psi = Element::basis(oct, 1), M = Element::basis(oct, 2);
    // psi* = -e1; ((-e1) e2) e1 = -e3 e1 = -e2; (-e1)(e2 e1) = (-e1)(-e3) = -e2
    CHECK(expectation(one_site(psi), M, Bracketing::left) ==
          Rational(-1) * Element::basis(oct, 2));
    CHECK(expectation(one_site(psi), M, Bracketing::right) ==
          Rational(-1) * Element::basis(oct, 2));

    // weights scale linearly and sites add
    StateVector two({{Rational(1, 2), Element::basis(oct, 1)},
                     {Rational(1, 3), Element::basis(oct, 4)}});
    Element by_hand = Rational(1, 2) * mul(mul(conj(Element::basis(oct, 1)), M),
                                           Element::basis(oct, 1)) +
                      Rational(1, 3) * mul(mul(conj(Element::basis(oct, 4)), M),
                                           Element::basis(oct, 4));
    CHECK(expectation(two, M, Bracketing::left) == by_hand);
}

TEST_CASE("the defect equals the weighted associator sum") {
    std::mt19937 rng(1122334455);
    for (const char* name : {"oct", "sed"}) {
        AlgebraPtr alg = named_algebra(name);
        for (int it = 0; it < 120; ++it) {
            StateVector psi = random_state(rng, alg);
            Element M = random_element(rng, alg);
            Element lhs = bracketing_defect(psi, M);
            CHECK(lhs == defect_oracle(psi, M));
            CHECK(lhs == expectation(psi, M, Bracketing::left) -
                             expectation(psi, M, Bracketing::right));
            // flexibility of any doubled algebra forces a vanishing defect
            CHECK(lhs.is_zero());
        }
    }
}

TEST_CASE("a non-flexible algebra shows a nonzero defect") {
    AlgebraPtr nf = nonflex3();
    StateVector psi = one_site(Element::basis(nf, 2));
    Element M = Element::basis(nf, 1);
    Element defect = bracketing_defect(psi, M);
    CHECK(defect == Rational(-2) * Element::basis(nf, 0));
    CHECK(defect == defect_oracle(psi, M));
    CHECK(defect ==
          expectation(psi, M, Bracketing::left) - expectation(psi, M, Bracketing::right));

    std::mt19937 rng(606060);
    for (int it = 0; it < 150; ++it) {
        StateVector s = random_state(rng, nf);
        Element op = random_element(rng, nf);
        CHECK(bracketing_defect(s, op) == defect_oracle(s, op));
    }
}

TEST_CASE("the defect vanishes for nucleus operators") {
    std::mt19937 rng(51015);
    AlgebraPtr nf = nonflex3();
    Subspace nuc = nucleus(nf);
    for (int it = 0; it < 60; ++it) {
        StateVector psi = random_state(rng, nf);
        for (const Element& n : nuc.basis())
            CHECK(bracketing_defect(psi, Rational(rand_int(rng, -3, 3) * 2 + 1) * n).is_zero());
    }
}

TEST_CASE("the defect vanishes inside an associative closure") {
    // operands from the classified-associative quaternionic closure of the
    // octonions: every bracketing ambiguity disappears
    std::mt19937 rng(71727);
    AlgebraPtr oct = named_algebra("oct");
    ObservabilityReport rep =
        classify({Element::basis(oct, 1), Element::basis(oct, 2)});
    REQUIRE(rep.observable);
    std::vector<Element> basis = rep.closure.basis();
    for (int it = 0; it < 80; ++it) {
        auto pick = [&] {
            Element acc = Element::zero(oct);
            for (const Element& b : basis)
                acc = acc + Rational(rand_int(rng, -3, 3)) * b;
            return acc;
        };
        Element v = pick();
        if (v.is_zero()) continue;
        StateVector psi = one_site(v, Rational(rand_int(rng, 1, 5)));
        CHECK(bracketing_defect(psi, pick()).is_zero());
    }
}

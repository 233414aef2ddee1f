#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/algebra.hpp"
#include "hecke/sampling.hpp"

using namespace hecke;

namespace {

HeckeAlgebra<Fq> alg_q(int n) { return HeckeAlgebra<Fq>(n, Fq::gen()); }

HeckeElt<Fq> random_elt(const HeckeAlgebra<Fq>& alg, Sampler& s, std::mt19937& rng, int terms) {
    HeckeElt<Fq> e = alg.zero();
    int n = alg.rank();
    for (int t = 0; t < terms; ++t) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[i] = i + 1;
        std::shuffle(img.begin(), img.end(), rng);
        HeckeAlgebra<Fq>::add_term(e, Perm::from_one_line(std::move(img)), s.ratfunc(2));
    }
    return e;
}

} // namespace

TEST_CASE("quadratic relation forces (T1+1)^2 = (q+1)(T1+1)") {
    auto alg = alg_q(2);
    auto e2 = alg.add(alg.t(1), alg.one());
    auto sq = alg.mul(e2, e2);
    CHECK(sq == alg.scale(e2, Fq::gen() + Fq::one()));
    CHECK(sq == alg.scale(e2, q_factorial(2)));
}

TEST_CASE("length-increasing products concatenate") {
    auto alg = alg_q(3);
    auto p = alg.mul(alg.t(1), alg.t(2));
    CHECK(p == alg.basis(word_to_perm(std::vector<int>{1, 2}, 3)));
}

TEST_CASE("e_sum") {
    auto a1 = alg_q(1);
    CHECK(e_sum(a1) == a1.one());
    auto a2 = alg_q(2);
    CHECK(e_sum(a2) == a2.add(a2.one(), a2.t(1)));
    auto a3 = alg_q(3);
    auto e3 = e_sum(a3);
    CHECK(e3.terms.size() == 6);
    for (const auto& [w, c] : e3.terms) CHECK(c.is_one());
}

TEST_CASE("T_k e_sum = q e_sum and e_sum^2 = q-factorial e_sum, small ranks") {
    for (int n = 1; n <= 4; ++n) {
        auto alg = alg_q(n);
        auto en = e_sum(alg);
        for (int k = 1; k < n; ++k) {
            CHECK(alg.mul(alg.t(k), en) == alg.scale(en, Fq::gen()));
            CHECK(alg.mul(en, alg.t(k)) == alg.scale(en, Fq::gen()));
        }
        CHECK(alg.mul(en, en) == alg.scale(en, q_factorial(n)));
    }
}

TEST_CASE("embedding shifts letters") {
    auto a3 = alg_q(3);
    auto a4 = alg_q(4);
    auto a6 = alg_q(6);
    CHECK(embed(a3, 0, alg_q(2).t(1)) == a3.t(1));
    CHECK(embed(a6, 2, alg_q(2).add(alg_q(2).one(), alg_q(2).t(1))) == a6.add(a6.one(), a6.t(3)));
    auto t1t2 = alg_q(3).mul(alg_q(3).t(1), alg_q(3).t(2));
    auto t2t3 = a4.mul(a4.t(2), a4.t(3));
    CHECK(embed(a4, 1, t1t2) == t2t3);
    CHECK(e_sum_embedded(a6, 2, 2) == embed(a6, 2, e_sum(alg_q(2))));
    CHECK_THROWS_AS(embed(a3, 2, alg_q(2).t(1)), field_error);
}

TEST_CASE("embedding is an algebra homomorphism") {
    Sampler s(17);
    std::mt19937 rng(17);
    auto a3 = alg_q(3);
    auto a5 = alg_q(5);
    for (int t = 0; t < 10; ++t) {
        auto a = random_elt(a3, s, rng, 3);
        auto b = random_elt(a3, s, rng, 3);
        CHECK(embed(a5, 1, a3.mul(a, b)) == a5.mul(embed(a5, 1, a), embed(a5, 1, b)));
    }
}

TEST_CASE("omega") {
    auto a3 = alg_q(3);
    CHECK(a3.omega(a3.one()) == a3.one());
    CHECK(a3.omega(a3.t(1)) == a3.t(2));
    Sampler s(23);
    std::mt19937 rng(23);
    auto a4 = alg_q(4);
    for (int t = 0; t < 10; ++t) {
        auto a = random_elt(a4, s, rng, 3);
        auto b = random_elt(a4, s, rng, 3);
        CHECK(a4.omega(a4.omega(a)) == a);
        CHECK(a4.omega(a4.mul(a, b)) == a4.mul(a4.omega(a), a4.omega(b)));
    }
}

TEST_CASE("braid relations hold as products of generators") {
    for (int n = 3; n <= 5; ++n) {
        auto alg = alg_q(n);
        for (int k = 1; k + 1 < n; ++k) {
            auto lhs = alg.mul(alg.mul(alg.t(k), alg.t(k + 1)), alg.t(k));
            auto rhs = alg.mul(alg.mul(alg.t(k + 1), alg.t(k)), alg.t(k + 1));
            CHECK(lhs == rhs);
        }
        for (int k = 1; k < n; ++k)
            for (int l = k + 2; l < n; ++l)
                CHECK(alg.mul(alg.t(k), alg.t(l)) == alg.mul(alg.t(l), alg.t(k)));
    }
}

TEST_CASE("products of basis elements stay polynomial in q") {
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        int n = 3 + static_cast<int>(rng() % 3);
        auto alg = alg_q(n);
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[i] = i + 1;
        std::shuffle(img.begin(), img.end(), rng);
        Perm u = Perm::from_one_line(img);
        std::shuffle(img.begin(), img.end(), rng);
        Perm v = Perm::from_one_line(img);
        auto p = alg.mul(alg.basis(u), alg.basis(v));
        for (const auto& [w, c] : p.terms) {
            CHECK(c.is_polynomial());
            for (const auto& coef : c.num().coeffs()) CHECK(coef.den() == 1);
        }
    }
}

TEST_CASE("associativity on random elements") {
    Sampler s(71);
    std::mt19937 rng(71);
    auto a4 = alg_q(4);
    for (int t = 0; t < 8; ++t) {
        auto a = random_elt(a4, s, rng, 3);
        auto b = random_elt(a4, s, rng, 3);
        auto c = random_elt(a4, s, rng, 3);
        CHECK(a4.mul(a4.mul(a, b), c) == a4.mul(a, a4.mul(b, c)));
    }
}

TEST_CASE("leading terms") {
    auto a2 = alg_q(2);
    auto e = a2.add(a2.one(), a2.t(1));
    auto lead = leading_terms(e);
    REQUIRE(lead.size() == 1);
    CHECK(lead[0].first == Perm::simple(2, 1));
    CHECK(lead[0].second.is_one());
    CHECK_THROWS_AS(leading_terms(a2.zero()), field_error);
}

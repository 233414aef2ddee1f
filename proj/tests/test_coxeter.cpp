#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/coxeter.hpp"

using namespace hecke;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    return Perm::from_one_line(std::move(img));
}

} // namespace

TEST_CASE("composition") {
    Perm id(3), s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
    CHECK(compose(id, s1) == s1);
    CHECK(compose(s1, s1) == id);
    CHECK(compose(s1, s2) == Perm::from_one_line({2, 3, 1}));
    CHECK_THROWS_AS(compose(Perm(3), Perm(4)), field_error);
}

TEST_CASE("length and inversion sets") {
    CHECK(Perm(4).length() == 0);
    CHECK(Perm(4).inversion_set().empty());

    Perm w0 = Perm::longest(3);
    CHECK(w0.length() == 3);
    CHECK(w0.inversion_set() == std::vector<Pair>{{1, 2}, {1, 3}, {2, 3}});

    std::vector<int> word{1, 3, 4, 3, 5, 4, 2, 1, 3, 2, 1};
    Perm w = word_to_perm(word, 6);
    CHECK(w.length() == 11);
    CHECK(Perm::longest(6).length() == 15);
}

TEST_CASE("words") {
    CHECK(word_to_perm(std::vector<int>{}, 3) == Perm(3));
    CHECK(word_to_perm(std::vector<int>{1, 2, 1}, 3) == Perm::longest(3));
    CHECK_THROWS_AS(word_to_perm(std::vector<int>{3}, 3), field_error);
}

TEST_CASE("order_to_word inverts the inversion recursion") {
    std::vector<Pair> lex{{1, 2}, {1, 3}, {2, 3}};
    CHECK(order_to_word(lex, 3) == std::vector<int>{1, 2, 1});

    std::vector<Pair> rev{{2, 3}, {1, 3}, {1, 2}};
    CHECK(order_to_word(rev, 3) == std::vector<int>{2, 1, 2});

    // not a convex order: (1,3) cannot come first
    std::vector<Pair> bad{{1, 3}, {1, 2}, {2, 3}};
    CHECK_THROWS_AS(order_to_word(bad, 3), convexity_error);
}

TEST_CASE("lexicographic and endpoint orders are convex") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<Pair> o1 = all_pairs(n);   // already lexicographic
        std::vector<Pair> o2 = o1;
        std::sort(o2.begin(), o2.end(), [](const Pair& x, const Pair& y) {
            return x.j != y.j ? x.j < y.j : x.i < y.i;
        });
        CHECK(is_convex_order_of_all(o1, n));
        CHECK(is_convex_order_of_all(o2, n));
        CHECK(word_to_perm(order_to_word(o1, n), n) == Perm::longest(n));
        CHECK(word_to_perm(order_to_word(o2, n), n) == Perm::longest(n));
    }
}

TEST_CASE("reduced words, exchange, inverse round trips") {
    std::mt19937 rng(2718);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng() % 6);
        Perm w = random_perm(n, rng);
        auto word = w.reduced_word();
        CHECK(static_cast<int>(word.size()) == w.length());
        CHECK(word_to_perm(word, n) == w);
        CHECK(compose(w, w.inverse()) == Perm(n));
        CHECK(static_cast<int>(w.inversion_set().size()) == w.length());

        int k = 1 + static_cast<int>(rng() % (n - 1));
        int dl = w.mul_right_s(k).length() - w.length();
        CHECK((dl == 1 || dl == -1));
        CHECK(w.mul_right_s(k) == compose(w, Perm::simple(n, k)));
        CHECK(w.mul_left_s(k) == compose(Perm::simple(n, k), w));
    }
}

TEST_CASE("inversion sets reconstruct the permutation") {
    std::mt19937 rng(31415);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        Perm w = random_perm(n, rng);
        // feeding the inversion set in the order generated by any reduced
        // word of w must reproduce w
        auto word = w.reduced_word();
        std::vector<Pair> betas;
        Perm prefix(n);
        for (int k : word) {
            auto [beta, pos] = prefix.apply_root({k, k + 1});
            CHECK(pos);
            betas.push_back(beta);
            prefix = prefix.mul_right_s(k);
        }
        CHECK(word_to_perm(order_to_word(betas, n), n) == w);
        auto inv = w.inversion_set();
        std::vector<Pair> sorted_betas = betas;
        std::sort(sorted_betas.begin(), sorted_betas.end());
        CHECK(sorted_betas == inv);
    }
}

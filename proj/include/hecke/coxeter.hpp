#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

// A positive root u_i - u_j of type A_{n-1}, identified with the pair (i, j),
// 1 <= i < j <= n. Indices are 1-based throughout.
struct Pair {
    int i = 0;
    int j = 0;
    friend bool operator==(const Pair&, const Pair&) = default;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

// Permutation of {1..n} in one-line notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(static_cast<size_t>(n)) {
        for (int k = 1; k <= n; ++k) img_[k - 1] = k;
    }
    static Perm from_one_line(std::vector<int> img);
    static Perm simple(int n, int k);   // s_k
    static Perm longest(int n);         // w_0

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int k) const { return img_[k - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;

    // w s_k and s_k w.
    Perm mul_right_s(int k) const;
    Perm mul_left_s(int k) const;
    // True iff l(w s_k) > l(w), i.e. w(k) < w(k+1).
    bool right_ascent(int k) const { return img_[k - 1] < img_[k]; }
    // True iff l(s_k w) > l(w).
    bool left_ascent(int k) const;

    int length() const;
    // I_w = {(i,j) : i < j, w^{-1}(i) > w^{-1}(j)}, the inversions of w^{-1},
    // returned in lexicographic order.
    std::vector<Pair> inversion_set() const;

    // Some reduced word, built by stripping right descents.
    std::vector<int> reduced_word() const;

    // Image of the root (i, j); negative means w(i) > w(j).
    std::pair<Pair, bool> apply_root(const Pair& p) const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

    std::string str() const;

private:
    std::vector<int> img_;
};

// (u o v)(k) = u(v(k)).
Perm compose(const Perm& u, const Perm& v);

// Product s_{k_1} ... s_{k_m}; indices must lie in 1..n-1.
Perm word_to_perm(std::span<const int> word, int n);

// Recover the reduced word whose k-th generated inversion is the k-th pair
// of the given sequence. Throws convexity_error if some prefix is not an
// inversion set (equivalently, the sequence is not a convex order of a
// biconvex set).
std::vector<int> order_to_word(std::span<const Pair> order, int n);

// Direct check of the convex-order conditions for a total order on all of
// Delta+: for every i < k < j the pair (i,j) sits strictly between (i,k)
// and (k,j). Independent of the word recursion above.
bool is_convex_order_of_all(std::span<const Pair> order, int n);

// All pairs (i,j), 1 <= i < j <= n, lexicographic.
std::vector<Pair> all_pairs(int n);

} // namespace hecke

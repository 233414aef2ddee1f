#include "hecke/coxeter.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

Perm Perm::from_one_line(std::vector<int> img) {
    int n = static_cast<int>(img.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : img) {
        if (v < 1 || v > n || seen[v]) throw field_error("not a permutation of {1..n}");
        seen[v] = 1;
    }
    Perm p;
    p.img_ = std::move(img);
    return p;
}

Perm Perm::simple(int n, int k) {
    Perm p(n);
    return p.mul_right_s(k);
}

Perm Perm::longest(int n) {
    Perm p;
    p.img_.resize(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) p.img_[k - 1] = n - k + 1;
    return p;
}

bool Perm::is_identity() const {
    for (int k = 1; k <= size(); ++k)
        if (img_[k - 1] != k) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm p;
    p.img_.resize(img_.size());
    for (int k = 1; k <= size(); ++k) p.img_[img_[k - 1] - 1] = k;
    return p;
}

Perm Perm::mul_right_s(int k) const {
    if (k < 1 || k >= size()) throw field_error("generator index out of range");
    Perm p = *this;
    std::swap(p.img_[k - 1], p.img_[k]);
    return p;
}

Perm Perm::mul_left_s(int k) const {
    if (k < 1 || k >= size()) throw field_error("generator index out of range");
    Perm p = *this;
    for (auto& v : p.img_) {
        if (v == k) v = k + 1;
        else if (v == k + 1) v = k;
    }
    return p;
}

bool Perm::left_ascent(int k) const {
    int pos_k = 0, pos_k1 = 0;
    for (int i = 1; i <= size(); ++i) {
        if (img_[i - 1] == k) pos_k = i;
        else if (img_[i - 1] == k + 1) pos_k1 = i;
    }
    return pos_k < pos_k1;
}

int Perm::length() const {
    int n = size(), l = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (img_[a - 1] > img_[b - 1]) ++l;
    return l;
}

std::vector<Pair> Perm::inversion_set() const {
    const Perm w_inv = inverse();
    std::vector<Pair> inv;
    int n = size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w_inv.img_[i - 1] > w_inv.img_[j - 1]) inv.push_back({i, j});
    return inv;
}

std::vector<int> Perm::reduced_word() const {
    std::vector<int> word;
    Perm w = *this;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int k = 1; k < w.size(); ++k) {
            if (w.img_[k - 1] > w.img_[k]) {   // right descent: w = (w s_k) s_k
                word.push_back(k);
                std::swap(w.img_[k - 1], w.img_[k]);
                moved = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::pair<Pair, bool> Perm::apply_root(const Pair& p) const {
    int a = img_[p.i - 1], b = img_[p.j - 1];
    if (a < b) return {{a, b}, true};
    return {{b, a}, false};
}

std::string Perm::str() const {
    std::string s = "[";
    for (int k = 1; k <= size(); ++k) {
        if (k > 1) s += ",";
        s += std::to_string(img_[k - 1]);
    }
    return s + "]";
}

Perm compose(const Perm& u, const Perm& v) {
    if (u.size() != v.size()) throw field_error("permutation rank mismatch");
    std::vector<int> img(static_cast<size_t>(u.size()));
    for (int k = 1; k <= u.size(); ++k) img[k - 1] = u(v(k));
    return Perm::from_one_line(std::move(img));
}

Perm word_to_perm(std::span<const int> word, int n) {
    Perm p(n);
    for (int k : word) p = p.mul_right_s(k);
    return p;
}

std::vector<int> order_to_word(std::span<const Pair> order, int n) {
    std::vector<int> word;
    word.reserve(order.size());
    Perm prefix(n);
    Perm prefix_inv(n);
    for (size_t pos = 0; pos < order.size(); ++pos) {
        const Pair& beta = order[pos];
        if (beta.i < 1 || beta.j > n || beta.i >= beta.j)
            throw convexity_error("pair out of range", static_cast<int>(pos));
        auto [gamma, positive] = prefix_inv.apply_root(beta);
        if (!positive || gamma.j != gamma.i + 1)
            throw convexity_error(
                "prefix is not an inversion set at pair (" + std::to_string(beta.i) + "," +
                    std::to_string(beta.j) + ")",
                static_cast<int>(pos));
        word.push_back(gamma.i);
        prefix = prefix.mul_right_s(gamma.i);
        prefix_inv = prefix.inverse();
    }
    return word;
}

bool is_convex_order_of_all(std::span<const Pair> order, int n) {
    size_t m = static_cast<size_t>(n) * (n - 1) / 2;
    if (order.size() != m) return false;
    std::vector<std::vector<int>> pos(static_cast<size_t>(n) + 1,
                                      std::vector<int>(static_cast<size_t>(n) + 1, -1));
    for (size_t t = 0; t < order.size(); ++t) {
        const Pair& p = order[t];
        if (p.i < 1 || p.j > n || p.i >= p.j || pos[p.i][p.j] >= 0) return false;
        pos[p.i][p.j] = static_cast<int>(t);
    }
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = k + 1; j <= n; ++j) {
                int a = pos[i][k], b = pos[k][j], c = pos[i][j];
                if (!((a < c && c < b) || (b < c && c < a))) return false;
            }
    return true;
}

std::vector<Pair> all_pairs(int n) {
    std::vector<Pair> v;
    v.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) v.push_back({i, j});
    return v;
}

} // namespace hecke

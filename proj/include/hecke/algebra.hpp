#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/concepts.hpp"
#include "hecke/coxeter.hpp"
#include "hecke/parallel.hpp"
#include "hecke/ratfunc.hpp"

namespace hecke {

// Element of the finite Hecke algebra in the T_w basis: a finite map from
// permutations of {1..n} to nonzero coefficients.
template <field F>
struct HeckeElt {
    int n = 0;
    std::map<Perm, F> terms;

    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
        return a.n == b.n && a.terms == b.terms;
    }

    std::string str(const char* var = "q") const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms) {
            if (!s.empty()) s += "  +  ";
            s += "(" + c.str(var) + ")*T" + w.str();
        }
        return s;
    }
};

// The algebra h_n over F with quadratic parameter q: T_w T_k = T_{w s_k}
// when the length goes up, and (q-1) T_w + q T_{w s_k} otherwise.
template <field F>
class HeckeAlgebra {
public:
    HeckeAlgebra(int n, F q) : n_(n), q_(std::move(q)), qm1_(q_ - F::one()) {}

    int rank() const { return n_; }
    const F& q() const { return q_; }

    HeckeElt<F> zero() const { return HeckeElt<F>{n_, {}}; }
    HeckeElt<F> scalar(const F& c) const {
        HeckeElt<F> e{n_, {}};
        if (!c.is_zero()) e.terms.emplace(Perm(n_), c);
        return e;
    }
    HeckeElt<F> one() const { return scalar(F::one()); }
    HeckeElt<F> basis(const Perm& w) const {
        check_rank(w.size());
        HeckeElt<F> e{n_, {}};
        e.terms.emplace(w, F::one());
        return e;
    }
    HeckeElt<F> t(int k) const { return basis(Perm::simple(n_, k)); }

    static void add_term(HeckeElt<F>& a, const Perm& w, const F& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = a.terms.emplace(w, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) a.terms.erase(it);
        }
    }

    HeckeElt<F> add(const HeckeElt<F>& a, const HeckeElt<F>& b) const {
        check_rank(a.n, b.n);
        HeckeElt<F> r = a;
        for (const auto& [w, c] : b.terms) add_term(r, w, c);
        return r;
    }
    HeckeElt<F> sub(const HeckeElt<F>& a, const HeckeElt<F>& b) const {
        check_rank(a.n, b.n);
        HeckeElt<F> r = a;
        for (const auto& [w, c] : b.terms) add_term(r, w, -c);
        return r;
    }
    HeckeElt<F> scale(const HeckeElt<F>& a, const F& c) const {
        HeckeElt<F> r{a.n, {}};
        if (c.is_zero()) return r;
        for (const auto& [w, cw] : a.terms) r.terms.emplace(w, cw * c);
        return r;
    }

    // Right action of one generator: v T_k.
    HeckeElt<F> mul_gen(const HeckeElt<F>& v, int k) const {
        HeckeElt<F> r{v.n, {}};
        for (const auto& [w, c] : v.terms) {
            if (w.right_ascent(k)) {
                add_term(r, w.mul_right_s(k), c);
            } else {
                add_term(r, w, c * qm1_);
                add_term(r, w.mul_right_s(k), c * q_);
            }
        }
        return r;
    }

    // Left action of one generator: T_k v.
    HeckeElt<F> mul_gen_left(int k, const HeckeElt<F>& v) const {
        HeckeElt<F> r{v.n, {}};
        for (const auto& [w, c] : v.terms) {
            if (w.left_ascent(k)) {
                add_term(r, w.mul_left_s(k), c);
            } else {
                add_term(r, w, c * qm1_);
                add_term(r, w.mul_left_s(k), c * q_);
            }
        }
        return r;
    }

    // v T_w for a basis word.
    HeckeElt<F> mul_word(HeckeElt<F> v, std::span<const int> word) const {
        for (int k : word) v = mul_gen(v, k);
        return v;
    }

    // Bilinear product. The right factor is folded term by term through the
    // reduced words of its basis permutations; the per-term partial products
    // are independent, which is what the parallel path exploits.
    HeckeElt<F> mul(const HeckeElt<F>& a, const HeckeElt<F>& b,
                    ExecPolicy policy = ExecPolicy::Serial) const {
        check_rank(a.n, b.n);
        std::vector<std::pair<const Perm*, const F*>> rhs;
        rhs.reserve(b.terms.size());
        for (const auto& [w, c] : b.terms) rhs.emplace_back(&w, &c);

        std::vector<HeckeElt<F>> partial(rhs.size());
        parallel_for(rhs.size(), policy, [&](std::size_t i) {
            auto word = rhs[i].first->reduced_word();
            partial[i] = scale(mul_word(a, word), *rhs[i].second);
        });

        HeckeElt<F> r{n_, {}};
        for (auto& p : partial)
            for (auto& [w, c] : p.terms) add_term(r, w, c);
        return r;
    }

    // The involutive automorphism T_k -> T_{n-k}; on the basis it sends
    // T_w to T_{w0 w w0} with the coefficient unchanged.
    HeckeElt<F> omega(const HeckeElt<F>& a) const {
        HeckeElt<F> r{a.n, {}};
        for (const auto& [w, c] : a.terms) {
            std::vector<int> img(static_cast<size_t>(n_));
            for (int i = 1; i <= n_; ++i) img[i - 1] = n_ + 1 - w(n_ + 1 - i);
            r.terms.emplace(Perm::from_one_line(std::move(img)), c);
        }
        return r;
    }

private:
    void check_rank(int m) const {
        if (m != n_) throw field_error("rank mismatch in Hecke algebra");
    }
    void check_rank(int m, int k) const {
        check_rank(m);
        check_rank(k);
    }

    int n_;
    F q_;
    F qm1_;
};

// Sum of all T_w over S_m, as an element of the given algebra (m = rank).
template <field F>
HeckeElt<F> e_sum(const HeckeAlgebra<F>& alg) {
    int n = alg.rank();
    HeckeElt<F> r = alg.zero();
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    do {
        r.terms.emplace(Perm::from_one_line(img), F::one());
    } while (std::next_permutation(img.begin(), img.end()));
    return r;
}

// iota_h: h_m -> h_n, T_k -> T_{k+h}, applied to an element of rank m.
template <field F>
HeckeElt<F> embed(const HeckeAlgebra<F>& target, int h, const HeckeElt<F>& a) {
    int n = target.rank(), m = a.n;
    if (h < 0 || h + m > n) throw field_error("embedding window out of range");
    HeckeElt<F> r = target.zero();
    for (const auto& [w, c] : a.terms) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) img[i - 1] = i;
        for (int i = 1; i <= m; ++i) img[h + i - 1] = h + w(i);
        r.terms.emplace(Perm::from_one_line(std::move(img)), c);
    }
    return r;
}

// E_m^{(h)} inside the target algebra.
template <field F>
HeckeElt<F> e_sum_embedded(const HeckeAlgebra<F>& target, int m, int h) {
    HeckeAlgebra<F> small(m, target.q());
    return embed(target, h, e_sum(small));
}

// All terms whose permutation attains the maximal length present.
template <field F>
std::vector<std::pair<Perm, F>> leading_terms(const HeckeElt<F>& a) {
    if (a.is_zero()) throw field_error("leading terms of zero element");
    int best = -1;
    for (const auto& [w, c] : a.terms) best = std::max(best, w.length());
    std::vector<std::pair<Perm, F>> out;
    for (const auto& [w, c] : a.terms)
        if (w.length() == best) out.emplace_back(w, c);
    return out;
}

template <field F, typename Fn>
auto map_coeffs(const HeckeElt<F>& a, Fn&& f) {
    using G = std::decay_t<decltype(f(std::declval<F>()))>;
    HeckeElt<G> r{a.n, {}};
    for (const auto& [w, c] : a.terms) {
        G g = f(c);
        if (!g.is_zero()) r.terms.emplace(w, std::move(g));
    }
    return r;
}

} // namespace hecke

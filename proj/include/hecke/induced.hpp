#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/diagram.hpp"
#include "hecke/parallel.hpp"

namespace hecke {

// Character of the commutative subalgebra: the values chi(X_1..X_n),
// all nonzero.
template <field F>
struct Character {
    std::vector<F> values;

    int n() const { return static_cast<int>(values.size()); }
    const F& operator()(int k) const { return values[k - 1]; }

    bool is_regular() const {
        for (size_t a = 0; a < values.size(); ++a)
            for (size_t b = a + 1; b < values.size(); ++b)
                if (values[a] == values[b]) return false;
        return true;
    }

    friend bool operator==(const Character&, const Character&) = default;
};

template <field F>
Character<F> make_character(std::vector<F> values) {
    for (const F& v : values)
        if (v.is_zero()) throw field_error("character with zero value");
    return Character<F>{std::move(values)};
}

// chi_lambda(X_k) = q^{c_k}.
template <field F>
Character<F> character_of(const HeckeAlgebra<F>& alg, const Diagram& d) {
    Filling f = fill_rows(d);
    std::vector<F> vals;
    vals.reserve(f.content.size());
    for (int c : f.content) {
        F x = F::one();
        if (c > 0)
            for (int t = 0; t < c; ++t) x = x * alg.q();
        else
            for (int t = 0; t < -c; ++t) x = x / alg.q();
        vals.push_back(std::move(x));
    }
    return make_character(std::move(vals));
}

// (w0 . chi)(X_k) = chi(X_{n-k+1}).
template <field F>
Character<F> w0_twist(const Character<F>& chi) {
    std::vector<F> vals(chi.values.rbegin(), chi.values.rend());
    return Character<F>{std::move(vals)};
}

// The induced module realized on h_n, with the X action computed by
// straightening along reduced words:
//   X_k . 1        = chi(X_k)
//   X_k . (T_l u)  = T_l (X_k . u)                      k != l, l+1
//   X_l . (T_l u)  = T_l (X_{l+1} . u) - (q-1)(X_{l+1} . u)
//   X_{l+1}.(T_l u)= T_l (X_l . u) + (q-1)(X_{l+1} . u)
// The defining relations (X1)-(X3) are enforced on these rules by the
// operator test suite, not assumed.
template <field F>
class InducedModule {
public:
    InducedModule(const HeckeAlgebra<F>& alg, Character<F> chi)
        : alg_(alg), chi_(std::move(chi)) {
        if (chi_.n() != alg_.rank()) throw field_error("character rank mismatch");
    }

    const Character<F>& chi() const { return chi_; }
    const HeckeAlgebra<F>& algebra() const { return alg_; }

    HeckeElt<F> act_X(int k, const HeckeElt<F>& v) const {
        HeckeElt<F> out = alg_.zero();
        for (const auto& [w, c] : v.terms) {
            const HeckeElt<F>& image = act_basis(k, w);
            for (const auto& [u, cu] : image.terms)
                HeckeAlgebra<F>::add_term(out, u, cu * c);
        }
        return out;
    }

    // X_k T_w, memoized.
    const HeckeElt<F>& act_basis(int k, const Perm& w) const {
        auto key = std::make_pair(k, w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        HeckeElt<F> result;
        if (w.is_identity()) {
            result = alg_.scalar(chi_(k));
        } else {
            int l = 0;
            for (int t = 1; t < alg_.rank(); ++t)
                if (!w.left_ascent(t)) { l = t; break; }
            Perm u = w.mul_left_s(l);   // w = s_l u with l(u) = l(w) - 1
            const F qm1 = alg_.q() - F::one();
            if (k != l && k != l + 1) {
                result = alg_.mul_gen_left(l, act_basis(k, u));
            } else if (k == l) {
                const HeckeElt<F>& a = act_basis(l + 1, u);
                result = alg_.sub(alg_.mul_gen_left(l, a), alg_.scale(a, qm1));
            } else {
                const HeckeElt<F>& a = act_basis(l, u);
                const HeckeElt<F>& b = act_basis(l + 1, u);
                result = alg_.add(alg_.mul_gen_left(l, a), alg_.scale(b, qm1));
            }
        }
        return memo_.emplace(std::move(key), std::move(result)).first->second;
    }

private:
    const HeckeAlgebra<F>& alg_;
    Character<F> chi_;
    mutable std::map<std::pair<int, Perm>, HeckeElt<F>> memo_;
};

template <field F>
struct IntertwinerReport {
    bool ok = true;
    int k = 0;           // first failing X index
    Perm witness;        // first failing basis vector
};

// All of S_n sorted by length then one-line notation, so every non-identity
// entry appears after all its left quotients s_l w.
template <field F>
std::vector<Perm> sorted_basis(const HeckeAlgebra<F>& alg) {
    int n = alg.rank();
    std::vector<Perm> basis;
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    do basis.push_back(Perm::from_one_line(img));
    while (std::next_permutation(img.begin(), img.end()));
    std::stable_sort(basis.begin(), basis.end(), [](const Perm& a, const Perm& b) {
        return a.length() < b.length();
    });
    return basis;
}

// Right multiplication by E as a map I_src -> I_tgt: checks
// X_k . (T_w E) = (X_k . T_w) E for all k and all basis vectors.
// The table {T_w E} is built by single generator steps along the weak
// order, and both sides reuse the memoized straightenings.
template <field F>
IntertwinerReport<F> check_intertwiner(const HeckeAlgebra<F>& alg, const HeckeElt<F>& E,
                                       const Character<F>& chi_src, const Character<F>& chi_tgt,
                                       ExecPolicy policy = ExecPolicy::Serial) {
    int n = alg.rank();
    std::vector<Perm> basis = sorted_basis(alg);
    std::map<Perm, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    std::vector<HeckeElt<F>> table(basis.size());
    table[0] = E;
    for (size_t i = 1; i < basis.size(); ++i) {
        int l = 0;
        for (int t = 1; t < n; ++t)
            if (!basis[i].left_ascent(t)) { l = t; break; }
        table[i] = alg.mul_gen_left(l, table[index.at(basis[i].mul_left_s(l))]);
    }

    InducedModule<F> src(alg, chi_src);
    InducedModule<F> tgt(alg, chi_tgt);
    // fill both memo tables up front; the parallel loop only reads them
    for (int k = 1; k <= n; ++k)
        for (const Perm& w : basis) {
            src.act_basis(k, w);
            tgt.act_basis(k, w);
        }
    std::vector<int> fail(basis.size(), 0);
    parallel_for(basis.size(), policy, [&](std::size_t i) {
        for (int k = 1; k <= n; ++k) {
            // X_k . (T_w E) via the straightening of each basis term
            HeckeElt<F> lhs = alg.zero();
            for (const auto& [v, d] : table[i].terms) {
                const HeckeElt<F>& col = tgt.act_basis(k, v);
                for (const auto& [u, cu] : col.terms)
                    HeckeAlgebra<F>::add_term(lhs, u, cu * d);
            }
            // (X_k . T_w) E via the same table
            HeckeElt<F> rhs = alg.zero();
            for (const auto& [u, c] : src.act_basis(k, basis[i]).terms) {
                for (const auto& [v, d] : table[index.at(u)].terms)
                    HeckeAlgebra<F>::add_term(rhs, v, c * d);
            }
            if (!(lhs == rhs)) {
                fail[i] = k;
                break;
            }
        }
    });
    for (size_t i = 0; i < basis.size(); ++i)
        if (fail[i]) return {false, fail[i], basis[i]};
    return {true, 0, Perm(n)};
}

// E is an eigenvector in I_{w0 . chi_lambda} with eigenvalues q^{c_k}.
template <field F>
bool eigencheck(const HeckeAlgebra<F>& alg, const Diagram& d, const HeckeElt<F>& E) {
    Character<F> chi = character_of(alg, d);
    InducedModule<F> mod(alg, w0_twist(chi));
    for (int k = 1; k <= alg.rank(); ++k)
        if (!(mod.act_X(k, E) == alg.scale(E, chi(k)))) return false;
    return true;
}

// Rank of a list of elements by exact Gaussian elimination in the T basis.
template <field F>
int rank_of(std::vector<HeckeElt<F>> rows, ExecPolicy policy = ExecPolicy::Serial) {
    if (rows.empty()) return 0;
    std::map<Perm, int> col;
    for (const auto& e : rows)
        for (const auto& [w, c] : e.terms)
            col.emplace(w, 0);
    int m = 0;
    for (auto& [w, idx] : col) idx = m++;

    std::vector<std::vector<F>> mat(rows.size(), std::vector<F>(static_cast<size_t>(m), F::zero()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [w, c] : rows[r].terms) mat[r][col[w]] = c;

    int rank = 0;
    size_t top = 0;
    for (int c = 0; c < m && top < mat.size(); ++c) {
        size_t piv = top;
        while (piv < mat.size() && mat[piv][c].is_zero()) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[top], mat[piv]);
        const F inv = F::one() / mat[top][c];
        for (int cc = c; cc < m; ++cc) mat[top][cc] = mat[top][cc] * inv;
        parallel_for(mat.size() - top - 1, policy, [&](std::size_t off) {
            size_t r = top + 1 + off;
            if (mat[r][c].is_zero()) return;
            const F f = mat[r][c];
            for (int cc = c; cc < m; ++cc)
                mat[r][cc] = mat[r][cc] - f * mat[top][cc];
        });
        ++top;
        ++rank;
    }
    return rank;
}

// Dimension over F of the span of {T_w E : w in S_n}.
template <field F>
int cyclic_dim(const HeckeAlgebra<F>& alg, const HeckeElt<F>& E,
               ExecPolicy policy = ExecPolicy::Serial) {
    int n = alg.rank();
    std::vector<Perm> basis;
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    do basis.push_back(Perm::from_one_line(img));
    while (std::next_permutation(img.begin(), img.end()));

    std::vector<HeckeElt<F>> rows(basis.size());
    parallel_for(basis.size(), policy,
                 [&](std::size_t i) { rows[i] = alg.mul(alg.basis(basis[i]), E); });
    return rank_of(std::move(rows), policy);
}

} // namespace hecke

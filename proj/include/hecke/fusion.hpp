#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/diagram.hpp"

namespace hecke {

enum class StepKind { Scalar, Plain, Fused, RowSum, ParallelScalar };

// One step of a closed-form product for E. Every pair of Delta+ is consumed
// by exactly one step.
struct PlanStep {
    StepKind kind = StepKind::Plain;
    Pair pair{};          // Plain / Scalar: the pair; Fused: the R pair
    Pair partner{};       // Fused: the adjacent partner
    int gen = 0;          // Plain: generator index j - i
    int fuse_k = 0;       // Fused: k = j - i - 1
    bool plus = false;    // Fused orientation: T_{k+1}T_k... vs T_kT_{k+1}...
    int row = 0;          // RowSum: row index
    int m = 0;            // RowSum / ParallelScalar: row length
    int h = 0;            // RowSum: entries in earlier parallel rows
    std::pair<int, int> row_pair{};  // ParallelScalar: the two parallel rows

    std::string tag() const {
        switch (kind) {
            case StepKind::Scalar: return "scalar";
            case StepKind::Plain: return "plain";
            case StepKind::Fused: return "fused";
            case StepKind::RowSum: return "row_sum";
            case StepKind::ParallelScalar: return "parallel_scalar";
        }
        return "?";
    }
};

struct FusionPlan {
    int n = 0;
    std::vector<PlanStep> steps;
};

// Step lists of the two closed forms, read off the special order.
FusionPlan limiting_plan(const Diagram& d);
FusionPlan shortening_plan(const Diagram& d);

// f_m = (-1)^m q^{m(m-1)/2} (q^m - 1).
inline Fq f_scalar(int m) {
    Fq qp = q_power(static_cast<long>(m) * (m - 1) / 2);
    Fq sign = (m % 2 == 0) ? Fq::one() : -Fq::one();
    return sign * qp * (q_power(m) - Fq::one());
}

template <field F>
F f_scalar_at(const HeckeAlgebra<F>& alg, int m) {
    const F& q = alg.q();
    F qp = F::one();
    long e = static_cast<long>(m) * (m - 1) / 2;
    for (long t = 0; t < e; ++t) qp = qp * q;
    F qm = F::one();
    for (int t = 0; t < m; ++t) qm = qm * q;
    F val = qp * (qm - F::one());
    return (m % 2 == 0) ? val : -val;
}

// T_{j-i} + <q^{c_j - c_i}> for a non-singular pair.
template <field F>
HeckeElt<F> factor_value(const HeckeAlgebra<F>& alg, const Pair& p, const Filling& f) {
    int dc = f.content[p.j - 1] - f.content[p.i - 1];
    if (dc == 0) throw pole_error("factor value at singular pair", 1);
    F x = F::one();
    const F& q = alg.q();
    if (dc > 0)
        for (int t = 0; t < dc; ++t) x = x * q;
    else
        for (int t = 0; t < -dc; ++t) x = x / q;
    return alg.add(alg.t(p.j - p.i), alg.scalar(bracket(x, q)));
}

// The three-term fusion factor. minus: T_k T_{k+1} - q T_{k+1} - q;
// plus: T_{k+1} T_k - q T_{k+1} - q.
template <field F>
HeckeElt<F> three_term(const HeckeAlgebra<F>& alg, int k, bool plus) {
    if (k < 1 || k > alg.rank() - 2) throw field_error("three-term index out of range");
    const F& q = alg.q();
    HeckeElt<F> prod = plus ? alg.mul(alg.t(k + 1), alg.t(k)) : alg.mul(alg.t(k), alg.t(k + 1));
    prod = alg.sub(prod, alg.scale(alg.t(k + 1), q));
    prod = alg.sub(prod, alg.scalar(q));
    return prod;
}

template <field F>
HeckeElt<F> execute_plan(const HeckeAlgebra<F>& alg, const FusionPlan& plan, const Filling& f) {
    HeckeElt<F> acc = alg.one();
    for (const PlanStep& s : plan.steps) {
        switch (s.kind) {
            case StepKind::Scalar:
                acc = alg.scale(acc, F::one() - alg.q());
                break;
            case StepKind::Plain:
                acc = alg.mul(acc, factor_value(alg, s.pair, f));
                break;
            case StepKind::Fused:
                acc = alg.mul(acc, three_term(alg, s.fuse_k, s.plus));
                break;
            case StepKind::RowSum:
                acc = alg.mul(acc, e_sum_embedded(alg, s.m, s.h));
                break;
            case StepKind::ParallelScalar:
                acc = alg.scale(acc, f_scalar_at(alg, s.m));
                break;
        }
    }
    return acc;
}

// E by the limiting recipe: special order, fused pairs for R, the scalar
// (1-q) for singular pairs outside R, plain evaluation elsewhere.
template <field F>
HeckeElt<F> compute_E_limiting(const HeckeAlgebra<F>& alg, const Diagram& d) {
    return execute_plan(alg, limiting_plan(d), fill_rows(d));
}

// E by the shortened recipe: whole within-row blocks become E_m^{(h)} and
// whole parallel-row blocks become the scalar f_m.
template <field F>
HeckeElt<F> compute_E_shortening(const HeckeAlgebra<F>& alg, const Diagram& d) {
    return execute_plan(alg, shortening_plan(d), fill_rows(d));
}

// Ordered product of (T_{i_k} + <x_{j}/x_{i}>) along a convex order; the
// generator letters are recovered from the order itself.
template <field F>
HeckeElt<F> phi_product(const HeckeAlgebra<F>& alg, std::span<const Pair> order,
                        std::span<const F> x) {
    std::vector<int> word = order_to_word(order, alg.rank());
    HeckeElt<F> acc = alg.one();
    for (size_t t = 0; t < order.size(); ++t) {
        const Pair& b = order[t];
        F ratio = x[b.j - 1] / x[b.i - 1];
        HeckeElt<F> factor = alg.add(alg.t(word[t]), alg.scalar(bracket(ratio, alg.q())));
        acc = alg.mul(acc, factor);
    }
    return acc;
}

// Same product built from an explicit reduced word, tracking the generated
// inversions beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}).
template <field F>
HeckeElt<F> phi_product_word(const HeckeAlgebra<F>& alg, std::span<const int> word,
                             std::span<const F> x) {
    HeckeElt<F> acc = alg.one();
    Perm prefix(alg.rank());
    for (size_t t = 0; t < word.size(); ++t) {
        auto [beta, positive] = prefix.apply_root({word[t], word[t] + 1});
        if (!positive) throw field_error("word is not reduced in phi product");
        F ratio = x[beta.j - 1] / x[beta.i - 1];
        acc = alg.mul(acc, alg.add(alg.t(word[t]), alg.scalar(bracket(ratio, alg.q()))));
        prefix = prefix.mul_right_s(word[t]);
    }
    return acc;
}

// Exponents of the one-parameter curve x_k = q^{c_k} z^{e_{row(k)}} used by
// the limit oracle; pairwise distinct per row.
struct RestrictionChart {
    std::vector<int> exponent;

    static RestrictionChart standard(int row_count) {
        RestrictionChart c;
        c.exponent.resize(static_cast<size_t>(row_count));
        for (int i = 0; i < row_count; ++i) c.exponent[i] = i + 1;
        return c;
    }
};

// Direct realization of the defining limit: multiply all elementary factors
// of phi_0 (lexicographic order) over the curve, multiply by the restricted
// correction factor, reduce every coefficient and substitute z = 1. Works
// for arbitrary row lists; a pole at z = 1 propagates as pole_error.
template <field Inner>
HeckeElt<Inner> compute_E_oracle(std::span<const Row> rows, const RestrictionChart& chart,
                                 const Inner& q_inner) {
    using Outer = RatFunc<Inner>;
    Filling f = fill_rows(rows);
    int n = f.n();
    if (chart.exponent.size() != rows.size())
        throw field_error("restriction chart size mismatch");
    {
        std::vector<int> e = chart.exponent;
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw field_error("restriction chart exponents must be distinct");
    }

    const Outer q = Outer::constant(q_inner);
    const Outer z = Outer::gen();
    auto power = [](const Outer& base, int e) { return base.pow(e); };

    std::vector<Outer> x(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        x[k - 1] = power(q, f.content[k - 1]) * power(z, chart.exponent[f.row_of[k - 1] - 1]);

    HeckeAlgebra<Outer> alg(n, q);
    HeckeElt<Outer> acc = phi_product(alg, all_pairs(n), std::span<const Outer>(x));

    // delta restricted to the curve: one factor 1 - x_l/x_k per pair of
    // leftmost boxes of two parallel rows
    ParallelData pd = parallel_data(rows);
    Outer delta = Outer::one();
    for (const auto& [ri, rj] : pd.row_pairs) {
        int k = f.row_first[ri - 1];
        int l = f.row_first[rj - 1];
        delta = delta * (Outer::one() - x[l - 1] / x[k - 1]);
    }
    acc = alg.scale(acc, delta);

    return map_coeffs(acc, [&](const Outer& c) { return c.eval(Inner::one()); });
}

inline HeckeElt<Fq> compute_E_oracle_symbolic(std::span<const Row> rows,
                                              const RestrictionChart& chart) {
    return compute_E_oracle<Fq>(rows, chart, Fq::gen());
}

inline HeckeElt<Rat> compute_E_oracle_specialized(std::span<const Row> rows,
                                                  const RestrictionChart& chart, const Rat& q0) {
    return compute_E_oracle<Rat>(rows, chart, q0);
}

} // namespace hecke

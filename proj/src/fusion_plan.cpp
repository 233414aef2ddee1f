#include "hecke/fusion.hpp"

#include "hecke/errors.hpp"

namespace hecke {

FusionPlan limiting_plan(const Diagram& d) {
    SpecialOrder so = special_order(d);
    FusionPlan plan;
    plan.n = d.degree();
    std::vector<char> done(so.entries.size(), 0);
    for (size_t p = 0; p < so.entries.size(); ++p) {
        if (done[p]) continue;
        const OrderEntry& e = so.entries[p];
        if (e.in_R) {
            // e = + : the R pair comes first, its partner follows
            if (e.e_sign > 0) {
                PlanStep s;
                s.kind = StepKind::Fused;
                s.pair = e.pair;
                s.partner = so.entries[e.partner_pos].pair;
                s.fuse_k = e.pair.j - e.pair.i - 1;
                s.plus = true;
                plan.steps.push_back(s);
                done[p] = done[e.partner_pos] = 1;
                continue;
            }
            throw field_error("minus-oriented R pair reached before its partner");
        }
        // e = - : the partner comes first; look ahead one position
        if (p + 1 < so.entries.size() && so.entries[p + 1].in_R &&
            so.entries[p + 1].e_sign < 0 && so.entries[p + 1].partner_pos == static_cast<int>(p)) {
            const OrderEntry& xi = so.entries[p + 1];
            PlanStep s;
            s.kind = StepKind::Fused;
            s.pair = xi.pair;
            s.partner = e.pair;
            s.fuse_k = xi.pair.j - xi.pair.i - 1;
            s.plus = false;
            plan.steps.push_back(s);
            done[p] = done[p + 1] = 1;
            continue;
        }
        if (e.singular) {
            PlanStep s;
            s.kind = StepKind::Scalar;
            s.pair = e.pair;
            plan.steps.push_back(s);
            done[p] = 1;
            continue;
        }
        PlanStep s;
        s.kind = StepKind::Plain;
        s.pair = e.pair;
        s.gen = e.gen_index;
        plan.steps.push_back(s);
        done[p] = 1;
    }
    return plan;
}

FusionPlan shortening_plan(const Diagram& d) {
    const auto& rows = d.rows();
    Filling f = fill_rows(d);
    SpecialOrder so = special_order(d);
    FusionPlan plan;
    plan.n = d.degree();

    std::vector<int> h(rows.size(), 0);
    for (size_t k = 0; k < rows.size(); ++k)
        for (size_t p = 0; p < k; ++p)
            if (rows_parallel(rows[p], static_cast<int>(p) + 1, rows[k], static_cast<int>(k) + 1))
                h[k] += f.row_size[p];

    std::vector<char> done(so.entries.size(), 0);
    for (size_t p = 0; p < so.entries.size(); ++p) {
        if (done[p]) continue;
        const OrderEntry& e = so.entries[p];
        // whole within-row block -> E_m^{(h)}
        if (e.row_i == e.row_j) {
            PlanStep s;
            s.kind = StepKind::RowSum;
            s.row = e.row_i;
            s.m = f.row_size[e.row_i - 1];
            s.h = h[e.row_i - 1];
            plan.steps.push_back(s);
            for (size_t t = p; t < so.entries.size(); ++t)
                if (so.entries[t].row_i == e.row_i && so.entries[t].row_j == e.row_j) done[t] = 1;
            continue;
        }
        // whole block of two distinct parallel rows -> f_m
        if (rows_parallel(rows[e.row_i - 1], e.row_i, rows[e.row_j - 1], e.row_j)) {
            PlanStep s;
            s.kind = StepKind::ParallelScalar;
            s.row_pair = {e.row_i, e.row_j};
            s.m = f.row_size[e.row_i - 1];
            plan.steps.push_back(s);
            for (size_t t = p; t < so.entries.size(); ++t)
                if (so.entries[t].row_i == e.row_i && so.entries[t].row_j == e.row_j) done[t] = 1;
            continue;
        }
        // remaining blocks are handled exactly as in the limiting plan
        if (e.in_R) {
            if (e.e_sign > 0) {
                PlanStep s;
                s.kind = StepKind::Fused;
                s.pair = e.pair;
                s.partner = so.entries[e.partner_pos].pair;
                s.fuse_k = e.pair.j - e.pair.i - 1;
                s.plus = true;
                plan.steps.push_back(s);
                done[p] = done[e.partner_pos] = 1;
                continue;
            }
            throw field_error("minus-oriented R pair reached before its partner");
        }
        if (p + 1 < so.entries.size() && so.entries[p + 1].in_R &&
            so.entries[p + 1].e_sign < 0 && so.entries[p + 1].partner_pos == static_cast<int>(p)) {
            const OrderEntry& xi = so.entries[p + 1];
            PlanStep s;
            s.kind = StepKind::Fused;
            s.pair = xi.pair;
            s.partner = e.pair;
            s.fuse_k = xi.pair.j - xi.pair.i - 1;
            s.plus = false;
            plan.steps.push_back(s);
            done[p] = done[p + 1] = 1;
            continue;
        }
        if (e.singular)
            throw field_error("singular pair outside R survived block shortening");
        PlanStep s;
        s.kind = StepKind::Plain;
        s.pair = e.pair;
        s.gen = e.gen_index;
        plan.steps.push_back(s);
        done[p] = 1;
    }
    return plan;
}

} // namespace hecke

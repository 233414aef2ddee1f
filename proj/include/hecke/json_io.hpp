#pragma once

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "hecke/algebra.hpp"
#include "hecke/diagram.hpp"
#include "hecke/fusion.hpp"
#include "hecke/ratfunc.hpp"

namespace hecke {

using json = nlohmann::json;

// Coefficients serialize as integer-pair strings at the rational level and
// as {"num": [...], "den": [...]} at each fraction-field level above it.
inline json to_json(const Rat& r) { return r.str(); }
inline Rat rat_from_json(const json& j) { return Rat::parse(j.get<std::string>()); }

template <field F>
json to_json(const RatFunc<F>& f) {
    json num = json::array();
    for (const auto& c : f.num().coeffs()) num.push_back(to_json(c));
    json den = json::array();
    for (const auto& c : f.den().coeffs()) den.push_back(to_json(c));
    return json{{"num", std::move(num)}, {"den", std::move(den)}};
}

inline Fq fq_from_json(const json& j) {
    std::vector<Rat> num, den;
    for (const auto& c : j.at("num")) num.push_back(rat_from_json(c));
    for (const auto& c : j.at("den")) den.push_back(rat_from_json(c));
    return Fq::of(Poly<Rat>::from_coeffs(std::move(num)), Poly<Rat>::from_coeffs(std::move(den)));
}

inline Fqz fqz_from_json(const json& j) {
    std::vector<Fq> num, den;
    for (const auto& c : j.at("num")) num.push_back(fq_from_json(c));
    for (const auto& c : j.at("den")) den.push_back(fq_from_json(c));
    return Fqz::of(Poly<Fq>::from_coeffs(std::move(num)), Poly<Fq>::from_coeffs(std::move(den)));
}

// {"n": n, "terms": [{"perm": [...], "coeff": ...}]} sorted by length then
// one-line notation, for byte-stable golden files.
template <field F>
json to_json(const HeckeElt<F>& e) {
    std::vector<const std::pair<const Perm, F>*> items;
    items.reserve(e.terms.size());
    for (const auto& t : e.terms) items.push_back(&t);
    std::stable_sort(items.begin(), items.end(), [](const auto* x, const auto* y) {
        int lx = x->first.length(), ly = y->first.length();
        if (lx != ly) return lx < ly;
        return x->first.one_line() < y->first.one_line();
    });
    json terms = json::array();
    for (const auto* t : items)
        terms.push_back(json{{"perm", t->first.one_line()}, {"coeff", to_json(t->second)}});
    return json{{"n", e.n}, {"terms", std::move(terms)}};
}

inline HeckeElt<Fq> hecke_fq_from_json(const json& j) {
    HeckeElt<Fq> e{j.at("n").get<int>(), {}};
    for (const auto& t : j.at("terms")) {
        Perm w = Perm::from_one_line(t.at("perm").get<std::vector<int>>());
        Fq c = fq_from_json(t.at("coeff"));
        if (!c.is_zero()) e.terms.emplace(std::move(w), std::move(c));
    }
    return e;
}

inline json to_json(const Pair& p) { return json::array({p.i, p.j}); }

inline json to_json(const PlanStep& s) {
    json j{{"step", s.tag()}};
    switch (s.kind) {
        case StepKind::Scalar:
            j["pair"] = to_json(s.pair);
            break;
        case StepKind::Plain:
            j["pair"] = to_json(s.pair);
            j["gen"] = s.gen;
            break;
        case StepKind::Fused:
            j["pairs"] = json::array({to_json(s.pair), to_json(s.partner)});
            j["k"] = s.fuse_k;
            j["orientation"] = s.plus ? "plus" : "minus";
            break;
        case StepKind::RowSum:
            j["row"] = s.row;
            j["m"] = s.m;
            j["h"] = s.h;
            break;
        case StepKind::ParallelScalar:
            j["rows"] = json::array({s.row_pair.first, s.row_pair.second});
            j["m"] = s.m;
            break;
    }
    return j;
}

inline json to_json(const FusionPlan& p) {
    json steps = json::array();
    for (const auto& s : p.steps) steps.push_back(to_json(s));
    return json{{"n", p.n}, {"steps", std::move(steps)}};
}

inline json to_json(const SpecialOrder& so) {
    json blocks = json::array();
    json cur = json::array();
    std::pair<int, int> blk{-1, -1};
    for (size_t p = 0; p < so.entries.size(); ++p) {
        if (so.block_of[p] != blk) {
            if (!cur.empty())
                blocks.push_back(json{{"rows", json::array({blk.first, blk.second})},
                                      {"pairs", std::move(cur)}});
            cur = json::array();
            blk = so.block_of[p];
        }
        const OrderEntry& e = so.entries[p];
        json je{{"pair", to_json(e.pair)},
                {"gen", e.gen_index},
                {"e", e.e_sign < 0 ? "-" : "+"},
                {"singular", e.singular},
                {"in_R", e.in_R}};
        if (e.partner_pos >= 0) je["partner"] = to_json(so.entries[e.partner_pos].pair);
        cur.push_back(std::move(je));
    }
    if (!cur.empty())
        blocks.push_back(
            json{{"rows", json::array({blk.first, blk.second})}, {"pairs", std::move(cur)}});
    return json{{"blocks", std::move(blocks)}};
}

} // namespace hecke

#include "hecke/verify.hpp"

#include <algorithm>
#include <set>

#include "hecke/fusion.hpp"
#include "hecke/induced.hpp"
#include "hecke/sampling.hpp"

namespace hecke {

namespace {

std::vector<Diagram> corpus(const VerifyOptions& opt) {
    std::vector<Diagram> all;
    for (int deg = 1; deg <= opt.degree; ++deg)
        for (auto& d : enumerate_diagrams(deg, opt.window)) all.push_back(std::move(d));
    return all;
}

// stable per-diagram seed, independent of sweep order and thread count
unsigned mix_seed(unsigned base, size_t index) {
    unsigned x = base ^ static_cast<unsigned>(index * 2654435761u);
    x ^= x >> 16;
    x *= 2246822519u;
    x ^= x >> 13;
    return x;
}

using Results = std::vector<CheckResult>;

// run one check per diagram of the corpus, in parallel, results in corpus order
template <typename Fn>
Results sweep(const char* name, const VerifyOptions& opt, Fn&& per_diagram) {
    std::vector<Diagram> all = corpus(opt);
    Results out(all.size());
    parallel_for(all.size(), opt.policy, [&](std::size_t i) {
        CheckResult r;
        r.check = name;
        r.diagram = format_diagram(all[i]);
        try {
            r.detail = per_diagram(all[i], i);
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        out[i] = std::move(r);
    });
    return out;
}

std::string check_structure(const Diagram& d) {
    const auto& rows = d.rows();
    int r = d.row_count();
    int n = d.degree();

    for (int i = 1; i <= r; ++i)
        for (int j = i + 2; j <= r; ++j) {
            if (rows[i - 1].b - i != rows[j - 1].b - j) continue;
            for (int k = i + 1; k < j; ++k)
                if (rows[k - 1].b - k != rows[i - 1].b - i)
                    return "row between equal diagonals escapes the diagonal";
            if (rows_parallel(rows[i - 1], i, rows[j - 1], j))
                for (int k = i + 1; k < j; ++k)
                    if (!rows_parallel(rows[i - 1], i, rows[k - 1], k))
                        return "row between parallel rows is not parallel";
        }

    SpecialOrder so = special_order(d);   // partner assertions run inside
    auto pairs = so.pairs();
    if (!is_convex_order_of_all(pairs, n)) return "special order is not convex";
    auto word = order_to_word(pairs, n);
    for (size_t t = 0; t < pairs.size(); ++t)
        if (word[t] != pairs[t].j - pairs[t].i) return "index law fails";
    if (!(word_to_perm(word, n) == Perm::longest(n)))
        return "special order word is not the longest element";

    auto pd = parallel_data(d);
    int in_R = 0;
    std::set<Pair> partners;
    for (size_t p = 0; p < so.entries.size(); ++p) {
        const auto& e = so.entries[p];
        if (!e.in_R) continue;
        ++in_R;
        if (e.partner_pos < 0 || std::abs(e.partner_pos - static_cast<int>(p)) != 1)
            return "fused partner is not adjacent";
        if (so.entries[e.partner_pos].singular) return "fused partner is singular";
        partners.insert(so.entries[e.partner_pos].pair);
    }
    if (in_R != pd.d_lambda - pd.p_lambda) return "|R| != d - p";
    if (static_cast<int>(partners.size()) != in_R) return "fused partners collide";

    auto wl = w_lambda(d);   // reducedness asserted inside
    if (static_cast<int>(wl.word.size()) != wl.perm.length()) return "w_lambda not reduced";
    return {};
}

std::string check_equality(const Diagram& d) {
    HeckeAlgebra<Fq> alg(d.degree(), Fq::gen());
    auto a = compute_E_limiting(alg, d);
    auto b = compute_E_shortening(alg, d);
    if (!(a == b)) return "limiting and shortening disagree";
    if (a.is_zero()) return "E is zero";
    return {};
}

std::string check_oracle(const Diagram& d, size_t index, const VerifyOptions& opt) {
    auto chart = RestrictionChart::standard(d.row_count());
    Sampler s(mix_seed(opt.q_seed, index));
    int n = d.degree();
    for (int t = 0; t < opt.oracle_points; ++t) {
        Rat q0 = s.q_point(n);
        auto oracle = compute_E_oracle_specialized(std::span(d.rows()), chart, q0);
        HeckeAlgebra<Rat> ar(n, q0);
        if (!(oracle == compute_E_limiting(ar, d)))
            return "specialized oracle mismatch at q0 = " + q0.str();
    }
    if (n <= opt.symbolic_degree) {
        auto oracle = compute_E_oracle_symbolic(std::span(d.rows()), chart);
        HeckeAlgebra<Fq> alg(n, Fq::gen());
        if (!(oracle == compute_E_limiting(alg, d))) return "symbolic oracle mismatch";
    }
    return {};
}

std::string check_leading(const Diagram& d) {
    HeckeAlgebra<Fq> alg(d.degree(), Fq::gen());
    auto E = compute_E_shortening(alg, d);
    if (E.is_zero()) return "E is zero";
    auto lead = leading_terms(E);
    if (lead.size() != 1) return "maximal-length term is not unique";
    auto wl = w_lambda(d);
    if (!(lead[0].first == wl.perm)) return "top permutation is not w_lambda";
    Fq expect = Fq::one();
    for (const auto& [m, pm] : parallel_data(d).p_m) expect = expect * f_scalar(m).pow(pm);
    if (!(lead[0].second == expect)) return "top coefficient is not prod f_m^{p_m}";
    return {};
}

std::string check_eigen(const Diagram& d) {
    HeckeAlgebra<Fq> alg(d.degree(), Fq::gen());
    auto E = compute_E_limiting(alg, d);
    if (!eigencheck(alg, d, E)) return "eigenvector property fails";
    return {};
}

std::string check_intertwiner_one(const Diagram& d, size_t index, const VerifyOptions& opt) {
    int n = d.degree();
    if (n <= opt.symbolic_degree) {
        HeckeAlgebra<Fq> alg(n, Fq::gen());
        auto E = compute_E_limiting(alg, d);
        auto chi = character_of(alg, d);
        auto rep = check_intertwiner(alg, E, chi, w0_twist(chi));
        if (!rep.ok)
            return "intertwiner fails at X_" + std::to_string(rep.k) + ", T" + rep.witness.str();
        return {};
    }
    Sampler s(mix_seed(opt.q_seed ^ 0x9e3779b9u, index));
    for (int t = 0; t < opt.oracle_points; ++t) {
        Rat q0 = s.q_point(n);
        HeckeAlgebra<Rat> ar(n, q0);
        auto E = compute_E_limiting(ar, d);
        auto chi = character_of(ar, d);
        auto rep = check_intertwiner(ar, E, chi, w0_twist(chi));
        if (!rep.ok)
            return "intertwiner fails at q0 = " + q0.str() + ", X_" + std::to_string(rep.k) +
                   ", T" + rep.witness.str();
    }
    return {};
}

Results run_relations(const VerifyOptions& opt) {
    Results out;
    Sampler s(opt.q_seed ^ 0x51f15eedu);
    for (int n = 2; n <= std::min(opt.degree, 4); ++n) {
        CheckResult r;
        r.check = "relations";
        r.diagram = "n=" + std::to_string(n);
        r.pass = true;
        HeckeAlgebra<Fq> alg(n, Fq::gen());

        std::vector<Fq> vals;
        while (vals.size() < static_cast<size_t>(n)) {
            Fq c = Fq::constant(s.rat_nonzero());
            bool dup = false;
            for (const auto& v : vals) dup = dup || v == c;
            if (!dup) vals.push_back(c);
        }
        InducedModule<Fq> mod(alg, make_character(std::move(vals)));

        for (const Perm& w : sorted_basis(alg)) {
            auto v = alg.basis(w);
            for (int k = 1; k <= n && r.pass; ++k)
                for (int l = k + 1; l <= n && r.pass; ++l)
                    if (!(mod.act_X(k, mod.act_X(l, v)) == mod.act_X(l, mod.act_X(k, v)))) {
                        r.pass = false;
                        r.detail = "(X1) fails at T" + w.str();
                    }
            for (int k = 1; k < n && r.pass; ++k) {
                for (int l = 1; l <= n && r.pass; ++l) {
                    if (l == k || l == k + 1) continue;
                    if (!(mod.act_X(l, alg.mul_gen_left(k, v)) ==
                          alg.mul_gen_left(k, mod.act_X(l, v)))) {
                        r.pass = false;
                        r.detail = "(X2) fails at T" + w.str();
                    }
                }
                if (r.pass &&
                    !(alg.mul_gen_left(k, mod.act_X(k, alg.mul_gen_left(k, v))) ==
                      alg.scale(mod.act_X(k + 1, v), Fq::gen()))) {
                    r.pass = false;
                    r.detail = "(X3) fails at T" + w.str();
                }
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }
    return out;
}

Results run_yang_baxter(const VerifyOptions& opt) {
    Results out;
    Sampler s(opt.q_seed ^ 0x17b00bau);

    CheckResult yb{"yang-baxter", "braid move", true, ""};
    HeckeAlgebra<Fq> a3(3, Fq::gen());
    for (int t = 0; t < opt.random_instances && yb.pass; ++t) {
        Fq x = Fq::constant(s.spectral_point());
        Fq z = Fq::constant(s.spectral_point());
        if ((x * z).is_one()) continue;
        auto lhs = a3.mul(a3.mul(a3.add(a3.t(1), a3.scalar(bracket(x))),
                                 a3.add(a3.t(2), a3.scalar(bracket(x * z)))),
                          a3.add(a3.t(1), a3.scalar(bracket(z))));
        auto rhs = a3.mul(a3.mul(a3.add(a3.t(2), a3.scalar(bracket(z))),
                                 a3.add(a3.t(1), a3.scalar(bracket(x * z)))),
                          a3.add(a3.t(2), a3.scalar(bracket(x))));
        if (!(lhs == rhs)) {
            yb.pass = false;
            yb.detail = "braid move fails at x = " + x.str() + ", z = " + z.str();
        }
    }
    out.push_back(std::move(yb));

    CheckResult comm{"yang-baxter", "commuting move", true, ""};
    HeckeAlgebra<Fq> a4(4, Fq::gen());
    for (int t = 0; t < opt.random_instances && comm.pass; ++t) {
        Fq x = Fq::constant(s.spectral_point());
        Fq z = Fq::constant(s.spectral_point());
        auto f1 = a4.add(a4.t(1), a4.scalar(bracket(x)));
        auto f3 = a4.add(a4.t(3), a4.scalar(bracket(z)));
        if (!(a4.mul(f1, f3) == a4.mul(f3, f1))) {
            comm.pass = false;
            comm.detail = "commuting move fails at x = " + x.str() + ", z = " + z.str();
        }
    }
    out.push_back(std::move(comm));

    // two reduced words of the longest element agree at random points
    for (int n : {3, 4}) {
        CheckResult words{"yang-baxter", "word independence n=" + std::to_string(n), true, ""};
        HeckeAlgebra<Fq> alg(n, Fq::gen());
        std::vector<int> w1, w2;
        if (n == 3) {
            w1 = {1, 2, 1};
            w2 = {2, 1, 2};
        } else {
            w1 = {1, 2, 1, 3, 2, 1};
            w2 = {3, 2, 3, 1, 2, 3};
        }
        for (int t = 0; t < 20 && words.pass; ++t) {
            std::vector<Fq> x;
            while (x.size() < static_cast<size_t>(n)) {
                Fq c = Fq::constant(s.rat_nonzero());
                bool dup = false;
                for (const auto& v : x) dup = dup || v == c;
                if (!dup) x.push_back(c);
            }
            auto va = phi_product_word(alg, w1, std::span<const Fq>(x));
            auto vb = phi_product_word(alg, w2, std::span<const Fq>(x));
            if (!(va == vb)) {
                words.pass = false;
                words.detail = "reduced words disagree at sample " + std::to_string(t);
            }
        }
        out.push_back(std::move(words));
    }
    return out;
}

Results run_bijection(const VerifyOptions& opt) {
    Results out;
    CheckResult fwd{"bijection", "corpus", true, ""};
    for (const Diagram& d : corpus(opt)) {
        if (!(from_multisegment(to_multisegment(d)) == d)) {
            fwd.pass = false;
            fwd.detail = "from(to(.)) != id at " + format_diagram(d);
            break;
        }
    }
    out.push_back(fwd);

    CheckResult bwd{"bijection", "random multisegments", true, ""};
    Sampler s(opt.q_seed ^ 0xb1ecu);
    for (int t = 0; t < opt.random_instances; ++t) {
        Multisegment m;
        int parts = 1 + s.int_in(0, 4);
        for (int p = 0; p < parts; ++p) {
            int i = s.int_in(-4, 4);
            ++m.mult[{i, i + s.int_in(0, 3)}];
        }
        if (!(to_multisegment(from_multisegment(m)) == m)) {
            bwd.pass = false;
            bwd.detail = "to(from(.)) != id at " + format_multisegment(m);
            break;
        }
    }
    out.push_back(bwd);
    return out;
}

std::string check_reflection(const Diagram& d) {
    auto bar = bar_diagram(d);
    auto chart = RestrictionChart::standard(static_cast<int>(bar.size()));
    auto val = compute_E_oracle_symbolic(std::span<const Row>(bar), chart);
    HeckeAlgebra<Fq> alg(d.degree(), Fq::gen());
    if (!(val == alg.omega(compute_E_limiting(alg, d))))
        return "reflected limit differs from omega(E)";
    return {};
}

} // namespace

std::vector<std::string> suite_names() {
    return {"structure", "equality", "oracle",      "leading",   "eigen",
            "intertwiner", "relations", "yang-baxter", "bijection", "reflection"};
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "structure")
        return sweep("structure", opt, [](const Diagram& d, size_t) { return check_structure(d); });
    if (name == "equality")
        return sweep("equality", opt, [](const Diagram& d, size_t) { return check_equality(d); });
    if (name == "oracle")
        return sweep("oracle", opt,
                     [&](const Diagram& d, size_t i) { return check_oracle(d, i, opt); });
    if (name == "leading")
        return sweep("leading", opt, [](const Diagram& d, size_t) { return check_leading(d); });
    if (name == "eigen")
        return sweep("eigen", opt, [](const Diagram& d, size_t) { return check_eigen(d); });
    if (name == "intertwiner")
        return sweep("intertwiner", opt,
                     [&](const Diagram& d, size_t i) { return check_intertwiner_one(d, i, opt); });
    if (name == "relations") return run_relations(opt);
    if (name == "yang-baxter") return run_yang_baxter(opt);
    if (name == "bijection") return run_bijection(opt);
    if (name == "reflection") {
        VerifyOptions capped = opt;
        capped.degree = std::min(opt.degree, opt.symbolic_degree);
        return sweep("reflection", capped,
                     [](const Diagram& d, size_t) { return check_reflection(d); });
    }
    throw field_error("unknown suite '" + name + "'");
}

std::vector<CheckResult> run_diagram_checks(const Diagram& d, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto one = [&](const char* name, auto&& fn) {
        CheckResult r;
        r.check = name;
        r.diagram = format_diagram(d);
        try {
            r.detail = fn();
            r.pass = r.detail.empty();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    };
    one("structure", [&] { return check_structure(d); });
    one("equality", [&] { return check_equality(d); });
    one("oracle", [&] { return check_oracle(d, 0, opt); });
    one("leading", [&] { return check_leading(d); });
    if (d.degree() <= 6) {
        one("eigen", [&] { return check_eigen(d); });
        one("intertwiner", [&] { return check_intertwiner_one(d, 0, opt); });
    }
    if (d.degree() <= opt.symbolic_degree) one("reflection", [&] { return check_reflection(d); });
    return out;
}

} // namespace hecke

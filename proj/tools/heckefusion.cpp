// Command-line frontend: compute and inspect the cyclic generators, run the
// verification suites, convert between diagrams and multisegments.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hecke/fusion.hpp"
#include "hecke/induced.hpp"
#include "hecke/json_io.hpp"
#include "hecke/sampling.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string input;
    bool as_json = false;
    bool expanded = false;
    std::string oracle = "symbolic";
    unsigned q_seed = 1;
    int degree = 4;
    int window = 4;
};

// Inputs may be a diagram row list or a multisegment; multisegments are
// mapped through the bijection.
Diagram read_diagram(const std::string& text) {
    if (text.find('*') != std::string::npos || text.find('+') != std::string::npos)
        return from_multisegment(parse_multisegment(text));
    return parse_diagram(text);
}

std::string step_str(const PlanStep& s, const Filling& f) {
    switch (s.kind) {
        case StepKind::Scalar:
            return "(1-q)";
        case StepKind::Plain: {
            int dc = f.content[s.pair.j - 1] - f.content[s.pair.i - 1];
            Fq b = bracket(q_power(dc));
            if (b.is_zero()) return "(T" + std::to_string(s.gen) + ")";
            std::string c = b.str();
            bool neg = !c.empty() && c[0] == '-';
            if (neg) c.erase(0, 1);
            bool wrap = c.find_first_of("+-/* ") != std::string::npos;
            if (wrap) c = "(" + c + ")";
            return "(T" + std::to_string(s.gen) + (neg ? " - " : " + ") + c + ")";
        }
        case StepKind::Fused: {
            std::string k = std::to_string(s.fuse_k);
            std::string k1 = std::to_string(s.fuse_k + 1);
            std::string head = s.plus ? "T" + k1 + " T" + k : "T" + k + " T" + k1;
            return "(" + head + " - q T" + k1 + " - q)";
        }
        case StepKind::RowSum:
            return "E_" + std::to_string(s.m) + "^(" + std::to_string(s.h) + ")";
        case StepKind::ParallelScalar:
            return "f_" + std::to_string(s.m);
    }
    return "?";
}

std::string step_annotation(const PlanStep& s) {
    auto pair = [](const Pair& p) {
        return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
    };
    switch (s.kind) {
        case StepKind::Scalar: return "singular pair " + pair(s.pair) + " outside R";
        case StepKind::Plain: return "pair " + pair(s.pair);
        case StepKind::Fused:
            return "fused pair " + pair(s.pair) + " with partner " + pair(s.partner);
        case StepKind::RowSum: return "row " + std::to_string(s.row);
        case StepKind::ParallelScalar:
            return "parallel rows (" + std::to_string(s.row_pair.first) + "," +
                   std::to_string(s.row_pair.second) + ")";
    }
    return {};
}

void print_element(std::ostream& os, const HeckeElt<Fq>& e) {
    std::vector<const std::pair<const Perm, Fq>*> items;
    for (const auto& t : e.terms) items.push_back(&t);
    std::stable_sort(items.begin(), items.end(), [](const auto* x, const auto* y) {
        int lx = x->first.length(), ly = y->first.length();
        if (lx != ly) return lx > ly;
        return x->first.one_line() < y->first.one_line();
    });
    for (const auto* t : items)
        os << "  (" << t->second.str() << ") T" << t->first.str() << "\n";
}

int cmd_compute(const Options& opt) {
    Diagram d = read_diagram(opt.input);
    int n = d.degree();
    HeckeAlgebra<Fq> alg(n, Fq::gen());
    Filling f = fill_rows(d);

    FusionPlan lim = limiting_plan(d);
    FusionPlan sh = shortening_plan(d);
    HeckeElt<Fq> e_lim = execute_plan(alg, lim, f);
    HeckeElt<Fq> e_sh = execute_plan(alg, sh, f);
    bool equal = e_lim == e_sh;

    auto lead = leading_terms(e_sh);
    auto wl = w_lambda(d);

    if (opt.as_json) {
        json j{{"diagram", format_diagram(d)},
               {"n", n},
               {"plan_limiting", to_json(lim)},
               {"plan_shortening", to_json(sh)},
               {"equal", equal},
               {"leading",
                json{{"perm", lead[0].first.one_line()},
                     {"word", wl.word},
                     {"length", lead[0].first.length()},
                     {"coeff", to_json(lead[0].second)}}}};
        if (opt.expanded) j["element"] = to_json(e_sh);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "diagram " << format_diagram(d) << "  (degree " << n << ")\n"
                  << ascii_diagram(std::span(d.rows()));
        std::cout << "\nlimiting form, " << lim.steps.size() << " steps:\n";
        for (size_t i = 0; i < lim.steps.size(); ++i)
            std::cout << "  " << i + 1 << ". " << step_str(lim.steps[i], f) << "    "
                      << step_annotation(lim.steps[i]) << "\n";
        std::cout << "\nshortened form, " << sh.steps.size() << " steps:\n";
        for (size_t i = 0; i < sh.steps.size(); ++i)
            std::cout << "  " << i + 1 << ". " << step_str(sh.steps[i], f) << "    "
                      << step_annotation(sh.steps[i]) << "\n";
        std::cout << "\nleading term: (" << lead[0].second.str() << ") T"
                  << lead[0].first.str() << "   length " << lead[0].first.length()
                  << " of " << n * (n - 1) / 2 << "\n";
        std::cout << "w = s_" << [&] {
            std::string s;
            for (size_t i = 0; i < wl.word.size(); ++i)
                s += (i ? " s_" : "") + std::to_string(wl.word[i]);
            return s;
        }() << "\n";
        if (opt.expanded) {
            std::cout << "\nexpanded element, " << e_sh.terms.size() << " terms:\n";
            print_element(std::cout, e_sh);
        }
        std::cout << "\ncross-check limiting == shortened: " << (equal ? "ok" : "MISMATCH")
                  << "\n";
    }
    if (!equal) {
        std::cerr << "error: the two closed forms disagree\n";
        return kExitVerifyFail;
    }
    return kExitOk;
}

int cmd_order(const Options& opt) {
    Diagram d = read_diagram(opt.input);
    SpecialOrder so = special_order(d);
    ParallelData pd = parallel_data(d);

    if (opt.as_json) {
        json j = to_json(so);
        j["d_lambda"] = pd.d_lambda;
        j["p_lambda"] = pd.p_lambda;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::pair<int, int> blk{-1, -1};
    for (size_t p = 0; p < so.entries.size(); ++p) {
        if (so.block_of[p] != blk) {
            blk = so.block_of[p];
            std::cout << (p ? "\n" : "") << "D+_{" << blk.first << "," << blk.second << "}: ";
        }
        const auto& e = so.entries[p];
        std::cout << "(" << e.pair.i << "," << e.pair.j << ")";
        if (e.singular) std::cout << "*";
        if (e.in_R) std::cout << "R";
        std::cout << " ";
    }
    std::cout << "\n\nsingular pairs are marked *, pairs of R also R\n";
    for (const auto& e : so.entries)
        if (e.in_R)
            std::cout << "  (" << e.pair.i << "," << e.pair.j << ") fuses with ("
                      << so.entries[e.partner_pos].pair.i << ","
                      << so.entries[e.partner_pos].pair.j << ")  e = "
                      << (e.e_sign < 0 ? "-" : "+") << "\n";
    std::cout << "d = " << pd.d_lambda << ", p = " << pd.p_lambda << ", |R| = "
              << pd.d_lambda - pd.p_lambda << "\n";
    return kExitOk;
}

int cmd_wlambda(const Options& opt) {
    Diagram d = read_diagram(opt.input);
    auto wl = w_lambda(d);
    if (opt.as_json) {
        std::cout << json{{"word", wl.word},
                          {"perm", wl.perm.one_line()},
                          {"length", wl.perm.length()}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "word:";
    for (int k : wl.word) std::cout << " " << k;
    std::cout << "\none-line: " << wl.perm.str() << "\nlength: " << wl.perm.length() << "\n";
    return kExitOk;
}

int cmd_bijection(const Options& opt) {
    bool is_multiseg = opt.input.find('*') != std::string::npos ||
                       opt.input.find('+') != std::string::npos;
    Diagram d = is_multiseg ? from_multisegment(parse_multisegment(opt.input))
                            : parse_diagram(opt.input);
    Multisegment m = to_multisegment(d);
    if (opt.as_json) {
        std::cout << json{{"diagram", format_diagram(d)},
                          {"multisegment", format_multisegment(m)}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "diagram:      " << format_diagram(d) << "\n"
              << "multisegment: " << format_multisegment(m) << "\n"
              << ascii_diagram(std::span(d.rows()));
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    VerifyOptions vo;
    vo.degree = opt.degree;
    vo.window = opt.window;
    vo.q_seed = opt.q_seed;
    vo.symbolic_degree = opt.oracle == "specialized" ? 0 : 4;

    std::vector<CheckResult> all;
    if (!opt.input.empty()) {
        all = run_diagram_checks(read_diagram(opt.input), vo);
    } else {
        for (const auto& name : suite_names())
            for (auto& r : run_suite(name, vo)) all.push_back(std::move(r));
    }

    int failed = 0;
    if (opt.as_json) {
        json arr = json::array();
        for (const auto& r : all) {
            json j{{"check", r.check}, {"status", r.pass ? "pass" : "fail"}};
            if (!r.diagram.empty()) j["diagram"] = r.diagram;
            if (!r.pass) j["counterexample"] = r.detail;
            arr.push_back(std::move(j));
            failed += r.pass ? 0 : 1;
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::map<std::string, std::pair<int, int>> tally;
        for (const auto& r : all) {
            auto& [pass, total] = tally[r.check];
            ++total;
            if (r.pass) ++pass;
            else {
                ++failed;
                std::cout << "FAIL " << r.check << " " << r.diagram << ": " << r.detail << "\n";
            }
        }
        for (const auto& [name, pt] : tally)
            std::cout << name << ": " << pt.first << "/" << pt.second << " passed\n";
        std::cout << (failed == 0 ? "all checks passed" : "checks FAILED") << "\n";
    }
    return failed == 0 ? kExitOk : kExitVerifyFail;
}

int cmd_dim(const Options& opt) {
    Diagram d = read_diagram(opt.input);
    int n = d.degree();
    int dim;
    if (opt.oracle == "symbolic") {
        HeckeAlgebra<Fq> alg(n, Fq::gen());
        dim = cyclic_dim(alg, compute_E_limiting(alg, d), ExecPolicy::Parallel);
    } else {
        Sampler s(opt.q_seed);
        Rat q0 = s.q_point(n);
        HeckeAlgebra<Rat> ar(n, q0);
        dim = cyclic_dim(ar, compute_E_limiting(ar, d), ExecPolicy::Parallel);
        if (n <= 4) {
            HeckeAlgebra<Fq> alg(n, Fq::gen());
            int sym = cyclic_dim(alg, compute_E_limiting(alg, d), ExecPolicy::Parallel);
            if (sym != dim) {
                std::cerr << "error: specialized rank " << dim << " != symbolic rank " << sym
                          << "\n";
                return kExitVerifyFail;
            }
        }
    }
    if (opt.as_json)
        std::cout << json{{"diagram", format_diagram(d)}, {"dim", dim}}.dump(2) << "\n";
    else
        std::cout << dim << "\n";
    return kExitOk;
}

int cmd_enumerate(const Options& opt) {
    auto list = enumerate_diagrams(opt.degree, opt.window);
    if (opt.as_json) {
        json arr = json::array();
        for (const auto& d : list) arr.push_back(format_diagram(d));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& d : list) std::cout << format_diagram(d) << "\n";
        std::cout << list.size() << " diagrams of degree " << opt.degree << " in window "
                  << opt.window << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fusion-procedure calculator for finite Hecke algebras"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit JSON instead of text");
    app.add_option("--oracle", opt.oracle, "oracle mode")
        ->check(CLI::IsMember({"symbolic", "specialized"}));
    app.add_option("--q-seed", opt.q_seed, "seed for specialization points");
    app.add_option("--degree", opt.degree, "degree bound for sweeps");
    app.add_option("--window", opt.window, "coordinate window for enumeration");
    app.add_flag("--expanded", opt.expanded, "print the expanded T-basis sum");

    auto* compute = app.add_subcommand("compute", "compute E by both closed forms");
    compute->add_option("input", opt.input, "diagram or multisegment")->required();
    auto* order = app.add_subcommand("order", "print the annotated special order");
    order->add_option("input", opt.input, "diagram or multisegment")->required();
    auto* wlam = app.add_subcommand("wlambda", "print the top-term word");
    wlam->add_option("input", opt.input, "diagram or multisegment")->required();
    auto* bij = app.add_subcommand("bijection", "convert diagram <-> multisegment");
    bij->add_option("input", opt.input, "diagram or multisegment")->required();
    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("input", opt.input, "optional single diagram");
    auto* dim = app.add_subcommand("dim", "dimension of the cyclic span");
    dim->add_option("input", opt.input, "diagram or multisegment")->required();
    app.add_subcommand("enumerate", "list diagrams of a degree within a window");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(opt);
        if (order->parsed()) return cmd_order(opt);
        if (wlam->parsed()) return cmd_wlambda(opt);
        if (bij->parsed()) return cmd_bijection(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (dim->parsed()) return cmd_dim(opt);
        return cmd_enumerate(opt);
    } catch (const diagram_error& e) {
        std::cerr << "input error: " << e.what() << " (row " << e.row() << ")\n";
        return kExitInputError;
    } catch (const convexity_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const field_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
}

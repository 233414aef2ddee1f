#pragma once

#include <string>
#include <vector>

#include "hecke/diagram.hpp"
#include "hecke/parallel.hpp"

namespace hecke {

struct CheckResult {
    std::string check;
    std::string diagram;   // empty for corpus-level checks
    bool pass = false;
    std::string detail;    // counterexample or failure note
};

struct VerifyOptions {
    int degree = 4;            // sweep bound for diagram corpora
    int window = 4;            // coordinate window of the enumeration
    unsigned q_seed = 1;       // seed for specialization points
    int oracle_points = 3;     // specializations per diagram
    int symbolic_degree = 4;   // full Q(q)(z) / Q(q) runs up to here
    int random_instances = 200;
    ExecPolicy policy = ExecPolicy::Parallel;
};

// Named property suites over the enumerated corpus:
//   structure    diagonal interpolation, special-order convexity, index law,
//                fused-partner accounting, reduced w_lambda
//   equality     both closed forms agree and are nonzero
//   oracle       curve limit equals the closed forms, no pole at z = 1
//   leading      unique top term (w_lambda, prod f_m^{p_m})
//   eigen        E is an X eigenvector with eigenvalues q^{c_k}
//   intertwiner  right multiplication by E intertwines the twisted modules
//   relations    (X1)-(X3) as operators at random regular characters
//   yang-baxter  spectral factor identities at random points
//   bijection    multisegment <-> diagram round trips
//   reflection   reflected-diagram limit equals omega(E)
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opt);

// Single-diagram checks used by the CLI when an input is given.
std::vector<CheckResult> run_diagram_checks(const Diagram& d, const VerifyOptions& opt);

} // namespace hecke

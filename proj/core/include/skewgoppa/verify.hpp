#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewgoppa::verify {

/// Outcome of one named property check.  `detail` is deterministic text
/// (stats on success, counterexample inputs on failure).
struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

// field / norm layer
CheckResult check_f8_example();
CheckResult check_norm_identities();
CheckResult check_field_structure();
// skew polynomial layer
CheckResult check_divmod(uint64_t seed);
CheckResult check_lclm(uint64_t seed);
CheckResult check_invariance(uint64_t seed);
CheckResult check_annihilator(uint64_t seed);
CheckResult check_qcoeffs();
// multivariate Ore layer
CheckResult check_multi_ore(uint64_t seed);
// linear algebra layer
CheckResult check_linalg(uint64_t seed);
// code layer
CheckResult check_delsarte(uint64_t seed);
CheckResult check_tensor_dual(uint64_t seed);
// construction pipelines
CheckResult check_gsg_pipeline(uint64_t seed);
CheckResult check_gsrs_witness(uint64_t seed);
CheckResult check_gsmg_pipeline(uint64_t seed);
CheckResult check_reductions();

struct SuiteResult {
    bool passed;
    std::string output; // byte-stable for a fixed (suite, seed)
};

/// Suites: norms, pindep, invariant, divmod, delsarte, tensor-dual,
/// gsg-pipeline, gsrs-witness, gsmg-pipeline, reductions, all.
const std::vector<std::string>& suite_names();
/// Runs a named suite; throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name, uint64_t seed);

} // namespace skewgoppa::verify

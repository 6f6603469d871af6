#pragma once

#include "sobwave/report.hpp"

namespace sobwave {

struct SuiteOptions {
    int n_1d = 4096;        // default desk-scale 1-d grid
    int n_2d = 256;         // default desk-scale 2-d grid
    int n_tensor = 2048;    // grid for tensor seminorm sweeps
    std::uint64_t seed = 1;
};

// Named verification suites, one per acceptance criterion.  Each returns a
// report whose checks all carry numeric evidence; a suite passes iff no
// check fails.
VerificationReport suite_order_calibration(const SuiteOptions& opt = {});
VerificationReport suite_tensor_seminorms(const SuiteOptions& opt = {});
VerificationReport suite_tensor_wavefront(const SuiteOptions& opt = {});
VerificationReport suite_product_positive(const SuiteOptions& opt = {});
VerificationReport suite_product_negative(const SuiteOptions& opt = {});
VerificationReport suite_smooth_restriction(const SuiteOptions& opt = {});
VerificationReport suite_four_term(const SuiteOptions& opt = {});
VerificationReport suite_multiplication_bound(const SuiteOptions& opt = {});
VerificationReport suite_disjoint_support(const SuiteOptions& opt = {});
VerificationReport suite_index_gate(const SuiteOptions& opt = {});
VerificationReport suite_seminorm_axioms(const SuiteOptions& opt = {});

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace sobwave

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sobwave/indices.hpp"
#include "sobwave/report.hpp"
#include "sobwave/suites.hpp"

namespace sobwave {

// One batch operation from a JSON experiment config.
struct Operation {
    std::string op;  // synth | analyze | tensor | multiply | verify-suite
    std::string id;  // catalog id (synth/analyze)
    std::string u_id, v_id;
    std::string file;           // output file name (synth/tensor/multiply)
    std::string suite;          // verify-suite name
    std::string mode = "general";
    bool estimate = false;      // gate multiply on estimated wave fronts
    std::optional<double> order_r;  // analyze: also export the wavefront at this order
    std::optional<IndexHypotheses> hypotheses;
    std::string expect_error;   // expected gate rejection code, if any
};

struct ExperimentConfig {
    GridSpec grid{1, 4096};
    GridSpec grid_2d{2, 256};
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    std::vector<Operation> operations;

    static ExperimentConfig from_json(const std::string& json_text);
    static ExperimentConfig from_file(const std::string& path);
};

// Execute every operation in order, writing artifacts under out_dir and
// recording one check per operation; deterministic for fixed (config, seed).
VerificationReport run_experiment(const ExperimentConfig& config);

}  // namespace sobwave

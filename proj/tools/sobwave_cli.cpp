// Command-line driver: synthesize catalog members, run analyses, gated
// products, and the named verification suites from JSON configs.
//
// Exit codes: 0 ok, 1 at least one check failed, 2 config/usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "sobwave/catalog.hpp"
#include "sobwave/config.hpp"
#include "sobwave/product.hpp"
#include "sobwave/serialize.hpp"

namespace fs = std::filesystem;
using namespace sobwave;

namespace {

std::string default_out_root() {
    if (const char* env = std::getenv("SOBWAVE_OUT")) return env;
    return "out";
}

int finish(const VerificationReport& report, const std::string& out_dir) {
    fs::create_directories(out_dir);
    write_text_file((fs::path(out_dir) / "report.json").string(), report.to_json());
    report.print_summary(std::cout);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sobwave: cone-localized Sobolev analysis and gated products of "
                 "singular distributions on the torus"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string out_dir = default_out_root();
    std::uint64_t seed = 1;
    int grid_size = 4096;
    std::string config_path;
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "seed for randomized families");
    app.add_option("--grid-size", grid_size, "samples per axis (power of two)");
    app.add_option("--config", config_path, "JSON experiment config to run");

    std::string id, u_id, v_id, suite_name, file, mode = "general";
    bool estimate = false;
    IndexHypotheses hyp;

    CLI::App* synth = app.add_subcommand("synth", "synthesize a catalog member");
    synth->add_option("--id", id, "catalog id")->required();
    synth->add_option("--file", file, "output file name");

    CLI::App* analyze = app.add_subcommand("analyze", "order field and profile of a member");
    analyze->add_option("--id", id, "catalog id")->required();

    CLI::App* tensor = app.add_subcommand("tensor", "tensor product of two members");
    tensor->add_option("--u", u_id)->required();
    tensor->add_option("--v", v_id)->required();
    tensor->add_option("--file", file);

    CLI::App* mult = app.add_subcommand("multiply", "gated product of two members");
    mult->add_option("--u", u_id)->required();
    mult->add_option("--v", v_id)->required();
    mult->add_option("--rp", hyp.r_prime, "global order r' of u")->required();
    mult->add_option("--rpp", hyp.r_second, "global order r'' of v")->required();
    mult->add_option("--r1", hyp.r1, "microlocal order of u")->required();
    mult->add_option("--r2", hyp.r2, "microlocal order of v")->required();
    mult->add_option("--mode", mode, "general | disjoint_support");
    mult->add_flag("--estimate", estimate, "gate on estimated wave fronts");

    CLI::App* verify = app.add_subcommand("verify-suite", "run a named verification suite");
    verify->add_option("--name", suite_name, "suite name or 'all'")->required();

    CLI::App* show = app.add_subcommand("report", "summarize a report JSON");
    std::string report_path;
    show->add_option("--in", report_path, "report.json path")->required();

    CLI::App* list = app.add_subcommand("list", "list catalog ids and suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) {
            ExperimentConfig config = ExperimentConfig::from_file(config_path);
            if (!out_dir.empty()) config.out_dir = out_dir;
            config.seed = seed;
            VerificationReport report = run_experiment(config);
            report.print_summary(std::cout);
            return report.all_pass() ? 0 : 1;
        }

        if (list->parsed()) {
            std::cout << "catalog:\n";
            for (const auto& cid : catalog_ids()) std::cout << "  " << cid << "\n";
            std::cout << "suites:\n";
            for (const auto& s : suite_names()) std::cout << "  " << s << "\n";
            return 0;
        }

        if (synth->parsed() || analyze->parsed() || tensor->parsed() || mult->parsed()) {
            ExperimentConfig config;
            config.grid = GridSpec{1, grid_size};
            config.out_dir = out_dir;
            config.seed = seed;
            Operation op;
            if (synth->parsed()) {
                op.op = "synth";
                op.id = id;
                op.file = file;
            } else if (analyze->parsed()) {
                op.op = "analyze";
                op.id = id;
            } else if (tensor->parsed()) {
                op.op = "tensor";
                op.u_id = u_id;
                op.v_id = v_id;
                op.file = file;
            } else {
                op.op = "multiply";
                op.u_id = u_id;
                op.v_id = v_id;
                op.mode = mode;
                op.estimate = estimate;
                hyp.m = 1;
                op.hypotheses = hyp;
            }
            config.operations.push_back(op);
            VerificationReport report = run_experiment(config);
            report.print_summary(std::cout);
            return report.all_pass() ? 0 : 1;
        }

        if (verify->parsed()) {
            SuiteOptions opt;
            opt.seed = seed;
            VerificationReport report = run_suite(suite_name, opt);
            return finish(report, out_dir);
        }

        if (show->parsed()) {
            std::cout << read_text_file(report_path) << "\n";
            return 0;
        }

        std::cout << app.help();
        return 0;
    } catch (const SobwaveError& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return e.code() == ErrorCode::ConfigInvalid || e.code() == ErrorCode::UnsupportedSpec ? 2
                                                                                              : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

#include "sobwave/config.hpp"

#include <json.hpp>

#include <filesystem>

#include "sobwave/catalog.hpp"
#include "sobwave/product.hpp"
#include "sobwave/report.hpp"
#include "sobwave/serialize.hpp"

namespace sobwave {
namespace {

IndexHypotheses hypotheses_from_json(const nlohmann::json& j) {
    IndexHypotheses h;
    h.r_prime = j.at("r_prime").get<double>();
    h.r_second = j.at("r_second").get<double>();
    h.r1 = j.at("r1").get<double>();
    h.r2 = j.at("r2").get<double>();
    h.m = j.value("m", 1);
    h.validate();
    return h;
}

const CatalogEntry& entry_checked(const std::string& id) {
    if (id.empty()) throw_error(ErrorCode::ConfigInvalid, "operation is missing a catalog id");
    return catalog_entry(id);
}

GridSpec grid_for(const ExperimentConfig& config, const CatalogEntry& e) {
    return e.spec.center[1] != 0.5 || e.wavefront.dim() == 2 ? config.grid_2d : config.grid;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const std::string& json_text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw_error(ErrorCode::ConfigInvalid, std::string("config is not valid JSON: ") + e.what());
    }
    ExperimentConfig config;
    try {
        if (root.contains("grid")) {
            config.grid.dim = root["grid"].value("dim", 1);
            config.grid.size = root["grid"].value("size", 4096);
        }
        if (root.contains("grid_2d")) {
            config.grid_2d.dim = 2;
            config.grid_2d.size = root["grid_2d"].value("size", 256);
        }
        config.grid.validate();
        config.grid_2d.validate();
        config.seed = root.value("seed", std::uint64_t(1));
        config.out_dir = root.value("out_dir", std::string("out"));
        for (const auto& jop : root.value("operations", nlohmann::json::array())) {
            Operation op;
            op.op = jop.at("op").get<std::string>();
            op.id = jop.value("id", std::string());
            op.u_id = jop.value("u", std::string());
            op.v_id = jop.value("v", std::string());
            op.file = jop.value("file", std::string());
            op.suite = jop.value("name", std::string());
            op.mode = jop.value("mode", std::string("general"));
            op.estimate = jop.value("estimate", false);
            op.expect_error = jop.value("expect_error", std::string());
            if (jop.contains("r")) op.order_r = jop["r"].get<double>();
            if (jop.contains("hypotheses")) op.hypotheses = hypotheses_from_json(jop["hypotheses"]);
            static const std::vector<std::string> known{"synth", "analyze", "tensor", "multiply",
                                                        "verify-suite"};
            if (std::find(known.begin(), known.end(), op.op) == known.end())
                throw_error(ErrorCode::ConfigInvalid, "unknown operation: " + op.op);
            if (op.op == "verify-suite" && op.suite.empty())
                throw_error(ErrorCode::ConfigInvalid, "verify-suite needs a name");
            if ((op.op == "synth" || op.op == "analyze") && op.id.empty())
                throw_error(ErrorCode::ConfigInvalid, op.op + " needs an id");
            if ((op.op == "tensor" || op.op == "multiply") && (op.u_id.empty() || op.v_id.empty()))
                throw_error(ErrorCode::ConfigInvalid, op.op + " needs u and v");
            if (op.op == "multiply" && !op.hypotheses)
                throw_error(ErrorCode::ConfigInvalid, "multiply needs hypotheses");
            config.operations.push_back(std::move(op));
        }
    } catch (const nlohmann::json::exception& e) {
        throw_error(ErrorCode::ConfigInvalid, std::string("config schema violation: ") + e.what());
    }
    return config;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    return from_json(read_text_file(path));
}

VerificationReport run_experiment(const ExperimentConfig& config) {
    namespace fs = std::filesystem;
    VerificationReport report("experiment");
    fs::create_directories(config.out_dir);
    SuiteOptions opt;
    opt.n_1d = config.grid.size;
    opt.n_2d = config.grid_2d.size;
    opt.seed = config.seed;

    int index = 0;
    for (const Operation& op : config.operations) {
        const std::string tag = std::to_string(index++) + "/" + op.op;
        try {
            if (op.op == "synth") {
                const CatalogEntry& e = entry_checked(op.id);
                const GridSpec g = grid_for(config, e);
                const SpectralDistribution u = synthesize_entry(e, g);
                const std::string file =
                    op.file.empty() ? op.id + ".sobw" : op.file;
                write_spectral(u, (fs::path(config.out_dir) / file).string());
                report.add_pass(tag + "/" + op.id, "artifact written", op.id,
                                {{"coeffs", double(u.coeffs().size())}}, 0.0);
            } else if (op.op == "analyze") {
                const CatalogEntry& e = entry_checked(op.id);
                const GridSpec g = grid_for(config, e);
                const SpectralDistribution u = synthesize_entry(e, g);
                const OrderFit global = estimate_global_order(u);
                const OrderField field = estimate_order_field(u);
                write_text_file((fs::path(config.out_dir) / (op.id + "_orderfield.csv")).string(),
                                order_field_csv(field));
                const AnnulusProfile prof =
                    annulus_profile(u, central_analysis_window(g), std::nullopt);
                write_text_file((fs::path(config.out_dir) / (op.id + "_profile.csv")).string(),
                                annulus_profile_csv(prof, op.id));
                std::string rows = seminorm_csv_header();
                const WindowFunction analysis = central_analysis_window(g);
                for (double s : {-1.0, 0.0, 1.0})
                    rows += seminorm_csv_row(op.id, "central", "full", s,
                                             q_seminorm(u, analysis, s), g.size);
                if (g.dim == 1) {
                    for (int dir = 0; dir < 2; ++dir) {
                        DirectionSet ray = DirectionSet::empty_set(1);
                        ray.set(dir);
                        rows += seminorm_csv_row(op.id, "central", dir == 0 ? "+" : "-", 0.0,
                                                 p_seminorm(u, analysis, ray, 0.0), g.size);
                    }
                }
                write_text_file(
                    (fs::path(config.out_dir) / (op.id + "_seminorms.csv")).string(), rows);
                if (op.order_r) {
                    const WavefrontSet wf = estimate_wavefront(field, *op.order_r);
                    write_text_file(
                        (fs::path(config.out_dir) / (op.id + "_wavefront.csv")).string(),
                        wavefront_csv(wf));
                    write_text_file(
                        (fs::path(config.out_dir) / (op.id + "_wavefront.json")).string(),
                        conic_to_json(wf.carrier));
                }
                report.add_pass(tag + "/" + op.id, "order field + profile emitted", op.id,
                                {{"global_order", global.order},
                                 {"smooth", global.smooth ? 1.0 : 0.0}},
                                0.0);
            } else if (op.op == "tensor") {
                const CatalogEntry& eu = entry_checked(op.u_id);
                const CatalogEntry& ev = entry_checked(op.v_id);
                const SpectralDistribution u = synthesize_entry(eu, config.grid);
                const SpectralDistribution v = synthesize_entry(ev, config.grid);
                const SpectralDistribution uv = tensor_product(u, v);
                const std::string file =
                    op.file.empty() ? op.u_id + "_x_" + op.v_id + ".sobw" : op.file;
                write_spectral(uv, (fs::path(config.out_dir) / file).string());
                report.add_pass(tag, "tensor artifact written", op.u_id + " x " + op.v_id,
                                {{"coeffs", double(uv.coeffs().size())}}, 0.0);
            } else if (op.op == "multiply") {
                const CatalogEntry& eu = entry_checked(op.u_id);
                const CatalogEntry& ev = entry_checked(op.v_id);
                const SpectralDistribution u = synthesize_entry(eu, config.grid);
                const SpectralDistribution v = synthesize_entry(ev, config.grid);
                ConicRegionSet l1 = eu.wavefront;
                ConicRegionSet l2 = ev.wavefront;
                if (op.estimate) {
                    l1 = estimate_wavefront(u, op.hypotheses->r1).carrier.dilated(1.0 / 16, 1);
                    l2 = estimate_wavefront(v, op.hypotheses->r2).carrier.dilated(1.0 / 16, 1);
                }
                const MultiplyMode mode = op.mode == "disjoint_support"
                                              ? MultiplyMode::DisjointSupport
                                              : MultiplyMode::General;
                try {
                    const ProductResult res = multiply(u, v, l1, l2, *op.hypotheses, mode);
                    const std::string file =
                        op.file.empty() ? op.u_id + "_times_" + op.v_id + ".sobw" : op.file;
                    write_spectral(res.product, (fs::path(config.out_dir) / file).string());
                    write_text_file(
                        (fs::path(config.out_dir) / (file + ".cert.json")).string(),
                        certificate_to_json(res.certificate));
                    const bool expected_success = op.expect_error.empty();
                    report.add_check(tag, "gated product", op.u_id + " * " + op.v_id,
                                     {{"s_max", res.certificate.s_max},
                                      {"r_max", res.certificate.r_max}},
                                     0.0, expected_success,
                                     expected_success ? "" : "expected rejection, gates passed");
                } catch (const GateError& err) {
                    const bool expected = op.expect_error == error_code_name(err.code());
                    report.add_check(tag, "gate rejection", op.u_id + " * " + op.v_id, {}, 0.0,
                                     expected,
                                     std::string(error_code_name(err.code())) + ": " +
                                         err.violated() +
                                         (expected ? " (expected-reject)" : ""));
                }
            } else if (op.op == "verify-suite") {
                VerificationReport sub = run_suite(op.suite, opt);
                report.merge(sub);
            }
        } catch (const SobwaveError& err) {
            report.add_check(tag, "operation", op.op, {}, 0.0, false,
                             std::string(error_code_name(err.code())) + ": " + err.what());
        }
    }
    write_text_file((fs::path(config.out_dir) / "report.json").string(), report.to_json());
    return report;
}

}  // namespace sobwave

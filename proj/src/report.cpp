#include "sobwave/report.hpp"

#include <json.hpp>

#include "sobwave/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace sobwave {
namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void VerificationReport::add(CheckRecord record) { checks_.push_back(std::move(record)); }

void VerificationReport::add_pass(const std::string& id, const std::string& anchor,
                                  const std::string& digest,
                                  std::map<std::string, double> measured, double tolerance,
                                  const std::string& note) {
    add_check(id, anchor, digest, std::move(measured), tolerance, true, note);
}

void VerificationReport::add_check(const std::string& id, const std::string& anchor,
                                   const std::string& digest,
                                   std::map<std::string, double> measured, double tolerance,
                                   bool pass, const std::string& note) {
    CheckRecord r;
    r.check_id = id;
    r.anchor = anchor;
    r.inputs_digest = digest;
    r.measured = std::move(measured);
    r.tolerance = tolerance;
    r.verdict = pass ? "PASS" : "FAIL";
    r.note = note;
    checks_.push_back(std::move(r));
}

void VerificationReport::merge(const VerificationReport& other) {
    for (const CheckRecord& r : other.checks_) checks_.push_back(r);
}

int VerificationReport::failures() const {
    int n = 0;
    for (const CheckRecord& r : checks_) n += r.verdict == "FAIL";
    return n;
}

int VerificationReport::undecided() const {
    int n = 0;
    for (const CheckRecord& r : checks_) n += r.verdict == "UNDECIDED";
    return n;
}

std::string VerificationReport::to_json(bool with_timestamp) const {
    nlohmann::ordered_json root;
    root["suite"] = suite_;
    if (with_timestamp) {
        const auto now = std::chrono::system_clock::now();
        root["generated_unix"] =
            std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    }
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckRecord& r : checks_) {
        nlohmann::ordered_json c;
        c["check_id"] = r.check_id;
        c["anchor"] = r.anchor;
        c["inputs_digest"] = r.inputs_digest;
        nlohmann::ordered_json m;
        for (const auto& [k, v] : r.measured) m[k] = v;
        c["measured"] = m;
        c["tolerance"] = r.tolerance;
        c["verdict"] = r.verdict;
        if (!r.note.empty()) c["note"] = r.note;
        checks.push_back(c);
    }
    root["checks"] = checks;
    root["summary"] = {{"total", checks_.size()},
                       {"failures", failures()},
                       {"undecided", undecided()}};
    return root.dump(2);
}

void VerificationReport::print_summary(std::ostream& os) const {
    for (const CheckRecord& r : checks_) {
        os << "[" << r.verdict << "] " << r.check_id;
        if (!r.measured.empty()) {
            os << " {";
            bool first = true;
            for (const auto& [k, v] : r.measured) {
                if (!first) os << ", ";
                os << k << "=" << num(v);
                first = false;
            }
            os << "}";
        }
        if (!r.note.empty()) os << "  # " << r.note;
        os << "\n";
    }
    os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << " (" << checks_.size()
       << " checks, " << failures() << " failed, " << undecided() << " undecided)\n";
}

std::string certificate_to_json(const ProductCertificate& cert) {
    nlohmann::ordered_json root;
    root["mode"] = cert.mode == MultiplyMode::General ? "general" : "disjoint_support";
    root["hypotheses"] = {{"r_prime", cert.hypotheses.r_prime},
                          {"r_second", cert.hypotheses.r_second},
                          {"r1", cert.hypotheses.r1},
                          {"r2", cert.hypotheses.r2},
                          {"m", cert.hypotheses.m}};
    root["r"] = cert.r;
    root["s_max"] = cert.s_max;
    root["r_max"] = cert.r_max;
    root["gates"] = {{"index", cert.index_gate}, {"geometry", cert.geometry_gate}};
    if (!cert.strictness_notes.empty()) root["strictness_notes"] = cert.strictness_notes;
    root["carrier"] = nlohmann::ordered_json::parse(conic_to_json(cert.l_out));
    return root.dump(2);
}

std::string four_term_report_to_json(const FourTermReport& report) {
    nlohmann::ordered_json root;
    root["case"] = std::string(1, report.case_label);
    root["r"] = report.r;
    root["terms"] = report.terms;
    root["bounds"] = report.bounds;
    root["fitted"] = report.fitted;
    root["lhs_total"] = report.lhs_total;
    root["cover_sum"] = report.cover_sum;
    return root.dump(2);
}

std::string order_field_csv(const OrderField& field) {
    std::ostringstream os;
    os << "cell_x,cell_y,direction,order,residual,smooth,degenerate\n";
    for (int cell = 0; cell < field.cell_count(); ++cell) {
        const auto center = field.cell_center(cell);
        for (int dir = 0; dir < field.dir_count(); ++dir) {
            const OrderFit& fit = field.fit(cell, dir);
            const double angle = field.grid().dim == 1 ? (dir == 0 ? 0.0 : 3.141592653589793)
                                                       : field.dir_center_angle(dir);
            os << num(center[0]) << "," << num(center[1]) << "," << num(angle) << ","
               << num(fit.order) << "," << num(fit.residual) << "," << (fit.smooth ? 1 : 0)
               << "," << (fit.degenerate ? 1 : 0) << "\n";
        }
    }
    return os.str();
}

std::string wavefront_csv(const WavefrontSet& wf) {
    std::ostringstream os;
    os << "cell_x,cell_y,direction,order\n";
    OrderField geometry(wf.grid, wf.params, {});
    for (const WavefrontEntry& e : wf.entries) {
        const auto center = geometry.cell_center(e.cell);
        const double angle = wf.grid.dim == 1 ? (e.dir == 0 ? 0.0 : 3.141592653589793)
                                              : geometry.dir_center_angle(e.dir);
        os << num(center[0]) << "," << num(center[1]) << "," << num(angle) << ","
           << num(wf.order) << "\n";
    }
    return os.str();
}

std::string annulus_profile_csv(const AnnulusProfile& profile, const std::string& id) {
    std::ostringstream os;
    os << "id,shell_j,energy\n";
    for (int j = profile.j_min; j <= profile.j_max; ++j)
        os << id << "," << j << "," << num(profile.energy(j)) << "\n";
    return os.str();
}

std::string seminorm_csv_header() { return "distribution_id,window_id,cone_id,order,value,N\n"; }

std::string seminorm_csv_row(const std::string& distribution_id, const std::string& window_id,
                             const std::string& cone_id, double order, double value, int n) {
    std::ostringstream os;
    os << distribution_id << "," << window_id << "," << cone_id << "," << num(order) << ","
       << num(value) << "," << n << "\n";
    return os.str();
}

}  // namespace sobwave

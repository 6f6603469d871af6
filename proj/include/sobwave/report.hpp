#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sobwave/fourterm.hpp"
#include "sobwave/product.hpp"
#include "sobwave/wavefront.hpp"

namespace sobwave {

// One recorded check: measured values with the tolerance they were judged at
// and a PASS/FAIL/UNDECIDED verdict.  `anchor` names the inequality or claim
// in plain math; `inputs_digest` pins the inputs the numbers came from.
struct CheckRecord {
    std::string check_id;
    std::string anchor;
    std::string inputs_digest;
    std::map<std::string, double> measured;
    double tolerance = 0.0;
    std::string verdict;
    std::string note;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite = "") : suite_(std::move(suite)) {}

    void add(CheckRecord record);
    void add_pass(const std::string& id, const std::string& anchor, const std::string& digest,
                  std::map<std::string, double> measured, double tolerance,
                  const std::string& note = "");
    void add_check(const std::string& id, const std::string& anchor, const std::string& digest,
                   std::map<std::string, double> measured, double tolerance, bool pass,
                   const std::string& note = "");
    void merge(const VerificationReport& other);

    const std::string& suite() const { return suite_; }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    int failures() const;
    int undecided() const;
    bool all_pass() const { return failures() == 0; }

    std::string to_json(bool with_timestamp = true) const;
    void print_summary(std::ostream& os) const;

private:
    std::string suite_;
    std::vector<CheckRecord> checks_;
};

std::string certificate_to_json(const ProductCertificate& cert);
std::string four_term_report_to_json(const FourTermReport& report);

// Plot-ready CSV emitters; byte-stable for fixed inputs.
std::string order_field_csv(const OrderField& field);
std::string wavefront_csv(const WavefrontSet& wf);
std::string annulus_profile_csv(const AnnulusProfile& profile, const std::string& id);
std::string seminorm_csv_row(const std::string& distribution_id, const std::string& window_id,
                             const std::string& cone_id, double order, double value, int n);
std::string seminorm_csv_header();

}  // namespace sobwave

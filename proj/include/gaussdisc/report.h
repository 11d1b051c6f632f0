// Copyright 2026 The gaussdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAUSSDISC_REPORT_H
#define GAUSSDISC_REPORT_H

#include <array>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace gaussdisc {

/// Every bound, information interval and exponent at one mu.
struct DiscriminationReport {
    double mu = 1.0;
    double delta_c = 0.0;
    double delta_d = 0.0;
    double p_plus_global = 0.5;
    double p_minus_global = 0.5;
    double p_plus_local = 0.5;
    double p_minus_local = 0.5;
    double i_plus_global = 0.0;
    double i_minus_global = 0.0;
    double i_plus_local = 0.0;
    double i_minus_local = 0.0;
    double kappa = 0.0;
    double kappa_loc = 0.0;
    double delta = 0.0;
    double ratio_db = 0.0;  ///< NaN at mu = 1
};

/// Column names, in CSV order.
inline constexpr std::array<std::string_view, 15> kReportFields = {
    "mu",           "delta_c",        "delta_d",       "p_plus_global",  "p_minus_global",
    "p_plus_local", "p_minus_local",  "i_plus_global", "i_minus_global", "i_plus_local",
    "i_minus_local", "kappa",         "kappa_loc",     "delta",          "ratio_db",
};

std::array<double, 15> report_values(const DiscriminationReport& r);

DiscriminationReport make_report(double mu);

/// Slack allowed on every ordering check.
inline constexpr double kOrderingSlack = 1e-12;

/// Lists violated cross-module orderings; empty when the report is consistent.
std::vector<std::string> report_violations(const DiscriminationReport& r);

/// Raised when a computed report breaks an ordering invariant.
class InvariantViolation : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Spacing { kLinear, kLog };

struct SweepSpec {
    double mu_min = 1.001;
    double mu_max = 1000.0;
    int points = 200;
    Spacing spacing = Spacing::kLog;

    /// Throws DomainError unless mu_min >= 1, mu_max > mu_min and points >= 2.
    void validate() const;
    std::vector<double> grid() const;
};

/// Shortest representation with at most 12 significant digits; "nan" for NaN.
std::string format_number(double x);

std::string csv_header();
std::string csv_row(const DiscriminationReport& r);

/// Computes every grid row (in parallel), re-checks invariants, and writes
/// header plus rows with LF endings. Throws InvariantViolation on a bad row.
std::vector<DiscriminationReport> sweep_reports(const SweepSpec& spec);
void write_sweep_csv(const std::vector<DiscriminationReport>& rows, std::ostream& out);

nlohmann::json report_to_json(const DiscriminationReport& r);

}  // namespace gaussdisc

#endif

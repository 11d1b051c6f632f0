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

#include "gaussdisc/cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gaussdisc/chernoff_global.h"
#include "gaussdisc/errors.h"
#include "gaussdisc/fock_oracle.h"
#include "gaussdisc/local_measurement.h"
#include "gaussdisc/report.h"

namespace gaussdisc {
namespace {

int code(ExitCode c) { return static_cast<int>(c); }

struct VerifyArgs {
    std::vector<double> mu = {1.5, 2.0, 5.0, 20.0};
    std::vector<double> g;  // empty: 0.4 (mu - 1) and mu - 1 for each mu
    std::vector<double> s = {0.1, 0.3, 0.5, 0.7, 0.9};
    bool fidelity = false;
};

struct OracleArgs {
    std::vector<double> mu = {1.5, 2.0};
    std::vector<double> s = {0.3, 0.5, 0.7};
    int cutoff = FockConfig{}.cutoff;
    int nodes = 0;
};

int cmd_point(double mu, std::ostream& out) {
    const auto report = make_report(mu);
    const auto bad = report_violations(report);
    if (!bad.empty()) throw InvariantViolation("invariant violated: " + bad.front());
    out << report_to_json(report).dump(2) << '\n';
    return code(ExitCode::kOk);
}

int cmd_sweep(const SweepSpec& spec, const std::string& path, std::ostream& out, std::ostream& err) {
    spec.validate();
    const auto rows = sweep_reports(spec);
    if (path.empty() || path == "-") {
        write_sweep_csv(rows, out);
        return code(ExitCode::kOk);
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return code(ExitCode::kIo);
    }
    write_sweep_csv(rows, file);
    file.close();
    if (!file) {
        err << "error: failed writing " << path << '\n';
        return code(ExitCode::kIo);
    }
    return code(ExitCode::kOk);
}

int cmd_verify_het(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.mu.empty() || a.s.empty()) throw DomainError("verify-het: empty parameter range");
    for (double s : a.s) {
        if (!(s > 0.0 && s < 1.0)) throw DomainError("verify-het: s values must lie in (0, 1)");
    }
    std::size_t checked = 0;
    std::size_t failed = 0;
    auto report = [&](const OptimalityScan& scan, const char* what) {
        ++checked;
        if (scan.passed()) return;
        ++failed;
        err << "FAIL " << what << " mu=" << format_number(scan.mu) << " g=" << format_number(scan.g);
        if (std::string(what) == "overlap") err << " s=" << format_number(scan.s);
        err << " lambda_min=" << format_number(scan.lambda_at_min)
            << " derivative=" << format_number(scan.derivative_at_one) << '\n';
    };
    for (double mu : a.mu) {
        if (!(mu > 1.0)) throw DomainError("verify-het: mu values must exceed 1");
        std::vector<double> gs = a.g;
        if (gs.empty()) gs = {0.4 * (mu - 1.0), mu - 1.0};
        for (double g : gs) {
            if (!(g > 0.0 && g <= mu - 1.0)) throw DomainError("verify-het: need 0 < g <= mu - 1");
            for (double s : a.s) report(verify_heterodyne_optimality(mu, g, s), "overlap");
            if (a.fidelity) report(verify_heterodyne_fidelity_optimality(mu, g), "fidelity");
        }
    }
    out << "checked " << checked << " scans, " << failed << " failed\n";
    return failed == 0 ? code(ExitCode::kOk) : code(ExitCode::kVerificationFailed);
}

int cmd_oracle_check(const OracleArgs& a, std::ostream& out) {
    if (a.mu.empty() || a.s.empty()) throw DomainError("oracle-check: empty parameter range");
    for (double mu : a.mu) {
        if (!(mu >= 1.0 && mu <= kOracleMuMax)) {
            throw DomainError("oracle-check: mu must lie in [1, " + format_number(kOracleMuMax) + "]");
        }
    }
    for (double s : a.s) {
        if (!(s > 0.0 && s < 1.0)) throw DomainError("oracle-check: s values must lie in (0, 1)");
    }
    FockConfig config;
    config.cutoff = a.cutoff;
    config.modulation_nodes = a.nodes;
    config.validate();

    bool ok = true;
    out << "quantity,mu,arg,closed_form,oracle,abs_diff\n";
    auto row = [&](const char* what, double mu, const std::string& arg, double closed, double oracle, double tol) {
        const double diff = std::abs(closed - oracle);
        if (!(diff <= tol)) ok = false;
        out << what << ',' << format_number(mu) << ',' << arg << ',' << format_number(closed) << ','
            << format_number(oracle) << ',' << format_number(diff) << '\n';
    };
    const std::vector<Vec2> outcomes = {Vec2(0.0, 0.0), Vec2(1.0, 0.0), Vec2(1.0, 1.0)};
    for (double mu : a.mu) {
        const auto conv = converged_global_overlaps(mu, a.s, config);
        for (std::size_t k = 0; k < a.s.size(); ++k) {
            row("s_overlap", mu, "s=" + format_number(a.s[k]), s_overlap_global(mu, a.s[k]), conv.fine[k],
                kOracleOverlapTolerance);
        }
        for (const auto& x : outcomes) {
            const std::string arg = "x=" + format_number(x(0)) + ";" + format_number(x(1));
            row("fidelity", mu, arg, fidelity_heterodyne(mu, x), oracle_heterodyne_fidelity(mu, x, config),
                kOracleFidelityTolerance);
        }
    }
    return ok ? code(ExitCode::kOk) : code(ExitCode::kVerificationFailed);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds for discriminating two-mode Gaussian states", "gaussdisc"};
    app.require_subcommand(1);

    double point_mu = 0.0;
    auto* point = app.add_subcommand("point", "Report every bound at one mu as JSON");
    point->add_option("--mu", point_mu, "Thermal CM entry mu >= 1")->required();

    SweepSpec spec;
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep", "Write a CSV of reports over a mu grid");
    sweep->add_option("--mu-min", spec.mu_min, "Smallest mu")->capture_default_str();
    sweep->add_option("--mu-max", spec.mu_max, "Largest mu")->capture_default_str();
    sweep->add_option("--points", spec.points, "Number of grid points")->capture_default_str();
    sweep->add_option("--spacing", spec.spacing, "Grid spacing")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Spacing>{{"linear", Spacing::kLinear},
                                                                           {"log", Spacing::kLog}}))
        ->capture_default_str();
    sweep->add_option("--out", out_path, "Output path; stdout when omitted");

    VerifyArgs verify;
    auto* het = app.add_subcommand("verify-het", "Check that heterodyne minimises the local s-overlap");
    het->add_option("--mu", verify.mu, "mu values")->expected(0, -1);
    het->add_option("--g", verify.g, "Correlation values; default 0.4(mu-1) and mu-1")->expected(0, -1);
    het->add_option("--s", verify.s, "s values")->expected(0, -1);
    het->add_flag("--fidelity", verify.fidelity, "Also scan the averaged-fidelity bound");

    OracleArgs oracle;
    auto* check = app.add_subcommand("oracle-check", "Compare closed forms with truncated Fock-space values");
    check->add_option("--mu", oracle.mu, "mu values in [1, 2.5]")->expected(0, -1);
    check->add_option("--s", oracle.s, "s values")->expected(0, -1);
    check->add_option("--cutoff", oracle.cutoff, "Photon-number cutoff; checked against twice this value")
        ->capture_default_str();
    check->add_option("--nodes", oracle.nodes, "Gauss-Hermite nodes per axis; 0 picks automatically")
        ->capture_default_str();

    // Options given with no values should clear the defaults, not keep them.
    auto clear_if_empty = [](CLI::Option* opt, std::vector<double>& v) {
        if (opt->count() == 0) return;
        const auto& raw = opt->results();
        if (std::all_of(raw.begin(), raw.end(), [](const std::string& r) { return r.empty() || r == "{}"; })) v.clear();
    };

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? code(ExitCode::kOk) : code(ExitCode::kUsage);
    }

    try {
        if (*point) return cmd_point(point_mu, out);
        if (*sweep) return cmd_sweep(spec, out_path, out, err);
        if (*het) {
            clear_if_empty(het->get_option("--mu"), verify.mu);
            clear_if_empty(het->get_option("--s"), verify.s);
            return cmd_verify_het(verify, out, err);
        }
        if (*check) {
            clear_if_empty(check->get_option("--mu"), oracle.mu);
            clear_if_empty(check->get_option("--s"), oracle.s);
            return cmd_oracle_check(oracle, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kUsage);
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kConvergence);
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kInvariant);
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return code(ExitCode::kIo);
    }
    return code(ExitCode::kUsage);
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace gaussdisc

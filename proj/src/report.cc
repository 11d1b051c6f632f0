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

#include "gaussdisc/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "gaussdisc/asymptotics.h"
#include "gaussdisc/chernoff_global.h"
#include "gaussdisc/correlations.h"
#include "gaussdisc/errors.h"
#include "gaussdisc/local_measurement.h"

namespace gaussdisc {

std::array<double, 15> report_values(const DiscriminationReport& r) {
    return {r.mu,           r.delta_c,       r.delta_d,       r.p_plus_global,  r.p_minus_global,
            r.p_plus_local, r.p_minus_local, r.i_plus_global, r.i_minus_global, r.i_plus_local,
            r.i_minus_local, r.kappa,        r.kappa_loc,     r.delta,          r.ratio_db};
}

DiscriminationReport make_report(double mu) {
    if (!(mu >= 1.0) || !std::isfinite(mu)) throw DomainError("report requires finite mu >= 1");
    DiscriminationReport r;
    r.mu = mu;
    r.delta_c = delta_c(mu);
    r.delta_d = delta_d(mu);

    const auto global = bhattacharyya_global(mu);
    r.p_plus_global = global.p_upper;
    r.p_minus_global = global.p_lower;
    const auto local = local_bounds(mu);
    r.p_plus_local = local.p_upper;
    r.p_minus_local = local.p_lower;

    const auto gi = info_bounds(r.p_plus_global, r.p_minus_global);
    r.i_plus_global = gi.i_upper;
    r.i_minus_global = gi.i_lower;
    const auto li = info_bounds(r.p_plus_local, r.p_minus_local);
    r.i_plus_local = li.i_upper;
    r.i_minus_local = li.i_lower;

    if (mu == 1.0) {
        r.ratio_db = std::nan("");
    } else {
        const auto e = exponents(mu);
        r.kappa = e.kappa;
        r.kappa_loc = e.kappa_loc;
        r.delta = e.delta;
        r.ratio_db = e.ratio_db;
    }
    return r;
}

std::vector<std::string> report_violations(const DiscriminationReport& r) {
    std::vector<std::string> out;
    auto need = [&](double lo, double hi, const char* what) {
        if (!(lo <= hi + kOrderingSlack)) out.emplace_back(what);
    };
    need(r.p_minus_global, r.p_plus_global, "P- <= P+");
    need(r.p_plus_global, 0.5, "P+ <= 1/2");
    need(r.p_minus_local, r.p_plus_local, "P_loc- <= P_loc+");
    need(r.p_plus_local, 0.5, "P_loc+ <= 1/2");
    need(r.p_plus_global, r.p_plus_local, "P+ <= P_loc+");
    need(r.p_minus_global, r.p_minus_local, "P- <= P_loc-");
    need(0.0, r.i_minus_global, "0 <= I-");
    need(r.i_minus_global, r.i_plus_global, "I- <= I+");
    need(r.i_plus_global, 1.0, "I+ <= 1");
    need(r.i_minus_local, r.i_plus_local, "I_loc- <= I_loc+");
    need(r.i_minus_local, r.i_minus_global, "I_loc- <= I-");
    need(r.i_plus_local, r.i_plus_global, "I_loc+ <= I+");
    need(0.0, r.kappa_loc, "kappa_loc >= 0");
    need(r.kappa_loc, r.kappa, "kappa_loc <= kappa");
    return out;
}

void SweepSpec::validate() const {
    if (!(mu_min >= 1.0) || !std::isfinite(mu_min)) throw DomainError("sweep requires mu_min >= 1");
    if (!(mu_max > mu_min) || !std::isfinite(mu_max)) throw DomainError("sweep requires mu_max > mu_min");
    if (points < 2) throw DomainError("sweep requires points >= 2");
}

std::vector<double> SweepSpec::grid() const {
    validate();
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        const double t = static_cast<double>(k) / (points - 1);
        if (spacing == Spacing::kLinear) {
            g[k] = mu_min + (mu_max - mu_min) * t;
        } else {
            g[k] = std::exp(std::log(mu_min) + (std::log(mu_max) - std::log(mu_min)) * t);
        }
    }
    g.front() = mu_min;
    g.back() = mu_max;
    return g;
}

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    // Shortest round-trip form, capped at 12 significant digits.
    char buf[32];
    int digits = 1;
    for (; digits < 12; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    // Keep integers like 1000 out of exponent form.
    if (x != 0.0) {
        const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
        if (exponent >= 0 && exponent < 12) digits = std::max(digits, exponent + 1);
    }
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string csv_header() {
    std::string out;
    for (std::size_t i = 0; i < kReportFields.size(); ++i) {
        if (i) out += ',';
        out += kReportFields[i];
    }
    return out;
}

std::string csv_row(const DiscriminationReport& r) {
    std::string out;
    const auto values = report_values(r);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_number(values[i]);
    }
    return out;
}

std::vector<DiscriminationReport> sweep_reports(const SweepSpec& spec) {
    const auto grid = spec.grid();
    std::vector<DiscriminationReport> rows(grid.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), grid.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < grid.size(); i += workers) {
                    try {
                        rows[i] = make_report(grid[i]);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& r : rows) {
        const auto bad = report_violations(r);
        if (!bad.empty()) {
            std::ostringstream msg;
            msg << "invariant violated at mu=" << format_number(r.mu) << ":";
            for (const auto& b : bad) msg << " [" << b << "]";
            throw InvariantViolation(msg.str());
        }
    }
    return rows;
}

void write_sweep_csv(const std::vector<DiscriminationReport>& rows, std::ostream& out) {
    out << csv_header() << '\n';
    for (const auto& r : rows) out << csv_row(r) << '\n';
}

nlohmann::json report_to_json(const DiscriminationReport& r) {
    nlohmann::json j = nlohmann::json::object();
    const auto values = report_values(r);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string key(kReportFields[i]);
        if (std::isfinite(values[i])) {
            j[key] = values[i];
        } else {
            j[key] = nullptr;
        }
    }
    return j;
}

}  // namespace gaussdisc

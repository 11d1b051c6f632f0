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

#include "gaussdisc/gaussian_core.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>

#include "gaussdisc/errors.h"

namespace gaussdisc {

namespace {

// Slack for the boundary of the bona-fide region: the separable extremal
// state V(mu, mu-1, mu-1) sits exactly on it.
double boundary_slack(double mu) { return 1e-12 * std::max(1.0, mu * mu); }

Mat4 mode_swap() {
    Mat4 p = Mat4::Zero();
    p.block<2, 2>(0, 2) = Mat2::Identity();
    p.block<2, 2>(2, 0) = Mat2::Identity();
    return p;
}

}  // namespace

Mat2 symplectic_form_single() {
    Mat2 w;
    w << 0.0, 1.0, -1.0, 0.0;
    return w;
}

Mat4 symplectic_form() { return direct_sum(symplectic_form_single(), symplectic_form_single()); }

Mat4 direct_sum(const Mat2& a, const Mat2& b) {
    Mat4 m = Mat4::Zero();
    m.block<2, 2>(0, 0) = a;
    m.block<2, 2>(2, 2) = b;
    return m;
}

Mat2 rotation(double theta) {
    Mat2 r;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    r << c, -s, s, c;
    return r;
}

SymmetricTwoModeCM SymmetricTwoModeCM::validated(double mu, double g, double gp) {
    auto report = check_bona_fide(mu, g, gp);
    if (!report) {
        std::ostringstream msg;
        msg << "V(" << mu << ", " << g << ", " << gp << ") is not bona fide:";
        for (const auto& v : report.violations) msg << " [" << v << "]";
        throw DomainError(msg.str());
    }
    return {mu, g, gp};
}

Mat4 SymmetricTwoModeCM::matrix() const {
    Mat4 v = Mat4::Zero();
    v.diagonal().setConstant(mu_);
    v(0, 2) = v(2, 0) = g_;
    v(1, 3) = v(3, 1) = gp_;
    return v;
}

BonaFideReport check_bona_fide(double mu, double g, double gp) {
    BonaFideReport report;
    auto fail = [&](std::string clause) {
        report.ok = false;
        report.violations.push_back(std::move(clause));
    };
    if (!std::isfinite(mu) || !std::isfinite(g) || !std::isfinite(gp)) {
        fail("parameters must be finite");
        return report;
    }
    if (mu < 1.0) fail("mu >= 1");
    if (!(std::abs(g) < mu)) fail("|g| < mu");
    if (!(std::abs(gp) < mu)) fail("|g'| < mu");
    if (mu * mu + g * gp - 1.0 < mu * std::abs(g + gp) - boundary_slack(mu)) {
        fail("mu^2 + g g' - 1 >= mu |g + g'|");
    }
    return report;
}

BonaFideReport check_bona_fide(const SymmetricTwoModeCM& cm) { return check_bona_fide(cm.mu(), cm.g(), cm.gp()); }

SymmetricTwoModeCM make_state_zero(double mu) {
    if (!(mu >= 1.0)) throw DomainError("state zero requires mu >= 1");
    return {mu, 0.0, 0.0};
}

SymmetricTwoModeCM make_state_one(double mu) {
    if (!(mu >= 1.0)) throw DomainError("state one requires mu >= 1");
    return {mu, mu - 1.0, mu - 1.0};
}

SymmetricTwoModeCM make_separable_symmetric(double mu, double g) {
    if (!(mu >= 1.0)) throw DomainError("separable symmetric state requires mu >= 1");
    if (!(std::abs(g) <= mu - 1.0 + boundary_slack(mu))) {
        throw DomainError("separable symmetric state requires |g| <= mu - 1");
    }
    return {mu, g, g};
}

Mat4 WilliamsonDecomposition::normal_form() const {
    Mat4 d = Mat4::Zero();
    d.diagonal() << nu_minus, nu_minus, nu_plus, nu_plus;
    return d;
}

Mat4 WilliamsonDecomposition::reconstruct() const { return s_matrix * normal_form() * s_matrix.transpose(); }

Mat2 reflection_z() {
    Mat2 z;
    z << 1.0, 0.0, 0.0, -1.0;
    return z;
}

Mat4 diagonalizing_rotation() {
    Mat2 x;
    x << 0.0, 1.0, 1.0, 0.0;
    Mat4 o;
    o.block<2, 2>(0, 0) = -x;
    o.block<2, 2>(0, 2) = x;
    o.block<2, 2>(2, 0) = x;
    o.block<2, 2>(2, 2) = x;
    return o / std::sqrt(2.0);
}

Mat2 squeezing_l(double mu) {
    if (!(mu >= 1.0)) throw DomainError("squeezing_l requires mu >= 1");
    const double beta = std::sqrt(2.0 * mu - 1.0);
    Mat2 l = Mat2::Zero();
    l(0, 0) = 1.0 / std::sqrt(beta);
    l(1, 1) = std::sqrt(beta);
    return l;
}

WilliamsonDecomposition williamson_symmetric(const SymmetricTwoModeCM& cm) {
    if (cm.g() != cm.gp()) throw DomainError("williamson_symmetric requires g == g'");
    if (!check_bona_fide(cm)) throw DomainError("williamson_symmetric requires a bona-fide CM");
    const double mu = cm.mu();
    const double g = cm.g();
    if (std::abs(g) > mu - 1.0 + boundary_slack(mu)) {
        throw DomainError("williamson_symmetric requires |g| <= mu - 1");
    }
    WilliamsonDecomposition w;
    w.s_matrix = diagonalizing_rotation() * direct_sum(reflection_z(), reflection_z());
    // O (Z + Z) puts mu - g on the first mode; swap modes when g < 0 so
    // that nu_minus stays the smaller eigenvalue.
    if (g < 0.0) w.s_matrix = w.s_matrix * mode_swap();
    w.nu_minus = mu - std::abs(g);
    w.nu_plus = mu + std::abs(g);
    return w;
}

WilliamsonDecomposition williamson_numeric(const Mat4& cm) {
    if (!cm.allFinite()) throw DomainError("williamson_numeric: non-finite entries");
    if ((cm - cm.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, cm.cwiseAbs().maxCoeff())) {
        throw DomainError("williamson_numeric: matrix is not symmetric");
    }
    const Mat4 v = 0.5 * (cm + cm.transpose());

    Eigen::SelfAdjointEigenSolver<Mat4> sym(v);
    if (sym.info() != Eigen::Success) throw NumericalError("williamson_numeric: symmetric eigen-solve failed");
    if (sym.eigenvalues().minCoeff() <= 0.0) throw DomainError("williamson_numeric: matrix is not positive definite");

    const Mat4 omega = symplectic_form();

    // Symplectic spectrum: |eig(Omega V)| comes in pairs +/- i nu.
    Eigen::EigenSolver<Mat4> general(omega * v, false);
    if (general.info() != Eigen::Success) throw NumericalError("williamson_numeric: eigen-solve of Omega V failed");
    std::array<double, 4> moduli{};
    for (int i = 0; i < 4; ++i) moduli[i] = std::abs(general.eigenvalues()[i]);
    std::sort(moduli.begin(), moduli.end());
    const double nu_minus = 0.5 * (moduli[0] + moduli[1]);
    const double nu_plus = 0.5 * (moduli[2] + moduli[3]);

    const Eigen::Vector4d sqrt_eval = sym.eigenvalues().cwiseSqrt();
    const Mat4 v_half = sym.eigenvectors() * sqrt_eval.asDiagonal() * sym.eigenvectors().transpose();
    const Mat4 v_inv_half = sym.eigenvectors() * sqrt_eval.cwiseInverse().asDiagonal() * sym.eigenvectors().transpose();

    // M is antisymmetric with eigenvalues +/- i / nu; K = -M^2 is symmetric
    // with eigenvalues 1 / nu^2, each doubly degenerate.
    const Mat4 m = v_inv_half * omega * v_inv_half;
    const Mat4 k = m.transpose() * m;
    Eigen::SelfAdjointEigenSolver<Mat4> kk(0.5 * (k + k.transpose()));
    if (kk.info() != Eigen::Success) throw NumericalError("williamson_numeric: eigen-solve of M^T M failed");

    // Largest eigenvalue of K <-> nu_minus. Canonical pairs (e, f) with
    // f = -nu M e satisfy e^T M f = 1 / nu.
    const Eigen::Vector4d e1 = kk.eigenvectors().col(3);
    const Eigen::Vector4d f1 = -nu_minus * (m * e1);
    Eigen::Vector4d e2 = Eigen::Vector4d::Zero();
    double best = -1.0;
    for (int c = 2; c >= 0; --c) {
        Eigen::Vector4d r = kk.eigenvectors().col(c);
        r -= e1.dot(r) * e1 + f1.dot(r) * f1;
        if (r.norm() > best) {
            best = r.norm();
            e2 = r;
        }
    }
    e2.normalize();
    const Eigen::Vector4d f2 = -nu_plus * (m * e2);

    Mat4 o;
    o.col(0) = e1;
    o.col(1) = f1.normalized();
    o.col(2) = e2;
    o.col(3) = f2.normalized();

    WilliamsonDecomposition w;
    w.nu_minus = nu_minus;
    w.nu_plus = nu_plus;
    Eigen::Vector4d d_inv_half;
    d_inv_half << 1.0 / std::sqrt(nu_minus), 1.0 / std::sqrt(nu_minus), 1.0 / std::sqrt(nu_plus),
        1.0 / std::sqrt(nu_plus);
    w.s_matrix = v_half * o * d_inv_half.asDiagonal();
    return w;
}

double symplectic_defect(const Mat4& s) {
    const Mat4 omega = symplectic_form();
    return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff();
}

}  // namespace gaussdisc

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

#include "gaussdisc/fock_oracle.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include <Eigen/Sparse>

#include "gaussdisc/errors.h"

namespace gaussdisc {

namespace {

using cd = std::complex<double>;
using SparseOp = Eigen::SparseMatrix<cd>;

constexpr double kEigenClamp = 1e-12;
constexpr double kNegativeEigenTolerance = 1e-10;

// Gauss-Hermite rule for weight exp(-x^2) via Golub-Welsch.
struct HermiteRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

HermiteRule gauss_hermite(int n) {
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    if (es.info() != Eigen::Success) throw NumericalError("gauss_hermite: eigen-solve failed");
    HermiteRule rule;
    rule.nodes = es.eigenvalues();
    rule.weights = std::sqrt(std::numbers::pi) * es.eigenvectors().row(0).transpose().array().square();
    return rule;
}

// One real axis of the mixture integral. The Gaussian N(mean, var) times
// exp(-modes t^2) from the coherent-state normalisation is again Gaussian,
// so the remaining integrand is a polynomial in t.
struct AxisRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

AxisRule mixture_axis(double mean, double var, int modes, const HermiteRule& rule) {
    AxisRule axis;
    const double k = modes;
    if (var <= 0.0) {
        axis.nodes.push_back(mean);
        axis.weights.push_back(std::exp(-k * mean * mean));
        return axis;
    }
    const double denom = 1.0 + 2.0 * k * var;
    const double tau = std::sqrt(var / denom);
    const double centre = mean / denom;
    const double scale = tau / std::sqrt(var) * std::exp(-k * mean * mean / denom) / std::sqrt(std::numbers::pi);
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
        axis.nodes.push_back(centre + std::numbers::sqrt2 * tau * rule.nodes[i]);
        axis.weights.push_back(scale * rule.weights[i]);
    }
    return axis;
}

// gamma^n / sqrt(n!) for n < cutoff.
Eigen::VectorXcd scaled_powers(cd gamma, int cutoff) {
    Eigen::VectorXcd v(cutoff);
    v[0] = 1.0;
    for (int n = 1; n < cutoff; ++n) v[n] = v[n - 1] * gamma / std::sqrt(static_cast<double>(n));
    return v;
}

// Integral over gamma of N(centre, var per axis) (|gamma><gamma|)^{(x) modes}.
Eigen::MatrixXcd coherent_mixture(cd centre, double var, int modes, int cutoff, int nodes) {
    const HermiteRule rule = gauss_hermite(nodes);
    const AxisRule re = mixture_axis(centre.real(), var, modes, rule);
    const AxisRule im = mixture_axis(centre.imag(), var, modes, rule);

    Eigen::Index dim = 1;
    for (int m = 0; m < modes; ++m) dim *= cutoff;
    const auto block = static_cast<Eigen::Index>(im.nodes.size());

    Eigen::MatrixXd real_part = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd imag_part = Eigen::MatrixXd::Zero(dim, dim);
    const bool need_imag = centre != cd(0.0, 0.0);

    Eigen::MatrixXd ar(dim, block);
    Eigen::MatrixXd ai(dim, block);
    for (std::size_t i = 0; i < re.nodes.size(); ++i) {
        for (Eigen::Index j = 0; j < block; ++j) {
            const cd gamma(re.nodes[i], im.nodes[j]);
            const Eigen::VectorXcd single = scaled_powers(gamma, cutoff);
            Eigen::VectorXcd column = single;
            for (int m = 1; m < modes; ++m) {
                Eigen::VectorXcd next(column.size() * cutoff);
                for (Eigen::Index a = 0; a < column.size(); ++a) next.segment(a * cutoff, cutoff) = column[a] * single;
                column = std::move(next);
            }
            const double w = std::sqrt(re.weights[i] * im.weights[j]);
            ar.col(j) = w * column.real();
            ai.col(j) = w * column.imag();
        }
        real_part.noalias() += ar * ar.transpose();
        real_part.noalias() += ai * ai.transpose();
        if (need_imag) {
            imag_part.noalias() += ai * ar.transpose();
            imag_part.noalias() -= ar * ai.transpose();
        }
    }
    Eigen::MatrixXcd rho(dim, dim);
    rho.real() = real_part;
    rho.imag() = imag_part;
    return rho;
}

void require_trace(const DensityOperator& rho, const FockConfig& config, const char* what) {
    if (rho.trace() < 1.0 - config.convergence_tol) {
        throw ConvergenceError(std::string(what) + ": truncated trace " + std::to_string(rho.trace()) +
                               " below 1 - tolerance at cutoff " + std::to_string(config.cutoff));
    }
}

SparseOp annihilation(int cutoff) {
    SparseOp a(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) a.insert(n - 1, n) = std::sqrt(static_cast<double>(n));
    a.makeCompressed();
    return a;
}

SparseOp sparse_identity(int n) {
    SparseOp id(n, n);
    id.setIdentity();
    return id;
}

SparseOp kron(const SparseOp& a, const SparseOp& b) {
    SparseOp out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<cd>> triplets;
    for (int ka = 0; ka < a.outerSize(); ++ka) {
        for (SparseOp::InnerIterator ia(a, ka); ia; ++ia) {
            for (int kb = 0; kb < b.outerSize(); ++kb) {
                for (SparseOp::InnerIterator ib(b, kb); ib; ++ib) {
                    triplets.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                                          ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

// Tr(rho X) for sparse X.
cd expectation(const Eigen::MatrixXcd& rho, const SparseOp& x) {
    cd acc = 0.0;
    for (int k = 0; k < x.outerSize(); ++k) {
        for (SparseOp::InnerIterator it(x, k); it; ++it) acc += it.value() * rho(it.col(), it.row());
    }
    return acc;
}

Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()));
    if (es.info() != Eigen::Success) throw NumericalError("oracle: eigen-solve failed");
    const Eigen::VectorXd roots = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

void FockConfig::validate() const {
    if (cutoff < 4) throw DomainError("FockConfig: cutoff must be >= 4");
    if (modulation_nodes != 0 && modulation_nodes < 8) throw DomainError("FockConfig: modulation_nodes must be >= 8");
    if (!(convergence_tol > 0.0 && convergence_tol < 1.0)) throw DomainError("FockConfig: convergence_tol in (0, 1)");
}

int FockConfig::nodes_for(int modes) const {
    if (modulation_nodes != 0) return modulation_nodes;
    // A k-mode product contributes polynomials of degree <= 2 k (cutoff - 1)
    // per real axis; an n-point rule is exact up to degree 2 n - 1.
    return std::max(8, modes * (cutoff - 1) + 1);
}

FockConfig FockConfig::with_cutoff(int new_cutoff) const {
    FockConfig c = *this;
    c.cutoff = new_cutoff;
    return c;
}

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix, int cutoff, int modes)
    : matrix_(std::move(matrix)), cutoff_(cutoff), modes_(modes) {
    Eigen::Index expected = 1;
    for (int m = 0; m < modes; ++m) expected *= cutoff;
    if (matrix_.rows() != expected || matrix_.cols() != expected) {
        throw DomainError("DensityOperator: dimension does not match cutoff^modes");
    }
}

bool DensityOperator::is_real(double tol) const { return matrix_.imag().cwiseAbs().maxCoeff() <= tol; }

bool DensityOperator::is_diagonal() const {
    const Eigen::MatrixXcd off = matrix_ - Eigen::MatrixXcd(matrix_.diagonal().asDiagonal());
    return off.cwiseAbs().maxCoeff() == 0.0;
}

DensityOperator build_thermal(double n_bar, const FockConfig& config) {
    config.validate();
    if (!(n_bar >= 0.0)) throw DomainError("build_thermal requires n_bar >= 0");
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(config.cutoff, config.cutoff);
    const double ratio = n_bar / (n_bar + 1.0);
    double p = 1.0 / (n_bar + 1.0);
    for (int n = 0; n < config.cutoff; ++n) {
        rho(n, n) = p;
        p *= ratio;
    }
    DensityOperator out(std::move(rho), config.cutoff, 1);
    require_trace(out, config, "build_thermal");
    return out;
}

DensityOperator build_thermal_product(double mu, const FockConfig& config) {
    if (!(mu >= 1.0)) throw DomainError("build_thermal_product requires mu >= 1");
    const auto single = build_thermal((mu - 1.0) / 2.0, config);
    DensityOperator out = tensor_product(single, single);
    require_trace(out, config, "build_thermal_product");
    return out;
}

DensityOperator build_correlated(double mu, const FockConfig& config) {
    config.validate();
    if (!(mu >= 1.0)) throw DomainError("build_correlated requires mu >= 1");
    const double var = (mu - 1.0) / 4.0;
    DensityOperator out(coherent_mixture(cd(0.0, 0.0), var, 2, config.cutoff, config.nodes_for(2)), config.cutoff, 2);
    require_trace(out, config, "build_correlated");
    return out;
}

DensityOperator build_displaced_thermal(double nu, const Vec2& displacement, const FockConfig& config) {
    config.validate();
    if (!(nu >= 1.0)) throw DomainError("build_displaced_thermal requires nu >= 1");
    // <q> = 2 Re(alpha), <p> = 2 Im(alpha) in vacuum units.
    const cd centre(displacement.x() / 2.0, displacement.y() / 2.0);
    DensityOperator out(coherent_mixture(centre, (nu - 1.0) / 4.0, 1, config.cutoff, config.nodes_for(1)),
                        config.cutoff, 1);
    require_trace(out, config, "build_displaced_thermal");
    return out;
}

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b) {
    if (a.modes() != 1 || b.modes() != 1 || a.cutoff() != b.cutoff()) {
        throw DomainError("tensor_product expects two single-mode operators with equal cutoff");
    }
    const Eigen::Index c = a.cutoff();
    Eigen::MatrixXcd out(c * c, c * c);
    for (Eigen::Index i = 0; i < c; ++i) {
        for (Eigen::Index j = 0; j < c; ++j) out.block(i * c, j * c, c, c) = a.matrix()(i, j) * b.matrix();
    }
    return {std::move(out), a.cutoff(), 2};
}

DensityOperator partial_trace(const DensityOperator& rho, int keep) {
    if (rho.modes() != 2 || (keep != 0 && keep != 1)) throw DomainError("partial_trace expects a two-mode operator");
    const int c = rho.cutoff();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(c, c);
    for (int m = 0; m < c; ++m) {
        for (int n = 0; n < c; ++n) {
            cd acc = 0.0;
            for (int k = 0; k < c; ++k) {
                acc += keep == 0 ? rho.matrix()(m * c + k, n * c + k) : rho.matrix()(k * c + m, k * c + n);
            }
            out(m, n) = acc;
        }
    }
    return {std::move(out), c, 1};
}

Moments extract_moments(const DensityOperator& rho) {
    const int c = rho.cutoff();
    const SparseOp a = annihilation(c);
    const SparseOp id = sparse_identity(c);
    const cd i_unit(0.0, 1.0);
    const SparseOp adag = SparseOp(a.adjoint());
    const SparseOp q = a + adag;
    const SparseOp p = i_unit * (adag - a);

    std::vector<SparseOp> quads;
    if (rho.modes() == 1) {
        quads = {q, p};
    } else {
        quads = {kron(q, id), kron(p, id), kron(id, q), kron(id, p)};
    }
    const auto n = static_cast<Eigen::Index>(quads.size());
    Moments m;
    m.mean.resize(n);
    m.covariance.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m.mean[i] = expectation(rho.matrix(), quads[i]).real();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const SparseOp sym = quads[i] * quads[j] + quads[j] * quads[i];
            const double v = 0.5 * expectation(rho.matrix(), sym).real() - m.mean[i] * m.mean[j];
            m.covariance(i, j) = m.covariance(j, i) = v;
        }
    }
    return m;
}

SpectralDensity::SpectralDensity(const DensityOperator& rho) {
    if (rho.is_diagonal()) {
        fock_diagonal_ = true;
        eigenvalues_ = rho.matrix().diagonal().real();
    } else if (rho.is_real()) {
        Eigen::MatrixXd re = rho.matrix().real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (re + re.transpose()));
        if (es.info() != Eigen::Success) throw NumericalError("SpectralDensity: eigen-solve failed");
        eigenvalues_ = es.eigenvalues();
        eigenvectors_ = es.eigenvectors().cast<cd>();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (rho.matrix() + rho.matrix().adjoint()));
        if (es.info() != Eigen::Success) throw NumericalError("SpectralDensity: eigen-solve failed");
        eigenvalues_ = es.eigenvalues();
        eigenvectors_ = es.eigenvectors();
    }
    if (eigenvalues_.size() > 0 && eigenvalues_.minCoeff() < -kNegativeEigenTolerance) {
        throw NumericalError("SpectralDensity: eigenvalue below -1e-10; operator is not positive semidefinite");
    }
    eigenvalues_ = eigenvalues_.unaryExpr([](double x) { return x < kEigenClamp ? 0.0 : x; });
}

Eigen::MatrixXcd SpectralDensity::power(double t) const {
    const Eigen::VectorXd powered = eigenvalues_.unaryExpr([t](double x) { return x > 0.0 ? std::pow(x, t) : 0.0; });
    if (fock_diagonal_) return powered.cast<cd>().asDiagonal();
    return eigenvectors_ * powered.cast<cd>().asDiagonal() * eigenvectors_.adjoint();
}

ChernoffOracle::ChernoffOracle(const DensityOperator& rho0, const DensityOperator& rho1) {
    if (rho0.dimension() != rho1.dimension()) throw DomainError("ChernoffOracle: dimension mismatch");
    const SpectralDensity a(rho0);
    const SpectralDensity b(rho1);
    eig0_ = a.eigenvalues();
    eig1_ = b.eigenvalues();
    const Eigen::Index n = rho0.dimension();
    if (a.fock_diagonal() && b.fock_diagonal()) {
        overlap_weights_ = Eigen::MatrixXd::Identity(n, n);
    } else if (a.fock_diagonal()) {
        overlap_weights_ = b.eigenvectors().cwiseAbs2();
    } else if (b.fock_diagonal()) {
        overlap_weights_ = a.eigenvectors().adjoint().cwiseAbs2();
    } else {
        overlap_weights_ = (a.eigenvectors().adjoint() * b.eigenvectors()).cwiseAbs2();
    }
}

double ChernoffOracle::s_overlap(double s) const {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("oracle s-overlap requires 0 < s < 1");
    auto pow_or_zero = [](double x, double t) { return x > 0.0 ? std::pow(x, t) : 0.0; };
    const Eigen::VectorXd left = eig0_.unaryExpr([&](double x) { return pow_or_zero(x, s); });
    const Eigen::VectorXd right = eig1_.unaryExpr([&](double x) { return pow_or_zero(x, 1.0 - s); });
    return left.dot(overlap_weights_ * right);
}

double oracle_s_overlap(const DensityOperator& rho0, const DensityOperator& rho1, double s) {
    return ChernoffOracle(rho0, rho1).s_overlap(s);
}

double oracle_fidelity(const DensityOperator& rho_a, const DensityOperator& rho_b) {
    if (rho_a.dimension() != rho_b.dimension()) throw DomainError("oracle_fidelity: dimension mismatch");
    const Eigen::MatrixXcd root = sqrt_psd(rho_a.matrix());
    const Eigen::MatrixXcd inner = root * rho_b.matrix() * root;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (inner + inner.adjoint()));
    if (es.info() != Eigen::Success) throw NumericalError("oracle_fidelity: eigen-solve failed");
    const double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return tr * tr;
}

ConvergedOverlaps converged_global_overlaps(double mu, std::span<const double> s_values, const FockConfig& config) {
    ConvergedOverlaps out;
    out.coarse_cutoff = config.cutoff;
    out.fine_cutoff = 2 * config.cutoff;
    auto evaluate = [&](const FockConfig& cfg) {
        const ChernoffOracle oracle(build_thermal_product(mu, cfg), build_correlated(mu, cfg));
        std::vector<double> values;
        for (double s : s_values) values.push_back(oracle.s_overlap(s));
        return values;
    };
    out.coarse = evaluate(config);
    out.fine = evaluate(config.with_cutoff(out.fine_cutoff));
    for (std::size_t i = 0; i < out.fine.size(); ++i) {
        out.max_change = std::max(out.max_change, std::abs(out.fine[i] - out.coarse[i]));
    }
    if (out.max_change >= kCutoffDoublingTolerance) {
        throw ConvergenceError("converged_global_overlaps: doubling the cutoff from " +
                               std::to_string(out.coarse_cutoff) + " changed Q_s by " +
                               std::to_string(out.max_change));
    }
    return out;
}

double oracle_heterodyne_fidelity(double mu, const Vec2& outcome, const FockConfig& config) {
    if (!(mu >= 1.0)) throw DomainError("oracle_heterodyne_fidelity requires mu >= 1");
    // Heterodyne on mode B of V(mu, mu-1, mu-1): conditional CM
    // mu - (mu-1)^2 / (mu+1), mean sqrt(2) (mu-1) / (mu+1) times the outcome.
    const double g = mu - 1.0;
    const double nu = mu - g * g / (mu + 1.0);
    const Vec2 displacement = std::numbers::sqrt2 * g / (mu + 1.0) * outcome;
    const auto rho0 = build_thermal((mu - 1.0) / 2.0, config);
    const auto rho1 = build_displaced_thermal(nu, displacement, config);
    return oracle_fidelity(rho0, rho1);
}

}  // namespace gaussdisc

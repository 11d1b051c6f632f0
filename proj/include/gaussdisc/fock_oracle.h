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

#ifndef GAUSSDISC_FOCK_ORACLE_H
#define GAUSSDISC_FOCK_ORACLE_H

// Brute-force reference states in a truncated Fock basis.
//
// Everything here is built from photon-number matrix elements and dense
// eigen-solves, with no use of the Gaussian closed forms, so it can serve as
// an independent check of them. Gaussian mixtures of coherent states are
// integrated with Gauss-Hermite nodes after absorbing the coherent-state
// normalisation into the weight; with the default node count the truncated
// matrix elements are exact up to rounding.

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gaussdisc/gaussian_core.h"

namespace gaussdisc {

struct FockConfig {
    int cutoff = 20;             ///< photon-number truncation per mode
    int modulation_nodes = 0;    ///< Gauss-Hermite nodes per real axis; 0 picks the exact count
    double convergence_tol = 1e-8;

    void validate() const;
    /// Nodes used for a mixture of `modes`-fold coherent products.
    int nodes_for(int modes) const;
    FockConfig with_cutoff(int new_cutoff) const;
};

/// Hermitian density matrix on `modes` truncated modes. Two-mode basis index
/// is n_A * cutoff + n_B.
class DensityOperator {
   public:
    DensityOperator(Eigen::MatrixXcd matrix, int cutoff, int modes);

    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    int cutoff() const { return cutoff_; }
    int modes() const { return modes_; }
    Eigen::Index dimension() const { return matrix_.rows(); }
    double trace() const { return matrix_.trace().real(); }
    bool is_real(double tol = 1e-13) const;
    bool is_diagonal() const;

   private:
    Eigen::MatrixXcd matrix_;
    int cutoff_;
    int modes_;
};

/// Thermal state with mean photon number n_bar. Not renormalised; throws
/// ConvergenceError when the truncated trace is below 1 - convergence_tol.
DensityOperator build_thermal(double n_bar, const FockConfig& config);

/// Product of two thermal states with CM mu I each, i.e. V(mu, 0, 0).
DensityOperator build_thermal_product(double mu, const FockConfig& config);

/// Separable mixture of |alpha><alpha| (x) |alpha><alpha| with Gaussian
/// weight of variance (mu - 1) / 4 per real axis, whose CM is V(mu, mu-1, mu-1).
DensityOperator build_correlated(double mu, const FockConfig& config);

/// Single-mode thermal state with CM nu I displaced by `displacement`
/// (quadrature means, vacuum-unit convention).
DensityOperator build_displaced_thermal(double nu, const Vec2& displacement, const FockConfig& config);

DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);

/// Reduced state of mode `keep` (0 = A, 1 = B) of a two-mode operator.
DensityOperator partial_trace(const DensityOperator& rho, int keep);

struct Moments {
    Eigen::VectorXd mean;        ///< (x_A, p_A[, x_B, p_B])
    Eigen::MatrixXd covariance;  ///< vacuum = identity
};

Moments extract_moments(const DensityOperator& rho);

/// Eigen-decomposition with eigenvalues below 1e-12 clamped to zero.
class SpectralDensity {
   public:
    explicit SpectralDensity(const DensityOperator& rho);

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    /// Empty when the operator is diagonal in the Fock basis.
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
    bool fock_diagonal() const { return fock_diagonal_; }

    /// rho^t reassembled in the Fock basis.
    Eigen::MatrixXcd power(double t) const;

   private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
    bool fock_diagonal_ = false;
};

/// Tr(rho_0^s rho_1^{1-s}) for many s from one pair of eigen-decompositions.
class ChernoffOracle {
   public:
    ChernoffOracle(const DensityOperator& rho0, const DensityOperator& rho1);

    double s_overlap(double s) const;

   private:
    Eigen::VectorXd eig0_;
    Eigen::VectorXd eig1_;
    Eigen::MatrixXd overlap_weights_;  // |<u_i|v_j>|^2
};

double oracle_s_overlap(const DensityOperator& rho0, const DensityOperator& rho1, double s);

/// Uhlmann fidelity [Tr sqrt(sqrt(rho_a) rho_b sqrt(rho_a))]^2.
double oracle_fidelity(const DensityOperator& rho_a, const DensityOperator& rho_b);

/// Global s-overlaps of V(mu,0,0) vs V(mu,mu-1,mu-1) at `config.cutoff` and
/// at twice that cutoff.
struct ConvergedOverlaps {
    int coarse_cutoff = 0;
    int fine_cutoff = 0;
    std::vector<double> coarse;
    std::vector<double> fine;
    double max_change = 0.0;
};

inline constexpr double kCutoffDoublingTolerance = 1e-6;

/// Throws ConvergenceError if doubling the cutoff moves any value by
/// kCutoffDoublingTolerance or more.
ConvergedOverlaps converged_global_overlaps(double mu, std::span<const double> s_values, const FockConfig& config);

/// Fidelity between thermal mu I and the heterodyne-conditioned state of
/// mode A, displaced by (eps / sqrt 2) * outcome.
double oracle_heterodyne_fidelity(double mu, const Vec2& outcome, const FockConfig& config);

}  // namespace gaussdisc

#endif

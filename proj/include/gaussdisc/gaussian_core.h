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

#ifndef GAUSSDISC_GAUSSIAN_CORE_H
#define GAUSSDISC_GAUSSIAN_CORE_H

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gaussdisc {

// Quadrature ordering inside every 4x4 object is (x_A, p_A, x_B, p_B).
// Covariance matrices use the vacuum = identity convention.
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Vec2 = Eigen::Vector2d;

/// Absolute tolerance for symplectic-form and reconstruction checks.
inline constexpr double kSymplecticTolerance = 1e-10;

/// Single-mode symplectic form [[0, 1], [-1, 0]].
Mat2 symplectic_form_single();
/// Two-mode symplectic form, the direct sum of two single-mode forms.
Mat4 symplectic_form();

Mat4 direct_sum(const Mat2& a, const Mat2& b);

/// Rotation by `theta` in a single-mode phase space.
Mat2 rotation(double theta);

/// Result of checking the bona-fide conditions of V(mu, g, g').
struct BonaFideReport {
    bool ok = true;
    std::vector<std::string> violations;

    explicit operator bool() const { return ok; }
};

/// Normal-form covariance matrix V(mu, g, g') of a symmetric two-mode state.
///
/// Holds the three parameters verbatim; use `check_bona_fide` to validate an
/// arbitrary triple, or the `make_*` factories, which refuse unphysical input.
class SymmetricTwoModeCM {
   public:
    SymmetricTwoModeCM(double mu, double g, double gp) : mu_(mu), g_(g), gp_(gp) {}

    /// Throws DomainError unless the triple is bona fide.
    static SymmetricTwoModeCM validated(double mu, double g, double gp);

    double mu() const { return mu_; }
    double g() const { return g_; }
    double gp() const { return gp_; }

    /// Mean photon number of either reduced (thermal) mode.
    double mean_photons() const { return (mu_ - 1.0) / 2.0; }

    Mat4 matrix() const;

    bool operator==(const SymmetricTwoModeCM&) const = default;

   private:
    double mu_;
    double g_;
    double gp_;
};

BonaFideReport check_bona_fide(double mu, double g, double gp);
BonaFideReport check_bona_fide(const SymmetricTwoModeCM& cm);

/// Product of two thermal states, V(mu, 0, 0).
SymmetricTwoModeCM make_state_zero(double mu);

/// Most correlated separable state at the same local energy, V(mu, mu-1, mu-1).
SymmetricTwoModeCM make_state_one(double mu);

/// V(mu, g, g) restricted to the separable family |g| <= mu - 1.
SymmetricTwoModeCM make_separable_symmetric(double mu, double g);

/// V = S diag(nu_minus, nu_minus, nu_plus, nu_plus) S^T with S symplectic.
struct WilliamsonDecomposition {
    double nu_minus = 1.0;
    double nu_plus = 1.0;
    Mat4 s_matrix = Mat4::Identity();

    Mat4 normal_form() const;
    Mat4 reconstruct() const;
};

/// Closed-form decomposition of V(mu, g, g): nu = mu -/+ |g|, S = O (Z + Z).
WilliamsonDecomposition williamson_symmetric(const SymmetricTwoModeCM& cm);

/// General numeric decomposition of a 4x4 positive-definite CM.
///
/// The symplectic eigenvalues are the moduli of the eigenvalues of Omega V.
/// The symplectic matrix is assembled as V^{1/2} O D^{-1/2}, where O brings
/// the antisymmetric matrix V^{-1/2} Omega V^{-1/2} to canonical form.
/// Throws DomainError for non-symmetric or non-positive-definite input and
/// NumericalError if an eigen-solve fails.
WilliamsonDecomposition williamson_numeric(const Mat4& cm);

/// Orthogonal (but not symplectic) rotation that diagonalizes V(mu, g, g).
Mat4 diagonalizing_rotation();
/// Reflection diag(1, -1).
Mat2 reflection_z();
/// Single-mode squeezing diag(beta^{-1/2}, beta^{1/2}), beta = sqrt(2 mu - 1).
/// Kept for reference only; it does not diagonalize V(mu, mu-1, mu-1).
Mat2 squeezing_l(double mu);

/// Largest entrywise deviation of S Omega S^T from Omega.
double symplectic_defect(const Mat4& s);

}  // namespace gaussdisc

#endif

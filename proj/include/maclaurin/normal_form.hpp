// ----------------------------------------------------------------------------
// Copyright 2026 the maclaurin authors.
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
// ----------------------------------------------------------------------------
#pragma once

#include <array>
#include <vector>

#include "maclaurin/family.hpp"
#include "maclaurin/linalg.hpp"
#include "maclaurin/units.hpp"

// The 10-dimensional symplectic normal space at a spheroid equilibrium,
// coordinates (lambda_1..lambda_4 | a_1..a_3 | beta_1..beta_3): a 4-dim
// rotational factor plus a shape factor and its dual. Residual symmetry
// is O(2)~: rotations about the symmetry axis (acting with weight 1 on the
// rotational factor and weight 2 on the shape pair) extended by the
// transposition-with-half-turn involution.

namespace maclaurin {

using Mat4 = std::array<double, 16>;   // row-major
using Mat10 = std::array<double, 100>; // row-major

struct NormalVector {
    std::array<double, 4> lambda{};
    Vec3 a{0.0, 0.0, 0.0};
    Vec3 beta{0.0, 0.0, 0.0};
};

std::array<double, 10> flatten(const NormalVector& v);
NormalVector unflatten(const std::array<double, 10>& x);

enum class BranchType { TypeI, TypeS, AdjointS };

// Conjugacy classes of closed subgroups of O(2)~ that arise as stabilizers:
// TRIVIAL < Z2_DIAG_E3 < {D2_TILDE_E3, SO2_DIAG} < FULL_O2_TILDE.
enum class StabilizerLabel {
    FULL_O2_TILDE, // all of O(2)~
    SO2_DIAG,      // rotations only
    Z2_DIAG_E3,    // the half-turn only
    D2_TILDE_E3,   // half-turn plus the involution
    TRIVIAL
};

const char* to_string(BranchType b);
const char* to_string(StabilizerLabel s);

struct SpectrumReport {
    double e = 0.0;
    double eta = 0.0;
    // rotational-block eigenvalues, each of multiplicity two
    double sigma1_plus = 0.0, sigma1_minus = 0.0;
    // shape-pair eigenvalues: a and b simple, +/- of multiplicity two
    double sigma2_a = 0.0, sigma2_b = 0.0;
    double sigma2_plus = 0.0, sigma2_minus = 0.0;
    std::vector<double> numeric_eigenvalues; // ascending, size 10
    std::vector<NormalVector> kernel; // eigenvectors with |sigma| <= 1e-9 ||H||
    bool stable = false; // positivity of the eta = 0 slice, i.e. S2 > 0
};

// Symmetric matrix of the shape coordinate a in the tangent space at the
// spheroid of eccentricity e; the axis ratio c/a = sqrt(1-e^2) enters the
// (3,3) entry. The image is traceless only at e = 0.
Mat3 embed_S(const Vec3& a, double e);

// Residual-symmetry representations. Rotations act by 2*theta in the
// (a2, a3) plane of the shape factor (and identically on its dual) and by
// theta on the two rotational-factor pairs; the involution fixes a1, a2,
// flips a3 on the shape factors, and swaps-with-signs on the rotational
// factor. flip * rot(theta) * flip = rot(-theta) on every factor.
Mat3 rep_on_S(double theta);
Mat3 rep_on_S_flip();
Mat4 rep_on_qmu(double theta);
Mat4 rep_on_qmu_flip();

// Quadratic momentum of the internal-spin velocity component eta:
// T Omega eta (1-e^2)^(-1/3) (l1^2 - l2^2 + l3^2 - l4^2)
//   + 2 eta (a2 b3 - a3 b2).
double momentum_JN(double eta, const NormalVector& v, double e,
                   const Units& u);

// Second derivative of the quadratic momentum above (the exact Hessian of
// momentum_JN; one half of v^T M v reproduces momentum_JN).
Mat10 momentum_hessian(double e, double eta, const Units& u);

// Augmented stability form: rotational block [A-matrix - eta kappa J1] with
// kappa = (1-e^2)^(-1/3) T Omega and J1 = diag(1,-1,1,-1), plus the coupled
// shape block [[R2, -2 eta J2],[2 eta J2, R1^{-1}]]. Symmetric by
// construction; zero off the stated blocks.
Mat10 hessian_N(double e, double eta, const Units& u);

// Symplectic matrix on the normal space: a 4x4 rotational block with
// entries +/- 2 T Omega (1-e^2)^(-1/3) and the canonical pairing between
// the shape factor and its dual.
Mat10 symplectic_matrix(double e, const Units& u);

// Closed-form eigenvalues of hessian_N together with an independent numeric
// eigensolve; the two multisets agree to 1e-10.
SpectrumReport spectrum(double e, double eta, const Units& u);

// Kernel of hessian_N at the signed internal-spin value eta, which must lie
// on the zero locus of the given branch (|eta| = eta1 for TypeI, |eta| =
// eta2 for TypeS, eta = 0 for AdjointS at the critical eccentricity).
// TypeI:    (Dt, 1, 0, 0 | 0 | 0), (0, 0, Dt, 1 | 0 | 0),
//           Dt = (A1 + eta kappa)/A2.
// TypeS:    (0 | 0, 1, 0 | 0, 0, 4 T eta), (0 | 0, 0, 1 | 0, -4 T eta, 0).
// AdjointS: (0 | 0, 1, 0 | 0).
// Exact kernel vectors of the assembled Hessian at every signed eta on the
// locus; throws std::domain_error off the locus or outside the branch's
// eccentricity range.
std::vector<NormalVector> kernel_basis_at(double e0, BranchType branch,
                                          double eta, const Units& u);

// Kernel at the negative root of the locus (eta = -eta1, -eta2, or 0),
// where the coordinates take the reference form with
// D = (A1 - eta1 kappa)/A2 in (0, 1) for TypeI and shape-dual coupling
// -4 T eta2 for TypeS. The mirrored kernels at the positive root follow
// from kernel_basis_at.
std::vector<NormalVector> kernel_basis(double e0, BranchType branch,
                                       const Units& u);

// Ratio D = (A1 - eta1 kappa)/A2 of the TypeI kernel; lies strictly
// between 0 and 1 for every e in (0,1).
double kernel_ratio_D(double e, const Units& u);

// Subgroup of O(2)~ fixing v, decided from the representation matrices over
// the generator set {theta = pi, theta = 1, flip, flip composed with
// candidate rotations}; fixed-vector tolerance 1e-12.
StabilizerLabel stabilizer_of_normal_vector(const NormalVector& v,
                                            BranchType context);

} // namespace maclaurin

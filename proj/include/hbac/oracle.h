// Copyright 2026 The hbac-ico Authors
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

#ifndef HBAC_ORACLE_H
#define HBAC_ORACLE_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hbac/quantum_switch.h"
#include "hbac/register.h"

// Brute-force dense reference for the population rules. Everything here works with explicit complex
// matrices and never calls the fast-path kernels it is used to check.
namespace hbac::oracle {

/// Largest register exponent the dense path accepts (128 x 128 matrices).
constexpr size_t kDenseCap = 6;

using Matrix = Eigen::MatrixXcd;

enum class Factor {
    kA,
    kB,
    kTwoSort,
};

/// 2x2 Pauli matrices.
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();

/// Literal block-diagonal matrix of `spec`: sigma_y blocks for U_A, sigma_z for U_B, sigma_x for the
/// two-sort unitary. Throws std::length_error above kDenseCap.
Matrix materialize(const BlockUnitarySpec &spec, Factor factor);

/// max |U U^dag - 1|.
double unitarity_defect(const Matrix &u);

/// Diagonal density matrix with the given populations.
Matrix density(const DiagonalState &state);
Matrix density(std::span<const double> populations);

/// Real parts of the diagonal.
std::vector<double> diagonal(const Matrix &rho);
/// Largest |rho_ij| with i != j.
double max_off_diagonal(const Matrix &rho);

/// Tr_R(rho) (x) rho_R: partial trace over the least significant qubit, then a fresh thermal qubit.
Matrix reset(const Matrix &rho, const ThermalParams &params);

/// (U_A U_B rho U_B^dag U_A^dag + U_B U_A rho U_A^dag U_B^dag
///  +- U_A U_B rho U_A^dag U_B^dag +- U_B U_A rho U_B^dag U_A^dag) / 4.
Matrix switch_channel(const Matrix &rho, const Matrix &ua, const Matrix &ub, Sign sign);
Matrix switch_channel(const Matrix &rho, const BlockUnitarySpec &spec, Sign sign);

/// |0><0| (x) U_B U_A + |1><1| (x) U_A U_B with the control as the most significant qubit.
Matrix switch_unitary(const Matrix &ua, const Matrix &ub);

/// Prepares the control in |+>, applies switch_unitary, and projects the control onto |+> or |->.
/// Returns the unnormalized target state.
Matrix switch_via_control(const Matrix &rho, const Matrix &ua, const Matrix &ub, Sign sign);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix &rho);

struct FamilyDeviation {
    std::string family;
    Sign sign;
    /// Worst |fast - dense| over diagonal populations.
    double diagonal;
    /// Worst off-diagonal magnitude left in the dense output.
    double off_diagonal;
    size_t cases;
};

struct ComparisonReport {
    std::vector<FamilyDeviation> rows;
    double max_deviation() const;
    double max_off_diagonal() const;
};

/// For n = 1..nmax, `trials` seeded random diagonal states and every layout of the standard, ideal,
/// k-ICO and tree-sort families, compares switch_branches against the dense channel diagonal.
/// `fault` perturbs the fast-path PLUS output; used to check the harness notices.
ComparisonReport compare(size_t nmax, size_t trials, uint64_t seed, double fault = 0);

}  // namespace hbac::oracle

#endif

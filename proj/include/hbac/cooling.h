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

#ifndef HBAC_COOLING_H
#define HBAC_COOLING_H

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hbac/register.h"

namespace hbac {

/// Dense matrices are only materialized up to this exponent (4096 x 4096).
constexpr size_t kDenseTransferCap = 12;

/// Swaps every interior adjacent pair (2k, 2k+1), 1-based, keeping the first and last entries in place.
/// This is the population action of Diag(1, sigma_x, ..., sigma_x, 1).
DiagonalState two_sort(const DiagonalState &state);

/// One HBAC round on reduced populations: reset, two-sort, trace out the reset qubit.
ReducedState hbac_round(const ReducedState &state, const ThermalParams &params);

enum class TransferKind {
    kFull,
    kPlus,
    kMinus,
};

/// Square non-negative matrix acting on population vectors.
///
/// Entries are kept densely for inspection and as a per-column nonzero list so
/// that repeated application stays linear in the dimension.
class TransferMatrix {
   public:
    TransferMatrix(size_t n, TransferKind kind, size_t dimension, std::vector<double> row_major);

    size_t n() const {
        return n_;
    }
    size_t dimension() const {
        return dimension_;
    }
    TransferKind kind() const {
        return kind_;
    }
    double at(size_t row, size_t col) const {
        return entries_[row * dimension_ + col];
    }
    std::span<const double> entries() const {
        return entries_;
    }

    std::vector<double> apply(std::span<const double> v) const;
    ReducedState apply(const ReducedState &state) const;
    std::vector<double> column_sums() const;
    size_t nonzero_count() const;

   private:
    struct Nonzero {
        size_t row;
        double value;
    };
    size_t n_;
    TransferKind kind_;
    size_t dimension_;
    std::vector<double> entries_;
    std::vector<std::vector<Nonzero>> columns_;
};

/// The HBAC transfer matrix T on 2^n reduced populations, written out row by row:
/// first row (e^eps, e^eps, 0, ...)/z, then e^-eps on the subdiagonal and e^eps on the
/// superdiagonal, last row ending (e^-eps, e^-eps)/z.
/// Throws std::invalid_argument for n < 1 and std::length_error above kDenseTransferCap.
TransferMatrix build_transfer(size_t n, const ThermalParams &params);

/// p_k = (1 - e^-2eps) / (1 - e^-(2^(n+1) eps)) * e^(-2 eps (k-1)), the fixed point of T.
ReducedState fixed_point(size_t n, const ThermalParams &params);

struct IterationResult {
    ReducedState state;
    size_t steps;
    bool converged;
    /// L1 distance between the last two iterates.
    double last_delta;
    /// Ratio of the last two deltas; approaches the subdominant eigenvalue modulus of T.
    double contraction;
};

/// Repeats hbac_round until successive iterates are within `tol` in L1 or `max_steps` rounds ran.
/// Non-convergence is reported through IterationResult::converged with the last state attached.
IterationResult iterate(const ReducedState &start, const ThermalParams &params, double tol, size_t max_steps);

/// Power iteration with an explicit matrix. Same stopping rule as iterate().
IterationResult power_iterate(const TransferMatrix &matrix, const ReducedState &start, double tol, size_t max_steps);

}  // namespace hbac

#endif

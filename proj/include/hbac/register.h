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

#ifndef HBAC_REGISTER_H
#define HBAC_REGISTER_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hbac {

/// Register-size cap used when ICO_HBAC_MAX_N is not set.
constexpr size_t kDefaultMaxExponent = 24;

/// Largest allowed register exponent n (a register holds n+1 qubits).
/// Reads ICO_HBAC_MAX_N from the environment, falling back to kDefaultMaxExponent.
size_t max_register_exponent();

/// Throws std::length_error if n exceeds max_register_exponent().
void check_register_exponent(size_t n);

/// Bath parameters. Temperature only enters through the scaled gap epsilon.
struct ThermalParams {
    double epsilon;
    /// Partition constant 2 cosh(epsilon).
    double z;
    /// Thermal ground population e^epsilon / z.
    double ground;
    /// Thermal excited population e^-epsilon / z.
    double excited;
};

/// Throws std::domain_error unless epsilon is finite and strictly positive.
ThermalParams make_thermal_params(double epsilon);

/// Populations of the full (n+1)-qubit register, indexed by basis label.
///
/// Index 0 is |g...g>; the reset qubit is the least significant bit, so index 1
/// is |g...ge>. Branch states are unnormalized and carry their probability in
/// norm().
class DiagonalState {
   public:
    DiagonalState(size_t n, std::vector<double> populations);

    /// |g...g> on n+1 qubits.
    static DiagonalState ground(size_t n);
    /// Uniform populations 2^-(n+1).
    static DiagonalState uniform(size_t n);
    /// Every qubit independently thermal at the given bath parameters.
    static DiagonalState thermal(size_t n, const ThermalParams &params);

    size_t n() const {
        return n_;
    }
    size_t num_qubits() const {
        return n_ + 1;
    }
    size_t size() const {
        return populations_.size();
    }
    double norm() const {
        return norm_;
    }
    double operator[](size_t index) const {
        return populations_[index];
    }
    std::span<const double> populations() const {
        return populations_;
    }

    /// Throws std::domain_error for a zero-norm state.
    DiagonalState normalized() const;

    bool operator==(const DiagonalState &other) const = default;

   private:
    size_t n_;
    std::vector<double> populations_;
    double norm_;
};

/// Populations of the n qubits left after tracing out the reset qubit.
class ReducedState {
   public:
    ReducedState(size_t n, std::vector<double> populations);

    static ReducedState ground(size_t n);
    static ReducedState uniform(size_t n);
    static ReducedState thermal(size_t n, const ThermalParams &params);

    size_t n() const {
        return n_;
    }
    size_t size() const {
        return populations_.size();
    }
    double norm() const {
        return norm_;
    }
    double operator[](size_t index) const {
        return populations_[index];
    }
    std::span<const double> populations() const {
        return populations_;
    }

    ReducedState normalized() const;

    bool operator==(const ReducedState &other) const = default;

   private:
    size_t n_;
    std::vector<double> populations_;
    double norm_;
};

/// Ground/excited labels of a basis state, most significant qubit first.
/// Bit value 0 is |g>, 1 is |e>. The last bit is the reset qubit.
struct BasisLabel {
    std::vector<uint8_t> bits;

    /// Renders as e.g. "gge".
    std::string to_string() const;
    bool operator==(const BasisLabel &other) const = default;
};

/// 0-based index -> label. Throws std::out_of_range if index >= 2^num_qubits.
BasisLabel label_of(size_t num_qubits, size_t index);
/// Inverse of label_of.
size_t index_of(const BasisLabel &label);

/// p_k = lambda_{2k-1} + lambda_{2k} (1-based), i.e. trace out the reset qubit.
ReducedState reduce(const DiagonalState &state);

/// Tensor a fresh thermal qubit into the reset position.
DiagonalState reset(const ReducedState &state, const ThermalParams &params);

/// Sum of |a_i - b_i|. Throws std::invalid_argument on length mismatch.
double l1_distance(std::span<const double> a, std::span<const double> b);

}  // namespace hbac

#endif

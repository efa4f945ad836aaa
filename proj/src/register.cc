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

#include "hbac/register.h"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hbac {

namespace {

constexpr size_t kAbsoluteMaxExponent = 40;

double checked_total(size_t expected_size, const std::vector<double> &populations, const char *what) {
    if (populations.size() != expected_size) {
        throw std::invalid_argument(
            std::string(what) + ": expected " + std::to_string(expected_size) + " populations, got " +
            std::to_string(populations.size()));
    }
    for (double v : populations) {
        if (!std::isfinite(v) || v < 0) {
            throw std::invalid_argument(std::string(what) + ": populations must be finite and non-negative");
        }
    }
    return std::accumulate(populations.begin(), populations.end(), 0.0);
}

// Product-state populations with `qubits` independent thermal qubits.
std::vector<double> thermal_product(size_t qubits, const ThermalParams &params) {
    std::vector<double> out(size_t{1} << qubits);
    for (size_t i = 0; i < out.size(); i++) {
        auto excited = static_cast<int>(std::popcount(i));
        out[i] = std::pow(params.ground, static_cast<int>(qubits) - excited) * std::pow(params.excited, excited);
    }
    return out;
}

}  // namespace

size_t max_register_exponent() {
    const char *env = std::getenv("ICO_HBAC_MAX_N");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxExponent;
    }
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v > kAbsoluteMaxExponent) {
        throw std::invalid_argument("ICO_HBAC_MAX_N must be an integer in [0, 40]");
    }
    return static_cast<size_t>(v);
}

void check_register_exponent(size_t n) {
    size_t cap = max_register_exponent();
    if (n > cap) {
        throw std::length_error(
            "register exponent n=" + std::to_string(n) + " exceeds the configured cap " + std::to_string(cap));
    }
}

ThermalParams make_thermal_params(double epsilon) {
    if (!std::isfinite(epsilon) || epsilon <= 0) {
        throw std::domain_error("epsilon must be finite and strictly positive");
    }
    // ground = 1 / (1 + e^-2eps) avoids the cancellation in e^eps / (e^eps + e^-eps) at tiny eps and the
    // overflow at large eps.
    double boltzmann = std::exp(-2 * epsilon);
    ThermalParams p;
    p.epsilon = epsilon;
    p.z = 2 * std::cosh(epsilon);
    p.ground = 1 / (1 + boltzmann);
    p.excited = boltzmann / (1 + boltzmann);
    return p;
}

DiagonalState::DiagonalState(size_t n, std::vector<double> populations) : n_(n) {
    check_register_exponent(n);
    norm_ = checked_total(size_t{1} << (n + 1), populations, "DiagonalState");
    populations_ = std::move(populations);
}

DiagonalState DiagonalState::ground(size_t n) {
    check_register_exponent(n);
    std::vector<double> v(size_t{1} << (n + 1), 0.0);
    v[0] = 1;
    return {n, std::move(v)};
}

DiagonalState DiagonalState::uniform(size_t n) {
    check_register_exponent(n);
    size_t size = size_t{1} << (n + 1);
    return {n, std::vector<double>(size, 1.0 / static_cast<double>(size))};
}

DiagonalState DiagonalState::thermal(size_t n, const ThermalParams &params) {
    check_register_exponent(n);
    return {n, thermal_product(n + 1, params)};
}

DiagonalState DiagonalState::normalized() const {
    if (norm_ <= 0) {
        throw std::domain_error("cannot normalize a zero-norm state");
    }
    std::vector<double> v(populations_);
    for (auto &x : v) {
        x /= norm_;
    }
    return {n_, std::move(v)};
}

ReducedState::ReducedState(size_t n, std::vector<double> populations) : n_(n) {
    check_register_exponent(n);
    norm_ = checked_total(size_t{1} << n, populations, "ReducedState");
    populations_ = std::move(populations);
}

ReducedState ReducedState::ground(size_t n) {
    check_register_exponent(n);
    std::vector<double> v(size_t{1} << n, 0.0);
    v[0] = 1;
    return {n, std::move(v)};
}

ReducedState ReducedState::uniform(size_t n) {
    check_register_exponent(n);
    size_t size = size_t{1} << n;
    return {n, std::vector<double>(size, 1.0 / static_cast<double>(size))};
}

ReducedState ReducedState::thermal(size_t n, const ThermalParams &params) {
    check_register_exponent(n);
    return {n, thermal_product(n, params)};
}

ReducedState ReducedState::normalized() const {
    if (norm_ <= 0) {
        throw std::domain_error("cannot normalize a zero-norm state");
    }
    std::vector<double> v(populations_);
    for (auto &x : v) {
        x /= norm_;
    }
    return {n_, std::move(v)};
}

std::string BasisLabel::to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) {
        out.push_back(b ? 'e' : 'g');
    }
    return out;
}

BasisLabel label_of(size_t num_qubits, size_t index) {
    if (num_qubits >= 64 || index >= (size_t{1} << num_qubits)) {
        throw std::out_of_range("basis index out of range");
    }
    BasisLabel label;
    label.bits.resize(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        label.bits[q] = static_cast<uint8_t>((index >> (num_qubits - 1 - q)) & 1);
    }
    return label;
}

size_t index_of(const BasisLabel &label) {
    size_t index = 0;
    for (auto b : label.bits) {
        if (b > 1) {
            throw std::invalid_argument("basis label bits must be 0 or 1");
        }
        index = (index << 1) | b;
    }
    return index;
}

ReducedState reduce(const DiagonalState &state) {
    std::vector<double> p(state.size() / 2);
    for (size_t k = 0; k < p.size(); k++) {
        p[k] = state[2 * k] + state[2 * k + 1];
    }
    return {state.n(), std::move(p)};
}

DiagonalState reset(const ReducedState &state, const ThermalParams &params) {
    std::vector<double> lambda(2 * state.size());
    for (size_t k = 0; k < state.size(); k++) {
        lambda[2 * k] = state[k] * params.ground;
        lambda[2 * k + 1] = state[k] * params.excited;
    }
    return {state.n(), std::move(lambda)};
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("l1_distance: length mismatch");
    }
    double total = 0;
    for (size_t i = 0; i < a.size(); i++) {
        total += std::abs(a[i] - b[i]);
    }
    return total;
}

}  // namespace hbac

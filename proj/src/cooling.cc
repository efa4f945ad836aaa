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

#include "hbac/cooling.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace hbac {

DiagonalState two_sort(const DiagonalState &state) {
    std::vector<double> out(state.populations().begin(), state.populations().end());
    // 0-based: swap (1,2), (3,4), ..., (size-3, size-2).
    for (size_t i = 1; i + 1 < out.size(); i += 2) {
        std::swap(out[i], out[i + 1]);
    }
    return {state.n(), std::move(out)};
}

ReducedState hbac_round(const ReducedState &state, const ThermalParams &params) {
    return reduce(two_sort(reset(state, params)));
}

TransferMatrix::TransferMatrix(size_t n, TransferKind kind, size_t dimension, std::vector<double> row_major)
    : n_(n), kind_(kind), dimension_(dimension), entries_(std::move(row_major)), columns_(dimension) {
    if (entries_.size() != dimension_ * dimension_) {
        throw std::invalid_argument("TransferMatrix: entry count does not match dimension");
    }
    for (size_t r = 0; r < dimension_; r++) {
        for (size_t c = 0; c < dimension_; c++) {
            double v = entries_[r * dimension_ + c];
            if (!std::isfinite(v) || v < 0) {
                throw std::invalid_argument("TransferMatrix: entries must be finite and non-negative");
            }
            if (v != 0) {
                columns_[c].push_back({r, v});
            }
        }
    }
}

std::vector<double> TransferMatrix::apply(std::span<const double> v) const {
    if (v.size() != dimension_) {
        throw std::invalid_argument("TransferMatrix::apply: dimension mismatch");
    }
    std::vector<double> out(dimension_, 0.0);
    for (size_t c = 0; c < dimension_; c++) {
        if (v[c] == 0) {
            continue;
        }
        for (const auto &nz : columns_[c]) {
            out[nz.row] += nz.value * v[c];
        }
    }
    return out;
}

ReducedState TransferMatrix::apply(const ReducedState &state) const {
    return {state.n(), apply(state.populations())};
}

std::vector<double> TransferMatrix::column_sums() const {
    std::vector<double> sums(dimension_, 0.0);
    for (size_t c = 0; c < dimension_; c++) {
        for (const auto &nz : columns_[c]) {
            sums[c] += nz.value;
        }
    }
    return sums;
}

size_t TransferMatrix::nonzero_count() const {
    size_t total = 0;
    for (const auto &col : columns_) {
        total += col.size();
    }
    return total;
}

TransferMatrix build_transfer(size_t n, const ThermalParams &params) {
    if (n < 1) {
        throw std::invalid_argument("build_transfer: n must be at least 1");
    }
    if (n > kDenseTransferCap) {
        throw std::length_error("build_transfer: dense matrices are capped at n=" + std::to_string(kDenseTransferCap));
    }
    check_register_exponent(n);
    const size_t dim = size_t{1} << n;
    std::vector<double> m(dim * dim, 0.0);
    auto at = [&](size_t r, size_t c) -> double & { return m[r * dim + c]; };
    at(0, 0) = params.ground;
    at(0, 1) = params.ground;
    for (size_t r = 1; r + 1 < dim; r++) {
        at(r, r - 1) = params.excited;
        at(r, r + 1) = params.ground;
    }
    // For n = 1 the last row coincides with the subdiagonal of the first column; assign, do not add.
    at(dim - 1, dim - 2) = params.excited;
    at(dim - 1, dim - 1) = params.excited;
    return {n, TransferKind::kFull, dim, std::move(m)};
}

ReducedState fixed_point(size_t n, const ThermalParams &params) {
    if (n < 1) {
        throw std::invalid_argument("fixed_point: n must be at least 1");
    }
    check_register_exponent(n);
    const size_t dim = size_t{1} << n;
    const double eps = params.epsilon;
    // (1 - e^-2eps) / (1 - e^-(2^(n+1) eps)), both via expm1.
    const double span_exponent = std::ldexp(eps, static_cast<int>(n) + 1);
    const double denominator = span_exponent > 700 ? 1.0 : -std::expm1(-span_exponent);
    const double leading = -std::expm1(-2 * eps) / denominator;
    std::vector<double> p(dim);
    for (size_t k = 0; k < dim; k++) {
        p[k] = leading * std::exp(-2 * eps * static_cast<double>(k));
    }
    return {n, std::move(p)};
}

namespace {

template <typename Step>
IterationResult iterate_until(const ReducedState &start, double tol, size_t max_steps, Step step) {
    if (!(tol > 0)) {
        throw std::invalid_argument("iterate: tol must be positive");
    }
    ReducedState current = start;
    double previous_delta = 0;
    double delta = 0;
    for (size_t s = 1; s <= max_steps; s++) {
        ReducedState next = step(current);
        previous_delta = delta;
        delta = l1_distance(next.populations(), current.populations());
        current = std::move(next);
        if (delta < tol) {
            return {std::move(current), s, true, delta, previous_delta > 0 ? delta / previous_delta : 0.0};
        }
    }
    return {std::move(current), max_steps, false, delta, previous_delta > 0 ? delta / previous_delta : 0.0};
}

}  // namespace

IterationResult iterate(const ReducedState &start, const ThermalParams &params, double tol, size_t max_steps) {
    return iterate_until(start, tol, max_steps, [&](const ReducedState &p) { return hbac_round(p, params); });
}

IterationResult power_iterate(const TransferMatrix &matrix, const ReducedState &start, double tol, size_t max_steps) {
    if (matrix.dimension() != start.size()) {
        throw std::invalid_argument("power_iterate: dimension mismatch");
    }
    return iterate_until(start, tol, max_steps, [&](const ReducedState &p) { return matrix.apply(p); });
}

}  // namespace hbac

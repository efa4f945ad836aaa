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

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace hbac;
using hbac::testing::max_abs_diff;
using hbac::testing::random_simplex;

namespace {

std::vector<double> as_vector(std::span<const double> s) {
    return {s.begin(), s.end()};
}

}  // namespace

TEST(two_sort, swaps_interior_pair) {
    auto out = two_sort(DiagonalState(1, {0.1, 0.2, 0.3, 0.4}));
    EXPECT_EQ(as_vector(out.populations()), (std::vector<double>{0.1, 0.3, 0.2, 0.4}));

    auto big = two_sort(DiagonalState(2, {1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(as_vector(big.populations()), (std::vector<double>{1, 3, 2, 5, 4, 7, 6, 8}));
}

TEST(two_sort, ground_state_is_fixed) {
    for (size_t n = 1; n <= 6; n++) {
        EXPECT_EQ(two_sort(DiagonalState::ground(n)), DiagonalState::ground(n));
    }
}

TEST(two_sort, involution_and_permutation_property) {
    std::mt19937_64 rng(5);
    for (size_t trial = 0; trial < 1000; trial++) {
        size_t n = 1 + rng() % 7;
        DiagonalState s(n, random_simplex(rng, size_t{1} << (n + 1), 7));
        auto once = two_sort(s);
        ASSERT_EQ(two_sort(once), s);
        ASSERT_NEAR(once.norm(), s.norm(), 1e-15);
        auto a = as_vector(s.populations());
        auto b = as_vector(once.populations());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        ASSERT_EQ(a, b);
    }
}

TEST(transfer, n1_matches_round_on_basis_vectors) {
    for (double eps : {0.1, 0.5, 2.0}) {
        auto params = make_thermal_params(eps);
        auto t = build_transfer(1, params);
        double z = 2 * std::cosh(eps);
        EXPECT_NEAR(t.at(0, 0), std::exp(eps) / z, 1e-15);
        EXPECT_NEAR(t.at(0, 1), std::exp(eps) / z, 1e-15);
        EXPECT_NEAR(t.at(1, 0), std::exp(-eps) / z, 1e-15);
        EXPECT_NEAR(t.at(1, 1), std::exp(-eps) / z, 1e-15);
        for (size_t c = 0; c < 2; c++) {
            std::vector<double> e(2, 0.0);
            e[c] = 1;
            auto col = hbac_round(ReducedState(1, e), params);
            EXPECT_NEAR(col[0], t.at(0, c), 1e-15);
            EXPECT_NEAR(col[1], t.at(1, c), 1e-15);
        }
    }
}

TEST(transfer, displayed_band_structure) {
    auto params = make_thermal_params(0.7);
    auto t = build_transfer(3, params);
    const size_t dim = 8;
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            double expected = 0;
            if (r == 0 && c <= 1) {
                expected = params.ground;
            } else if (r == dim - 1 && c >= dim - 2) {
                expected = params.excited;
            } else if (c == r + 1) {
                expected = params.ground;
            } else if (c + 1 == r) {
                expected = params.excited;
            }
            EXPECT_DOUBLE_EQ(t.at(r, c), expected) << r << "," << c;
        }
    }
    EXPECT_EQ(t.nonzero_count(), 2 * dim);
}

TEST(transfer, column_stochastic) {
    for (size_t n = 1; n <= 8; n++) {
        for (double eps : {0.1, 0.5, 1.0}) {
            auto t = build_transfer(n, make_thermal_params(eps));
            for (double s : t.column_sums()) {
                ASSERT_NEAR(s, 1, 1e-12);
            }
        }
    }
}

TEST(transfer, matrix_free_round_equals_matrix) {
    std::mt19937_64 rng(9);
    for (size_t n = 1; n <= 8; n++) {
        for (double eps : {0.1, 0.5, 1.0}) {
            auto params = make_thermal_params(eps);
            auto t = build_transfer(n, params);
            for (int trial = 0; trial < 20; trial++) {
                ReducedState p(n, random_simplex(rng, size_t{1} << n, 4));
                ASSERT_LT(max_abs_diff(t.apply(p).populations(), hbac_round(p, params).populations()), 1e-13);
            }
        }
    }
}

TEST(transfer, size_cap) {
    EXPECT_THROW(build_transfer(kDenseTransferCap + 1, make_thermal_params(0.5)), std::length_error);
    EXPECT_THROW(build_transfer(0, make_thermal_params(0.5)), std::invalid_argument);
}

TEST(fixed_point, n1_is_thermal) {
    auto params = make_thermal_params(0.5);
    auto p = fixed_point(1, params);
    EXPECT_NEAR(p[0], 0.731058578630005, 1e-15);
    EXPECT_NEAR(p[1], 0.268941421369995, 1e-15);
}

TEST(fixed_point, n2_closed_form_and_power_iteration) {
    auto params = make_thermal_params(0.5);
    auto p = fixed_point(2, params);
    // Evaluated independently at 30 digits.
    const std::vector<double> expected{0.643914259887972312, 0.236882818089910132, 0.0871443187420325675,
                                       0.0320586032800849885};
    EXPECT_LT(max_abs_diff(p.populations(), expected), 1e-15);
    auto it = power_iterate(build_transfer(2, params), ReducedState::uniform(2), 1e-16, 100000);
    EXPECT_LT(l1_distance(it.state.populations(), expected), 1e-14);
}

TEST(fixed_point, is_invariant_under_t) {
    for (size_t n = 1; n <= 10; n++) {
        for (double eps : {0.1, 0.5, 1.0}) {
            auto params = make_thermal_params(eps);
            auto p = fixed_point(n, params);
            ASSERT_NEAR(p.norm(), 1, 1e-13);
            ASSERT_LT(max_abs_diff(build_transfer(n, params).apply(p).populations(), p.populations()), 1e-12);
            // Ratios are only exact while both entries stay out of the subnormal range.
            for (size_t k = 1; k < p.size() && p[k] > 1e-290; k++) {
                ASSERT_NEAR(p[k] / p[k - 1], std::exp(-2 * eps), 1e-12);
            }
        }
    }
}

TEST(fixed_point, stable_for_tiny_and_huge_gaps) {
    auto hot = fixed_point(3, make_thermal_params(1e-9));
    for (double v : hot.populations()) {
        EXPECT_NEAR(v, 0.125, 1e-8);
    }
    EXPECT_NEAR(hot.norm(), 1, 1e-12);
    auto huge = fixed_point(12, make_thermal_params(1.0));
    EXPECT_NEAR(huge[0], 1 - std::exp(-2.0), 1e-15);
    EXPECT_NEAR(huge.norm(), 1, 1e-12);
}

TEST(iterate, converges_from_uniform) {
    auto params = make_thermal_params(0.5);
    auto it = iterate(ReducedState::uniform(2), params, 1e-10, 100000);
    EXPECT_TRUE(it.converged);
    EXPECT_LT(l1_distance(it.state.populations(), fixed_point(2, params).populations()), 1e-9);
    EXPECT_GT(it.contraction, 0);
    EXPECT_LT(it.contraction, 1);
}

TEST(iterate, fixed_point_start_takes_one_step) {
    auto params = make_thermal_params(0.5);
    auto start = fixed_point(3, params);
    auto it = iterate(start, params, 1e-12, 100);
    EXPECT_EQ(it.steps, 1u);
    EXPECT_TRUE(it.converged);
    EXPECT_LT(max_abs_diff(it.state.populations(), start.populations()), 1e-15);
}

TEST(iterate, cold_bath_reaches_ground) {
    auto params = make_thermal_params(5);
    std::mt19937_64 rng(3);
    auto it = iterate(ReducedState(3, random_simplex(rng, 8)), params, 1e-13, 100000);
    EXPECT_TRUE(it.converged);
    EXPECT_NEAR(it.state[0], 1, 1e-4);
    EXPECT_NEAR(it.state[0], 1 - std::exp(-10.0), 1e-12);
}

TEST(iterate, reports_non_convergence) {
    auto params = make_thermal_params(0.1);
    auto it = iterate(ReducedState::uniform(6), params, 1e-15, 5);
    EXPECT_FALSE(it.converged);
    EXPECT_EQ(it.steps, 5u);
    EXPECT_NEAR(it.state.norm(), 1, 1e-14);
    EXPECT_THROW(iterate(ReducedState::uniform(2), params, 0, 5), std::invalid_argument);
}

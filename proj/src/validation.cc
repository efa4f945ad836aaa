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

#include "hbac/validation.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "hbac/cooling.h"
#include "hbac/quantum_switch.h"

namespace hbac {

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c) { return c.passed; });
}

namespace {

std::vector<double> random_simplex(std::mt19937_64 &rng, size_t size) {
    std::vector<double> v(size);
    double total = 0;
    for (auto &x : v) {
        x = -std::log(static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53);
        total += x;
    }
    for (auto &x : v) {
        x /= total;
    }
    return v;
}

void add(ValidationReport &report, std::string name, double value, double threshold) {
    report.checks.push_back({std::move(name), value < threshold, value, threshold});
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

ValidationReport run_validation(const ValidationOptions &options) {
    using oracle::Matrix;
    ValidationReport report;
    std::mt19937_64 rng(options.seed);
    const std::vector<double> epsilons{0.1, 0.5, 1.0};

    report.oracle = oracle::compare(options.nmax, options.trials, options.seed, options.inject_fault);
    add(report, "oracle: branch populations vs dense switch channel", report.oracle.max_deviation(), 1e-12);
    add(report, "oracle: dense off-diagonals for diagonal inputs", report.oracle.max_off_diagonal(), 1e-12);

    {
        const std::complex<double> i{0, 1};
        double worst = (oracle::sigma_y() * oracle::sigma_z() - i * oracle::sigma_x()).cwiseAbs().maxCoeff();
        worst = std::max(worst, (oracle::sigma_z() * oracle::sigma_y() + i * oracle::sigma_x()).cwiseAbs().maxCoeff());
        add(report, "pauli: sigma_y sigma_z = i sigma_x, sigma_z sigma_y = -i sigma_x", worst, 1e-15);
    }

    {
        double unitarity = 0;
        double permutation = 0;
        double control_route = 0;
        double dense_reset = 0;
        for (size_t n = 1; n <= options.nmax; n++) {
            auto spec = standard_pair(n);
            Matrix ua = oracle::materialize(spec, oracle::Factor::kA);
            Matrix ub = oracle::materialize(spec, oracle::Factor::kB);
            Matrix sort = oracle::materialize(spec, oracle::Factor::kTwoSort);
            for (const Matrix *u : {&ua, &ub, &sort}) {
                unitarity = std::max(unitarity, oracle::unitarity_defect(*u));
            }
            for (size_t t = 0; t < 10; t++) {
                DiagonalState state(n, random_simplex(rng, size_t{1} << (n + 1)));
                Matrix rho = oracle::density(state);
                DiagonalState sorted = two_sort(state);
                auto fast = sorted.populations();
                for (const Matrix &u : {Matrix(sort), Matrix(ua * ub), Matrix(ub * ua)}) {
                    permutation = std::max(permutation, max_abs_diff(fast, oracle::diagonal(u * rho * u.adjoint())));
                }
                for (Sign sign : {Sign::kPlus, Sign::kMinus}) {
                    Matrix a = oracle::switch_channel(rho, ua, ub, sign);
                    Matrix b = oracle::switch_via_control(rho, ua, ub, sign);
                    control_route = std::max(control_route, (a - b).cwiseAbs().maxCoeff());
                }
                for (double eps : epsilons) {
                    auto params = make_thermal_params(eps);
                    ReducedState p(n, random_simplex(rng, size_t{1} << n));
                    Matrix reset_dense = oracle::reset(oracle::density(reset(p, params)), params);
                    DiagonalState fast_reset = reset(reduce(reset(p, params)), params);
                    dense_reset = std::max(dense_reset, max_abs_diff(fast_reset.populations(), oracle::diagonal(reset_dense)));
                }
            }
        }
        add(report, "oracle: unitarity of U_A, U_B, two-sort", unitarity, 1e-12);
        add(report, "oracle: U_A U_B and U_B U_A permute populations like two-sort", permutation, 1e-12);
        add(report, "oracle: switch channel matches the controlled-order unitary", control_route, 1e-12);
        add(report, "oracle: dense reset vs population reset", dense_reset, 1e-13);
    }

    {
        double stochastic = 0;
        double matrix_free = 0;
        double branch_sum = 0;
        for (size_t n = 1; n <= 8; n++) {
            for (double eps : epsilons) {
                auto params = make_thermal_params(eps);
                auto t = build_transfer(n, params);
                for (double s : t.column_sums()) {
                    stochastic = std::max(stochastic, std::abs(s - 1));
                }
                ReducedState p(n, random_simplex(rng, size_t{1} << n));
                matrix_free = std::max(matrix_free, max_abs_diff(t.apply(p).populations(), hbac_round(p, params).populations()));
                auto spec = standard_pair(n);
                auto plus = branch_transfer(params, spec, Sign::kPlus);
                auto minus = branch_transfer(params, spec, Sign::kMinus);
                for (size_t i = 0; i < t.entries().size(); i++) {
                    branch_sum = std::max(branch_sum, std::abs(plus.entries()[i] + minus.entries()[i] - t.entries()[i]));
                }
            }
        }
        add(report, "hbac: columns of T sum to 1 (n <= 8)", stochastic, 1e-12);
        add(report, "hbac: matrix-free round equals T p (n <= 8)", matrix_free, 1e-13);
        add(report, "switch: T_+ + T_- = T (n <= 8)", branch_sum, 1e-14);
    }

    {
        double worst = 0;
        for (size_t n = 1; n <= 6; n++) {
            for (double eps : epsilons) {
                auto params = make_thermal_params(eps);
                auto it = power_iterate(build_transfer(n, params), ReducedState::uniform(n), 1e-14, 1'000'000);
                worst = std::max(worst, l1_distance(it.state.populations(), fixed_point(n, params).populations()));
            }
        }
        add(report, "hbac: power iteration reaches the closed-form fixed point (n <= 6)", worst, 1e-10);
    }
    return report;
}

}  // namespace hbac

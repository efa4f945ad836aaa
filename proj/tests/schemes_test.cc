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

#include "hbac/schemes.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "hbac/oracle.h"
#include "test_util.h"

using namespace hbac;
using hbac::testing::max_abs_diff;
using hbac::testing::random_simplex;

namespace {

SchemeConfig config_for(Scheme scheme, size_t n, double eps, std::optional<size_t> k = std::nullopt) {
    SchemeConfig c;
    c.scheme = scheme;
    c.n = n;
    c.epsilon = eps;
    c.k = k;
    return c;
}

}  // namespace

TEST(config, validation) {
    auto c = config_for(Scheme::kHbacKIco, 3, 0.5);
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.k = 4;
    EXPECT_THROW(c.validate(), std::out_of_range);
    c.k = 2;
    EXPECT_NO_THROW(c.validate());
    auto d = config_for(Scheme::kHbacIco, 3, 0.5, 1);
    EXPECT_THROW(d.validate(), std::invalid_argument);
    auto e = config_for(Scheme::kHbacIco, 3, 0.0);
    EXPECT_THROW(e.validate(), std::domain_error);
    auto f = config_for(Scheme::kHbacIco, 3, 0.5);
    f.desired_success = 1.0;
    EXPECT_THROW(f.validate(), std::domain_error);
    f.desired_success.reset();
    f.initial = {InitialKind::kExplicit, {0.5, 0.5}};
    EXPECT_THROW(f.validate(), std::invalid_argument);
    EXPECT_EQ(parse_scheme("HBAC_KICO"), Scheme::kHbacKIco);
    EXPECT_THROW(parse_scheme("hbac"), std::invalid_argument);
}

TEST(success_probability, hbac_ico_large_n) {
    auto c = config_for(Scheme::kHbacIco, 10, 0.5);
    // (1 - e^-1) e^0.5 / (2 cosh 0.5), evaluated at 30 digits.
    EXPECT_NEAR(success_probability(c), 0.462117157260009759, 1e-15);
    EXPECT_NEAR(hbac_ico_limit_success(make_thermal_params(0.5)), 0.462117157260009759, 1e-15);
    EXPECT_NEAR(operational_success_probability(c), success_probability(c), 1e-12);
}

TEST(success_probability, hbac_ico_dense_check_n3) {
    auto params = make_thermal_params(0.5);
    auto c = config_for(Scheme::kHbacIco, 3, 0.5);
    // Dense route: lift p^inf to a density matrix, reset with partial trace, apply the displayed channel.
    auto p = fixed_point(3, params);
    std::vector<double> lifted(16, 0.0);
    for (size_t k = 0; k < 8; k++) {
        lifted[2 * k] = p[k];
    }
    oracle::Matrix rho = oracle::reset(oracle::density(lifted), params);
    oracle::Matrix plus = oracle::switch_channel(rho, standard_pair(3), Sign::kPlus);
    EXPECT_NEAR(plus.trace().real(), success_probability(c), 1e-14);
    // Finite n sits just above the large-n limit by p_last e^-eps / z plus the p_1 correction.
    EXPECT_GT(success_probability(c), hbac_ico_limit_success(params));
    EXPECT_LT(success_probability(c) - hbac_ico_limit_success(params), 1e-2);
}

TEST(success_probability, kico_example) {
    auto c = config_for(Scheme::kHbacKIco, 3, 0.1, 1);
    EXPECT_NEAR(success_probability(c), 0.227124991945348073, 1e-15);
    // Oracle: the first 2^(k-1) entries of p^inf.
    EXPECT_NEAR(success_probability(c), fixed_point(3, make_thermal_params(0.1))[0], 1e-15);
    EXPECT_NEAR(operational_success_probability(c), success_probability(c), 1e-12);
}

TEST(success_probability, kico_small_eps_asymptote) {
    for (size_t k : {1, 2, 3}) {
        double previous = INFINITY;
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            double ratio = hbac_kico_success(20, k, make_thermal_params(eps)) / (std::ldexp(1.0, static_cast<int>(k)) * eps);
            double gap = std::abs(ratio - 1);
            EXPECT_LT(gap, previous);
            previous = gap;
        }
        EXPECT_LT(previous, 1e-3);
    }
}

TEST(success_probability, hbac_1ico_doubles_hbac_ico) {
    auto params = make_thermal_params(0.01);
    double one_ico = hbac_kico_success(10, 1, params);
    EXPECT_NEAR(one_ico, fixed_point(10, params)[0], 1e-15);
    EXPECT_NEAR(one_ico / hbac_ico_success(10, params), 2, 0.02);
}

TEST(success_probability, closed_forms_match_operational_branch_norms) {
    std::mt19937_64 rng(41);
    for (size_t n = 1; n <= 8; n++) {
        for (double eps : {0.05, 0.5, 1.5}) {
            std::vector<SchemeConfig> configs{config_for(Scheme::kHbac, n, eps), config_for(Scheme::kHbacIco, n, eps),
                                              config_for(Scheme::kIcoAlone, n, eps),
                                              config_for(Scheme::kIcoTreeSort, n, eps)};
            for (size_t k = 1; k <= n; k++) {
                configs.push_back(config_for(Scheme::kHbacKIco, n, eps, k));
            }
            auto ideal = config_for(Scheme::kIcoAlone, n, eps);
            ideal.ico_pair = IcoPair::kIdeal;
            configs.push_back(ideal);
            for (auto base : configs) {
                for (InitialKind kind : {InitialKind::kDefault, InitialKind::kUniform, InitialKind::kThermal,
                                         InitialKind::kFixedPoint, InitialKind::kExplicit}) {
                    if (base.scheme == Scheme::kIcoTreeSort && n > 6) {
                        continue;
                    }
                    auto c = base;
                    c.initial.kind = kind;
                    if (kind == InitialKind::kExplicit) {
                        c.initial.values = random_simplex(rng, size_t{1} << (uses_bath(c.scheme) ? n : n + 1), 3);
                    }
                    ASSERT_NEAR(success_probability(c), operational_success_probability(c), 1e-12)
                        << scheme_name(c.scheme) << " n=" << n << " eps=" << eps;
                }
            }
        }
    }
}

TEST(success_probability, ico_alone_pairs) {
    auto c = config_for(Scheme::kIcoAlone, 1, 0.5);
    c.initial = {InitialKind::kExplicit, {0.4, 0.3, 0.2, 0.1}};
    EXPECT_NEAR(success_probability(c), 0.5, 1e-15);
    c.ico_pair = IcoPair::kIdeal;
    EXPECT_NEAR(success_probability(c), 0.7, 1e-15);
}

TEST(expected_trials, examples) {
    EXPECT_EQ(expected_trials(0.5, 0.99), 7u);
    EXPECT_EQ(expected_trials(1.0, 0.99), 1u);
    EXPECT_EQ(expected_trials(0.5, 0.5), 1u);
    EXPECT_EQ(expected_trials(0.5, 0.75), 2u);
    EXPECT_THROW(expected_trials(0.0, 0.5), std::domain_error);
    EXPECT_THROW(expected_trials(0.5, 1.0), std::domain_error);
    // With P ~ 2 eps and P_des = 1 - 1/e, m ~ 1/(2 eps).
    for (double eps : {1e-3, 1e-4}) {
        double p = hbac_kico_success(20, 1, make_thermal_params(eps));
        auto m = expected_trials(p, 1 - std::exp(-1.0));
        EXPECT_NEAR(static_cast<double>(m) * 2 * eps, 1, 0.01);
    }
}

TEST(expected_trials, minimality_property) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; trial++) {
        double p = 1e-4 + (1 - 2e-4) * hbac::testing::uniform01(rng);
        double want = 1e-3 + (1 - 2e-3) * hbac::testing::uniform01(rng);
        auto m = static_cast<double>(expected_trials(p, want));
        ASSERT_GE(1 - std::pow(1 - p, m), want - 1e-12);
        if (m > 1) {
            ASSERT_LT(1 - std::pow(1 - p, m - 1), want + 1e-12);
        }
    }
}

TEST(run_round, hbac_ico_plus_support) {
    for (size_t n = 1; n <= 8; n++) {
        auto c = config_for(Scheme::kHbacIco, n, 0.5);
        auto b = run_round(fixed_point(n, thermal_params(c)), c);
        for (size_t i = 1; i + 1 < b.plus.state.size(); i++) {
            ASSERT_EQ(b.plus.state[i], 0);
        }
        EXPECT_GT(b.plus.state[0], 0);
        EXPECT_GT(b.plus.state[b.plus.state.size() - 1], 0);
    }
}

TEST(run_round, ico_alone_example) {
    auto c = config_for(Scheme::kIcoAlone, 1, 0.5);
    auto b = run_round(DiagonalState(1, {0.4, 0.3, 0.2, 0.1}), c);
    EXPECT_NEAR(b.plus.probability, 0.5, 1e-15);
    EXPECT_THROW(run_round(ReducedState::uniform(1), c), std::invalid_argument);
}

TEST(run_round, minus_branch_is_normalized_t_minus) {
    std::mt19937_64 rng(8);
    for (size_t n = 1; n <= 6; n++) {
        for (auto c : {config_for(Scheme::kHbacIco, n, 0.3), config_for(Scheme::kHbacKIco, n, 0.3, n)}) {
            auto params = thermal_params(c);
            auto spec = switch_spec(c);
            auto t_minus = branch_transfer(params, spec, Sign::kMinus);
            ReducedState p(n, random_simplex(rng, size_t{1} << n));
            auto via_matrix = t_minus.apply(p);
            auto expected = via_matrix.normalized();
            auto updated = failure_update(p, params, spec);
            EXPECT_LT(max_abs_diff(updated.populations(), expected.populations()), 1e-14);
            EXPECT_NEAR(via_matrix.norm(), 1 - run_round(p, c).plus.probability, 1e-14);
        }
    }
}

TEST(failure_update, at_fixed_point_moves_away) {
    auto params = make_thermal_params(0.5);
    auto p = fixed_point(2, params);
    auto q = failure_update(p, params, standard_pair(2));
    EXPECT_NEAR(q.norm(), 1, 1e-14);
    // The MINUS branch removes the corner mass, so the conditioned state is strictly farther from ground.
    EXPECT_GT(l1_distance(q.populations(), p.populations()), 0.1);
    EXPECT_LT(q[0], p[0]);
}

TEST(failure_update, zero_weight_minus_branch) {
    // Ideal layout at n=1 puts both labels with a ground leading qubit in ONE blocks.
    EXPECT_THROW(failure_update(ReducedState(1, {1, 0}), make_thermal_params(0.5), ideal_pair(1)), std::domain_error);
}

TEST(pi_pulse, collapse_and_flip) {
    DiagonalState heralded(2, {0.8, 0, 0, 0, 0, 0, 0, 0.2});
    EXPECT_NEAR(reset_qubit_outcome_probability(heralded, QubitOutcome::kGround), 0.8, 1e-15);
    EXPECT_NEAR(reset_qubit_outcome_probability(heralded, QubitOutcome::kExcited), 0.2, 1e-15);
    for (auto outcome : {QubitOutcome::kGround, QubitOutcome::kExcited}) {
        auto out = pi_pulse_correct(heralded, outcome);
        EXPECT_EQ(out.n(), 2u);
        EXPECT_EQ(std::vector<double>(out.populations().begin(), out.populations().end()),
                  (std::vector<double>{1, 0, 0, 0}));
    }
}

TEST(pi_pulse, rejects_leaky_support_and_impossible_outcomes) {
    DiagonalState leaky(2, {0.8 - 1e-6, 1e-6, 0, 0, 0, 0, 0, 0.2});
    EXPECT_THROW(pi_pulse_correct(leaky, QubitOutcome::kGround), std::invalid_argument);
    DiagonalState only_ground(2, {1, 0, 0, 0, 0, 0, 0, 0});
    EXPECT_THROW(pi_pulse_correct(only_ground, QubitOutcome::kExcited), std::domain_error);
}

TEST(pi_pulse, hbac_ico_output_is_pure) {
    for (size_t n = 1; n <= 8; n++) {
        auto c = config_for(Scheme::kHbacIco, n, 0.5);
        auto heralded = run_round(fixed_point(n, thermal_params(c)), c).plus.state;
        for (auto outcome : {QubitOutcome::kGround, QubitOutcome::kExcited}) {
            auto out = pi_pulse_correct(heralded, outcome);
            EXPECT_NEAR(out[0], 1, 1e-12);
            EXPECT_EQ(out.size(), size_t{1} << n);
        }
    }
}

TEST(tree_sort, heralds_every_leading_qubit) {
    std::mt19937_64 rng(99);
    for (size_t n = 1; n <= 6; n++) {
        DiagonalState s(n, random_simplex(rng, size_t{1} << (n + 1)));
        auto result = tree_sort(s);
        EXPECT_NEAR(result.corrected.norm(), 1, 1e-13);
        EXPECT_NEAR(leading_ground_population(result.corrected, n), 1, 1e-13);
        EXPECT_EQ(result.level_plus_probability.size(), n);
        // Level 0 PLUS probability is the weight with a ground leading qubit.
        EXPECT_NEAR(result.level_plus_probability[0], leading_ground_population(s, 1), 1e-13);
    }
}

TEST(run_scheme, resource_rows) {
    const size_t n = 6;
    auto hbac = run_scheme(config_for(Scheme::kHbac, n, 0.5));
    EXPECT_TRUE(hbac.bath_used);
    EXPECT_EQ(hbac.input_pure_qubits, 0u);
    EXPECT_EQ(hbac.output_pure_qubits, 0u);
    EXPECT_EQ(hbac.success_probability, 1);
    EXPECT_TRUE(hbac.hbac_converged);
    // Plain HBAC leaves the n output qubits mixed: their all-ground weight is p_1^inf < 1.
    EXPECT_NEAR(hbac.output_ground_population, fixed_point(n, make_thermal_params(0.5))[0], 1e-11);

    auto ico = run_scheme(config_for(Scheme::kHbacIco, n, 0.5));
    EXPECT_TRUE(ico.bath_used);
    EXPECT_EQ(ico.input_pure_qubits, 1u);
    EXPECT_EQ(ico.output_pure_qubits, n);
    EXPECT_NEAR(ico.output_ground_population, 1, 1e-12);
    EXPECT_NEAR(ico.expected_trials, 1 / ico.success_probability, 1e-12);

    auto alone = run_scheme(config_for(Scheme::kIcoAlone, n, 0.5));
    EXPECT_FALSE(alone.bath_used);
    EXPECT_EQ(alone.input_pure_qubits, 1u);
    EXPECT_EQ(alone.output_pure_qubits, n);
    EXPECT_NEAR(alone.output_ground_population, 1, 1e-12);

    auto tree_cfg = config_for(Scheme::kIcoTreeSort, n, 0.5);
    auto tree = run_scheme(tree_cfg);
    EXPECT_FALSE(tree.bath_used);
    EXPECT_EQ(tree.input_pure_qubits, n);
    EXPECT_EQ(tree.output_pure_qubits, n);
    EXPECT_EQ(tree.success_probability, 1);
    EXPECT_NEAR(tree.output_ground_population, 1, 1e-12);
    tree_cfg.nondemolition = true;
    EXPECT_EQ(run_scheme(tree_cfg).input_pure_qubits, 1u);

    auto kico = run_scheme(config_for(Scheme::kHbacKIco, n, 0.5, 3));
    EXPECT_TRUE(kico.bath_used);
    EXPECT_EQ(kico.input_pure_qubits, 1u);
    EXPECT_EQ(kico.output_pure_qubits, n + 1 - 3);
    EXPECT_NEAR(kico.output_ground_population, 1, 1e-12);

    auto with_target = config_for(Scheme::kHbacIco, n, 0.5);
    with_target.desired_success = 0.99;
    auto targeted = run_scheme(with_target);
    ASSERT_TRUE(targeted.trials_for_desired.has_value());
    EXPECT_EQ(*targeted.trials_for_desired, expected_trials(targeted.success_probability, 0.99));
}

TEST(sampling, fixed_seed_is_reproducible_and_thread_independent) {
    auto c = config_for(Scheme::kHbacIco, 3, 0.5);
    c.seed = 1234;
    auto a = sample_trajectories(c, 2000, 1);
    auto b = sample_trajectories(c, 2000, 4);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); i++) {
        ASSERT_EQ(a[i].trials_used, b[i].trials_used);
        ASSERT_EQ(a[i].attempts.size(), b[i].attempts.size());
        for (size_t j = 0; j < a[i].attempts.size(); j++) {
            ASSERT_EQ(a[i].attempts[j].outcome, b[i].attempts[j].outcome);
            ASSERT_EQ(a[i].attempts[j].plus_probability, b[i].attempts[j].plus_probability);
        }
    }
    c.seed = 1235;
    auto other = sample_trajectories(c, 2000, 1);
    size_t differ = 0;
    for (size_t i = 0; i < a.size(); i++) {
        differ += a[i].trials_used != other[i].trials_used;
    }
    EXPECT_GT(differ, 100u);
}

TEST(sampling, trials_used_is_first_plus) {
    auto c = config_for(Scheme::kHbacIco, 4, 0.2);
    for (const auto &t : sample_trajectories(c, 500)) {
        ASSERT_TRUE(t.success);
        ASSERT_EQ(t.trials_used, t.attempts.size());
        for (size_t j = 0; j + 1 < t.attempts.size(); j++) {
            ASSERT_EQ(t.attempts[j].outcome, Sign::kMinus);
        }
        ASSERT_EQ(t.attempts.back().outcome, Sign::kPlus);
    }
}

TEST(sampling, geometric_law_for_fresh_copies) {
    auto c = config_for(Scheme::kIcoAlone, 1, 0.5);
    c.initial = {InitialKind::kExplicit, {0.4, 0.3, 0.2, 0.1}};
    c.seed = 7;
    const size_t count = 100000;
    auto trajectories = sample_trajectories(c, count, 4);
    double mean = 0;
    for (const auto &t : trajectories) {
        mean += static_cast<double>(t.trials_used);
    }
    mean /= count;
    const double p = 0.5;
    double sigma = std::sqrt((1 - p) / (p * p));
    EXPECT_LT(std::abs(mean - 1 / p), 3 * sigma / std::sqrt(static_cast<double>(count)));
    auto stats = analytic_trial_statistics(c);
    EXPECT_NEAR(stats.mean, 2, 1e-15);
    EXPECT_NEAR(stats.variance, 2, 1e-15);
}

TEST(sampling, per_attempt_success_matches_branch_norms) {
    auto c = config_for(Scheme::kHbacIco, 3, 0.5);
    c.seed = 2024;
    auto stats = analytic_trial_statistics(c);
    auto trajectories = sample_trajectories(c, 100000, 4);
    for (size_t attempt = 0; attempt < 4; attempt++) {
        size_t reached = 0;
        size_t succeeded = 0;
        for (const auto &t : trajectories) {
            if (t.attempts.size() > attempt) {
                reached++;
                succeeded += t.attempts[attempt].outcome == Sign::kPlus;
                ASSERT_EQ(t.attempts[attempt].plus_probability, stats.chain[attempt].plus_probability);
            }
        }
        ASSERT_GE(reached, 10000u);
        double p = stats.chain[attempt].plus_probability;
        double freq = static_cast<double>(succeeded) / static_cast<double>(reached);
        double sigma = std::sqrt(p * (1 - p) / static_cast<double>(reached));
        EXPECT_LT(std::abs(freq - p), 5 * sigma) << "attempt " << attempt + 1;
    }
}

TEST(sampling, repump_policy_restores_geometric_law) {
    auto c = config_for(Scheme::kHbacIco, 4, 0.5);
    c.failure_policy = FailurePolicy::kRepump;
    c.repump_rounds = 200;
    auto stats = analytic_trial_statistics(c);
    EXPECT_NEAR(stats.mean, 1 / success_probability(c), 1e-6);
    auto plain = analytic_trial_statistics(config_for(Scheme::kHbacIco, 4, 0.5));
    EXPECT_GT(plain.mean, stats.mean);
}

TEST(sampling, kico_failure_update_is_absorbing) {
    // Every kICO pair lies inside one reduced label, so after a failure the leading region stays empty.
    for (size_t k = 1; k <= 3; k++) {
        auto c = config_for(Scheme::kHbacKIco, 4, 0.2, k);
        auto stats = analytic_trial_statistics(c);
        EXPECT_TRUE(stats.absorbed);
        ASSERT_EQ(stats.chain.size(), 2u);
        EXPECT_EQ(stats.chain[1].plus_probability, 0);
        EXPECT_NEAR(stats.eventual_success, success_probability(c), 1e-15);
        EXPECT_EQ(stats.mean, 1);
        c.seed = 5;
        size_t successes = 0;
        const size_t count = 20000;
        for (const auto &t : sample_trajectories(c, count, 2)) {
            if (t.success) {
                successes++;
                ASSERT_EQ(t.trials_used, 1u);
            } else {
                ASSERT_EQ(t.trials_used, 0u);
                ASSERT_EQ(t.attempts.size(), 2u);
            }
        }
        double p = stats.eventual_success;
        EXPECT_LT(std::abs(static_cast<double>(successes) / count - p), 5 * std::sqrt(p * (1 - p) / count));
    }
    // Re-pumping between attempts restores a geometric-like law.
    auto c = config_for(Scheme::kHbacKIco, 4, 0.2, 2);
    c.failure_policy = FailurePolicy::kRepump;
    c.repump_rounds = 5;
    auto stats = analytic_trial_statistics(c);
    EXPECT_FALSE(stats.absorbed);
    EXPECT_NEAR(stats.eventual_success, 1, 1e-12);
    EXPECT_GT(stats.mean, 1);
}

TEST(sampling, standard_pair_chain_is_not_absorbing) {
    for (size_t n = 1; n <= 6; n++) {
        auto stats = analytic_trial_statistics(config_for(Scheme::kHbacIco, n, 0.5));
        EXPECT_FALSE(stats.absorbed);
        EXPECT_NEAR(stats.eventual_success, 1, 1e-12);
    }
}

TEST(sampling, tree_sort_always_one_trial) {
    auto c = config_for(Scheme::kIcoTreeSort, 4, 0.5);
    for (const auto &t : sample_trajectories(c, 200)) {
        ASSERT_EQ(t.trials_used, 1u);
        ASSERT_TRUE(t.success);
    }
}

TEST(sampling, attempt_cap) {
    auto c = config_for(Scheme::kIcoAlone, 1, 0.5);
    c.initial = {InitialKind::kExplicit, {1e-13, 0.5, 0.5 - 1e-13, 0}};
    c.max_attempts = 3;
    EXPECT_THROW(sample_trajectory(c, 0), std::runtime_error);
}

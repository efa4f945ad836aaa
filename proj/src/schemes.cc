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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include "hbac/rng.h"

namespace hbac {

const char *scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::kHbac:
            return "HBAC";
        case Scheme::kHbacIco:
            return "HBAC_ICO";
        case Scheme::kIcoAlone:
            return "ICO_ALONE";
        case Scheme::kIcoTreeSort:
            return "ICO_TREE_SORT";
        case Scheme::kHbacKIco:
            return "HBAC_KICO";
    }
    return "?";
}

Scheme parse_scheme(std::string_view name) {
    for (auto s : {Scheme::kHbac, Scheme::kHbacIco, Scheme::kIcoAlone, Scheme::kIcoTreeSort, Scheme::kHbacKIco}) {
        if (name == scheme_name(s)) {
            return s;
        }
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

bool uses_bath(Scheme scheme) {
    return scheme == Scheme::kHbac || scheme == Scheme::kHbacIco || scheme == Scheme::kHbacKIco;
}

void SchemeConfig::validate() const {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    check_register_exponent(n);
    make_thermal_params(epsilon);
    if (scheme == Scheme::kHbacKIco) {
        if (!k.has_value()) {
            throw std::invalid_argument("HBAC_KICO needs k");
        }
        if (*k < 1 || *k > n) {
            throw std::out_of_range("k must satisfy 1 <= k <= n");
        }
    } else if (k.has_value()) {
        throw std::invalid_argument("k is only meaningful for HBAC_KICO");
    }
    if (desired_success.has_value() && !(*desired_success > 0 && *desired_success < 1)) {
        throw std::domain_error("desired success probability must lie in (0, 1)");
    }
    if (max_attempts < 1) {
        throw std::invalid_argument("max_attempts must be at least 1");
    }
    if (initial.kind == InitialKind::kExplicit) {
        size_t expected = size_t{1} << (uses_bath(scheme) ? n : n + 1);
        if (initial.values.size() != expected) {
            throw std::invalid_argument(
                "explicit initial state needs " + std::to_string(expected) + " populations, got " +
                std::to_string(initial.values.size()));
        }
        double total = 0;
        for (double v : initial.values) {
            if (!std::isfinite(v) || v < 0) {
                throw std::invalid_argument("explicit initial populations must be finite and non-negative");
            }
            total += v;
        }
        if (std::abs(total - 1) > 1e-9) {
            throw std::invalid_argument("explicit initial populations must sum to 1");
        }
    } else if (!initial.values.empty()) {
        throw std::invalid_argument("initial values are only accepted for an explicit initial state");
    }
}

ThermalParams thermal_params(const SchemeConfig &config) {
    return make_thermal_params(config.epsilon);
}

ReducedState initial_reduced(const SchemeConfig &config) {
    if (!uses_bath(config.scheme)) {
        throw std::invalid_argument("initial_reduced: scheme has no bath step");
    }
    auto params = thermal_params(config);
    switch (config.initial.kind) {
        case InitialKind::kDefault:
            return config.scheme == Scheme::kHbac ? ReducedState::uniform(config.n) : fixed_point(config.n, params);
        case InitialKind::kUniform:
            return ReducedState::uniform(config.n);
        case InitialKind::kThermal:
            return ReducedState::thermal(config.n, params);
        case InitialKind::kFixedPoint:
            return fixed_point(config.n, params);
        case InitialKind::kExplicit:
            return {config.n, config.initial.values};
    }
    throw std::logic_error("unreachable");
}

DiagonalState initial_register(const SchemeConfig &config) {
    if (uses_bath(config.scheme)) {
        throw std::invalid_argument("initial_register: scheme starts from reduced populations");
    }
    auto params = thermal_params(config);
    switch (config.initial.kind) {
        case InitialKind::kDefault:
        case InitialKind::kThermal:
            return DiagonalState::thermal(config.n, params);
        case InitialKind::kUniform:
            return DiagonalState::uniform(config.n);
        case InitialKind::kFixedPoint:
            return reset(fixed_point(config.n, params), params);
        case InitialKind::kExplicit:
            return {config.n, config.initial.values};
    }
    throw std::logic_error("unreachable");
}

BlockUnitarySpec switch_spec(const SchemeConfig &config) {
    switch (config.scheme) {
        case Scheme::kHbacIco:
            return standard_pair(config.n);
        case Scheme::kHbacKIco:
            return k_pair(config.n, config.k.value());
        case Scheme::kIcoAlone:
            return config.ico_pair == IcoPair::kStandard ? standard_pair(config.n) : ideal_pair(config.n);
        case Scheme::kHbac:
        case Scheme::kIcoTreeSort:
            break;
    }
    throw std::invalid_argument(std::string("switch_spec: ") + scheme_name(config.scheme) + " has no single switch");
}

double hbac_ico_limit_success(const ThermalParams &params) {
    return -std::expm1(-2 * params.epsilon) * params.ground;
}

double hbac_ico_success(size_t n, const ThermalParams &params) {
    // p_{2^n}^inf = p_1^inf e^(-2 eps (2^n - 1)).
    double last_ratio = std::exp(-2 * params.epsilon * (std::ldexp(1.0, static_cast<int>(n)) - 1));
    return hbac_kico_success(n, 1, params) * (params.ground + last_ratio * params.excited);
}

double hbac_kico_success(size_t n, size_t k, const ThermalParams &params) {
    if (k < 1 || k > n) {
        throw std::out_of_range("hbac_kico_success: k must satisfy 1 <= k <= n");
    }
    double full = std::ldexp(params.epsilon, static_cast<int>(n) + 1);
    double denominator = full > 700 ? 1.0 : -std::expm1(-full);
    return -std::expm1(-std::ldexp(params.epsilon, static_cast<int>(k))) / denominator;
}

double success_probability(const SchemeConfig &config) {
    config.validate();
    auto params = thermal_params(config);
    bool at_fixed_point =
        config.initial.kind == InitialKind::kDefault || config.initial.kind == InitialKind::kFixedPoint;
    switch (config.scheme) {
        case Scheme::kHbac:
        case Scheme::kIcoTreeSort:
            return 1.0;
        case Scheme::kHbacIco: {
            if (at_fixed_point) {
                return hbac_ico_success(config.n, params);
            }
            auto p = initial_reduced(config);
            return p[0] * params.ground + p[p.size() - 1] * params.excited;
        }
        case Scheme::kHbacKIco: {
            if (at_fixed_point) {
                return hbac_kico_success(config.n, *config.k, params);
            }
            auto p = initial_reduced(config);
            double total = 0;
            for (size_t j = 0; j < (size_t{1} << (*config.k - 1)); j++) {
                total += p[j];
            }
            return total;
        }
        case Scheme::kIcoAlone: {
            auto lambda = initial_register(config);
            return config.ico_pair == IcoPair::kStandard ? lambda[0] + lambda[lambda.size() - 1]
                                                         : lambda[0] + lambda[1];
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// Bit of `index` that holds tree-sort level `level` (level 0 is the most significant of n+1 bits).
size_t tree_bit(size_t n, size_t level) {
    return n - level;
}

std::vector<double> flip_bit(std::span<const double> lambda, size_t bit) {
    std::vector<double> out(lambda.size());
    for (size_t i = 0; i < lambda.size(); i++) {
        out[i ^ (size_t{1} << bit)] = lambda[i];
    }
    return out;
}

// Weight of the records whose final branch has every heralded bit equal to its recorded outcome.
double heralded_weight(const DiagonalState &state, size_t level, size_t record) {
    const size_t n = state.n();
    if (state.norm() == 0) {
        return 0;
    }
    if (level == n) {
        for (size_t i = 0; i < state.size(); i++) {
            if (state[i] != 0 && (i >> 1) != record) {
                return 0;
            }
        }
        return state.norm();
    }
    auto branches = switch_branches(state, tree_pair(n, level));
    size_t bit = size_t{1} << (n - 1 - level);
    return heralded_weight(branches.plus.state, level + 1, record) +
           heralded_weight(branches.minus.state, level + 1, record | bit);
}

}  // namespace

double operational_success_probability(const SchemeConfig &config) {
    config.validate();
    switch (config.scheme) {
        case Scheme::kHbac: {
            auto params = thermal_params(config);
            return two_sort(reset(initial_reduced(config), params)).norm();
        }
        case Scheme::kHbacIco:
        case Scheme::kHbacKIco:
            return run_round(initial_reduced(config), config).plus.probability;
        case Scheme::kIcoAlone:
            return run_round(initial_register(config), config).plus.probability;
        case Scheme::kIcoTreeSort:
            return heralded_weight(initial_register(config), 0, 0);
    }
    throw std::logic_error("unreachable");
}

uint64_t expected_trials(double success, double desired) {
    if (!(desired > 0 && desired < 1)) {
        throw std::domain_error("desired success probability must lie in (0, 1)");
    }
    if (!(success > 0)) {
        throw std::domain_error("success probability is zero: no number of trials suffices");
    }
    if (success >= 1) {
        return 1;
    }
    auto reaches = [&](double m) { return -std::expm1(m * std::log1p(-success)) >= desired; };
    double estimate = std::ceil(std::log1p(-desired) / std::log1p(-success));
    double m = std::max(1.0, estimate);
    while (m > 1 && reaches(m - 1)) {
        m -= 1;
    }
    while (!reaches(m)) {
        m += 1;
    }
    return static_cast<uint64_t>(m);
}

Resources resources(const SchemeConfig &config) {
    const size_t n = config.n;
    switch (config.scheme) {
        case Scheme::kHbac:
            return {true, 0, 0};
        case Scheme::kHbacIco:
            return {true, 1, n};
        case Scheme::kIcoAlone:
            return {false, 1, n};
        case Scheme::kIcoTreeSort:
            return {false, config.nondemolition ? size_t{1} : n, n};
        case Scheme::kHbacKIco:
            return {true, 1, n + 1 - config.k.value()};
    }
    throw std::logic_error("unreachable");
}

BranchPair run_round(const ReducedState &state, const SchemeConfig &config) {
    if (config.scheme != Scheme::kHbacIco && config.scheme != Scheme::kHbacKIco) {
        throw std::invalid_argument("run_round: reduced-state rounds need a bath scheme with a switch");
    }
    if (state.n() != config.n) {
        throw std::invalid_argument("run_round: state size does not match config");
    }
    return switch_branches(reset(state, thermal_params(config)), switch_spec(config));
}

BranchPair run_round(const DiagonalState &state, const SchemeConfig &config) {
    if (config.scheme != Scheme::kIcoAlone) {
        throw std::invalid_argument("run_round: register rounds are for ICO_ALONE");
    }
    if (state.n() != config.n) {
        throw std::invalid_argument("run_round: state size does not match config");
    }
    return switch_branches(state, switch_spec(config));
}

ReducedState failure_update(const ReducedState &state, const ThermalParams &params, const BlockUnitarySpec &spec) {
    auto branches = switch_branches(reset(state, params), spec);
    if (branches.minus.probability <= 0) {
        throw std::domain_error("failure_update: the MINUS outcome has probability zero from this state");
    }
    return reduce(branches.minus.state).normalized();
}

double reset_qubit_outcome_probability(const DiagonalState &heralded, QubitOutcome outcome) {
    if (heralded.norm() <= 0) {
        throw std::domain_error("heralded state has zero norm");
    }
    size_t bit = outcome == QubitOutcome::kExcited ? 1 : 0;
    double total = 0;
    for (size_t i = bit; i < heralded.size(); i += 2) {
        total += heralded[i];
    }
    return total / heralded.norm();
}

ReducedState pi_pulse_correct(const DiagonalState &heralded, QubitOutcome outcome) {
    auto state = heralded.normalized();
    const size_t last = state.size() - 1;
    double leaked = state.norm() - state[0] - state[last];
    if (leaked > 1e-12) {
        throw std::invalid_argument("pi_pulse_correct: state is not supported on |g...g> and |e...e> alone");
    }
    // Condition on the reset qubit and trace it out.
    size_t bit = outcome == QubitOutcome::kExcited ? 1 : 0;
    std::vector<double> kept(state.size() / 2);
    for (size_t k = 0; k < kept.size(); k++) {
        kept[k] = state[2 * k + bit];
    }
    ReducedState conditioned = ReducedState(state.n(), std::move(kept));
    if (conditioned.norm() <= 0) {
        throw std::domain_error("pi_pulse_correct: measured outcome has probability zero");
    }
    conditioned = conditioned.normalized();
    if (outcome == QubitOutcome::kGround) {
        return conditioned;
    }
    // Pi pulse on every remaining qubit: label i -> its complement.
    std::vector<double> flipped(conditioned.size());
    for (size_t i = 0; i < flipped.size(); i++) {
        flipped[flipped.size() - 1 - i] = conditioned[i];
    }
    return {conditioned.n(), std::move(flipped)};
}

double leading_ground_population(const DiagonalState &state, size_t leading) {
    if (leading > state.num_qubits()) {
        throw std::out_of_range("leading_ground_population: more qubits than the register holds");
    }
    if (state.norm() <= 0) {
        throw std::domain_error("leading_ground_population: zero-norm state");
    }
    size_t block = size_t{1} << (state.num_qubits() - leading);
    double total = 0;
    for (size_t i = 0; i < block; i++) {
        total += state[i];
    }
    return total / state.norm();
}

namespace {

// Keeps one tree-sort branch and flips its heralded qubit back to ground if it was MINUS.
DiagonalState corrected_branch(const BranchOutcome &branch, size_t n, size_t level) {
    if (branch.sign == Sign::kPlus) {
        return branch.state;
    }
    return {n, flip_bit(branch.state.populations(), tree_bit(n, level))};
}

}  // namespace

TreeSortResult tree_sort(const DiagonalState &state) {
    const size_t n = state.n();
    if (n < 1) {
        throw std::invalid_argument("tree_sort: n must be at least 1");
    }
    DiagonalState current = state;
    std::vector<double> level_plus;
    for (size_t level = 0; level < n; level++) {
        auto branches = switch_branches(current, tree_pair(n, level));
        level_plus.push_back(branches.plus.probability / current.norm());
        auto plus = corrected_branch(branches.plus, n, level);
        auto minus = corrected_branch(branches.minus, n, level);
        std::vector<double> merged(plus.populations().begin(), plus.populations().end());
        for (size_t i = 0; i < merged.size(); i++) {
            merged[i] += minus[i];
        }
        current = DiagonalState(n, std::move(merged));
    }
    return {std::move(current), std::move(level_plus)};
}

namespace {

ReducedState after_failure(const ReducedState &state, const SchemeConfig &config, const ThermalParams &params,
                           const BlockUnitarySpec &spec) {
    ReducedState next = failure_update(state, params, spec);
    if (config.failure_policy == FailurePolicy::kRepump) {
        for (size_t r = 0; r < config.repump_rounds; r++) {
            next = hbac_round(next, params);
        }
    }
    return next;
}

Trajectory sample_bath_switch(const SchemeConfig &config, CounterRng &rng, bool record_states) {
    auto params = thermal_params(config);
    auto spec = switch_spec(config);
    ReducedState p = initial_reduced(config);
    Trajectory t{{}, false, 0};
    for (size_t attempt = 1; attempt <= config.max_attempts; attempt++) {
        double plus = switch_branches(reset(p, params), spec).plus.probability;
        bool success = rng.uniform() < plus;
        Attempt a{success ? Sign::kPlus : Sign::kMinus, plus, {}};
        if (record_states) {
            a.state.assign(p.populations().begin(), p.populations().end());
        }
        t.attempts.push_back(std::move(a));
        if (success) {
            t.success = true;
            t.trials_used = attempt;
            return t;
        }
        ReducedState next = after_failure(p, config, params, spec);
        if (plus == 0 && l1_distance(next.populations(), p.populations()) < kAbsorbedTolerance) {
            return t;
        }
        p = std::move(next);
    }
    throw std::runtime_error("sample_trajectory: no success within max_attempts");
}

Trajectory sample_ico_alone(const SchemeConfig &config, CounterRng &rng, bool record_states) {
    // Each attempt switches a fresh copy of the input register: after a MINUS the extremal
    // populations are gone and the same copy could never succeed.
    DiagonalState lambda = initial_register(config);
    double plus = run_round(lambda, config).plus.probability;
    if (plus <= 0) {
        throw std::runtime_error("sample_trajectory: the PLUS outcome has probability zero");
    }
    Trajectory t{{}, false, 0};
    for (size_t attempt = 1; attempt <= config.max_attempts; attempt++) {
        bool success = rng.uniform() < plus;
        Attempt a{success ? Sign::kPlus : Sign::kMinus, plus, {}};
        if (record_states) {
            a.state.assign(lambda.populations().begin(), lambda.populations().end());
        }
        t.attempts.push_back(std::move(a));
        if (success) {
            t.success = true;
            t.trials_used = attempt;
            return t;
        }
    }
    throw std::runtime_error("sample_trajectory: no success within max_attempts");
}

Trajectory sample_tree_sort(const SchemeConfig &config, CounterRng &rng, bool record_states) {
    DiagonalState current = initial_register(config);
    Attempt a{Sign::kPlus, 1.0, {}};
    if (record_states) {
        a.state.assign(current.populations().begin(), current.populations().end());
    }
    // Every record heralds the leading qubits; the draws only pick which record occurred.
    for (size_t level = 0; level < config.n; level++) {
        auto branches = switch_branches(current, tree_pair(config.n, level));
        bool plus = rng.uniform() * current.norm() < branches.plus.probability;
        current = corrected_branch(plus ? branches.plus : branches.minus, config.n, level).normalized();
    }
    return {{std::move(a)}, true, 1};
}

}  // namespace

Trajectory sample_trajectory(const SchemeConfig &config, uint64_t stream, bool record_states) {
    config.validate();
    CounterRng rng(config.seed, stream);
    switch (config.scheme) {
        case Scheme::kHbac: {
            Attempt a{Sign::kPlus, 1.0, {}};
            if (record_states) {
                auto p = initial_reduced(config);
                a.state.assign(p.populations().begin(), p.populations().end());
            }
            return {{std::move(a)}, true, 1};
        }
        case Scheme::kHbacIco:
        case Scheme::kHbacKIco:
            return sample_bath_switch(config, rng, record_states);
        case Scheme::kIcoAlone:
            return sample_ico_alone(config, rng, record_states);
        case Scheme::kIcoTreeSort:
            return sample_tree_sort(config, rng, record_states);
    }
    throw std::logic_error("unreachable");
}

std::vector<Trajectory> sample_trajectories(const SchemeConfig &config, size_t count, size_t threads,
                                            bool record_states) {
    config.validate();
    std::vector<Trajectory> out(count);
    threads = std::max<size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (size_t i = 0; i < count; i++) {
            out[i] = sample_trajectory(config, i, record_states);
        }
        return out;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    for (size_t w = 0; w < threads; w++) {
        workers.emplace_back([&, w] {
            try {
                for (size_t i = w; i < count; i += threads) {
                    out[i] = sample_trajectory(config, i, record_states);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &worker : workers) {
        worker.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

TrialStatistics analytic_trial_statistics(const SchemeConfig &config, double tail, size_t max_steps) {
    config.validate();
    TrialStatistics stats{0, 0, 1, false, {}};
    double second_moment = 0;
    auto accumulate = [&](double attempt, double reach, double plus) {
        stats.mean += attempt * reach * plus;
        second_moment += attempt * attempt * reach * plus;
    };

    if (config.scheme == Scheme::kHbac || config.scheme == Scheme::kIcoTreeSort) {
        stats.mean = 1;
        stats.chain.push_back({1.0, 1.0, {}});
        return stats;
    }
    if (config.scheme == Scheme::kIcoAlone) {
        auto lambda = initial_register(config);
        double plus = run_round(lambda, config).plus.probability;
        if (plus <= 0) {
            throw std::domain_error("analytic_trial_statistics: success probability is zero");
        }
        stats.mean = 1 / plus;
        stats.variance = (1 - plus) / (plus * plus);
        stats.chain.push_back({plus, 1.0, {lambda.populations().begin(), lambda.populations().end()}});
        return stats;
    }

    auto params = thermal_params(config);
    auto spec = switch_spec(config);
    ReducedState p = initial_reduced(config);
    double reach = 1;
    for (size_t attempt = 1; attempt <= max_steps; attempt++) {
        double plus = switch_branches(reset(p, params), spec).plus.probability;
        stats.chain.push_back({plus, reach, {p.populations().begin(), p.populations().end()}});
        accumulate(static_cast<double>(attempt), reach, plus);
        reach *= 1 - plus;
        if (reach < tail) {
            break;
        }
        ReducedState next = after_failure(p, config, params, spec);
        if (plus == 0 && l1_distance(next.populations(), p.populations()) < kAbsorbedTolerance) {
            stats.absorbed = true;
            break;
        }
        p = std::move(next);
        if (attempt == max_steps) {
            throw std::runtime_error("analytic_trial_statistics: failure chain did not settle within max_steps");
        }
    }
    stats.eventual_success = 0;
    for (const auto &step : stats.chain) {
        stats.eventual_success += step.reach_probability * step.plus_probability;
    }
    if (stats.eventual_success <= 0) {
        throw std::domain_error("analytic_trial_statistics: no attempt can succeed");
    }
    if (stats.absorbed) {
        stats.mean /= stats.eventual_success;
        second_moment /= stats.eventual_success;
    }
    stats.variance = second_moment - stats.mean * stats.mean;
    return stats;
}

SchemeReport run_scheme(const SchemeConfig &config) {
    config.validate();
    auto params = thermal_params(config);
    auto res = resources(config);
    SchemeReport report{
        config.scheme, success_probability(config), res.output_pure_qubits, res.input_pure_qubits, res.bath_used,
        0, std::nullopt, DiagonalState::ground(config.n), 0, 0, true};
    report.expected_trials = 1 / report.success_probability;
    if (config.desired_success.has_value()) {
        report.trials_for_desired = expected_trials(report.success_probability, *config.desired_success);
    }

    switch (config.scheme) {
        case Scheme::kHbac: {
            ReducedState p = initial_reduced(config);
            if (config.initial.kind != InitialKind::kFixedPoint) {
                auto it = iterate(p, params, 1e-13, 1'000'000);
                p = it.state;
                report.hbac_rounds = it.steps;
                report.hbac_converged = it.converged;
            }
            report.final_state = two_sort(reset(p, params));
            report.output_ground_population = leading_ground_population(report.final_state, config.n);
            break;
        }
        case Scheme::kHbacIco:
        case Scheme::kHbacKIco: {
            auto branches = run_round(initial_reduced(config), config);
            report.final_state = branches.plus.state.normalized();
            if (config.scheme == Scheme::kHbacIco) {
                auto outcome = report.final_state[0] > 0 ? QubitOutcome::kGround : QubitOutcome::kExcited;
                report.output_ground_population = pi_pulse_correct(report.final_state, outcome)[0];
            } else {
                report.output_ground_population =
                    leading_ground_population(report.final_state, report.output_pure_qubits);
            }
            break;
        }
        case Scheme::kIcoAlone: {
            auto branches = run_round(initial_register(config), config);
            report.final_state = branches.plus.state.normalized();
            if (config.ico_pair == IcoPair::kStandard) {
                auto outcome = report.final_state[0] > 0 ? QubitOutcome::kGround : QubitOutcome::kExcited;
                report.output_ground_population = pi_pulse_correct(report.final_state, outcome)[0];
            } else {
                report.output_ground_population = leading_ground_population(report.final_state, config.n);
            }
            break;
        }
        case Scheme::kIcoTreeSort: {
            report.final_state = tree_sort(initial_register(config)).corrected;
            report.output_ground_population = leading_ground_population(report.final_state, config.n);
            break;
        }
    }
    return report;
}

}  // namespace hbac

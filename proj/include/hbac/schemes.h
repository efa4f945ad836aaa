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

#ifndef HBAC_SCHEMES_H
#define HBAC_SCHEMES_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hbac/cooling.h"
#include "hbac/quantum_switch.h"
#include "hbac/register.h"

namespace hbac {

enum class Scheme {
    kHbac,
    kHbacIco,
    kIcoAlone,
    kIcoTreeSort,
    kHbacKIco,
};

/// "HBAC", "HBAC_ICO", "ICO_ALONE", "ICO_TREE_SORT", "HBAC_KICO".
const char *scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view name);
bool uses_bath(Scheme scheme);

enum class InitialKind {
    /// p^inf for bath schemes that switch, uniform for plain HBAC, thermal product for bath-free schemes.
    kDefault,
    kUniform,
    kThermal,
    kFixedPoint,
    kExplicit,
};

struct InitialState {
    InitialKind kind = InitialKind::kDefault;
    /// Only for kExplicit: 2^n reduced populations for bath schemes, 2^(n+1) otherwise.
    std::vector<double> values;
};

/// Which layout the bath-free single switch uses.
enum class IcoPair {
    kStandard,
    kIdeal,
};

/// What happens to the register between a failed (MINUS) attempt and the next one in bath schemes.
enum class FailurePolicy {
    /// Keep the conditioned state, normalize(T_- p), and switch again.
    kFailureUpdate,
    /// As kFailureUpdate, followed by `repump_rounds` plain HBAC rounds.
    kRepump,
};

struct SchemeConfig {
    Scheme scheme = Scheme::kHbacIco;
    size_t n = 1;
    /// Required for kHbacKIco only, 1 <= k <= n.
    std::optional<size_t> k;
    double epsilon = 0.5;
    InitialState initial;
    std::optional<double> desired_success;
    uint64_t seed = 0;
    IcoPair ico_pair = IcoPair::kStandard;
    FailurePolicy failure_policy = FailurePolicy::kFailureUpdate;
    size_t repump_rounds = 0;
    /// Tree sort recycles one control qubit through nondemolition measurements.
    bool nondemolition = false;
    size_t max_attempts = 10'000'000;

    /// Throws std::invalid_argument / std::domain_error / std::out_of_range on a bad combination.
    void validate() const;
};

ThermalParams thermal_params(const SchemeConfig &config);
/// Starting reduced populations of a bath scheme.
ReducedState initial_reduced(const SchemeConfig &config);
/// Starting register populations of a bath-free scheme.
DiagonalState initial_register(const SchemeConfig &config);
/// Switch layout used by a single-switch scheme. Throws std::invalid_argument for HBAC and tree sort.
BlockUnitarySpec switch_spec(const SchemeConfig &config);

/// Large-n HBAC+ICO success probability (1 - e^-2eps) e^eps / z.
double hbac_ico_limit_success(const ThermalParams &params);
/// HBAC+ICO success at p^inf for finite n: p_1 e^eps/z + p_{2^n} e^-eps/z.
double hbac_ico_success(size_t n, const ThermalParams &params);
/// HBAC+kICO success at p^inf: (1 - e^-(eps 2^k)) / (1 - e^-(eps 2^(n+1))). k = 1 gives p_1^inf.
double hbac_kico_success(size_t n, size_t k, const ThermalParams &params);

/// Per-attempt success probability from the closed forms.
double success_probability(const SchemeConfig &config);
/// The same probability read off the PLUS branch produced by the switch machinery
/// (for tree sort, the total weight of outcome records that herald n pure qubits).
double operational_success_probability(const SchemeConfig &config);

/// Smallest m with 1 - (1-P)^m >= desired. P >= 1 gives 1; P <= 0 throws std::domain_error.
uint64_t expected_trials(double success, double desired);

struct Resources {
    bool bath_used;
    size_t input_pure_qubits;
    size_t output_pure_qubits;
};
Resources resources(const SchemeConfig &config);

/// One attempt of a bath scheme: reset, then switch.
BranchPair run_round(const ReducedState &state, const SchemeConfig &config);
/// One attempt of the bath-free single switch.
BranchPair run_round(const DiagonalState &state, const SchemeConfig &config);

/// normalize(T_- p) for the given layout. Throws std::domain_error when the MINUS branch has zero weight.
ReducedState failure_update(const ReducedState &state, const ThermalParams &params, const BlockUnitarySpec &spec);

enum class QubitOutcome {
    kGround,
    kExcited,
};

/// Probability that measuring the reset qubit of a heralded state gives `outcome`.
double reset_qubit_outcome_probability(const DiagonalState &heralded, QubitOutcome outcome);

/// Measures the reset qubit of a state supported on |g...g> and |e...e>, drops it, and applies a
/// pi pulse to every remaining qubit if it read excited. Throws std::invalid_argument if more than
/// 1e-12 of the (normalized) weight sits elsewhere, std::domain_error if `outcome` has zero probability.
ReducedState pi_pulse_correct(const DiagonalState &heralded, QubitOutcome outcome);

/// Probability that the `leading` most significant qubits all read ground.
double leading_ground_population(const DiagonalState &state, size_t leading);

struct TreeSortResult {
    /// Mixture over all outcome records after each heralded qubit has been flipped back to ground.
    DiagonalState corrected;
    /// PLUS probability at each level.
    std::vector<double> level_plus_probability;
};

/// Runs all n tree-sort switches deterministically, correcting the heralded qubit after each MINUS.
TreeSortResult tree_sort(const DiagonalState &state);

struct Attempt {
    Sign outcome;
    double plus_probability;
    /// Populations the attempt started from (filled when states are recorded).
    std::vector<double> state;
};

struct Trajectory {
    std::vector<Attempt> attempts;
    /// False when the failure chain reached a state from which PLUS is impossible.
    bool success;
    /// 1-based index of the first PLUS attempt; 0 when success is false.
    size_t trials_used;
};

/// Samples attempts until the first heralded success. Stream `stream` of the config seed drives the draws.
/// Stops without success once a failure leaves a zero-PLUS state unchanged (see kAbsorbedTolerance).
/// Throws std::runtime_error once config.max_attempts are exhausted.
Trajectory sample_trajectory(const SchemeConfig &config, uint64_t stream, bool record_states = false);

/// Trajectory i uses stream i, so the result does not depend on `threads`.
std::vector<Trajectory> sample_trajectories(
    const SchemeConfig &config, size_t count, size_t threads = 1, bool record_states = false);

struct ChainStep {
    double plus_probability;
    /// Probability that this attempt happens at all.
    double reach_probability;
    std::vector<double> state;
};

struct TrialStatistics {
    /// Moments of the attempt count conditioned on eventual success.
    double mean;
    double variance;
    /// Probability that any attempt succeeds. Below 1 when the chain gets absorbed.
    double eventual_success;
    bool absorbed;
    std::vector<ChainStep> chain;
};

/// L1 step below which a zero-PLUS failure update counts as a fixed point of the failure chain.
/// Happens for every kICO layout: its pairs never straddle two reduced labels, so once MINUS clears
/// the leading ONE region, the failure-update policy cannot refill it.
constexpr double kAbsorbedTolerance = 1e-12;

/// Exact distribution of the attempt count, following the deterministic failure chain until the
/// probability of still running drops below `tail` or the chain is absorbed.
/// Throws std::domain_error if no attempt can succeed.
TrialStatistics analytic_trial_statistics(const SchemeConfig &config, double tail = 1e-16, size_t max_steps = 1'000'000);

struct SchemeReport {
    Scheme scheme;
    double success_probability;
    size_t output_pure_qubits;
    size_t input_pure_qubits;
    bool bath_used;
    /// Mean of the geometric law, 1/P.
    double expected_trials;
    /// m from expected_trials() when desired_success is set.
    std::optional<uint64_t> trials_for_desired;
    /// Heralded register state (normalized); the register after the last round for plain HBAC.
    DiagonalState final_state;
    /// Probability that every output qubit reads ground after corrections.
    double output_ground_population;
    size_t hbac_rounds;
    bool hbac_converged;
};

SchemeReport run_scheme(const SchemeConfig &config);

}  // namespace hbac

#endif

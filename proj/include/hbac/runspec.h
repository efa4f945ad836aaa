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

#ifndef HBAC_RUNSPEC_H
#define HBAC_RUNSPEC_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hbac/schemes.h"
#include "json.hpp"

namespace hbac {

enum class OutputFormat {
    kCsv,
    kJson,
};

/// Everything a `run` or `sample` invocation needs. Loaded from a JSON config and/or flags.
struct RunSpec {
    std::string scheme = "HBAC_ICO";
    size_t n = 3;
    std::optional<size_t> k;
    double epsilon = 0.5;
    /// "default", "uniform", "thermal", "fixed-point", or "explicit" with initial_values.
    std::string initial = "default";
    std::vector<double> initial_values;
    size_t trials = 1000;
    uint64_t seed = 0;
    std::string output;
    OutputFormat format = OutputFormat::kCsv;
    std::optional<double> desired_success;
    /// "failure-update" or "repump".
    std::string policy = "failure-update";
    size_t repump_rounds = 0;
    /// "standard" or "ideal"; bath-free single switch only.
    std::string ico_pair = "standard";
    bool nondemolition = false;
    bool record_states = false;
    size_t threads = 1;

    bool operator==(const RunSpec &other) const = default;
};

/// Parses a RunSpec object. Unknown keys and wrongly typed values throw std::invalid_argument.
RunSpec runspec_from_json(const nlohmann::json &j);
/// Stable key order, suitable for runspec_from_json.
nlohmann::ordered_json runspec_to_json(const RunSpec &spec);

SchemeConfig to_scheme_config(const RunSpec &spec);

OutputFormat parse_format(std::string_view text);

/// 17 significant digits.
std::string format_number(double value);
/// RFC 4180 field quoting.
std::string csv_field(std::string_view text);

/// Header shared by every run/sample CSV.
constexpr std::string_view kCsvHeader = "scheme,n,k,epsilon,round,outcome,probability,trials,value";

/// run: one CSV row per attempt of the deterministic failure chain
/// (round = attempt, probability = PLUS probability at that attempt, trials = attempt,
/// value = probability that this attempt is the first success).
void write_run(std::ostream &out, const RunSpec &spec, const SchemeReport &report, const TrialStatistics &stats);

struct SampleSummary {
    size_t trajectories;
    size_t successes;
    double analytic_success;
    /// Over successful trajectories only.
    double mean_trials;
    double standard_error;
    double analytic_mean;
    double analytic_sd;
    /// (mean_trials - analytic_mean) / (analytic_sd / sqrt(trajectories)).
    double z_score;
};

SampleSummary summarize(const std::vector<Trajectory> &trajectories, const TrialStatistics &stats);

/// sample: one CSV row per attempt (round = attempt within the trajectory, outcome = sampled sign,
/// probability = PLUS probability of that attempt, trials = the trajectory's trials_used,
/// value = trajectory index).
void write_sample(std::ostream &out, const RunSpec &spec, const std::vector<Trajectory> &trajectories,
                  const SampleSummary &summary);

}  // namespace hbac

#endif

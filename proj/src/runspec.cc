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

#include "hbac/runspec.h"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace hbac {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const std::set<std::string> kKnownKeys{
    "scheme", "n",      "k",      "epsilon",         "initial", "trials",        "seed",
    "output", "format", "policy", "desired_success", "ico_pair", "repump_rounds", "nondemolition",
    "record_states", "threads",
};

template <typename T>
T get_as(const json &j, const char *key) {
    const json &v = j.at(key);
    if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) {
            throw std::invalid_argument(std::string("runspec: '") + key + "' must be a boolean");
        }
    } else if constexpr (std::is_integral_v<T>) {
        bool non_negative = v.is_number_unsigned() || (v.is_number_integer() && v.get<int64_t>() >= 0);
        if (!non_negative) {
            throw std::invalid_argument(std::string("runspec: '") + key + "' must be a non-negative integer");
        }
    } else if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) {
            throw std::invalid_argument(std::string("runspec: '") + key + "' must be a number");
        }
    } else {
        if (!v.is_string()) {
            throw std::invalid_argument(std::string("runspec: '") + key + "' must be a string");
        }
    }
    return v.get<T>();
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::kCsv;
    }
    if (text == "json") {
        return OutputFormat::kJson;
    }
    throw std::invalid_argument("format must be 'csv' or 'json'");
}

RunSpec runspec_from_json(const json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("runspec: expected a JSON object");
    }
    for (const auto &item : j.items()) {
        if (!kKnownKeys.contains(item.key())) {
            throw std::invalid_argument("runspec: unknown key '" + item.key() + "'");
        }
    }
    RunSpec spec;
    if (j.contains("scheme")) {
        spec.scheme = get_as<std::string>(j, "scheme");
        parse_scheme(spec.scheme);
    }
    if (j.contains("n")) {
        spec.n = get_as<size_t>(j, "n");
    }
    if (j.contains("k") && !j.at("k").is_null()) {
        spec.k = get_as<size_t>(j, "k");
    }
    if (j.contains("epsilon")) {
        spec.epsilon = get_as<double>(j, "epsilon");
    }
    if (j.contains("initial")) {
        const json &v = j.at("initial");
        if (v.is_array()) {
            spec.initial = "explicit";
            for (const auto &x : v) {
                if (!x.is_number()) {
                    throw std::invalid_argument("runspec: explicit initial populations must be numbers");
                }
                spec.initial_values.push_back(x.get<double>());
            }
        } else {
            spec.initial = get_as<std::string>(j, "initial");
            static const std::set<std::string> selectors{"default", "uniform", "thermal", "fixed-point"};
            if (!selectors.contains(spec.initial)) {
                throw std::invalid_argument("runspec: unknown initial-state selector '" + spec.initial + "'");
            }
        }
    }
    if (j.contains("trials")) {
        spec.trials = get_as<size_t>(j, "trials");
    }
    if (j.contains("seed")) {
        spec.seed = get_as<uint64_t>(j, "seed");
    }
    if (j.contains("output")) {
        spec.output = get_as<std::string>(j, "output");
    }
    if (j.contains("format")) {
        spec.format = parse_format(get_as<std::string>(j, "format"));
    }
    if (j.contains("desired_success") && !j.at("desired_success").is_null()) {
        spec.desired_success = get_as<double>(j, "desired_success");
    }
    if (j.contains("policy")) {
        spec.policy = get_as<std::string>(j, "policy");
        if (spec.policy != "failure-update" && spec.policy != "repump") {
            throw std::invalid_argument("runspec: policy must be 'failure-update' or 'repump'");
        }
    }
    if (j.contains("repump_rounds")) {
        spec.repump_rounds = get_as<size_t>(j, "repump_rounds");
    }
    if (j.contains("ico_pair")) {
        spec.ico_pair = get_as<std::string>(j, "ico_pair");
        if (spec.ico_pair != "standard" && spec.ico_pair != "ideal") {
            throw std::invalid_argument("runspec: ico_pair must be 'standard' or 'ideal'");
        }
    }
    if (j.contains("nondemolition")) {
        spec.nondemolition = get_as<bool>(j, "nondemolition");
    }
    if (j.contains("record_states")) {
        spec.record_states = get_as<bool>(j, "record_states");
    }
    if (j.contains("threads")) {
        spec.threads = get_as<size_t>(j, "threads");
    }
    return spec;
}

ordered_json runspec_to_json(const RunSpec &spec) {
    ordered_json j;
    j["scheme"] = spec.scheme;
    j["n"] = spec.n;
    j["k"] = spec.k.has_value() ? ordered_json(*spec.k) : ordered_json(nullptr);
    j["epsilon"] = spec.epsilon;
    if (spec.initial == "explicit") {
        j["initial"] = spec.initial_values;
    } else {
        j["initial"] = spec.initial;
    }
    j["trials"] = spec.trials;
    j["seed"] = spec.seed;
    j["output"] = spec.output;
    j["format"] = spec.format == OutputFormat::kCsv ? "csv" : "json";
    j["desired_success"] =
        spec.desired_success.has_value() ? ordered_json(*spec.desired_success) : ordered_json(nullptr);
    j["policy"] = spec.policy;
    j["repump_rounds"] = spec.repump_rounds;
    j["ico_pair"] = spec.ico_pair;
    j["nondemolition"] = spec.nondemolition;
    j["record_states"] = spec.record_states;
    j["threads"] = spec.threads;
    return j;
}

SchemeConfig to_scheme_config(const RunSpec &spec) {
    SchemeConfig c;
    c.scheme = parse_scheme(spec.scheme);
    c.n = spec.n;
    c.k = spec.k;
    c.epsilon = spec.epsilon;
    if (spec.initial == "default") {
        c.initial.kind = InitialKind::kDefault;
    } else if (spec.initial == "uniform") {
        c.initial.kind = InitialKind::kUniform;
    } else if (spec.initial == "thermal") {
        c.initial.kind = InitialKind::kThermal;
    } else if (spec.initial == "fixed-point") {
        c.initial.kind = InitialKind::kFixedPoint;
    } else if (spec.initial == "explicit") {
        c.initial.kind = InitialKind::kExplicit;
        c.initial.values = spec.initial_values;
    } else {
        throw std::invalid_argument("unknown initial-state selector '" + spec.initial + "'");
    }
    c.desired_success = spec.desired_success;
    c.seed = spec.seed;
    if (spec.ico_pair != "standard" && spec.ico_pair != "ideal") {
        throw std::invalid_argument("ico_pair must be 'standard' or 'ideal'");
    }
    c.ico_pair = spec.ico_pair == "ideal" ? IcoPair::kIdeal : IcoPair::kStandard;
    if (spec.policy != "failure-update" && spec.policy != "repump") {
        throw std::invalid_argument("policy must be 'failure-update' or 'repump'");
    }
    c.failure_policy = spec.policy == "repump" ? FailurePolicy::kRepump : FailurePolicy::kFailureUpdate;
    c.repump_rounds = spec.repump_rounds;
    c.nondemolition = spec.nondemolition;
    c.validate();
    return c;
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string row_prefix(const RunSpec &spec) {
    std::string s = csv_field(spec.scheme) + ',' + std::to_string(spec.n) + ',';
    if (spec.k.has_value()) {
        s += std::to_string(*spec.k);
    }
    s += ',' + format_number(spec.epsilon) + ',';
    return s;
}

ordered_json report_json(const SchemeReport &report) {
    ordered_json j;
    j["scheme"] = scheme_name(report.scheme);
    j["success_probability"] = report.success_probability;
    j["bath_used"] = report.bath_used;
    j["input_pure_qubits"] = report.input_pure_qubits;
    j["output_pure_qubits"] = report.output_pure_qubits;
    j["expected_trials"] = report.expected_trials;
    j["trials_for_desired"] =
        report.trials_for_desired.has_value() ? ordered_json(*report.trials_for_desired) : ordered_json(nullptr);
    j["output_ground_population"] = report.output_ground_population;
    j["hbac_rounds"] = report.hbac_rounds;
    j["hbac_converged"] = report.hbac_converged;
    j["final_state"] = std::vector<double>(report.final_state.populations().begin(), report.final_state.populations().end());
    return j;
}

}  // namespace

void write_run(std::ostream &out, const RunSpec &spec, const SchemeReport &report, const TrialStatistics &stats) {
    if (spec.format == OutputFormat::kCsv) {
        out << kCsvHeader << "\r\n";
        const std::string prefix = row_prefix(spec);
        for (size_t r = 0; r < stats.chain.size(); r++) {
            const auto &step = stats.chain[r];
            out << prefix << (r + 1) << ",+," << format_number(step.plus_probability) << ',' << (r + 1) << ','
                << format_number(step.reach_probability * step.plus_probability) << "\r\n";
        }
        return;
    }
    ordered_json j;
    j["runspec"] = runspec_to_json(spec);
    j["report"] = report_json(report);
    ordered_json chain = ordered_json::array();
    for (size_t r = 0; r < stats.chain.size(); r++) {
        ordered_json step;
        step["round"] = r + 1;
        step["plus_probability"] = stats.chain[r].plus_probability;
        step["reach_probability"] = stats.chain[r].reach_probability;
        if (spec.record_states) {
            step["state"] = stats.chain[r].state;
        }
        chain.push_back(std::move(step));
    }
    j["chain"] = std::move(chain);
    j["statistics"] = {{"mean_trials", stats.mean},
                       {"variance", stats.variance},
                       {"eventual_success", stats.eventual_success},
                       {"absorbed", stats.absorbed}};
    out << j.dump(2) << "\n";
}

SampleSummary summarize(const std::vector<Trajectory> &trajectories, const TrialStatistics &stats) {
    SampleSummary s{trajectories.size(), 0, stats.eventual_success, 0, 0, stats.mean,
                    std::sqrt(std::max(stats.variance, 0.0)), 0};
    double sum = 0;
    double sum_sq = 0;
    for (const auto &t : trajectories) {
        if (!t.success) {
            continue;
        }
        auto m = static_cast<double>(t.trials_used);
        sum += m;
        sum_sq += m * m;
        s.successes++;
    }
    if (s.successes == 0) {
        return s;
    }
    const auto count = static_cast<double>(s.successes);
    s.mean_trials = sum / count;
    double sample_var = count > 1 ? (sum_sq - sum * sum / count) / (count - 1) : 0;
    s.standard_error = std::sqrt(std::max(sample_var, 0.0) / count);
    double analytic_se = s.analytic_sd / std::sqrt(count);
    s.z_score = analytic_se > 0 ? (s.mean_trials - s.analytic_mean) / analytic_se : 0;
    return s;
}

void write_sample(std::ostream &out, const RunSpec &spec, const std::vector<Trajectory> &trajectories,
                  const SampleSummary &summary) {
    if (spec.format == OutputFormat::kCsv) {
        out << kCsvHeader << "\r\n";
        const std::string prefix = row_prefix(spec);
        for (size_t t = 0; t < trajectories.size(); t++) {
            const auto &traj = trajectories[t];
            for (size_t a = 0; a < traj.attempts.size(); a++) {
                const auto &attempt = traj.attempts[a];
                out << prefix << (a + 1) << ',' << sign_name(attempt.outcome) << ','
                    << format_number(attempt.plus_probability) << ',' << traj.trials_used << ',' << t << "\r\n";
            }
        }
        return;
    }
    ordered_json j;
    j["runspec"] = runspec_to_json(spec);
    j["summary"] = {
        {"trajectories", summary.trajectories}, {"successes", summary.successes},
        {"analytic_success", summary.analytic_success}, {"mean_trials", summary.mean_trials},
        {"standard_error", summary.standard_error}, {"analytic_mean", summary.analytic_mean},
        {"analytic_sd", summary.analytic_sd}, {"z_score", summary.z_score},
    };
    ordered_json list = ordered_json::array();
    for (const auto &traj : trajectories) {
        ordered_json t;
        t["success"] = traj.success;
        t["trials_used"] = traj.trials_used;
        std::string outcomes;
        std::vector<double> plus;
        for (const auto &a : traj.attempts) {
            outcomes += sign_name(a.outcome);
            plus.push_back(a.plus_probability);
        }
        t["outcomes"] = outcomes;
        t["plus_probability"] = plus;
        if (spec.record_states) {
            ordered_json states = ordered_json::array();
            for (const auto &a : traj.attempts) {
                states.push_back(a.state);
            }
            t["states"] = std::move(states);
        }
        list.push_back(std::move(t));
    }
    j["trajectories"] = std::move(list);
    out << j.dump(2) << "\n";
}

}  // namespace hbac

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

// Command-line driver: fixed-point, table1, run, sample, validate.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "hbac/cooling.h"
#include "hbac/runspec.h"
#include "hbac/schemes.h"
#include "hbac/validation.h"
#include "json.hpp"

using namespace hbac;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes to `path`, or stdout when empty. The content is rendered first so a failed open leaves nothing half-written.
void emit(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << content;
    f.close();
    if (!f) {
        throw IoError("failed writing '" + path + "'");
    }
}

enum class TableFormat {
    kTable,
    kCsv,
    kJson,
};

TableFormat parse_table_format(const std::string &s) {
    if (s == "table") {
        return TableFormat::kTable;
    }
    if (s == "csv") {
        return TableFormat::kCsv;
    }
    if (s == "json") {
        return TableFormat::kJson;
    }
    throw std::invalid_argument("format must be table, csv or json");
}

std::string pad(std::string s, size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

int cmd_fixed_point(size_t n, double eps, const std::string &format, double tol, const std::string &output) {
    auto fmt = parse_table_format(format);
    auto params = make_thermal_params(eps);
    auto closed = fixed_point(n, params);
    auto it = iterate(ReducedState::uniform(n), params, tol, 10'000'000);
    double residual = l1_distance(hbac_round(closed, params).populations(), closed.populations());
    double distance = l1_distance(it.state.populations(), closed.populations());

    std::ostringstream out;
    if (fmt == TableFormat::kJson) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["epsilon"] = eps;
        j["closed_form"] = std::vector<double>(closed.populations().begin(), closed.populations().end());
        j["power_iteration"] = std::vector<double>(it.state.populations().begin(), it.state.populations().end());
        j["power_iteration_steps"] = it.steps;
        j["power_iteration_converged"] = it.converged;
        j["l1_distance"] = distance;
        j["fixed_point_residual"] = residual;
        j["contraction"] = it.contraction;
        out << j.dump(2) << "\n";
    } else if (fmt == TableFormat::kCsv) {
        out << "index,label,closed_form,power_iteration,abs_diff\r\n";
        for (size_t i = 0; i < closed.size(); i++) {
            out << (i + 1) << ',' << label_of(n, i).to_string() << ',' << format_number(closed[i]) << ','
                << format_number(it.state[i]) << ',' << format_number(std::abs(closed[i] - it.state[i])) << "\r\n";
        }
    } else {
        out << pad("index", 8) << pad("label", n + 4) << pad("closed_form", 26) << "power_iteration\n";
        for (size_t i = 0; i < closed.size(); i++) {
            out << pad(std::to_string(i + 1), 8) << pad(label_of(n, i).to_string(), n + 4)
                << pad(format_number(closed[i]), 26) << format_number(it.state[i]) << "\n";
        }
        out << "power iteration: " << it.steps << " rounds, converged=" << (it.converged ? "yes" : "no")
            << ", L1 distance to closed form " << format_number(distance) << "\n";
        out << "closed-form residual |T p - p|_1 = " << format_number(residual) << "\n";
    }
    emit(output, out.str());
    return 0;
}

int cmd_table1(size_t n, double eps, size_t k, bool nondemolition, const std::string &format,
               const std::string &output) {
    auto fmt = parse_table_format(format);
    struct Row {
        std::string name;
        SchemeConfig config;
    };
    std::vector<Row> rows;
    auto make = [&](Scheme scheme) {
        SchemeConfig c;
        c.scheme = scheme;
        c.n = n;
        c.epsilon = eps;
        c.nondemolition = nondemolition;
        if (scheme == Scheme::kHbacKIco) {
            c.k = k;
        }
        c.validate();
        return c;
    };
    rows.push_back({"HBAC", make(Scheme::kHbac)});
    rows.push_back({"HBAC+ICO", make(Scheme::kHbacIco)});
    rows.push_back({"ICO alone", make(Scheme::kIcoAlone)});
    rows.push_back({"ICO tree sort", make(Scheme::kIcoTreeSort)});
    rows.push_back({"HBAC+" + std::to_string(k) + "ICO", make(Scheme::kHbacKIco)});

    std::ostringstream out;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    if (fmt == TableFormat::kCsv) {
        out << "scheme,bath,input_pure_qubits,output_pure_qubits,success_probability,expected_trials\r\n";
    } else if (fmt == TableFormat::kTable) {
        out << pad("scheme", 16) << pad("bath", 8) << pad("in", 5) << pad("out", 5) << pad("P", 26)
            << "expected trials\n";
    }
    for (const auto &row : rows) {
        auto res = resources(row.config);
        double p = success_probability(row.config);
        std::string bath = res.bath_used ? format_number(eps) : "none";
        if (fmt == TableFormat::kJson) {
            nlohmann::ordered_json j;
            j["scheme"] = row.name;
            j["bath"] = res.bath_used ? nlohmann::ordered_json(eps) : nlohmann::ordered_json(nullptr);
            j["input_pure_qubits"] = res.input_pure_qubits;
            j["output_pure_qubits"] = res.output_pure_qubits;
            j["success_probability"] = p;
            j["expected_trials"] = 1 / p;
            list.push_back(std::move(j));
        } else if (fmt == TableFormat::kCsv) {
            out << csv_field(row.name) << ',' << bath << ',' << res.input_pure_qubits << ',' << res.output_pure_qubits
                << ',' << format_number(p) << ',' << format_number(1 / p) << "\r\n";
        } else {
            out << pad(row.name, 16) << pad(res.bath_used ? "eps" : "none", 8)
                << pad(std::to_string(res.input_pure_qubits), 5) << pad(std::to_string(res.output_pure_qubits), 5)
                << pad(format_number(p), 26) << format_number(1 / p) << "\n";
        }
    }
    if (fmt == TableFormat::kJson) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["epsilon"] = eps;
        j["k"] = k;
        j["nondemolition"] = nondemolition;
        j["rows"] = std::move(list);
        out << j.dump(2) << "\n";
    }
    emit(output, out.str());
    return 0;
}

int cmd_run(const RunSpec &spec) {
    auto config = to_scheme_config(spec);
    auto report = run_scheme(config);
    auto stats = analytic_trial_statistics(config);
    std::ostringstream out;
    write_run(out, spec, report, stats);
    emit(spec.output, out.str());
    if (!spec.output.empty()) {
        std::cerr << scheme_name(report.scheme) << ": P=" << format_number(report.success_probability)
                  << " expected trials " << format_number(stats.mean) << " eventual success "
                  << format_number(stats.eventual_success) << "\n";
    }
    return 0;
}

int cmd_sample(const RunSpec &spec) {
    auto config = to_scheme_config(spec);
    auto stats = analytic_trial_statistics(config);
    auto trajectories = sample_trajectories(config, spec.trials, spec.threads, spec.record_states);
    auto summary = summarize(trajectories, stats);
    std::ostringstream out;
    write_sample(out, spec, trajectories, summary);
    emit(spec.output, out.str());
    std::cerr << "trajectories " << summary.trajectories << ", successes " << summary.successes << ", mean trials " << format_number(summary.mean_trials)
              << " (se " << format_number(summary.standard_error) << "), analytic "
              << format_number(summary.analytic_mean) << ", z " << format_number(summary.z_score) << "\n";
    return 0;
}

int cmd_validate(const ValidationOptions &options) {
    auto report = run_validation(options);
    std::cout << "oracle comparison (n <= " << options.nmax << ", " << options.trials << " states per layout)\n";
    for (const auto &row : report.oracle.rows) {
        std::cout << "  " << pad(row.family, 10) << " " << sign_name(row.sign) << "  diagonal "
                  << format_number(row.diagonal) << "  off-diagonal " << format_number(row.off_diagonal) << "  ("
                  << row.cases << " cases)\n";
    }
    for (const auto &check : report.checks) {
        std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << format_number(check.value)
                  << " < " << check.threshold << "\n";
    }
    std::cout << "max deviation " << format_number(report.oracle.max_deviation()) << "\n";
    return report.passed() ? 0 : kExitValidation;
}

// Adds the scheme flags shared by run and sample; values land in optionals so they can override a config file.
struct SchemeFlags {
    std::string config;
    std::optional<std::string> scheme;
    std::optional<size_t> n;
    std::optional<size_t> k;
    std::optional<double> eps;
    std::optional<std::string> initial;
    std::optional<uint64_t> seed;
    std::optional<std::string> output;
    std::optional<std::string> format;
    std::optional<double> desired;
    std::optional<std::string> policy;
    std::optional<size_t> repump;
    std::optional<std::string> ico_pair;
    bool nondemolition = false;
    bool record_states = false;
    std::optional<size_t> trials;
    std::optional<size_t> threads;

    void attach(CLI::App *app, bool sampling) {
        app->add_option("--config", config, "JSON run specification");
        app->add_option("--scheme", scheme, "HBAC, HBAC_ICO, ICO_ALONE, ICO_TREE_SORT or HBAC_KICO");
        app->add_option("--n", n, "register holds n+1 qubits");
        app->add_option("--k", k, "sacrificed qubits for HBAC_KICO");
        app->add_option("--eps", eps, "bath gap epsilon in units of k_B T");
        app->add_option("--initial", initial, "default, uniform, thermal or fixed-point");
        app->add_option("--seed", seed, "RNG seed");
        app->add_option("--output", output, "output file (stdout when omitted)");
        app->add_option("--format", format, "csv or json");
        app->add_option("--desired-success", desired, "target overall success probability");
        app->add_option("--policy", policy, "failure-update or repump");
        app->add_option("--repump-rounds", repump, "HBAC rounds after each failure with --policy repump");
        app->add_option("--ico-pair", ico_pair, "standard or ideal (ICO_ALONE)");
        app->add_flag("--nondemolition", nondemolition, "tree sort recycles one control qubit");
        app->add_flag("--record-states", record_states, "include populations per attempt in JSON output");
        if (sampling) {
            app->add_option("--trials", trials, "number of trajectories");
            app->add_option("--threads", threads, "worker threads");
        }
    }

    RunSpec resolve() const {
        RunSpec spec;
        if (!config.empty()) {
            std::ifstream f(config);
            if (!f) {
                throw IoError("cannot read config '" + config + "'");
            }
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(f);
            } catch (const nlohmann::json::exception &e) {
                throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
            }
            spec = runspec_from_json(j);
        }
        if (scheme) {
            spec.scheme = *scheme;
        }
        if (n) {
            spec.n = *n;
        }
        if (k) {
            spec.k = *k;
        }
        if (eps) {
            spec.epsilon = *eps;
        }
        if (initial) {
            spec.initial = *initial;
            spec.initial_values.clear();
        }
        if (seed) {
            spec.seed = *seed;
        }
        if (output) {
            spec.output = *output;
        }
        if (format) {
            spec.format = parse_format(*format);
        }
        if (desired) {
            spec.desired_success = *desired;
        }
        if (policy) {
            spec.policy = *policy;
        }
        if (repump) {
            spec.repump_rounds = *repump;
        }
        if (ico_pair) {
            spec.ico_pair = *ico_pair;
        }
        if (nondemolition) {
            spec.nondemolition = true;
        }
        if (record_states) {
            spec.record_states = true;
        }
        if (trials) {
            spec.trials = *trials;
        }
        if (threads) {
            spec.threads = *threads;
        }
        // Re-validate the merged result through the schema reader.
        return runspec_from_json(nlohmann::json::parse(runspec_to_json(spec).dump()));
    }
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Heat-bath algorithmic cooling with quantum-switch post-selection"};
    app.require_subcommand(1);

    size_t fp_n = 2;
    double fp_eps = 0.5;
    std::string fp_format = "table";
    double fp_tol = 1e-14;
    std::string fp_output;
    auto *fp = app.add_subcommand("fixed-point", "closed-form HBAC fixed point vs power iteration");
    fp->add_option("--n", fp_n, "register holds n+1 qubits")->required();
    fp->add_option("--eps", fp_eps, "bath gap epsilon")->required();
    fp->add_option("--format", fp_format, "table, csv or json");
    fp->add_option("--tol", fp_tol, "power-iteration L1 stopping tolerance");
    fp->add_option("--output", fp_output, "output file");

    size_t t1_n = 10;
    double t1_eps = 0.01;
    size_t t1_k = 3;
    bool t1_qnd = false;
    std::string t1_format = "table";
    std::string t1_output;
    auto *t1 = app.add_subcommand("table1", "resources and success probability of each purification scheme");
    t1->add_option("--n", t1_n, "register holds n+1 qubits");
    t1->add_option("--eps", t1_eps, "bath gap epsilon");
    t1->add_option("--k", t1_k, "k for the HBAC+kICO row");
    t1->add_flag("--nondemolition", t1_qnd, "tree sort reuses one control via nondemolition measurement");
    t1->add_option("--format", t1_format, "table, csv or json");
    t1->add_option("--output", t1_output, "output file");

    SchemeFlags run_flags;
    auto *run = app.add_subcommand("run", "evaluate one scheme and its failure chain");
    run_flags.attach(run, false);

    SchemeFlags sample_flags;
    auto *sample = app.add_subcommand("sample", "Monte Carlo trajectories until the first heralded success");
    sample_flags.attach(sample, true);

    ValidationOptions vopts;
    auto *validate = app.add_subcommand("validate", "dense-oracle equivalence and invariant battery");
    validate->add_option("--nmax", vopts.nmax, "largest register exponent for dense checks");
    validate->add_option("--trials", vopts.trials, "random states per layout");
    validate->add_option("--seed", vopts.seed, "seed");
    validate->add_option("--inject-fault", vopts.inject_fault, "corrupt the fast path (harness self-test)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*fp) {
            return cmd_fixed_point(fp_n, fp_eps, fp_format, fp_tol, fp_output);
        }
        if (*t1) {
            return cmd_table1(t1_n, t1_eps, t1_k, t1_qnd, t1_format, t1_output);
        }
        if (*run) {
            return cmd_run(run_flags.resolve());
        }
        if (*sample) {
            return cmd_sample(sample_flags.resolve());
        }
        if (*validate) {
            return cmd_validate(vopts);
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}

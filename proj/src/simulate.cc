#include "eutactic/simulate.h"

#include <algorithm>
#include <exception>
#include <limits>
#include <vector>

#include "eutactic/leakage.h"
#include "eutactic/random.h"

namespace eutactic {

namespace {

struct TrialResult {
    std::size_t failures = 0;
    std::vector<double> probabilities;
    std::vector<LeakageFlag> flags;
};

TrialResult run_trial(const SimulationConfig &config, std::size_t trial) {
    Rng rng(derive_seed(config.seed, trial));
    Matrix<double> q = random_orthogonal(config.dim, rng);
    std::vector<Vector<double>> codewords;
    for (std::size_t mu = 0; mu < config.messages; ++mu) {
        codewords.push_back(q.col(mu));
    }
    Codebook<double> book = make_codebook(std::move(codewords), 1e-9);

    CoordinateProjector first(config.dim, random_subset(config.dim, config.keep, rng));
    std::vector<CoordinateProjector> parts{first};
    if (config.keep < config.dim) {
        parts.push_back(first.complement());
    }
    ShareSplit split_plan(config.dim, std::move(parts));

    TrialResult result;
    auto shares = split(book, split_plan);
    auto recovered = recombine<double>(shares);
    for (std::size_t mu = 0; mu < config.messages; ++mu) {
        bool ok = false;
        try {
            ok = decode(recovered[mu], book, config.tolerance) == mu;
        } catch (const Error &) {
            ok = false;
        }
        result.failures += ok ? 0 : 1;
    }

    LeakageReport report = analyze_leakage_serial(book, split_plan);
    for (const auto &party : report.parties) {
        result.flags.push_back(party.flag);
        for (const auto &pair : party.pairs) {
            result.probabilities.push_back(pair.probability);
        }
    }
    return result;
}

SimulationSummary reduce(const SimulationConfig &config, const std::vector<TrialResult> &results) {
    SimulationSummary summary;
    summary.config = config;
    double sum = 0;
    summary.probability_min = std::numeric_limits<double>::infinity();
    summary.probability_max = -std::numeric_limits<double>::infinity();
    for (const auto &r : results) {
        summary.round_trips += r.failures == 0 ? 1 : 0;
        summary.failures += r.failures;
        for (double p : r.probabilities) {
            ++summary.pairs;
            sum += p;
            summary.probability_min = std::min(summary.probability_min, p);
            summary.probability_max = std::max(summary.probability_max, p);
        }
        for (LeakageFlag f : r.flags) {
            summary.deterministic_parties += f == LeakageFlag::deterministic;
            summary.no_leak_parties += f == LeakageFlag::no_leak;
            summary.partial_parties += f == LeakageFlag::partial;
        }
    }
    summary.probability_mean = summary.pairs ? sum / static_cast<double>(summary.pairs) : 0;
    if (!summary.pairs) {
        summary.probability_min = summary.probability_max = 0;
    }
    return summary;
}

}  // namespace

void validate(const SimulationConfig &config) {
    if (config.keep < 1 || config.keep > config.dim) {
        throw DomainError("--keep must satisfy 1 <= keep <= dim");
    }
    if (config.messages < 2 || config.messages > config.dim) {
        throw DomainError("--messages must satisfy 2 <= messages <= dim");
    }
    if (config.trials < 1) {
        throw DomainError("--trials must be positive");
    }
    if (!(config.tolerance > 0)) {
        throw DomainError("--tolerance must be positive");
    }
}

SimulationSummary simulate(const SimulationConfig &config) {
    validate(config);
    std::vector<TrialResult> results(config.trials);
    std::vector<std::exception_ptr> errors(config.trials);
    const auto n = static_cast<std::ptrdiff_t>(config.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        try {
            results[t] = run_trial(config, static_cast<std::size_t>(t));
        } catch (...) {
            errors[t] = std::current_exception();
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return reduce(config, results);
}

SimulationSummary simulate_serial(const SimulationConfig &config) {
    validate(config);
    std::vector<TrialResult> results;
    results.reserve(config.trials);
    for (std::size_t t = 0; t < config.trials; ++t) {
        results.push_back(run_trial(config, t));
    }
    return reduce(config, results);
}

std::string format_summary(const SimulationSummary &s) {
    std::string out;
    auto line = [&](const std::string &key, const std::string &value) { out += key + " " + value + "\n"; };
    line("kind", "simulation");
    line("dim", std::to_string(s.config.dim));
    line("keep", std::to_string(s.config.keep));
    line("messages", std::to_string(s.config.messages));
    line("trials", std::to_string(s.config.trials));
    line("seed", std::to_string(s.config.seed));
    line("round_trips", std::to_string(s.round_trips) + "/" + std::to_string(s.config.trials));
    line("failures", std::to_string(s.failures));
    line("pairs", std::to_string(s.pairs));
    line("probability_min", format_double(s.probability_min));
    line("probability_mean", format_double(s.probability_mean));
    line("probability_max", format_double(s.probability_max));
    line("flags", "DETERMINISTIC " + std::to_string(s.deterministic_parties) + " NO_LEAK " +
                      std::to_string(s.no_leak_parties) + " PARTIAL " + std::to_string(s.partial_parties));
    return out;
}

}  // namespace eutactic

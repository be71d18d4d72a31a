#ifndef EUTACTIC_SIMULATE_H
#define EUTACTIC_SIMULATE_H

#include <cstddef>
#include <cstdint>
#include <string>

namespace eutactic {

struct SimulationConfig {
    std::size_t dim = 4;
    std::size_t keep = 2;
    std::size_t messages = 2;
    std::size_t trials = 100;
    std::uint64_t seed = 7;
    double tolerance = 1e-10;
    friend bool operator==(const SimulationConfig &, const SimulationConfig &) = default;
};

struct SimulationSummary {
    SimulationConfig config;
    /// Trials in which every message survived encode -> split -> recombine -> decode.
    std::size_t round_trips = 0;
    /// Individual message round trips that failed.
    std::size_t failures = 0;
    std::size_t pairs = 0;
    double probability_min = 0;
    double probability_mean = 0;
    double probability_max = 0;
    std::size_t deterministic_parties = 0;
    std::size_t no_leak_parties = 0;
    std::size_t partial_parties = 0;

    friend bool operator==(const SimulationSummary &, const SimulationSummary &) = default;
};

/// Throws DomainError unless 1 <= keep <= dim, 2 <= messages <= dim and trials >= 1.
void validate(const SimulationConfig &config);

/// Random float-backend protocol runs. Trial t draws a random orthogonal matrix (its first
/// `messages` columns are the codebook) and a random `keep`-subset of coordinates for party 1
/// (party 2 gets the rest, or no second party when keep == dim), all from the stream
/// derive_seed(seed, t). Trials run in parallel under OpenMP and are reduced in trial order,
/// so the summary depends only on the config.
SimulationSummary simulate(const SimulationConfig &config);

/// Single-threaded reference for simulate.
SimulationSummary simulate_serial(const SimulationConfig &config);

std::string format_summary(const SimulationSummary &summary);

}  // namespace eutactic

#endif

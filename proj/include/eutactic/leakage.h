#ifndef EUTACTIC_LEAKAGE_H
#define EUTACTIC_LEAKAGE_H

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "eutactic/sharing.h"

namespace eutactic {

enum class LeakageFlag { deterministic, no_leak, partial };

std::string_view flag_name(LeakageFlag flag);

/// Tolerance on the DETERMINISTIC / NO_LEAK decisions.
inline constexpr double kLeakageFlagTolerance = 1e-9;

struct PairwiseProbability {
    std::size_t first;   // 0-based message index
    std::size_t second;  // first < second
    double probability;

    friend bool operator==(const PairwiseProbability &, const PairwiseProbability &) = default;
};

struct PartyLeakage {
    std::size_t party;
    CoordinateProjector projector;
    /// Gram matrix of the party's fragments.
    Matrix<double> gram;
    /// Upper triangle, row-major: (0,1), (0,2), ..., (k-2,k-1).
    std::vector<PairwiseProbability> pairs;
    LeakageFlag flag;

    friend bool operator==(const PartyLeakage &, const PartyLeakage &) = default;
};

struct LeakageReport {
    std::vector<double> priors;
    std::vector<PartyLeakage> parties;

    friend bool operator==(const LeakageReport &, const LeakageReport &) = default;
};

/// Conditional state of a party holding `fragment`: dyad(fragment) on the held coordinates plus
/// a trailing vacuum entry 1 - |fragment|^2 (the particle went to another party).
Matrix<double> vacuum_padded_state(const Vector<double> &fragment);

/// Optimal two-state discrimination 1/2 + 1/2 * || p rho_f - q rho_g ||_1 with p + q = 1.
/// Fragments are given in the party's own coordinates.
double helstrom_probability(const Vector<double> &f, const Vector<double> &g, double p, double q);

std::vector<double> uniform_priors(std::size_t k);

/// Throws DomainError unless `priors` has k non-negative entries summing to 1 (within 1e-9).
void validate_priors(std::span<const double> priors, std::size_t k);

/// Pairwise Helstrom probabilities for every party and message pair. Pair priors are the
/// global priors renormalized to the pair (uniform when both vanish).
///
/// DETERMINISTIC: some pair reaches probability 1. NO_LEAK: no pair beats guessing the likelier
/// message (1/2 under uniform priors). PARTIAL otherwise. Empty `priors` means uniform.
///
/// Pairs are evaluated in parallel with OpenMP; the result does not depend on the schedule.
LeakageReport analyze_leakage(const Codebook<double> &book, const ShareSplit &parts, std::span<const double> priors = {});

/// Single-threaded reference for analyze_leakage.
LeakageReport analyze_leakage_serial(const Codebook<double> &book, const ShareSplit &parts,
                                     std::span<const double> priors = {});

}  // namespace eutactic

#endif

#ifndef EUTACTIC_RANDOM_H
#define EUTACTIC_RANDOM_H

#include <cstdint>
#include <random>
#include <vector>

#include "eutactic/linalg.h"

namespace eutactic {

/// SplitMix64 step; used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t &state);

/// Seed for stream `index` of a run seeded with `seed`: splitmix64 applied to
/// seed + (index + 1) * 0x9E3779B97F4A7C15.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// std::mt19937_64 with hand-rolled conversions, so output is identical across standard
/// libraries (the <random> distributions are implementation-defined).
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }
    std::uint64_t next() {
        return engine_();
    }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    /// Uniform in [-1, 1).
    double uniform_signed() {
        return 2 * uniform() - 1;
    }
    /// Uniform integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n);

   private:
    std::mt19937_64 engine_;
};

/// Random orthogonal matrix: Gram-Schmidt over columns of uniform [-1, 1) entries,
/// then each column's first nonzero entry made positive.
Matrix<double> random_orthogonal(std::size_t m, Rng &rng);

/// Sorted random n-subset of {0, ..., m-1} (partial Fisher-Yates).
std::vector<std::size_t> random_subset(std::size_t m, std::size_t n, Rng &rng);

}  // namespace eutactic

#endif

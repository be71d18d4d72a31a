#include "eutactic/random.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace eutactic {

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed + index * 0x9E3779B97F4A7C15ULL;
    return splitmix64(state);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) {
        throw DomainError("empty range");
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

Matrix<double> random_orthogonal(std::size_t m, Rng &rng) {
    std::vector<Vector<double>> columns;
    columns.reserve(m);
    while (columns.size() < m) {
        Vector<double> v(m);
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = rng.uniform_signed();
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &c : columns) {
                v -= inner(c, v) * c;
            }
        }
        double norm = std::sqrt(squared_norm(v));
        if (norm < 1e-8) {
            continue;
        }
        v *= 1 / norm;
        for (std::size_t i = 0; i < m; ++i) {
            if (v[i] != 0) {
                if (v[i] < 0) {
                    v *= -1.0;
                }
                break;
            }
        }
        columns.push_back(std::move(v));
    }
    return Matrix<double>::from_columns(columns, m);
}

std::vector<std::size_t> random_subset(std::size_t m, std::size_t n, Rng &rng) {
    if (n > m) {
        throw DomainError("subset larger than its universe");
    }
    std::vector<std::size_t> items(m);
    std::iota(items.begin(), items.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
        std::swap(items[i], items[j]);
    }
    items.resize(n);
    std::sort(items.begin(), items.end());
    return items;
}

}  // namespace eutactic

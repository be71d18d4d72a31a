#include "eutactic/leakage.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace eutactic {

std::string_view flag_name(LeakageFlag flag) {
    switch (flag) {
        case LeakageFlag::deterministic:
            return "DETERMINISTIC";
        case LeakageFlag::no_leak:
            return "NO_LEAK";
        case LeakageFlag::partial:
            return "PARTIAL";
    }
    return "?";
}

Matrix<double> vacuum_padded_state(const Vector<double> &fragment) {
    const std::size_t r = fragment.dim();
    Matrix<double> rho(r + 1, r + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            rho(i, j) = fragment[i] * fragment[j];
        }
    }
    rho(r, r) = std::max(0.0, 1.0 - squared_norm(fragment));
    return rho;
}

double helstrom_probability(const Vector<double> &f, const Vector<double> &g, double p, double q) {
    Matrix<double> delta = p * vacuum_padded_state(f) - q * vacuum_padded_state(g);
    double probability = 0.5 + 0.5 * trace_norm_sym(delta);
    return std::clamp(probability, 0.5, 1.0);
}

std::vector<double> uniform_priors(std::size_t k) {
    return std::vector<double>(k, 1.0 / static_cast<double>(k));
}

void validate_priors(std::span<const double> priors, std::size_t k) {
    if (priors.size() != k) {
        throw DomainError("expected " + std::to_string(k) + " priors, got " + std::to_string(priors.size()));
    }
    double sum = 0;
    for (double p : priors) {
        if (!(p >= 0) || !std::isfinite(p)) {
            throw DomainError("priors must be finite and non-negative");
        }
        sum += p;
    }
    if (std::abs(sum - 1) > 1e-9) {
        throw DomainError("priors sum to " + format_double(sum) + ", not 1");
    }
}

namespace {

struct PairTask {
    std::size_t party;
    std::size_t first;
    std::size_t second;
};

struct Prepared {
    std::vector<double> priors;
    std::vector<Share<double>> shares;
    /// Fragments restricted to each party's coordinates.
    std::vector<std::vector<Vector<double>>> local;
    std::vector<PairTask> tasks;
};

Prepared prepare(const Codebook<double> &book, const ShareSplit &parts, std::span<const double> priors) {
    Prepared prep;
    if (priors.empty()) {
        prep.priors = uniform_priors(book.size());
    } else {
        validate_priors(priors, book.size());
        prep.priors.assign(priors.begin(), priors.end());
    }
    prep.shares = split(book, parts);
    for (const auto &share : prep.shares) {
        std::vector<Vector<double>> local;
        for (const auto &fragment : share.fragments) {
            local.push_back(share.projector.restrict(fragment));
        }
        prep.local.push_back(std::move(local));
        for (std::size_t a = 0; a < book.size(); ++a) {
            for (std::size_t b = a + 1; b < book.size(); ++b) {
                prep.tasks.push_back({share.party, a, b});
            }
        }
    }
    return prep;
}

double evaluate(const Prepared &prep, const PairTask &task) {
    double p = prep.priors[task.first];
    double q = prep.priors[task.second];
    if (p + q > 0) {
        double total = p + q;
        p /= total;
        q /= total;
    } else {
        p = q = 0.5;
    }
    const auto &local = prep.local[task.party];
    return helstrom_probability(local[task.first], local[task.second], p, q);
}

LeakageReport assemble(const Prepared &prep, const std::vector<double> &probabilities) {
    LeakageReport report;
    report.priors = prep.priors;
    std::size_t t = 0;
    for (std::size_t s = 0; s < prep.shares.size(); ++s) {
        const auto &local = prep.local[s];
        const std::size_t k = local.size();
        PartyLeakage party{s, prep.shares[s].projector, Matrix<double>(k, k), {}, LeakageFlag::partial};
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                party.gram(a, b) = inner(local[a], local[b]);
            }
        }
        bool deterministic = false;
        bool leaks = false;
        for (; t < prep.tasks.size() && prep.tasks[t].party == s; ++t) {
            const auto &task = prep.tasks[t];
            double prob = probabilities[t];
            party.pairs.push_back({task.first, task.second, prob});
            double p = prep.priors[task.first];
            double q = prep.priors[task.second];
            double baseline = p + q > 0 ? std::max(p, q) / (p + q) : 0.5;
            deterministic = deterministic || prob >= 1 - kLeakageFlagTolerance;
            leaks = leaks || prob > baseline + kLeakageFlagTolerance;
        }
        party.flag = deterministic ? LeakageFlag::deterministic : (leaks ? LeakageFlag::partial : LeakageFlag::no_leak);
        report.parties.push_back(std::move(party));
    }
    return report;
}

}  // namespace

LeakageReport analyze_leakage(const Codebook<double> &book, const ShareSplit &parts, std::span<const double> priors) {
    Prepared prep = prepare(book, parts, priors);
    std::vector<double> probabilities(prep.tasks.size());
    const auto n = static_cast<std::ptrdiff_t>(prep.tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t t = 0; t < n; ++t) {
        probabilities[t] = evaluate(prep, prep.tasks[t]);
    }
    return assemble(prep, probabilities);
}

LeakageReport analyze_leakage_serial(const Codebook<double> &book, const ShareSplit &parts,
                                     std::span<const double> priors) {
    Prepared prep = prepare(book, parts, priors);
    std::vector<double> probabilities;
    probabilities.reserve(prep.tasks.size());
    for (const auto &task : prep.tasks) {
        probabilities.push_back(evaluate(prep, task));
    }
    return assemble(prep, probabilities);
}

}  // namespace eutactic

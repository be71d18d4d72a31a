#ifndef EUTACTIC_VERIFY_H
#define EUTACTIC_VERIFY_H

#include <string>
#include <vector>

#include "eutactic/scalar.h"

namespace eutactic {

struct CheckResult {
    std::string id;
    std::string description;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    Backend backend;
    double tolerance;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// First failing check, or nullptr.
    const CheckResult *first_failure() const;
};

/// Re-derives the worked example's identities on the chosen backend:
///   recombination, orthonormality, projector matrices, non-comeasurability, eutacticity,
///   the four-box interferometer, the worst-case split, and exact/float agreement.
/// `corrupt` perturbs one built-in vector to exercise failure reporting.
VerificationReport verify_paper(Backend backend, double tolerance = kDefaultTolerance, bool corrupt = false);

std::string format_report(const VerificationReport &report);

}  // namespace eutactic

#endif

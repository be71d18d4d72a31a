#include "eutactic/verify.h"

#include <cmath>

#include "eutactic/interferometer.h"
#include "eutactic/leakage.h"
#include "eutactic/paper_data.h"
#include "eutactic/sharing.h"

namespace eutactic {

bool VerificationReport::all_passed() const {
    return first_failure() == nullptr;
}

const CheckResult *VerificationReport::first_failure() const {
    for (const auto &c : checks) {
        if (!c.passed) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

/// Every number the checks compute, flattened, for cross-backend comparison.
template <FieldScalar T>
struct Computed {
    std::vector<double> values;

    void add(const T &x) {
        values.push_back(ScalarTraits<T>::to_double(x));
    }
    void add(const Vector<T> &v) {
        for (const T &x : v.entries()) {
            add(x);
        }
    }
    void add(const Matrix<T> &m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            add(m.row(r));
        }
    }
};

template <FieldScalar T>
std::vector<CheckResult> run_checks(const PaperExample<T> &e, double tol, Computed<T> &computed) {
    std::vector<CheckResult> checks;
    auto record = [&](std::string id, std::string description, bool passed, std::string detail) {
        checks.push_back({std::move(id), std::move(description), passed, std::move(detail)});
    };

    // 1. Recombination.
    {
        Vector<T> wy = e.w + e.y;
        Vector<T> xz = e.x + e.z;
        computed.add(wy);
        computed.add(xz);
        bool sums = approx_equal(wy, e.w_plus_y, tol) && approx_equal(xz, e.x_plus_z, tol);
        bool projections = approx_equal(e.p.apply(e.w_plus_y), e.y, tol) &&
                           approx_equal(e.p.apply(e.x_plus_z), e.z, tol) &&
                           approx_equal(e.p_perp.apply(e.w_plus_y), e.w, tol) &&
                           approx_equal(e.p_perp.apply(e.x_plus_z), e.x, tol);
        std::string detail = !sums ? "w+y or x+z differs from the reference codewords"
                                   : (!projections ? "P / P-perp do not map the codewords onto the shares" : "");
        record("recombination", "w+y and x+z equal the codewords; P, P-perp give back the shares",
               sums && projections, detail);
    }

    // 2. Orthonormality of the quadrit codebook.
    {
        std::vector<Vector<T>> book{e.w_plus_y, e.x_plus_z, e.quadrit3, e.quadrit4};
        Matrix<T> gram(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                gram(i, j) = inner(book[i], book[j]);
            }
        }
        computed.add(gram);
        bool ok = approx_equal(gram, Matrix<T>::identity(4), tol);
        record("orthonormality", "Gram matrix of {w+y, x+z, q3, q4} is the identity", ok,
               ok ? "" : "Gram matrix differs from the identity");
    }

    // 3. Reference projectors.
    {
        Matrix<T> a = dyad(e.w_plus_y);
        Matrix<T> b = dyad(e.x_plus_z);
        computed.add(a);
        computed.add(b);
        bool ok_a = approx_equal(a, e.projector_wy, tol);
        bool ok_b = approx_equal(b, e.projector_xz, tol);
        record("projectors", "dyads of w+y and x+z equal the reference 4x4 projectors", ok_a && ok_b,
               ok_a ? (ok_b ? "" : "dyad(x+z) differs") : "dyad(w+y) differs");
    }

    // 4. Non-comeasurability of both shares.
    {
        Share<T> second{1, e.p_perp, {e.w, e.x}};
        Share<T> first{0, e.p, {e.y, e.z}};
        bool ok = true;
        std::string detail;
        for (const auto *share : {&second, &first}) {
            try {
                auto check = noncommeasurability_check(*share, tol);
                if (check.witness) {
                    computed.add(*check.witness);
                }
                if (!check.noncommeasurable) {
                    ok = false;
                    detail = "fragments of party " + std::to_string(share->party + 1) + " commute";
                }
            } catch (const Error &err) {
                ok = false;
                detail = err.what();
            }
        }
        record("non-comeasurability", "[w^T w][x^T x] != [x^T x][w^T w] and likewise for y, z", ok, detail);
    }

    // 5. Eutacticity.
    {
        bool ok = true;
        std::string detail;
        try {
            OrthonormalBasis<T> basis({e.w_plus_y, e.x_plus_z, e.quadrit3, e.quadrit4}, tol);
            for (const auto *proj : {&e.p, &e.p_perp}) {
                auto report = is_parseval(project_basis(basis, *proj), tol);
                computed.add(report.resolution);
                if (!report.parseval || (backend_of<T> == Backend::exact && report.defect != 0)) {
                    ok = false;
                    detail = "quadrit projection is not Parseval (defect " + format_double(report.defect) + ")";
                }
            }
        } catch (const Error &err) {
            ok = false;
            detail = err.what();
        }
        EutacticStar<T> wx(2, {e.p_perp.restrict(e.w), e.p_perp.restrict(e.x)});
        EutacticStar<T> yz(2, {e.p.restrict(e.y), e.p.restrict(e.z)});
        for (const auto *star : {&wx, &yz}) {
            auto report = is_parseval(*star, tol);
            computed.add(report.resolution);
            if (report.parseval || !(report.defect > 0)) {
                ok = false;
                detail = "a two-vector sub-star unexpectedly passes the Parseval test";
            }
        }
        record("eutacticity", "both quadrit projections are Parseval (defect 0); {w,x}, {y,z} are not", ok, detail);
    }

    // 6. Four-box interferometer.
    {
        RotationCircuit encoder = paper_encoder();
        Vector<T> out1 = apply_circuit(encoder, Vector<T>::unit(4, 3));
        Vector<T> out2 = apply_circuit(encoder, Vector<T>::unit(4, 0));
        Matrix<T> round_trip = invert_circuit(encoder).template matrix<T>() * encoder.template matrix<T>();
        computed.add(out1);
        computed.add(out2);
        computed.add(encoder.template matrix<T>());
        bool maps = approx_equal(out1, e.w_plus_y, tol) && approx_equal(out2, e.x_plus_z, tol);
        bool inverse = approx_equal(round_trip, Matrix<T>::identity(4), tol);
        record("interferometer", "encoder maps (0,0,0,1) to w+y and (1,0,0,0) to x+z; decoder undoes it",
               maps && inverse,
               !maps ? "encoder output differs from the codewords" : (!inverse ? "decoder * encoder != I" : ""));
    }

    // 7. Worst case.
    {
        bool ok = true;
        std::string detail;
        try {
            std::vector<Vector<double>> basis;
            for (const auto &v : e.worst_case_basis) {
                basis.push_back(convert<double>(v));
            }
            auto book = make_codebook(std::move(basis), tol);
            ShareSplit plan(3, {e.worst_case_first, e.worst_case_second});
            LeakageReport report = analyze_leakage(book, plan);
            for (const auto &party : report.parties) {
                if (party.flag != LeakageFlag::deterministic) {
                    ok = false;
                    detail = "party " + std::to_string(party.party + 1) + " flagged " + std::string(flag_name(party.flag));
                }
                for (const auto &pair : party.pairs) {
                    computed.values.push_back(pair.probability);
                }
            }
            // The first share separates message 1 from the rest.
            for (const auto &pair : report.parties.at(0).pairs) {
                if (pair.first == 0 && std::abs(pair.probability - 1) > kLeakageFlagTolerance) {
                    ok = false;
                    detail = "first share does not separate message 1 deterministically";
                }
            }
        } catch (const Error &err) {
            ok = false;
            detail = err.what();
        }
        record("worst-case", "the {3} | {1,2} split of the permuted standard basis is DETERMINISTIC", ok, detail);
    }
    return checks;
}

}  // namespace

VerificationReport verify_paper(Backend backend, double tolerance, bool corrupt) {
    if (!(tolerance > 0)) {
        throw DomainError("tolerance must be positive");
    }
    Computed<QuadScalar> exact_values;
    Computed<double> float_values;
    auto exact_checks = run_checks(paper_example<QuadScalar>(corrupt), tolerance, exact_values);
    auto float_checks = run_checks(paper_example<double>(corrupt), tolerance, float_values);

    VerificationReport report{backend, tolerance, backend == Backend::exact ? exact_checks : float_checks};

    constexpr double kAgreement = 1e-10;
    double worst = 0;
    bool same_shape = exact_values.values.size() == float_values.values.size();
    if (same_shape) {
        for (std::size_t i = 0; i < exact_values.values.size(); ++i) {
            worst = std::max(worst, std::abs(exact_values.values[i] - float_values.values[i]));
        }
    }
    bool agree = same_shape && worst <= kAgreement;
    report.checks.push_back({"backend-agreement",
                             "exact and float backends agree within 1e-10 on " +
                                 std::to_string(exact_values.values.size()) + " computed numbers",
                             agree,
                             same_shape ? "max deviation " + format_double(worst)
                                        : "backends computed different result sets"});
    return report;
}

std::string format_report(const VerificationReport &report) {
    std::string out = "verify-paper backend=" + std::string(backend_name(report.backend)) +
                      " tolerance=" + format_double(report.tolerance) + "\n";
    std::size_t passed = 0;
    for (const auto &c : report.checks) {
        passed += c.passed;
        out += std::string(c.passed ? "PASS " : "FAIL ") + c.id + ": " + c.description;
        if (!c.detail.empty()) {
            out += " [" + c.detail + "]";
        }
        out += "\n";
    }
    out += std::to_string(passed) + "/" + std::to_string(report.checks.size()) + " checks passed\n";
    return out;
}

}  // namespace eutactic

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eutactic/frames.h"
#include "eutactic/interferometer.h"
#include "eutactic/leakage.h"
#include "eutactic/sharing.h"
#include "eutactic/simulate.h"
#include "eutactic/text_format.h"
#include "eutactic/verify.h"

namespace eutactic::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::optional<Backend> backend;
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = 7;
    bool structured = false;
};

/// Reconstruction is impossible or a verification failed; maps to exit code 1.
struct VerificationFailure : Error {
    using Error::Error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot write '" + path + "'");
    }
    out << content;
}

/// Re-reads a parse error with the file name in front.
template <class Fn>
auto parse_file(const std::string &path, Fn &&fn) {
    std::string text = read_file(path);
    try {
        return fn(text);
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), e.line,
                         e.column);
    }
}

EutacticStar<double> to_float(const EutacticStar<QuadScalar> &star) {
    std::vector<Vector<double>> vectors;
    for (const auto &v : star.vectors()) {
        vectors.push_back(convert<double>(v));
    }
    return EutacticStar<double>(star.ambient_dim(), std::move(vectors));
}

Share<double> to_float(const Share<QuadScalar> &share) {
    Share<double> out{share.party, share.projector, {}};
    for (const auto &f : share.fragments) {
        out.fragments.push_back(convert<double>(f));
    }
    return out;
}

Codebook<double> to_float(const Codebook<QuadScalar> &book) {
    return convert_codebook<double>(book);
}

Matrix<double> to_float(const Matrix<QuadScalar> &m) {
    return convert<double>(m);
}

/// Applies --backend to data read from a file: exact data may be demoted to float, never the reverse.
template <class Variant>
Variant resolve_backend(Variant value, const RunConfig &config) {
    if (!config.backend) {
        return value;
    }
    if (*config.backend == Backend::floating && value.index() == 0) {
        return Variant(to_float(std::get<0>(value)));
    }
    if (*config.backend == Backend::exact && value.index() == 1) {
        throw DomainError("float data cannot be promoted to the exact backend");
    }
    return value;
}

std::vector<double> parse_priors(const std::string &text) {
    std::vector<double> priors;
    std::string_view rest = text;
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        priors.push_back(parse_double(rest.substr(0, comma)));
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return priors;
}

Json leakage_json(const LeakageReport &report) {
    Json j;
    j["kind"] = "leakage";
    j["priors"] = report.priors;
    Json parties = Json::array();
    for (const auto &party : report.parties) {
        Json p;
        p["party"] = party.party + 1;
        std::vector<std::size_t> keep;
        for (std::size_t k : party.projector.kept()) {
            keep.push_back(k + 1);
        }
        p["keep"] = keep;
        p["flag"] = flag_name(party.flag);
        Json gram = Json::array();
        for (std::size_t r = 0; r < party.gram.rows(); ++r) {
            auto row = party.gram.row(r).entries();
            gram.push_back(std::vector<double>(row.begin(), row.end()));
        }
        p["gram"] = gram;
        Json pairs = Json::array();
        for (const auto &pair : party.pairs) {
            pairs.push_back({{"first", pair.first + 1}, {"second", pair.second + 1}, {"probability", pair.probability}});
        }
        p["pairs"] = pairs;
        parties.push_back(p);
    }
    j["parties"] = parties;
    return j;
}

int cmd_verify_paper(const RunConfig &config, bool corrupt, std::ostream &out) {
    VerificationReport report = verify_paper(config.backend.value_or(Backend::exact), config.tolerance, corrupt);
    if (config.structured) {
        Json j;
        j["kind"] = "verify-paper";
        j["backend"] = backend_name(report.backend);
        j["tolerance"] = report.tolerance;
        Json checks = Json::array();
        for (const auto &c : report.checks) {
            checks.push_back({{"id", c.id}, {"passed", c.passed}, {"description", c.description}, {"detail", c.detail}});
        }
        j["checks"] = checks;
        j["passed"] = report.all_passed();
        out << j.dump(2) << "\n";
    } else {
        out << format_report(report);
        if (const CheckResult *failure = report.first_failure()) {
            out << "first failing identity: " << failure->id << "\n";
        }
    }
    return report.all_passed() ? kSuccess : kVerificationFailure;
}

int cmd_star_check(const RunConfig &config, const std::string &path, std::ostream &out) {
    AnyStar star = resolve_backend(parse_file(path, [](const std::string &t) { return read_star(t); }), config);
    return std::visit(
        [&](const auto &s) {
            auto report = is_parseval(s, config.tolerance);
            using T = std::decay_t<decltype(s.vectors().front()[0])>;
            if (config.structured) {
                Json j;
                j["kind"] = "star-check";
                j["backend"] = backend_name(backend_of<T>);
                j["dim"] = s.ambient_dim();
                j["source_dim"] = s.source_dim();
                j["parseval"] = report.parseval;
                j["defect"] = report.defect;
                out << j.dump(2) << "\n";
            } else {
                out << "star " << path << "\n";
                out << "backend " << backend_name(backend_of<T>) << "\n";
                out << "dim " << s.ambient_dim() << "\n";
                out << "source_dim " << s.source_dim() << "\n";
                out << "parseval " << (report.parseval ? "yes" : "no") << "\n";
                out << "defect " << format_double(report.defect) << "\n";
                if constexpr (backend_of<T> == Backend::exact) {
                    Matrix<T> deviation = report.resolution - Matrix<T>::identity(s.ambient_dim());
                    out << "defect_squared " << format_scalar(frobenius_squared(deviation)) << "\n";
                }
            }
            return report.parseval ? kSuccess : kVerificationFailure;
        },
        star);
}

int cmd_star_dilate(const RunConfig &config, const std::string &path, std::string prefix, std::ostream &out,
                    std::ostream &err) {
    AnyStar star = resolve_backend(parse_file(path, [](const std::string &t) { return read_star(t); }), config);
    if (prefix.empty()) {
        prefix = (std::filesystem::path(path).parent_path() / std::filesystem::path(path).stem()).string();
    }
    std::string basis_text;
    CoordinateProjector projector = CoordinateProjector::full(0);
    auto dilate_float = [&](const EutacticStar<double> &s) {
        auto d = naimark_dilate(s, config.tolerance);
        basis_text = write_basis(d.basis);
        projector = d.projector;
    };
    if (auto *exact = std::get_if<0>(&star)) {
        try {
            auto d = naimark_dilate(*exact, config.tolerance);
            basis_text = write_basis(d.basis);
            projector = d.projector;
        } catch (const NotRepresentable &e) {
            if (config.backend == Backend::exact) {
                throw;
            }
            err << "note: switched to the float backend: " << e.what() << "\n";
            dilate_float(to_float(*exact));
        }
    } else {
        dilate_float(std::get<1>(star));
    }
    write_file(prefix + ".basis", basis_text);
    write_file(prefix + ".projector", write_projector(projector));
    out << "wrote " << prefix << ".basis\n";
    out << "wrote " << prefix << ".projector\n";
    return kSuccess;
}

int cmd_share_split(const RunConfig &config, const std::string &book_path, const std::string &split_path,
                    const std::string &out_dir, std::ostream &out) {
    AnyCodebook book =
        resolve_backend(parse_file(book_path, [](const std::string &t) { return read_codebook(t); }), config);
    ShareSplit plan = parse_file(split_path, [](const std::string &t) { return read_split(t); });
    std::filesystem::create_directories(out_dir);
    std::visit(
        [&](const auto &b) {
            for (const auto &share : split(b, plan)) {
                std::string path =
                    (std::filesystem::path(out_dir) / ("share_" + std::to_string(share.party + 1) + ".share")).string();
                write_file(path, write_share(share));
                out << "wrote " << path << "\n";
            }
        },
        book);
    return kSuccess;
}

int cmd_share_recombine(const RunConfig &config, const std::vector<std::string> &paths, const std::string &out_path,
                        std::ostream &out) {
    std::vector<AnyShare> shares;
    for (const auto &p : paths) {
        shares.push_back(resolve_backend(parse_file(p, [](const std::string &t) { return read_share(t); }), config));
    }
    auto recombine_as = [&]<class T>() {
        std::vector<Share<T>> typed;
        for (const auto &s : shares) {
            if (const auto *t = std::get_if<Share<T>>(&s)) {
                typed.push_back(*t);
            } else {
                throw BackendMismatch("share files mix the exact and float backends");
            }
        }
        std::vector<Vector<T>> recovered;
        try {
            recovered = recombine<T>(typed);
        } catch (const IncompleteShares &e) {
            throw VerificationFailure(std::string("reconstruction impossible: ") + e.what());
        }
        Codebook<T> book = make_codebook(std::move(recovered), config.tolerance);
        write_file(out_path, write_codebook(book));
        out << "recovered " << book.size() << " codewords from " << typed.size() << " shares\n";
        out << "wrote " << out_path << "\n";
    };
    if (shares.empty()) {
        throw DomainError("no share files given");
    }
    if (shares.front().index() == 0) {
        recombine_as.template operator()<QuadScalar>();
    } else {
        recombine_as.template operator()<double>();
    }
    return kSuccess;
}

int cmd_share_leakage(const RunConfig &config, const std::string &book_path, const std::string &split_path,
                      const std::string &priors_text, std::ostream &out) {
    AnyCodebook any = parse_file(book_path, [](const std::string &t) { return read_codebook(t); });
    if (config.backend == Backend::exact) {
        throw DomainError("leakage analysis runs on the float backend");
    }
    Codebook<double> book = any.index() == 0 ? to_float(std::get<0>(any)) : std::get<1>(any);
    ShareSplit plan = parse_file(split_path, [](const std::string &t) { return read_split(t); });
    std::vector<double> priors = priors_text.empty() ? std::vector<double>() : parse_priors(priors_text);
    LeakageReport report = analyze_leakage(book, plan, priors);
    if (config.structured) {
        out << leakage_json(report).dump(2) << "\n";
    } else {
        out << write_leakage_report(report);
    }
    return kSuccess;
}

int cmd_compile(const RunConfig &config, const std::string &path, std::string out_path, std::ostream &out,
                std::ostream &err) {
    AnyMatrix matrix = resolve_backend(parse_file(path, [](const std::string &t) { return read_matrix(t); }), config);
    if (out_path.empty()) {
        out_path = (std::filesystem::path(path).parent_path() / std::filesystem::path(path).stem()).string() + ".circuit";
    }
    std::optional<RotationCircuit> circuit;
    if (auto *exact = std::get_if<0>(&matrix)) {
        try {
            circuit = decompose(*exact, config.tolerance);
        } catch (const NotRepresentable &e) {
            if (config.backend == Backend::exact) {
                throw;
            }
            err << "note: switched to the float backend: " << e.what() << "\n";
        }
    }
    Matrix<double> target = matrix.index() == 0 ? to_float(std::get<0>(matrix)) : std::get<1>(matrix);
    if (!circuit) {
        circuit = decompose(target, config.tolerance);
    }
    double residual = frobenius_norm(circuit->matrix<double>() - target);
    write_file(out_path, write_circuit(*circuit));
    if (config.structured) {
        Json j;
        j["kind"] = "compile";
        j["gates"] = circuit->gates().size();
        j["sign_flips"] = circuit->has_sign_flips();
        j["residual"] = residual;
        j["output"] = out_path;
        out << j.dump(2) << "\n";
    } else {
        out << "gates " << circuit->gates().size() << "\n";
        out << "sign_flips " << (circuit->has_sign_flips() ? "yes" : "no") << "\n";
        out << "residual " << format_double(residual) << "\n";
        out << "wrote " << out_path << "\n";
    }
    return kSuccess;
}

int cmd_simulate(const RunConfig &config, SimulationConfig sim, std::ostream &out) {
    if (config.backend == Backend::exact) {
        throw DomainError("simulate draws random orthogonal matrices and runs on the float backend");
    }
    sim.seed = config.seed;
    sim.tolerance = config.tolerance;
    SimulationSummary s = simulate(sim);
    if (config.structured) {
        Json j;
        j["kind"] = "simulation";
        j["dim"] = sim.dim;
        j["keep"] = sim.keep;
        j["messages"] = sim.messages;
        j["trials"] = sim.trials;
        j["seed"] = sim.seed;
        j["round_trips"] = s.round_trips;
        j["failures"] = s.failures;
        j["pairs"] = s.pairs;
        j["probability_min"] = s.probability_min;
        j["probability_mean"] = s.probability_mean;
        j["probability_max"] = s.probability_max;
        j["flags"] = {{"DETERMINISTIC", s.deterministic_parties},
                      {"NO_LEAK", s.no_leak_parties},
                      {"PARTIAL", s.partial_parties}};
        out << j.dump(2) << "\n";
    } else {
        out << format_summary(s);
    }
    return s.failures == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Eutactic-star quantum codes: frames, secret sharing, leakage and interferometers", "eutactic"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string backend_text;
    std::string format = "text";
    app.add_option("--backend", backend_text, "exact | float (default: exact where the data permits)")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--tolerance", config.tolerance, "absolute tolerance for float comparisons")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "64-bit seed for simulate");
    app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));

    bool corrupt = false;
    auto *verify = app.add_subcommand("verify-paper", "re-derive the worked example's identities");
    verify->add_flag("--corrupt", corrupt, "test hook: perturb a built-in vector");

    auto *star = app.add_subcommand("star", "eutactic star tools");
    star->require_subcommand(1);
    std::string star_path;
    auto *star_check = star->add_subcommand("check", "Parseval verdict and defect");
    star_check->add_option("file", star_path, "star file")->required();
    std::string dilate_path, dilate_prefix;
    auto *star_dilate = star->add_subcommand("dilate", "lift a Parseval star to an orthonormal basis");
    star_dilate->add_option("file", dilate_path, "star file")->required();
    star_dilate->add_option("--out-prefix", dilate_prefix, "writes <prefix>.basis and <prefix>.projector");

    auto *share = app.add_subcommand("share", "secret-sharing protocol");
    share->require_subcommand(1);
    std::string book_path, split_path, out_dir = ".";
    auto *share_split = share->add_subcommand("split", "write one share file per party");
    share_split->add_option("codebook", book_path, "codebook file")->required();
    share_split->add_option("split", split_path, "split file")->required();
    share_split->add_option("--out-dir", out_dir, "directory for share_<party>.share files");
    std::vector<std::string> share_paths;
    std::string recovered_path = "recovered.codebook";
    auto *share_recombine = share->add_subcommand("recombine", "coherently recombine share files");
    share_recombine->add_option("shares", share_paths, "share files")->required();
    share_recombine->add_option("--out", recovered_path, "recovered codebook file");
    std::string leak_book, leak_split, priors;
    auto *share_leakage = share->add_subcommand("leakage", "pairwise Helstrom leakage per party");
    share_leakage->add_option("codebook", leak_book, "codebook file")->required();
    share_leakage->add_option("split", leak_split, "split file")->required();
    share_leakage->add_option("--priors", priors, "comma-separated message priors (default uniform)");

    std::string matrix_path, circuit_path;
    auto *compile = app.add_subcommand("compile", "decompose an orthogonal matrix into plane rotations");
    compile->add_option("matrix", matrix_path, "matrix file")->required();
    compile->add_option("--out", circuit_path, "circuit file (default: <matrix stem>.circuit)");

    SimulationConfig sim;
    auto *simulate_cmd = app.add_subcommand("simulate", "randomized protocol round trips and leakage statistics");
    simulate_cmd->add_option("--dim", sim.dim, "ambient dimension m")->required();
    simulate_cmd->add_option("--keep", sim.keep, "coordinates held by party 1")->required();
    simulate_cmd->add_option("--messages", sim.messages, "codewords per codebook")->required();
    simulate_cmd->add_option("--trials", sim.trials, "number of random trials")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }
    if (!backend_text.empty()) {
        config.backend = parse_backend(backend_text);
    }
    config.structured = format == "structured";

    try {
        if (*verify) {
            return cmd_verify_paper(config, corrupt, out);
        }
        if (*star_check) {
            return cmd_star_check(config, star_path, out);
        }
        if (*star_dilate) {
            return cmd_star_dilate(config, dilate_path, dilate_prefix, out, err);
        }
        if (*share_split) {
            return cmd_share_split(config, book_path, split_path, out_dir, out);
        }
        if (*share_recombine) {
            return cmd_share_recombine(config, share_paths, recovered_path, out);
        }
        if (*share_leakage) {
            return cmd_share_leakage(config, leak_book, leak_split, priors, out);
        }
        if (*compile) {
            return cmd_compile(config, matrix_path, circuit_path, out, err);
        }
        if (*simulate_cmd) {
            return cmd_simulate(config, sim, out);
        }
    } catch (const VerificationFailure &e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace eutactic::cli

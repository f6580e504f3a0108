// Command-line front end: builds configurations from files or flags, runs
// the computations and emits JSON or CSV. Exit codes: 0 success,
// 1 verification failure, 2 internal invariant breach, 64 usage error,
// 65 bad input data.

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"
#include "hilbsq/hilb2.hpp"
#include "hilbsq/hodge.hpp"
#include "hilbsq/json_io.hpp"
#include "hilbsq/k3.hpp"
#include "hilbsq/mu_reference.hpp"
#include "hilbsq/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInternal = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file " << out_path << '\n';
        return kExitBadInput;
    }
    out << text;
    return kExitOk;
}

hilbsq::Json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hilbsq::BadInput("BadInput: cannot read " + path);
    try {
        return hilbsq::Json::parse(in);
    } catch (const std::exception& e) {
        throw hilbsq::BadInput("BadInput: " + path + " is not valid JSON: " + e.what());
    }
}

int run_mu_table(const std::string& format, const std::string& out_path) {
    const hilbsq::MuMatrix& mu = hilbsq::diagonal_coefficients();

    std::string rendered;
    if (format == "csv") {
        rendered = hilbsq::int_matrix_to_csv(mu.entries);
    } else {
        hilbsq::Json j;
        j["rank"] = hilbsq::kK3Rank;
        j["mu"] = hilbsq::int_matrix_to_json(mu.entries);
        rendered = j.dump(2) + "\n";
    }
    int code = emit(rendered, out_path);
    if (code != kExitOk) return code;

    // The emitted matrix must agree with the published table; anything else
    // is an internal breach.
    for (const hilbsq::MuEntry& e : hilbsq::kPublishedMuTable) {
        if (mu(e.i - 1, e.j - 1) != e.value || mu(e.j - 1, e.i - 1) != e.value) {
            std::cerr << "internal error: computed mu(" << e.i << "," << e.j
                      << ") disagrees with the published table\n";
            return kExitInternal;
        }
    }
    hilbsq::IntMat expected(hilbsq::kK3Rank, hilbsq::kK3Rank);
    for (const hilbsq::MuEntry& e : hilbsq::kPublishedMuTable) {
        expected(e.i - 1, e.j - 1) = e.value;
        expected(e.j - 1, e.i - 1) = e.value;
    }
    if (!(mu.entries == expected)) {
        std::cerr << "internal error: computed mu has nonzero entries off the published "
                     "support\n";
        return kExitInternal;
    }
    return kExitOk;
}

int run_report(const hilbsq::K3Config& cfg, const std::string& format,
               const std::string& out_path, bool enforce_closed_form) {
    hilbsq::Hodge22Report report = hilbsq::analyze(cfg);
    std::string rendered;
    if (format == "csv") {
        rendered = hilbsq::int_matrix_to_csv(report.gram);
    } else {
        rendered = hilbsq::report_to_json(report).dump(2) + "\n";
    }
    int code = emit(rendered, out_path);
    if (code != kExitOk) return code;
    if (enforce_closed_form && !report.closed_form_match.value_or(false)) {
        std::cerr << "internal error: generic report disagrees with the closed form\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation of the integral (2,2) classes on the Hilbert square of a "
                 "projective K3 surface"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    long long t_value = 0;
    std::string config_path;
    std::string pair_left, pair_right;

    CLI::App* mu_cmd = app.add_subcommand("mu-table",
                                          "Emit the 22x22 diagonal-class coefficient matrix");
    mu_cmd->add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    mu_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

    CLI::App* generic_cmd =
        app.add_subcommand("generic", "Analyze the generic degree-2t configuration");
    generic_cmd->add_option("--t", t_value, "Half the degree of the polarisation (t >= 1)")
        ->required();
    generic_cmd->add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    generic_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Analyze a configuration from a JSON file");
    analyze_cmd->add_option("--config", config_path, "Path to the configuration JSON")
        ->required();
    analyze_cmd->add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    analyze_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

    CLI::App* pair_cmd =
        app.add_subcommand("pair", "Intersection pairing of two H4 classes from JSON files");
    pair_cmd->add_option("left", pair_left, "First H4 class (JSON file)")->required();
    pair_cmd->add_option("right", pair_right, "Second H4 class (JSON file)")->required();
    pair_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

    app.add_subcommand("verify", "Run the built-in verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (mu_cmd->parsed()) return run_mu_table(format, out_path);

        if (generic_cmd->parsed()) {
            if (t_value < 1) {
                std::cerr << "usage error: --t must be >= 1\n";
                return kExitUsage;
            }
            return run_report(hilbsq::generic_surface(hilbsq::Int(t_value)), format, out_path,
                              /*enforce_closed_form=*/true);
        }

        if (analyze_cmd->parsed()) {
            hilbsq::K3Config cfg = hilbsq::k3config_from_json(load_json(config_path));
            return run_report(cfg, format, out_path, /*enforce_closed_form=*/false);
        }

        if (pair_cmd->parsed()) {
            hilbsq::H4Class a = hilbsq::h4_from_json(load_json(pair_left));
            hilbsq::H4Class b = hilbsq::h4_from_json(load_json(pair_right));
            return emit(hilbsq::rat_to_string(hilbsq::intersection_pairing(a, b)) + "\n",
                        out_path);
        }

        // verify
        return hilbsq::run_verification(std::cout);
    } catch (const hilbsq::InternalInconsistency& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const hilbsq::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
}

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polytc/json_io.hpp"

namespace {

using polytc::Carrier;

constexpr int kExitValidation = 2;
constexpr int kExitCertificate = 3;
constexpr int kExitAmbiguity = 4;
constexpr int kExitVerification = 5;

int run_tc(const std::string& spec_path, int s, bool as_json) {
    const Carrier spec = polytc::spec_from_json(polytc::load_json_file(spec_path));
    const polytc::NormWitness wit = polytc::tc_s(*spec, s);
    if (as_json) {
        std::cout << polytc::witness_to_json(wit).dump(2) << "\n";
        return 0;
    }
    std::cout << wit.value << "\n";
    std::cout << "witness:";
    for (const polytc::Face& f : wit.tuple) std::cout << " " << f.to_string();
    std::cout << "\n";
    return 0;
}

int run_zcl(const std::string& spec_path, int s, const std::string& out_path) {
    const Carrier spec = polytc::spec_from_json(polytc::load_json_file(spec_path));
    const polytc::NormWitness wit = polytc::tc_s(*spec, s);
    const polytc::Certificate cert = polytc::build_certificate(spec, s, wit.tuple);
    const std::string doc = polytc::certificate_to_json(cert).dump(2);
    std::cout << doc << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::domain_error("cannot write " + out_path);
        out << doc << "\n";
    }
    return 0;
}

int run_plan(const std::string& spec_path, int s, const std::string& config_path,
             std::uint64_t seed, const std::string& mode, double tol, int grid,
             const std::string& out_path) {
    const Carrier spec = polytc::spec_from_json(polytc::load_json_file(spec_path));
    std::optional<polytc::Configuration> config;
    if (!config_path.empty()) {
        config.emplace(
            polytc::configuration_from_json(spec, polytc::load_json_file(config_path), tol));
        if (config->stages() != s)
            throw std::domain_error("configuration has " + std::to_string(config->stages()) +
                                    " columns, expected " + std::to_string(s));
    } else {
        polytc::SubstreamRng rng(seed, 0);
        config.emplace(polytc::sample_configuration(
            spec, s, rng,
            mode == "degenerate" ? polytc::SampleMode::degenerate : polytc::SampleMode::generic,
            tol));
    }
    const polytc::PlanResult result = polytc::plan(*config, tol);
    nlohmann::json out;
    out["domain_index"] = result.domain_index;
    out["norm"] = result.stratum.norm();
    out["stratum"] = polytc::stratum_to_json(result.stratum);
    out["configuration"] = polytc::configuration_to_json(*config);
    std::cout << out.dump(2) << "\n";
    if (!out_path.empty()) {
        std::ofstream trace(out_path);
        if (!trace) throw std::domain_error("cannot write " + out_path);
        polytc::write_trace_csv(trace, result.paths, grid);
    }
    return 0;
}

int run_verify(const std::string& spec_path, int s, int trials, double tol,
               std::uint64_t seed) {
    const Carrier spec = polytc::spec_from_json(polytc::load_json_file(spec_path));
    const polytc::VerificationReport rep = polytc::verify_planner(spec, s, trials, tol, seed);
    std::cout << polytc::report_to_json(rep).dump(2) << "\n";
    return rep.passed() ? 0 : kExitVerification;
}

int run_examples() {
    const auto rows = polytc::reference_examples();
    bool all_pass = true;
    std::printf("%-72s %10s %10s %8s\n", "claim", "expected", "computed", "status");
    for (const auto& row : rows) {
        const bool ok = row.expected == row.computed;
        all_pass = all_pass && ok;
        std::printf("%-72s %10lld %10lld %8s\n", row.claim.c_str(), row.expected, row.computed,
                    ok ? "PASS" : "FAIL");
    }
    std::printf("%zu/%zu reproduced\n",
                static_cast<std::size_t>(std::count_if(
                    rows.begin(), rows.end(),
                    [](const auto& r) { return r.expected == r.computed; })),
                rows.size());
    return all_pass ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential topological complexity of polyhedral products of spheres"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string config_path;
    std::string out_path;
    std::string mode = "generic";
    bool as_json = false;
    int s = 2;
    int trials = 1000;
    int grid = 256;
    double tol = 1e-9;
    std::uint64_t seed = 0;

    auto* tc_cmd = app.add_subcommand("tc", "Exact sequential topological complexity");
    tc_cmd->add_option("--spec", spec_path, "Spec JSON file")->required();
    tc_cmd->add_option("--s", s, "Number of stages (>= 2)")->required()->check(CLI::Range(2, 16));
    tc_cmd->add_flag("--json", as_json, "Emit the witness document as JSON");

    auto* zcl_cmd =
        app.add_subcommand("zcl", "Zero-divisor cup-length certificate for the lower bound");
    zcl_cmd->add_option("--spec", spec_path, "Spec JSON file")->required();
    zcl_cmd->add_option("--s", s, "Number of stages (>= 2)")->required()->check(CLI::Range(2, 16));
    zcl_cmd->add_option("--out", out_path, "Also write the certificate JSON to this file");

    auto* plan_cmd = app.add_subcommand("plan", "Run the motion planner on one configuration");
    plan_cmd->add_option("--spec", spec_path, "Spec JSON file")->required();
    plan_cmd->add_option("--s", s, "Number of stages (>= 2)")->required()->check(CLI::Range(2, 16));
    plan_cmd->add_option("--config", config_path, "Configuration JSON file (else sampled)");
    plan_cmd->add_option("--seed", seed, "Sampling seed");
    plan_cmd->add_option("--mode", mode, "Sampling mode")
        ->check(CLI::IsMember({"generic", "degenerate"}));
    plan_cmd->add_option("--tol", tol, "Classification tolerance");
    plan_cmd->add_option("--grid", grid, "Trace sample count")->check(CLI::Range(1, 1000000));
    plan_cmd->add_option("--out", out_path, "Write the path trace CSV to this file");

    auto* verify_cmd = app.add_subcommand("verify", "Randomized planner verification");
    verify_cmd->add_option("--spec", spec_path, "Spec JSON file")->required();
    verify_cmd->add_option("--s", s, "Number of stages (>= 2)")
        ->required()
        ->check(CLI::Range(2, 16));
    verify_cmd->add_option("--trials", trials, "Sampled configurations")
        ->check(CLI::Range(0, 100000000));
    verify_cmd->add_option("--tol", tol, "Classification tolerance");
    verify_cmd->add_option("--seed", seed, "Base seed for the trial substreams");

    auto* examples_cmd =
        app.add_subcommand("examples", "Recompute the reference values and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (tc_cmd->parsed()) return run_tc(spec_path, s, as_json);
        if (zcl_cmd->parsed()) return run_zcl(spec_path, s, out_path);
        if (plan_cmd->parsed())
            return run_plan(spec_path, s, config_path, seed, mode, tol, grid, out_path);
        if (verify_cmd->parsed()) return run_verify(spec_path, s, trials, tol, seed);
        if (examples_cmd->parsed()) return run_examples();
    } catch (const polytc::AmbiguityError& e) {
        std::cerr << "ambiguity: " << e.what() << "\n";
        return kExitAmbiguity;
    } catch (const polytc::CertificateError& e) {
        std::cerr << "certificate error: " << e.what() << "\n";
        return kExitCertificate;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitValidation;
}

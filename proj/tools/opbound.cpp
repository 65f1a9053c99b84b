#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opbound/jobs.hpp"

namespace {

struct CommonFlags {
    std::string theorem;
    std::string gen;
    std::vector<std::string> inputs;
    std::uint64_t seed = 1;
    std::string re_spec;
    std::string im_spec;
    std::string z_spec;
    std::string p_spec;
    double k = 0.0;
    bool has_k = false;
    double tol = 1e-9;
    int trials = 100;
    std::string out;
    std::string format = "csv";
    bool no_timestamp = false;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool verifier) {
    if (verifier)
        cmd->add_option("--theorem", flags.theorem, "displayed inequality to check (e.g. 2.31, 2.56, 4.32)");
    cmd->add_option("--gen", flags.gen,
                    "generator spec class:dim[:omega][,class:dim[:omega]]; classes: "
                    "hermitian, posdef, indefinite, sectorial-normal, random");
    cmd->add_option("--in", flags.inputs, "input matrix file(s), Matrix Market or JSON");
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--re", flags.re_spec, "Re(z) grid lo:hi:count (or a single value)");
    cmd->add_option("--im", flags.im_spec, "Im(z) grid lo:hi:count (or a single value)");
    cmd->add_option("--z", flags.z_spec, "single strip point re[,im]");
    cmd->add_option("--p", flags.p_spec, "comma list of Schatten exponents, e.g. 1,2,inf");
    cmd->add_option("--k", flags.k, "damping parameter k > 0 (omit for optimized constants)")
        ->each([&flags](const std::string&) { flags.has_k = true; });
    cmd->add_option("--tol", flags.tol, "base relative tolerance for pass/fail");
    cmd->add_option("--trials", flags.trials, "instance count (fuzz) / probe count (3.11)");
    cmd->add_option("--out", flags.out, "output file (default stdout)");
    cmd->add_option("--format", flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--no-timestamp", flags.no_timestamp, "suppress the timestamp header line");
    cmd->add_option("--jobs", flags.jobs, "worker threads (env OPBOUND_JOBS overrides)");
}

int build_and_run(opbound::Command command, const CommonFlags& flags) {
    opbound::JobConfig cfg;
    cfg.command = command;
    cfg.theorem_id = flags.theorem;
    cfg.input_paths = flags.inputs;
    if (!flags.gen.empty())
        cfg.gens = opbound::parse_gen_specs(flags.gen);
    cfg.seed = flags.seed;
    cfg.zgrid = opbound::parse_z_grid(flags.re_spec, flags.im_spec);
    if (!flags.z_spec.empty()) {
        const auto comma = flags.z_spec.find(',');
        const double re = std::stod(flags.z_spec.substr(0, comma));
        const double im =
            comma == std::string::npos ? 0.0 : std::stod(flags.z_spec.substr(comma + 1));
        cfg.z_single = opbound::Complex(re, im);
    }
    if (!flags.p_spec.empty()) {
        std::string token;
        std::istringstream ss(flags.p_spec);
        while (std::getline(ss, token, ','))
            cfg.p_list.push_back(opbound::parse_exponent(token));
    }
    if (flags.has_k)
        cfg.k = flags.k;
    cfg.tol = flags.tol;
    cfg.trials = flags.trials;
    cfg.out_path = flags.out;
    cfg.format = flags.format == "json" ? opbound::OutputFormat::json : opbound::OutputFormat::csv;
    cfg.no_timestamp = flags.no_timestamp;
    cfg.jobs = flags.jobs;
    return opbound::run_job(cfg, std::cerr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator-bound verification suite: complex matrix powers, polar "
                 "decompositions, Schatten norms and strip-interpolation inequalities"};
    app.require_subcommand(1);

    CommonFlags powers_flags, sector_flags, check_flags, sweep_flags, fuzz_flags;

    CLI::App* powers = app.add_subcommand("powers", "compute T^z and write it out");
    add_common(powers, powers_flags, false);

    CLI::App* sector = app.add_subcommand("sector", "sectoriality profile and BIP constants");
    add_common(sector, sector_flags, false);

    CLI::App* check = app.add_subcommand("check", "verify one inequality instance");
    add_common(check, check_flags, true);

    CLI::App* sweep = app.add_subcommand("sweep", "verify over a (z, p) grid");
    add_common(sweep, sweep_flags, true);

    CLI::App* fuzz = app.add_subcommand("fuzz", "verify randomized instances");
    add_common(fuzz, fuzz_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (powers->parsed())
            return build_and_run(opbound::Command::powers, powers_flags);
        if (sector->parsed())
            return build_and_run(opbound::Command::sector, sector_flags);
        if (check->parsed())
            return build_and_run(opbound::Command::check, check_flags);
        if (sweep->parsed())
            return build_and_run(opbound::Command::sweep, sweep_flags);
        if (fuzz->parsed())
            return build_and_run(opbound::Command::fuzz, fuzz_flags);
    } catch (const std::exception& e) {
        std::cerr << "opbound: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

// Command-line front end.  Three subcommands share one config format:
//   run        advance a single case to its final time
//   converge   repeat a smooth case on a list of grids and report EOC
//   sweep-mach rerun the vortex-patch case at several Mach numbers
// "--set section.key=value" overrides any config entry from the command
// line.  Exit code 2 flags an invariant violation (inadmissible state or a
// fatal limiter diagnostic), so scripted runs can fail loudly.
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "activeflux/runner.hpp"

namespace {

using namespace activeflux;

void apply_overrides(ConfigFile& cfg, const std::vector<std::string>& sets) {
    for (const auto& kv : sets) {
        const auto pos = kv.find('=');
        if (pos == std::string::npos || pos == 0)
            throw std::runtime_error("--set expects key=value, got '" + kv +
                                     "'");
        cfg.set(kv.substr(0, pos), kv.substr(pos + 1));
    }
}

RunConfig load(const std::string& path, const std::vector<std::string>& sets) {
    ConfigFile cfg = ConfigFile::parse_file(path);
    apply_overrides(cfg, sets);
    return load_run_config(cfg);
}

void print_errors(const ErrorNorms& e) {
    static const char* avg_name[4] = {"rho", "mx", "my", "E"};
    static const char* edge_name[4] = {"rho", "u", "v", "p"};
    for (int k = 0; k < 4; ++k)
        std::printf("  avg  %-3s  L1 %.6e  Linf %.6e\n", avg_name[k],
                    e.avg_l1[k], e.avg_linf[k]);
    for (int k = 0; k < 4; ++k)
        std::printf("  edge %-3s  L1 %.6e  Linf %.6e\n", edge_name[k],
                    e.edge_l1[k], e.edge_linf[k]);
}

int report_run(const RunResult& r) {
    std::printf("steps=%ld  wall=%.2fs  dt_final t=%.10g\n", r.steps,
                r.wall_seconds, r.final_state.time);
    std::printf("point activations=%d (last at step %ld)  blended faces=%d  "
                "theta_min=%.6g\n",
                r.total_point_activations, r.last_activation_step,
                r.total_blended_faces, r.theta_min);
    std::printf("conservation drift per 100 steps=%.3e\n",
                r.drift_per_100_steps);
    if (r.errors) print_errors(*r.errors);
    if (r.fatal) std::printf("FATAL limiter diagnostic encountered\n");
    if (!r.admissible_throughout)
        std::printf("state left the admissible set\n");
    return (r.fatal || !r.admissible_throughout) ? 2 : 0;
}

std::vector<int> parse_grid_list(const std::string& text) {
    std::vector<int> grids;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        grids.push_back(std::stoi(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (grids.size() < 2)
        throw std::runtime_error("need at least two grid sizes");
    return grids;
}

std::vector<double> parse_mach_list(const std::string& text) {
    std::vector<double> machs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        machs.push_back(std::stod(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    if (machs.empty()) throw std::runtime_error("empty Mach list");
    return machs;
}

int cmd_run(const std::string& config, const std::vector<std::string>& sets) {
    const RunConfig cfg = load(config, sets);
    std::printf("case=%s  grid=%dx%d  t_final=%.10g\n", cfg.setup.name.c_str(),
                cfg.nx, cfg.ny, cfg.setup.t_final);
    const RunResult r = run_case(cfg);
    return report_run(r);
}

int cmd_converge(const std::string& config,
                 const std::vector<std::string>& sets,
                 const std::string& grid_list) {
    const RunConfig base = load(config, sets);
    const std::vector<int> grids = parse_grid_list(grid_list);
    std::printf("case=%s  grids=%s\n", base.setup.name.c_str(),
                grid_list.c_str());
    const ConvergenceReport rep = run_convergence(base, grids);
    std::printf("%6s %12s %14s %14s %8s\n", "n", "wall[s]", "rho avg L1",
                "rho avg Linf", "EOC");
    for (std::size_t k = 0; k < rep.rows.size(); ++k) {
        const ConvergenceRow& row = rep.rows[k];
        if (k == 0)
            std::printf("%6d %12.2f %14.6e %14.6e %8s\n", row.n, row.seconds,
                        row.err.avg_l1[0], row.err.avg_linf[0], "-");
        else
            std::printf("%6d %12.2f %14.6e %14.6e %8.3f\n", row.n,
                        row.seconds, row.err.avg_l1[0], row.err.avg_linf[0],
                        rep.density_eoc[k - 1]);
    }
    return 0;
}

int cmd_sweep(const std::string& config, const std::vector<std::string>& sets,
              const std::string& mach_list) {
    const RunConfig base = load(config, sets);
    const std::vector<double> machs = parse_mach_list(mach_list);
    const std::vector<MachRow> rows = sweep_mach(base, machs);
    std::printf("%10s %14s %14s %10s %8s %10s\n", "mach", "peak u(0)",
                "peak u(T)", "retained", "steps", "wall[s]");
    for (const MachRow& row : rows)
        std::printf("%10.3e %14.6e %14.6e %10.4f %8ld %10.2f\n", row.mach,
                    row.peak_speed_initial, row.peak_speed_final,
                    row.retained_fraction, row.steps, row.seconds);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active flux solver for the 2-D compressible Euler "
                 "equations"};
    app.require_subcommand(1);

    std::string config;
    std::vector<std::string> sets;
    std::string grid_list = "20,40,80";
    std::string mach_list = "1e-2,1e-3";

    CLI::App* run = app.add_subcommand("run", "advance one case");
    run->add_option("config", config, "config file")->required();
    run->add_option("--set", sets, "override: section.key=value");

    CLI::App* conv =
        app.add_subcommand("converge", "grid refinement study");
    conv->add_option("config", config, "config file")->required();
    conv->add_option("--set", sets, "override: section.key=value");
    conv->add_option("--grids", grid_list, "comma-separated grid sizes");

    CLI::App* sweep =
        app.add_subcommand("sweep-mach", "rerun at several Mach numbers");
    sweep->add_option("config", config, "config file")->required();
    sweep->add_option("--set", sets, "override: section.key=value");
    sweep->add_option("--machs", mach_list, "comma-separated Mach numbers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config, sets);
        if (conv->parsed()) return cmd_converge(config, sets, grid_list);
        return cmd_sweep(config, sets, mach_list);
    } catch (const std::exception& err) {
        std::fprintf(stderr, "error: %s\n", err.what());
        return 1;
    }
}

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conjsum/errors.hpp"
#include "conjsum/experiment_config.hpp"
#include "conjsum/matrix_lab.hpp"

namespace {

int cmd_run(const std::string& config_path, const std::string& output_override,
            bool quiet) {
    const conjsum::LabConfig config = conjsum::parse_config_file(config_path);
    const std::string out_dir = output_override.empty()
                                    ? conjsum::resolve_output_dir(config)
                                    : output_override;
    const conjsum::RunOutcome outcome = conjsum::run_lab(config, out_dir);
    for (const auto& msg : outcome.messages) {
        std::fprintf(stderr, "%s\n", msg.c_str());
    }
    if (!quiet) {
        std::printf("ran %zu experiment(s), %zu check group(s) -> %s\n",
                    config.experiments.size(), config.checks.size(),
                    out_dir.c_str());
        std::printf("assertion failures: %d, errors: %d\n",
                    outcome.assertion_failures, outcome.errors);
    }
    return (outcome.assertion_failures > 0 || outcome.errors > 0) ? 1 : 0;
}

int cmd_check(const std::string& matrix_name, double param, int r, double c,
              int n_min, int n_max) {
    const conjsum::SummabilityMatrix A =
        conjsum::make_matrix_by_name(matrix_name, param);
    const auto n_grid = conjsum::doubling_grid(n_min, n_max);
    struct Line {
        const char* name;
        conjsum::FitReport report;
    };
    const std::vector<Line> lines = {
        {"window-sums", conjsum::check_window_sums(A, n_grid, r)},
        {"mean-index", conjsum::check_mean_index(A, n_grid)},
        {"tail-comparison", conjsum::check_tail_comparison(A, n_grid, r, c)},
    };
    bool all_ok = true;
    std::printf("matrix %s, r=%d, c=%g, n in [%d, %d]\n", A.label().c_str(), r,
                c, n_min, n_max);
    for (const auto& line : lines) {
        std::printf("  %-16s %-4s constant=%s coarse=%s%s%s\n", line.name,
                    line.report.ok ? "ok" : "FAIL",
                    conjsum::format_number(line.report.constant).c_str(),
                    conjsum::format_number(line.report.coarse_constant).c_str(),
                    line.report.note.empty() ? "" : "  ",
                    line.report.note.c_str());
        all_ok = all_ok && line.report.ok;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"conjsum: matrix summability means of conjugate Fourier "
                 "series, empirical deviation bounds and side conditions"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_override;
    bool quiet = false;
    CLI::App* run = app.add_subcommand("run", "run a lab config");
    run->add_option("config", config_path, "JSON config file")->required();
    run->add_option("-o,--output", output_override,
                    "output directory (overrides config and environment)");
    run->add_flag("-q,--quiet", quiet, "suppress the summary line");

    std::string matrix_name;
    double param = 1.0;
    int r = 1;
    double c = 2.0;
    int n_min = 8;
    int n_max = 1024;
    CLI::App* check =
        app.add_subcommand("check", "evaluate matrix side conditions");
    check->add_option("matrix", matrix_name, "matrix family id")->required();
    check->add_option("--param", param, "family parameter");
    check->add_option("--r", r, "difference stride")->check(CLI::PositiveNumber);
    check->add_option("--c", c, "tail-comparison scale")
        ->check(CLI::PositiveNumber);
    check->add_option("--n-min", n_min, "smallest row index");
    check->add_option("--n-max", n_max, "largest row index");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, output_override, quiet);
        return cmd_check(matrix_name, param, r, c, n_min, n_max);
    } catch (const conjsum::ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

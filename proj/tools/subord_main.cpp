#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "subord/cli.hpp"

namespace {

void add_spec_flags(CLI::App* cmd, subord::RunConfig& cfg, bool with_order3) {
    cmd->add_option("--region", cfg.region, "target region (sine|cardioid|crescent|arcsinh)")
        ->required();
    cmd->add_option("--order", cfg.order, "condition order (2 or 3)")->default_val(2);
    cmd->add_option("--gamma1", cfg.gamma1, "weight of z p'")->required();
    cmd->add_option("--gamma2", cfg.gamma2, "weight of z^2 p''")->required();
    if (with_order3) {
        cmd->add_option("--gamma3", cfg.gamma3, "weight of z^3 p''' (order 3)");
        cmd->add_option("--m", cfg.m, "class parameter m >= 2 (order 3, default 2)");
        cmd->add_option("--k", cfg.k, "class parameter k >= m (order 3, default m)");
    }
}

void add_grid_flags(CLI::App* cmd, subord::RunConfig& cfg) {
    cmd->add_option("--r-max", cfg.grid.r_max, "outermost sampled radius")->default_val(0.999);
    cmd->add_option("--n-radial", cfg.grid.n_radial, "radial sample count")->default_val(256);
    cmd->add_option("--n-angular", cfg.grid.n_angular, "angular sample count")
        ->default_val(512);
    cmd->add_option("--tol", cfg.grid.tol, "verdict margin band")->default_val(1e-4);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for disk-to-region subordination conditions"};
    app.require_subcommand(1);
    subord::RunConfig cfg;

    CLI::App* radius = app.add_subcommand("radius", "enclosing and inscribed disk radii about 1");
    radius->add_option("--region", cfg.region, "region name (exp|sine|cardioid|crescent|arcsinh)")
        ->required();

    CLI::App* member = app.add_subcommand("member", "point-in-region test");
    member->add_option("--region", cfg.region, "region name")->required();
    member->add_option("--re", cfg.re, "real part of the point")->required();
    member->add_option("--im", cfg.im, "imaginary part of the point")->required();
    member->add_option("--tol", cfg.member_tol, "boundary band half-width")
        ->default_val(subord::kBoundaryTol);

    CLI::App* boundary = app.add_subcommand("boundary", "sample the region boundary curve");
    boundary->add_option("--region", cfg.region, "region name")->required();
    boundary->add_option("--samples", cfg.samples, "number of samples (>= 64)")
        ->default_val(256);
    boundary->add_option("--format", cfg.format, "csv (default) or json");

    CLI::App* check = app.add_subcommand("check", "evaluate the parameter conditions");
    add_spec_flags(check, cfg, true);

    CLI::App* minimize =
        app.add_subcommand("minimize", "minimum operator distance over admissible tuples");
    add_spec_flags(minimize, cfg, true);
    minimize->add_option("--theta-samples", cfg.theta_samples, "boundary angle samples");
    minimize->add_option("--tau-samples", cfg.tau_samples, "imaginary-part samples");
    minimize->add_option("--tau-max", cfg.tau_max, "imaginary-part range bound");

    CLI::App* experiment =
        app.add_subcommand("experiment", "randomized implication experiment");
    add_spec_flags(experiment, cfg, true);
    experiment->add_option("--trials", cfg.trials, "number of random trials")
        ->default_val(1000);
    experiment->add_option("--seed", cfg.seed, "RNG seed")->default_val(1);
    experiment->add_option("--rho", cfg.generator.rho, "coefficient decay rate")
        ->default_val(0.5);
    experiment->add_option("--degree", cfg.generator.degree, "generated series degree")
        ->default_val(8);
    experiment->add_option("--max-halvings", cfg.generator.max_halvings,
                           "tail halvings before giving up on a trial")
        ->default_val(20);
    experiment->add_flag("--falsify", cfg.falsify,
                         "run even when the parameter condition fails");
    experiment->add_option("--threads", cfg.threads, "worker threads (0 = auto)")
        ->default_val(0);
    add_grid_flags(experiment, cfg);

    CLI::App* explore = app.add_subcommand("explore", "condition truth table over a gamma grid");
    explore->add_option("--region", cfg.region, "target region")->required();
    explore->add_option("--order", cfg.order, "condition order (2 or 3)")->default_val(2);
    explore->add_option("--gamma1-min", cfg.g1_min)->default_val(10.0);
    explore->add_option("--gamma1-max", cfg.g1_max)->default_val(20.0);
    explore->add_option("--gamma1-samples", cfg.g1_samples)->default_val(41);
    explore->add_option("--gamma2-min", cfg.g2_min)->default_val(0.1);
    explore->add_option("--gamma2-max", cfg.g2_max)->default_val(2.1);
    explore->add_option("--gamma2-samples", cfg.g2_samples)->default_val(21);
    explore->add_option("--gamma3", cfg.gamma3, "third-order weight (order 3)");
    explore->add_option("--m", cfg.m, "class parameter m (order 3, default 2)");
    explore->add_option("--k", cfg.k, "class parameter k (order 3, default m)");
    explore->add_option("--format", cfg.format, "csv (default) or json");

    CLI::App* feasibility =
        app.add_subcommand("feasibility", "is the alternative condition satisfiable?");
    feasibility->add_option("--region", cfg.region, "target region")->required();
    feasibility->add_option("--order", cfg.order, "condition order (2 or 3)")->default_val(2);

    CLI::App* replay = app.add_subcommand("replay", "re-run a stored experiment report");
    replay->add_option("--in", cfg.input_path, "path to an experiment JSON document")
        ->required();
    replay->add_option("--threads", cfg.threads, "worker threads (0 = auto)")
        ->default_val(0);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    const subord::RunResult result = subord::run(cfg);
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}

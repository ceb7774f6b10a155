// Command-line front end: constants tables, profile exports, and the
// verification suites with machine-readable output.
#include <CLI11.hpp>

#include "hsm/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"numerical checks for sharp fractional Hardy constants on the half space"};
    app.require_subcommand(1);

    hsm::RunConfig cfg;
    cfg.s_grid = {0.5};

    auto add_shared = [&](CLI::App* sub) {
        sub->add_option("--s", cfg.s_grid, "fractional orders in (0,1)")
            ->delimiter(',');
        sub->add_option("--n", cfg.n, "ambient dimension");
        sub->add_option("--format", cfg.output_format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.output_path, "report file path");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--threads", cfg.threads, "worker threads");
        sub->add_flag("--quick", cfg.quick,
                      "halved quadrature levels and grids, doubled tolerances");
    };

    auto* c_constants = app.add_subcommand("constants", "closed-form constants table");
    add_shared(c_constants);
    auto* c_profile = app.add_subcommand("profile", "profile tables and checks");
    add_shared(c_profile);
    c_profile->add_option("--kind", cfg.profile_kind, "A|B|T")
        ->check(CLI::IsMember({"A", "B", "T"}));
    c_profile->add_option("--t-max", cfg.t_max, "table range");
    c_profile->add_option("--t-samples", cfg.t_samples, "table rows per s");
    auto* c_rayleigh = app.add_subcommand("rayleigh", "sequences, eigenvalue, HSM deficits");
    add_shared(c_rayleigh);
    auto* c_fracops = app.add_subcommand("fracops", "fractional operator checks");
    add_shared(c_fracops);
    auto* c_lemmas = app.add_subcommand("lemmas", "weighted Hardy lemma scan");
    add_shared(c_lemmas);
    auto* c_all = app.add_subcommand("verify-all", "every suite");
    add_shared(c_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    for (double s : cfg.s_grid)
        if (!(s > 0.0 && s < 1.0)) {
            std::fprintf(stderr, "--s values must lie strictly inside (0,1)\n");
            return 2;
        }
    cfg.command = app.get_subcommands().front()->get_name();
    return hsm::run(cfg);
}

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qks/cli.hpp"
#include "qks/errors.hpp"
#include "qks/json_io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"quiver Hall-Littlewood / Kostka-Shoji engine"};
    app.require_subcommand(1);

    std::string spec_path, lambda_text, method = "operator";
    int truncate = -1, trials = 0;
    unsigned long long seed = 0;
    bool collapse = false, json = false;

    auto add_common = [&](CLI::App* sub, bool needs_spec) {
        auto* opt = sub->add_option("--spec", spec_path, "quiver + current sequence JSON file");
        if (needs_spec) opt->required();
        sub->add_option("--lambda", lambda_text, "lambda tuple, e.g. [[6,3,3,1,1],[]]");
        sub->add_option("--method", method, "operator | kostant | catabolism");
        sub->add_option("--truncate", truncate, "truncate output arrow degree");
        sub->add_flag("--collapse-t", collapse, "substitute every arrow variable by t");
        sub->add_flag("--json", json, "JSON output");
        sub->add_option("--trials", trials, "number of randomized instances");
        sub->add_option("--seed", seed, "random seed");
        return sub;
    };

    auto* c_compute = add_common(app.add_subcommand("compute", "one coefficient"), true);
    auto* c_table = add_common(app.add_subcommand("table", "all coefficients"), true);
    auto* c_cat = add_common(app.add_subcommand("catabolism", "catabolizable enumeration"), true);
    auto* c_psi = add_common(app.add_subcommand("shuffle-psi", "pushforward class"), true);
    auto* c_cmp = add_common(app.add_subcommand("compare", "cross-check engines"), false);

    CLI11_PARSE(app, argc, argv);

    qks::JobSpec job;
    if (c_compute->parsed()) job.cmd = qks::JobSpec::Cmd::Compute;
    if (c_table->parsed()) job.cmd = qks::JobSpec::Cmd::Table;
    if (c_cat->parsed()) job.cmd = qks::JobSpec::Cmd::Catabolism;
    if (c_psi->parsed()) job.cmd = qks::JobSpec::Cmd::ShufflePsi;
    if (c_cmp->parsed()) job.cmd = qks::JobSpec::Cmd::Compare;
    job.method = method;
    job.truncate = truncate;
    job.collapse_t = collapse;
    job.json = json;
    job.trials = trials;
    job.seed = seed;

    try {
        if (!spec_path.empty()) {
            std::ifstream in(spec_path);
            if (!in) {
                std::cerr << "error: cannot open " << spec_path << "\n";
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            job.data = qks::CurrentData::build(qks::parse_spec(ss.str()));
        }
        if (!lambda_text.empty()) {
            if (!job.data) {
                std::cerr << "error: --lambda requires --spec\n";
                return 2;
            }
            job.lambda = qks::parse_lambda(lambda_text, job.data->nvertices());
        }
    } catch (const qks::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return qks::run(job, std::cout, std::cerr);
}

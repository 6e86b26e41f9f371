#include "coadj/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    using coadj::cli::RunConfig;
    RunConfig cfg;
    std::string out;
    std::optional<std::uint32_t> p;

    CLI::App app{"Coadjoint orbits of the unitriangular group UT(n, K)"};
    app.require_subcommand(1);
    app.add_option("--out", out, "Write the report to this file");
    app.add_option("--budget", cfg.budget, "State budget for orbit enumeration (default: COADJ_STATE_BUDGET or 2^26)");

    auto* diagrams = app.add_subcommand("diagrams", "List admissible diagrams");
    diagrams->add_option("--n", cfg.n)->required();
    diagrams->add_option("--format", cfg.format)->check(CLI::IsMember({"ascii", "json"}));
    diagrams->add_flag("--maximal-only", cfg.maximal_only, "Maximal diagrams in catalog order (the default)");
    diagrams->add_flag("--all", cfg.all_admissible, "Every admissible diagram, maximal ones labelled");

    auto* generators = app.add_subcommand("generators", "Defining-ideal generators of a maximal diagram");
    generators->add_option("--n", cfg.n);
    generators->add_option("--diagram", cfg.diagram)->required();
    generators->add_option("--c", cfg.c, "Values on S, comma separated (default: symbolic)");
    generators->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* census = app.add_subcommand("census", "Exhaustive orbit census over F_p");
    census->add_option("--n", cfg.n)->required();
    census->add_option("--p", p)->required();
    census->add_flag("--per-dimension", cfg.per_dimension);

    auto* classify = app.add_subcommand("classify", "Classify a linear form over F_p");
    classify->add_option("--n", cfg.n)->required();
    classify->add_option("--p", p)->required();
    classify->add_option("--form", cfg.form, "Entries \"i,j=v;...\"")->required();

    auto* canonical = app.add_subcommand("canonical", "Canonical form f_{S,c}");
    canonical->add_option("--diagram", cfg.diagram)->required();
    canonical->add_option("--c", cfg.c)->required();
    canonical->add_option("--p", p, "Reduce over F_p instead of Q");
    canonical->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", cfg.suite)
        ->required()
        ->check(CLI::IsMember({"polarizations", "ideals", "census", "strata", "subregular"}));
    verify->add_option("--n", cfg.n)->required();
    verify->add_option("--p", p);
    verify->add_option("--seed", cfg.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return coadj::cli::kUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.p = p;

    auto result = coadj::cli::run(cfg);
    if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
    if (out.empty()) {
        std::cout << result.output;
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out << "\n";
            return coadj::cli::kUsage;
        }
        file << result.output;
    }
    return result.status;
}

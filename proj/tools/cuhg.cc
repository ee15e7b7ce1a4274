#include <cuhg/cli.hh>

#include <CLI11.hpp>

#include <iostream>

namespace
{
    auto add_common(CLI::App * sub, cuhg::RunConfig & c) -> void
    {
        sub->add_option("-o,--out", c.out, "Report file (stdout if omitted)");
        sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--jobs", c.jobs, "Worker threads for scans")->check(CLI::PositiveNumber);
    }

    auto add_input(CLI::App * sub, cuhg::RunConfig & c) -> void
    {
        sub->add_option("-i,--in,--graph", c.in, "Graph or approximant file")->required();
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Colour-class ultrahomogeneous graph toolkit"};
    app.set_version_flag("--version", cuhg::tool_version);
    app.require_subcommand(1);
    cuhg::RunConfig c;
    std::uint64_t seed = 0;

    auto build = app.add_subcommand("build", "Build a finite approximant of a family");
    build->add_option("--spec", c.spec, "Family name or spec JSON file")->required();
    build->add_option("--level", c.level, "Extension level t")->check(CLI::Range(0, 8));
    build->add_option("--budget", c.budget, "Vertex budget")->check(CLI::NonNegativeNumber);
    auto seed_opt = build->add_option("--seed", seed, "Tie-breaking seed");
    add_common(build, c);

    auto classify = app.add_subcommand("classify", "Label a graph with its family");
    add_input(classify, c);
    classify->add_option("--spec", c.spec, "Class of the reduced graph (family name or file)");
    classify->add_option("--evidence", c.evidence, "Write the evidence JSON here");
    add_common(classify, c);

    auto omitted = app.add_subcommand("omitted", "Minimally omitted graphs up to a size bound");
    add_input(omitted, c);
    omitted->add_option("-k,--bound", c.bound, "Size bound");
    omitted->add_option("--universe", c.universe, "all, clique-union, red or blue");
    add_common(omitted, c);

    auto uh = app.add_subcommand("uh-check", "Exact ultrahomogeneity test (at most 12 vertices)");
    add_input(uh, c);
    add_common(uh, c);

    auto piecewise = app.add_subcommand("piecewise-check", "Piecewise ultrahomogeneity and the D/D~ criterion");
    add_input(piecewise, c);
    add_common(piecewise, c);

    auto add_amalgam = [&](CLI::App * sub) {
        sub->add_option("--spec", c.spec, "Family name or spec JSON file")->required();
        sub->add_option("-n,--max-size", c.max_size, "Largest |a1|, |a2|");
        add_common(sub, c);
    };
    auto amalgam_check = app.add_subcommand("amalgam-check", "Exhaustive amalgamation check");
    add_amalgam(amalgam_check);
    auto amalgam = app.add_subcommand("amalgam", "Amalgamation tools");
    amalgam->require_subcommand(1);
    auto amalgam_sub = amalgam->add_subcommand("check", "Exhaustive amalgamation check");
    add_amalgam(amalgam_sub);

    auto catalog = app.add_subcommand("catalog", "The named small patterns");
    add_common(catalog, c);

    CLI11_PARSE(app, argc, argv);

    for (auto * sub : {build, classify, omitted, uh, piecewise, amalgam_check, catalog})
        if (sub->parsed())
            c.command = sub->get_name();
    if (amalgam->parsed())
        c.command = "amalgam-check";
    if (seed_opt->count() > 0)
        c.seed = seed;

    return cuhg::run(c, std::cout, std::cerr);
}

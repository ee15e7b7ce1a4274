#pragma once

#include <cuhg/colored_graph.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cuhg
{
    /// Which candidate graphs the enumeration ranges over.
    enum class Universe
    {
        all,
        clique_union,
        red_only,
        blue_only
    };

    auto universe_name(Universe u) -> std::string;
    auto parse_universe(const std::string & s) -> std::optional<Universe>;

    struct OmittedMember
    {
        ColoredGraph graph;
        /// Catalog name when the member is a named pattern, else its text form.
        std::string name;
        /// witnesses[x] embeds graph minus vertex x into the host; vertex i of
        /// the deleted graph is vertex i (i < x) or i + 1 (i >= x) of graph.
        std::vector<std::vector<int>> witnesses;
    };

    struct OmittedSet
    {
        int bound = 0;
        Universe universe = Universe::all;
        std::vector<OmittedMember> members;

        auto contains(const ColoredGraph & h) const -> bool;
        auto names() const -> std::vector<std::string>;
    };

    /// Catalog-style name for small graphs ("D", "Tr~", "P3_red", "K:blue:3",
    /// "Kbar:red:2"), or nullopt.
    auto pattern_name_of(const ColoredGraph & h) -> std::optional<std::string>;

    /// Minimally omitted graphs of g with at most k vertices, up to isomorphism.
    auto minimally_omitted(const ColoredGraph & g, int k, Universe universe = Universe::all) -> OmittedSet;

    struct StructureReport
    {
        bool pass = true;
        std::vector<std::string> violations;
    };

    /// Members with name, text form and witnesses.
    auto to_json(const OmittedSet & o) -> nlohmann::json;

    /// For every member that has both colours, each colour class must be a
    /// clique of at least three twins, a K2, or an independent set.
    auto check_omitted_structure(const OmittedSet & o) -> StructureReport;

    /// True iff o_gt is the image of o_g under cross complementation.
    auto tilde_consistency(const OmittedSet & o_g, const OmittedSet & o_gt) -> bool;
}

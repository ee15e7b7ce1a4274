#pragma once

#include <cuhg/colored_graph.hh>
#include <cuhg/patterns.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cuhg
{
    /// A hereditary class inside the clique-union baseline: monochromatic P3s
    /// are always forbidden, plus the listed induced patterns and the per-colour
    /// caps on clique size and number of cliques.
    ///
    /// Forbidding K(c, n) is stored as a size cap of n - 1 and forbidding
    /// Kbar(c, n) as a count cap of n - 1; all_forbidden() regenerates both.
    struct ClassSpec
    {
        std::vector<Pattern> forbidden;
        CliqueBound max_clique_size[2];
        CliqueBound max_clique_count[2];
        std::optional<std::string> name;

        auto size_cap(Color c) const -> CliqueBound { return max_clique_size[index(c)]; }
        auto count_cap(Color c) const -> CliqueBound { return max_clique_count[index(c)]; }

        auto forbid(const Pattern & p) -> ClassSpec &;
        auto forbid(const std::string & name) -> ClassSpec & { return forbid(named_pattern(name)); }
        auto cap_size(Color c, CliqueBound b) -> ClassSpec &;
        auto cap_count(Color c, CliqueBound b) -> ClassSpec &;
        auto named(std::string n) -> ClassSpec &
        {
            name = std::move(n);
            return *this;
        }

        /// Listed patterns, both P3s, and the K / Kbar patterns equivalent to the caps.
        auto all_forbidden() const -> std::vector<Pattern>;

        /// Same class with the colours interchanged.
        auto swapped() const -> ClassSpec;
    };

    auto member(const ClassSpec & spec, const ColoredGraph & g) -> bool;

    /// Equal caps and the same forbidden patterns up to isomorphism; names are ignored.
    auto same_constraints(const ClassSpec & a, const ClassSpec & b) -> bool;

    auto to_json(const ClassSpec & spec) -> nlohmann::json;
    auto spec_from_json(const nlohmann::json & j) -> ClassSpec;

    // Named classes. The k variants cap the number of red cliques at k.
    auto spec_baseline() -> ClassSpec;
    auto spec_f21() -> ClassSpec;
    auto spec_f22() -> ClassSpec;
    auto spec_f_inf_1(std::optional<int> k = std::nullopt) -> ClassSpec;
    auto spec_f_inf_2(std::optional<int> k = std::nullopt) -> ClassSpec;
    auto spec_f_inf_inf() -> ClassSpec;
    auto spec_A(CliqueBound r, CliqueBound b) -> ClassSpec;

    // Bipartite classes (both colour classes independent).
    auto spec_generic_bipartite() -> ClassSpec;
    auto spec_matching() -> ClassSpec;
    auto spec_comatching() -> ClassSpec;
    auto spec_homogeneously_connected(bool complete) -> ClassSpec;

    /// Monochromatic red class with at most s cliques of size at most t.
    auto spec_red_clique_union(CliqueBound s, CliqueBound t) -> ClassSpec;

    /// Resolves the names produced by the factories above, e.g. "F22",
    /// "F(inf,1,3)", "G(2,inf)", "Matching". Throws InputError.
    auto spec_by_name(const std::string & name) -> ClassSpec;
}

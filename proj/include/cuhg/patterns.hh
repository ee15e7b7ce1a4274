#pragma once

#include <cuhg/colored_graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cuhg
{
    struct Pattern
    {
        /// Instance name, e.g. "Tr~", "D", "K:red:3".
        std::string name;
        /// One of Tr, Tr~, Tb, Tb~, Qr, Qb, D, D~, P3_red, P3_blue, K, Kbar.
        std::string family;
        ColoredGraph graph;
    };

    // Vertex order follows the figure labels: r1, r2, ... then b1, b2, ...
    auto pattern_Tr() -> ColoredGraph;
    auto pattern_Tr_tilde() -> ColoredGraph;
    auto pattern_Tb() -> ColoredGraph;
    auto pattern_Tb_tilde() -> ColoredGraph;
    auto pattern_Qr() -> ColoredGraph;
    auto pattern_Qb() -> ColoredGraph;
    auto pattern_D() -> ColoredGraph;
    auto pattern_D_tilde() -> ColoredGraph;
    auto pattern_P3(Color c) -> ColoredGraph;
    auto pattern_K(Color c, int n) -> ColoredGraph;
    auto pattern_Kbar(Color c, int n) -> ColoredGraph;

    /// The twelve named families; K and Kbar appear as their red n = 3 instances.
    auto catalog() -> std::vector<Pattern>;

    /// Resolves "Tr", "Tr~", ..., "P3_red", "K:red:3", "Kbar:blue:2".
    /// Throws InputError for unknown names. n is limited to 8.
    auto named_pattern(std::string_view name) -> Pattern;

    /// Name of the tilde partner for the four tilde pairs, if any.
    auto tilde_partner(std::string_view name) -> std::optional<std::string>;

    /// An embedding of h into g as an induced subgraph, if any.
    auto contains_induced(const ColoredGraph & g, const ColoredGraph & h) -> std::optional<PartialMap>;

    /// As contains_induced, but vertices already mapped by seed stay fixed and
    /// the remaining vertices of h may only use vertices of g in allowed.
    auto contains_induced_seeded(const ColoredGraph & g, const ColoredGraph & h, const PartialMap & seed,
        const Bitset & allowed) -> std::optional<PartialMap>;
}

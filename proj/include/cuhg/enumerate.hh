#pragma once

#include <cuhg/colored_graph.hh>
#include <cuhg/isomorphism.hh>

#include <functional>
#include <vector>

namespace cuhg
{
    using GraphFilter = std::function<bool(const ColoredGraph &)>;

    /// All graphs with up to max_n vertices, one per isomorphism class, that
    /// pass keep. keep must be hereditary (closed under induced subgraphs).
    /// Result[m] holds the m-vertex graphs in canonical code order.
    auto enumerate_graphs(int max_n, const GraphFilter & keep, bool allow_red = true, bool allow_blue = true)
        -> std::vector<std::vector<ColoredGraph>>;

    /// Graphs a with |j| < |a| <= max_n whose first |j| vertices induce j
    /// (so the identity is an embedding), one per isomorphism class fixing j
    /// pointwise, that pass the hereditary filter keep. Ordered by size, then
    /// by canonical code.
    auto marked_extensions(const ColoredGraph & j, int max_n, const GraphFilter & keep) -> std::vector<ColoredGraph>;

    /// Canonical code of a graph whose first marked vertices are individually fixed.
    auto marked_code(const ColoredGraph & a, int marked) -> std::vector<std::uint64_t>;
}

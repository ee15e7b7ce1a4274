#pragma once

#include <cuhg/colored_graph.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cuhg
{
    /// Canonical code plus the labelling that produced it: labeling[v] is the
    /// canonical position of vertex v.
    struct CanonicalForm
    {
        std::vector<std::uint64_t> code;
        std::vector<int> labeling;
    };

    struct CodeHash
    {
        auto operator()(const std::vector<std::uint64_t> & code) const -> std::size_t;
    };

    /// Canonical form with colours as the initial partition (red cell first).
    auto canonical_form(const ColoredGraph & g) -> CanonicalForm;

    /// Canonical form relative to an ordered initial partition. Cells must be
    /// colour-homogeneous and cover every vertex exactly once. Two graphs get
    /// equal codes iff some isomorphism maps the i-th cell of one onto the i-th
    /// cell of the other for every i.
    auto canonical_form(const ColoredGraph & g, const std::vector<std::vector<int>> & cells) -> CanonicalForm;

    /// Rebuilds the canonical representative from a code.
    auto graph_from_code(const std::vector<std::uint64_t> & code) -> ColoredGraph;

    enum class IsoMethod
    {
        refinement,
        exhaustive
    };

    /// A colour and adjacency preserving bijection g -> h, if one exists.
    auto is_isomorphic(const ColoredGraph & g, const ColoredGraph & h, IsoMethod method = IsoMethod::refinement)
        -> std::optional<PartialMap>;

    /// Some automorphism of g agreeing with the partial map, if any.
    auto extend_to_automorphism(const ColoredGraph & g, const PartialMap & partial) -> std::optional<PartialMap>;
}

#pragma once

#include <cuhg/colored_graph.hh>

#include <string>
#include <vector>

namespace cuhg
{
    inline constexpr int max_exact_uh_order = 12;

    /// Every isomorphism between induced subgraphs extends to an automorphism.
    /// Throws PreconditionError above max_exact_uh_order vertices.
    auto is_ultrahomogeneous_finite(const ColoredGraph & g) -> bool;

    /// One-step back-and-forth: whenever two tuples of at most k vertices have
    /// the same atomic type, they admit the same one-point extension types.
    /// k is limited to 5.
    auto k_homogeneity(const ColoredGraph & g, int k) -> bool;

    struct PieceVerdict
    {
        int red_clique = 0, blue_clique = 0;
        int order = 0;
        bool homogeneous = false;
        /// exact, homogeneously-connected, matching, co-matching, generic, or none
        std::string kind;
    };

    struct PiecewiseReport
    {
        bool holds = true;
        std::vector<PieceVerdict> pieces;
    };

    /// Tests every piece G[M_R u M_B]: exactly up to max_exact_uh_order vertices,
    /// otherwise by the shape of its cross edges, accepting generic pieces
    /// whose witness depth reaches witness_depth.
    auto piecewise_report(const ColoredGraph & g, int witness_depth = 2) -> PiecewiseReport;
    auto piecewise_check(const ColoredGraph & g, int witness_depth = 2) -> bool;

    /// Empty when theorem_a_predicate applies to g, else the reason it does
    /// not: not clique unions, a blow-up, a colour with a single clique, both
    /// colours independent, or the F22 shape (both clique sizes at most two
    /// and no triangle pattern realized).
    auto theorem_a_precondition(const ColoredGraph & g) -> std::string;

    /// contains D and contains Dtilde. Throws PreconditionError when
    /// theorem_a_precondition fails.
    auto theorem_a_predicate(const ColoredGraph & g) -> bool;
}

#pragma once

#include <cuhg/class_spec.hh>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cuhg
{
    inline constexpr std::uint64_t default_build_seed = 0x5eedf00dULL;

    /// Finite stand-in for a Fraisse limit: graph is in spec and every
    /// one-point in-class extension over every subset of fewer than level
    /// vertices is realized.
    struct Approximant
    {
        ColoredGraph graph;
        ClassSpec spec;
        int level = 0;
        int target_level = 0;
        int budget = 0;
        std::uint64_t seed = default_build_seed;
        bool budget_exhausted = false;
        std::vector<std::string> log;
    };

    struct BuildOptions
    {
        int level = 4;
        int budget = 200;
        std::uint64_t seed = default_build_seed;
        /// Search nodes allowed per vertex placement.
        long node_limit = 200000;
    };

    /// Adds vertices realizing missing extension types, smallest subsets first,
    /// until the level-t property holds or the graph reaches budget vertices.
    auto extension_closure(const ClassSpec & spec, const ColoredGraph & g, int t, int budget,
        std::uint64_t seed = default_build_seed) -> Approximant;
    auto extension_closure(const ClassSpec & spec, const ColoredGraph & g, const BuildOptions & opts) -> Approximant;

    /// Seven red and seven blue cliques of eight vertices, each vertex
    /// labelled by x in F_2^3. Red x in R_i and blue y in B_j are adjacent iff
    /// <j, x> + [sigma(j) = i] = <i, y>, reading clique indices 1..7 as non-zero
    /// vectors and sigma as a permutation sending no Fano line onto a line.
    /// Each piece splits both cliques into halves joined crosswise, so D and
    /// Dtilde never occur.
    auto parity_design() -> ColoredGraph;

    /// Start graph used by build_family: the parity design for the class
    /// omitting exactly D and Dtilde, where growth from the empty graph does
    /// not saturate within the default budget; otherwise the empty graph.
    auto start_graph(const ClassSpec & spec) -> ColoredGraph;

    auto build_family(const ClassSpec & spec, const BuildOptions & opts) -> Approximant;

    auto build_generic_bipartite(int t, int budget) -> Approximant;
    auto build_G_rb(CliqueBound r, CliqueBound b, int t, int budget) -> Approximant;

    /// Independent exhaustive re-check of the level-t property of a.graph in a.spec.
    auto verify_extension_property(const Approximant & a, int t) -> bool;

    /// Largest t' <= t_max for which the property holds (via the builder's scanner).
    auto extension_level(const ClassSpec & spec, const ColoredGraph & g, int t_max) -> int;

    auto to_json(const Approximant & a) -> nlohmann::json;
    /// Accepts a full approximant object; throws InputError.
    auto approximant_from_json(const nlohmann::json & j) -> Approximant;

    // Witness scans on finished graphs.

    /// Largest m <= max_depth such that for every disjoint S, T inside one of
    /// the two sides with |S| + |T| <= m, the other side has a vertex adjacent
    /// to all of S and none of T.
    auto bipartite_witness_depth(const ColoredGraph & g, const Bitset & side_a, const Bitset & side_b, int max_depth)
        -> int;

    /// Every maximal clique C and disjoint S, T of the other colour with
    /// |S| + |T| <= depth: some v in C is adjacent to all of S and none of T.
    auto clique_genericity_scan(const ColoredGraph & g, int depth) -> bool;

    /// For every subset C of a maximal clique with |C| <= depth, every S of C
    /// and every maximal clique M of the other colour, some v in M has
    /// N(v) restricted to C equal to S.
    auto neighbours_every_clique_scan(const ColoredGraph & g, int depth) -> bool;

    /// For every set U of one colour with |U| <= depth and every maximal
    /// clique M of the other colour, some v in M is adjacent to all of U.
    auto joint_neighbour_scan(const ColoredGraph & g, int depth) -> bool;

    /// Number of (vertex, clique) pairs where a vertex of the other colour
    /// does not have exactly one neighbour in a maximal 2-clique of colour c.
    auto partition_lemma_violations(const ColoredGraph & g, Color c) -> int;
}

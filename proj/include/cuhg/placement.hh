#pragma once

#include <cuhg/class_spec.hh>

#include <functional>
#include <utility>
#include <vector>

namespace cuhg
{
    /// A growing in-class graph plus its clique structure, supporting one-vertex
    /// placements with undo. Used by the generic amalgam search and the limit builder.
    class PlacementState
    {
        public:
            PlacementState(const ClassSpec & spec, ColoredGraph g);

            auto graph() const -> const ColoredGraph & { return _g; }
            auto spec() const -> const ClassSpec & { return _spec; }
            auto clique_of(int v) const -> int { return _clique_of[v]; }
            auto clique_members(int k) const -> const std::vector<int> & { return _cliques[k].members; }
            auto clique_color(int k) const -> Color { return _cliques[k].color; }
            auto clique_count() const -> int { return int(_cliques.size()); }
            auto live_cliques(Color c) const -> int { return _live[index(c)]; }

            /// Search nodes visited so far; placement gives up once the limit is passed.
            long nodes = 0;
            long node_limit = -1;
            bool limit_hit = false;

            struct Request
            {
                Color color;
                /// Prescribed adjacency of the new vertex to existing vertices.
                std::vector<std::pair<int, bool>> forced;
                /// Preferred clique choices in order: clique ids, or -1 for a new
                /// clique. Empty means every admissible choice in id order, new last.
                std::vector<int> clique_order;
                bool restrict_to_clique_order = false;
                /// Per existing vertex: -1 no preference, 0 or 1 preferred adjacency.
                std::vector<signed char> preference;
            };

            /// Enumerates admissible placements of a new vertex. For each, calls
            /// next(); if next() returns true the vertex is kept and true is
            /// returned. Otherwise every trial is undone and false returned.
            auto place(const Request & req, const std::function<bool()> & next) -> bool;

            /// Removes the most recently placed vertex (only valid after a
            /// successful place() whose effects the caller wants reverted).
            auto undo_last() -> void;

        private:
            struct Clique
            {
                Color color;
                std::vector<int> members;
            };

            struct Check
            {
                ColoredGraph pattern;
                // pattern vertex pairs (p, q) grouped by colour of p, colour of q, adjacency
                std::vector<std::pair<int, int>> pairs[2][2][2];
                std::vector<int> by_color[2];
            };

            auto violation_through(int v, const Bitset & decided) const -> bool;
            auto violation_through(int v, int w, const Bitset & decided) const -> bool;
            auto add_to_clique(int v, int k) -> void;
            auto remove_last() -> void;
            auto cross_search(int v, std::vector<int> & free, std::size_t pos, Bitset & decided,
                const std::vector<signed char> & pref, const std::function<bool()> & next) -> bool;

            const ClassSpec & _spec;
            ColoredGraph _g;
            std::vector<int> _clique_of;
            std::vector<Clique> _cliques;
            std::vector<int> _created;  // clique created by vertex i, or -1
            int _live[2] = {0, 0};
            std::vector<Check> _checks;
    };
}

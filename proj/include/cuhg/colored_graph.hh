#pragma once

#include <cuhg/bitset.hh>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cuhg
{
    enum class Color : std::uint8_t
    {
        red = 0,
        blue = 1
    };

    inline constexpr Color all_colors[2] = {Color::red, Color::blue};

    constexpr auto complement_color(Color c) -> Color
    {
        return c == Color::red ? Color::blue : Color::red;
    }

    constexpr auto index(Color c) -> int { return static_cast<int>(c); }

    auto color_name(Color c) -> std::string_view;

    /// Accepts "red"/"r" and "blue"/"b".
    auto parse_color(std::string_view s) -> std::optional<Color>;

    /// A natural number or Unbounded, which compares above every natural.
    class CliqueBound
    {
        public:
            constexpr CliqueBound() = default;

            static constexpr auto unbounded() -> CliqueBound { return CliqueBound{}; }
            static constexpr auto of(unsigned n) -> CliqueBound
            {
                CliqueBound b;
                b._unbounded = false;
                b._value = n;
                return b;
            }

            constexpr auto is_unbounded() const -> bool { return _unbounded; }
            constexpr auto value() const -> unsigned { return _value; }

            constexpr auto successor() const -> CliqueBound { return _unbounded ? *this : of(_value + 1); }

            /// True iff n <= this bound.
            constexpr auto admits(unsigned n) const -> bool { return _unbounded || n <= _value; }

            friend constexpr auto operator<=>(const CliqueBound & a, const CliqueBound & b) -> std::strong_ordering
            {
                if (a._unbounded || b._unbounded)
                    return int(a._unbounded) <=> int(b._unbounded);
                return a._value <=> b._value;
            }

            friend constexpr auto operator==(const CliqueBound & a, const CliqueBound & b) -> bool
            {
                return (a <=> b) == 0;
            }

            /// "inf" or the decimal value.
            auto to_string() const -> std::string;
            static auto parse(std::string_view s) -> std::optional<CliqueBound>;

        private:
            bool _unbounded = true;
            unsigned _value = 0;
    };

    /// Finite simple graph on vertices 0..n-1 with a red/blue vertex colouring.
    class ColoredGraph
    {
        public:
            ColoredGraph() = default;
            explicit ColoredGraph(const std::vector<Color> & colors);

            auto size() const -> int { return int(_colors.size()); }
            auto color(int v) const -> Color { return _colors[v]; }
            auto colors() const -> const std::vector<Color> & { return _colors; }
            auto adjacent(int u, int v) const -> bool { return _adj[u].test(v); }
            auto neighbours(int v) const -> const Bitset & { return _adj[v]; }
            auto class_mask(Color c) const -> const Bitset & { return _class[index(c)]; }
            auto count(Color c) const -> int { return int(_class[index(c)].count()); }

            auto add_vertex(Color c) -> int;
            auto remove_last_vertex() -> void;

            /// Throws PreconditionError on a loop or out-of-range id.
            auto set_edge(int u, int v, bool present = true) -> void;

            /// Sorted (u < v) edge list.
            auto edges() const -> std::vector<std::pair<int, int>>;
            auto edge_count() const -> int;

            friend auto operator==(const ColoredGraph & a, const ColoredGraph & b) -> bool
            {
                return a._colors == b._colors && a._adj == b._adj;
            }

        private:
            std::vector<Color> _colors;
            std::vector<Bitset> _adj;
            Bitset _class[2];
    };

    /// Partial map from the vertices of a source graph to those of a target
    /// graph. image[v] == -1 means v is outside the domain.
    struct PartialMap
    {
        std::vector<int> image;

        static auto identity(int n) -> PartialMap;
        static auto empty(int n) -> PartialMap { return PartialMap{std::vector<int>(n, -1)}; }

        auto defined(int v) const -> bool { return image[v] >= 0; }
        auto domain_size() const -> int;
        auto is_total() const -> bool { return domain_size() == int(image.size()); }
        auto inverse(int target_size) const -> PartialMap;

        /// (this after first): v -> this(first(v)).
        auto compose_after(const PartialMap & first) const -> PartialMap;

        friend auto operator==(const PartialMap &, const PartialMap &) -> bool = default;
    };

    /// Injective, colour preserving, and preserving adjacency and non-adjacency on its domain.
    auto is_partial_isomorphism(const ColoredGraph & g, const ColoredGraph & h, const PartialMap & m) -> bool;

    /// A total partial isomorphism, i.e. an embedding of g into h as an induced subgraph.
    auto is_induced_embedding(const ColoredGraph & g, const ColoredGraph & h, const PartialMap & m) -> bool;

    struct ColorClassProfile
    {
        int omega_red = 0, omega_blue = 0;
        int alpha_red = 0, alpha_blue = 0;
        std::vector<std::vector<int>> red_cliques, blue_cliques;
        bool homogeneously_connected = true;
        bool p3_free_red = true, p3_free_blue = true;

        auto omega(Color c) const -> int { return c == Color::red ? omega_red : omega_blue; }
        auto alpha(Color c) const -> int { return c == Color::red ? alpha_red : alpha_blue; }
        auto p3_free(Color c) const -> bool { return c == Color::red ? p3_free_red : p3_free_blue; }
        auto cliques(Color c) const -> const std::vector<std::vector<int>> &
        {
            return c == Color::red ? red_cliques : blue_cliques;
        }
    };

    /// Vertices in s are renumbered 0..|s|-1 in increasing id order.
    auto induced_subgraph(const ColoredGraph & g, const std::vector<int> & s) -> ColoredGraph;
    auto induced_subgraph(const ColoredGraph & g, const Bitset & s) -> ColoredGraph;

    auto cross_complement(const ColoredGraph & g) -> ColoredGraph;
    auto class_complement(const ColoredGraph & g, Color c) -> ColoredGraph;
    auto swap_colors(const ColoredGraph & g) -> ColoredGraph;

    /// Vertex v of g becomes vertex perm[v] of the result.
    auto relabel(const ColoredGraph & g, const std::vector<int> & perm) -> ColoredGraph;

    /// Replaces every vertex of colour c by an i-clique of twins. Class c must be
    /// a disjoint union of cliques; when it is independent this is the usual
    /// blow-up, otherwise the lexicographic product of that class with K_i.
    auto blow_up(const ColoredGraph & h, Color c, int i) -> ColoredGraph;

    struct BlowUp
    {
        ColoredGraph base;
        Color color;
        int factor;
    };

    /// Collapses uniform true-twin classes of size >= 2 in one colour, trying
    /// red first. Throws PreconditionError unless both classes are clique unions.
    auto detect_blow_up(const ColoredGraph & g) -> std::optional<BlowUp>;

    /// Maximal cliques of class c when it is a disjoint union of cliques,
    /// ordered by smallest member.
    auto clique_partition(const ColoredGraph & g, Color c) -> std::optional<std::vector<std::vector<int>>>;

    auto class_profile(const ColoredGraph & g) -> ColorClassProfile;

    auto disjoint_union(const ColoredGraph & g, const ColoredGraph & h) -> ColoredGraph;
    auto join(const ColoredGraph & g, const ColoredGraph & h) -> ColoredGraph;

    /// Complete graph (n vertices) and edgeless graph in one colour.
    auto complete_graph(Color c, int n) -> ColoredGraph;
    auto edgeless_graph(Color c, int n) -> ColoredGraph;
}

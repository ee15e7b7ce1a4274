#include <cuhg/colored_graph.hh>
#include <cuhg/errors.hh>

#include <algorithm>
#include <charconv>
#include <map>

using std::optional;
using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace cuhg
{
    auto color_name(Color c) -> string_view
    {
        return c == Color::red ? "red" : "blue";
    }

    auto parse_color(string_view s) -> optional<Color>
    {
        if (s == "red" || s == "r")
            return Color::red;
        if (s == "blue" || s == "b")
            return Color::blue;
        return std::nullopt;
    }

    auto CliqueBound::to_string() const -> string
    {
        return _unbounded ? string{"inf"} : std::to_string(_value);
    }

    auto CliqueBound::parse(string_view s) -> optional<CliqueBound>
    {
        if (s == "inf" || s == "unbounded")
            return unbounded();
        unsigned v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size())
            return std::nullopt;
        return of(v);
    }

    ColoredGraph::ColoredGraph(const vector<Color> & colors) :
        _colors(colors),
        _adj(colors.size(), Bitset(colors.size()))
    {
        for (auto c : all_colors)
            _class[index(c)] = Bitset(colors.size());
        for (std::size_t v = 0; v < colors.size(); ++v)
            _class[index(colors[v])].set(v);
    }

    auto ColoredGraph::add_vertex(Color c) -> int
    {
        int v = size();
        _colors.push_back(c);
        for (auto & a : _adj)
            a.resize(v + 1);
        _adj.emplace_back(v + 1);
        for (auto & m : _class)
            m.resize(v + 1);
        _class[index(c)].set(v);
        return v;
    }

    auto ColoredGraph::remove_last_vertex() -> void
    {
        int v = size() - 1;
        if (v < 0)
            throw PreconditionError("remove_last_vertex on empty graph");
        _colors.pop_back();
        _adj.pop_back();
        for (auto & a : _adj)
            a.resize(v);
        for (auto & m : _class)
            m.resize(v);
    }

    auto ColoredGraph::set_edge(int u, int v, bool present) -> void
    {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw PreconditionError("edge endpoint out of range");
        if (u == v)
            throw PreconditionError("loops are not allowed");
        _adj[u].set(v, present);
        _adj[v].set(u, present);
    }

    auto ColoredGraph::edges() const -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (int u = 0; u < size(); ++u)
            for (auto v = _adj[u].next(u); v < _adj[u].size(); v = _adj[u].next(v))
                result.emplace_back(u, int(v));
        return result;
    }

    auto ColoredGraph::edge_count() const -> int
    {
        std::size_t twice = 0;
        for (auto & a : _adj)
            twice += a.count();
        return int(twice / 2);
    }

    auto PartialMap::identity(int n) -> PartialMap
    {
        PartialMap m{vector<int>(n)};
        for (int i = 0; i < n; ++i)
            m.image[i] = i;
        return m;
    }

    auto PartialMap::domain_size() const -> int
    {
        return int(std::count_if(image.begin(), image.end(), [](int x) { return x >= 0; }));
    }

    auto PartialMap::inverse(int target_size) const -> PartialMap
    {
        auto result = empty(target_size);
        for (int v = 0; v < int(image.size()); ++v)
            if (image[v] >= 0)
                result.image[image[v]] = v;
        return result;
    }

    auto PartialMap::compose_after(const PartialMap & first) const -> PartialMap
    {
        auto result = empty(int(first.image.size()));
        for (int v = 0; v < int(first.image.size()); ++v)
            if (first.image[v] >= 0)
                result.image[v] = image[first.image[v]];
        return result;
    }

    auto is_partial_isomorphism(const ColoredGraph & g, const ColoredGraph & h, const PartialMap & m) -> bool
    {
        if (int(m.image.size()) != g.size())
            return false;
        vector<char> used(h.size(), 0);
        vector<int> dom;
        for (int v = 0; v < g.size(); ++v) {
            int x = m.image[v];
            if (x < 0)
                continue;
            if (x >= h.size() || used[x] || g.color(v) != h.color(x))
                return false;
            used[x] = 1;
            dom.push_back(v);
        }
        for (std::size_t i = 0; i < dom.size(); ++i)
            for (std::size_t j = i + 1; j < dom.size(); ++j)
                if (g.adjacent(dom[i], dom[j]) != h.adjacent(m.image[dom[i]], m.image[dom[j]]))
                    return false;
        return true;
    }

    auto is_induced_embedding(const ColoredGraph & g, const ColoredGraph & h, const PartialMap & m) -> bool
    {
        return is_partial_isomorphism(g, h, m) && m.is_total();
    }

    auto induced_subgraph(const ColoredGraph & g, const vector<int> & s) -> ColoredGraph
    {
        vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("induced_subgraph: repeated vertex id");
        for (int v : sorted)
            if (v < 0 || v >= g.size())
                throw PreconditionError("induced_subgraph: unknown vertex id " + std::to_string(v));

        vector<Color> colors;
        for (int v : sorted)
            colors.push_back(g.color(v));
        ColoredGraph result(colors);
        for (std::size_t i = 0; i < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j)
                if (g.adjacent(sorted[i], sorted[j]))
                    result.set_edge(int(i), int(j));
        return result;
    }

    auto induced_subgraph(const ColoredGraph & g, const Bitset & s) -> ColoredGraph
    {
        return induced_subgraph(g, s.members());
    }

    auto cross_complement(const ColoredGraph & g) -> ColoredGraph
    {
        ColoredGraph result = g;
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if (g.color(u) != g.color(v))
                    result.set_edge(u, v, ! g.adjacent(u, v));
        return result;
    }

    auto class_complement(const ColoredGraph & g, Color c) -> ColoredGraph
    {
        ColoredGraph result = g;
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if (g.color(u) == c && g.color(v) == c)
                    result.set_edge(u, v, ! g.adjacent(u, v));
        return result;
    }

    auto swap_colors(const ColoredGraph & g) -> ColoredGraph
    {
        vector<Color> colors;
        for (auto c : g.colors())
            colors.push_back(complement_color(c));
        ColoredGraph result(colors);
        for (auto [u, v] : g.edges())
            result.set_edge(u, v);
        return result;
    }

    auto relabel(const ColoredGraph & g, const vector<int> & perm) -> ColoredGraph
    {
        if (int(perm.size()) != g.size())
            throw PreconditionError("relabel: permutation size mismatch");
        vector<Color> colors(g.size());
        vector<char> seen(g.size(), 0);
        for (int v = 0; v < g.size(); ++v) {
            if (perm[v] < 0 || perm[v] >= g.size() || seen[perm[v]])
                throw PreconditionError("relabel: not a permutation");
            seen[perm[v]] = 1;
            colors[perm[v]] = g.color(v);
        }
        ColoredGraph result(colors);
        for (auto [u, v] : g.edges())
            result.set_edge(perm[u], perm[v]);
        return result;
    }

    auto clique_partition(const ColoredGraph & g, Color c) -> optional<vector<vector<int>>>
    {
        // P3-free iff closed neighbourhoods inside the class agree along every edge.
        const Bitset & cls = g.class_mask(c);
        vector<int> clique_of(g.size(), -1);
        vector<vector<int>> cliques;
        for (auto v = cls.first(); v < cls.size(); v = cls.next(v)) {
            if (clique_of[v] >= 0)
                continue;
            Bitset closed = g.neighbours(int(v)) & cls;
            closed.set(v);
            auto members = closed.members();
            for (int u : members) {
                Bitset other = g.neighbours(u) & cls;
                other.set(u);
                if (other != closed || clique_of[u] >= 0)
                    return std::nullopt;
                clique_of[u] = int(cliques.size());
            }
            cliques.push_back(std::move(members));
        }
        return cliques;
    }

    namespace
    {
        auto max_clique_in(const ColoredGraph & g, Bitset candidates, int size_so_far, int & best) -> void
        {
            if (size_so_far + int(candidates.count()) <= best)
                return;
            if (candidates.none()) {
                best = std::max(best, size_so_far);
                return;
            }
            while (candidates.any()) {
                if (size_so_far + int(candidates.count()) <= best)
                    return;
                auto v = candidates.first();
                candidates.reset(v);
                max_clique_in(g, candidates & g.neighbours(int(v)), size_so_far + 1, best);
            }
        }
    }

    auto class_profile(const ColoredGraph & g) -> ColorClassProfile
    {
        ColorClassProfile p;
        for (auto c : all_colors) {
            auto parts = clique_partition(g, c);
            int omega = 0, alpha = 0;
            vector<vector<int>> cliques;
            if (parts) {
                for (auto & k : *parts)
                    omega = std::max(omega, int(k.size()));
                alpha = int(parts->size());
                cliques = std::move(*parts);
            }
            else
                max_clique_in(g, g.class_mask(c), 0, omega);
            if (c == Color::red) {
                p.p3_free_red = parts.has_value();
                p.omega_red = omega;
                p.alpha_red = alpha;
                p.red_cliques = std::move(cliques);
            }
            else {
                p.p3_free_blue = parts.has_value();
                p.omega_blue = omega;
                p.alpha_blue = alpha;
                p.blue_cliques = std::move(cliques);
            }
        }

        bool seen_edge = false, seen_non_edge = false;
        auto reds = g.class_mask(Color::red).members();
        auto & blues = g.class_mask(Color::blue);
        for (int r : reds) {
            std::size_t cross = (g.neighbours(r) & blues).count();
            if (cross > 0)
                seen_edge = true;
            if (cross < blues.count())
                seen_non_edge = true;
        }
        p.homogeneously_connected = ! (seen_edge && seen_non_edge);
        return p;
    }

    auto blow_up(const ColoredGraph & h, Color c, int i) -> ColoredGraph
    {
        if (i < 2)
            throw PreconditionError("blow_up: factor must be at least 2");
        if (! clique_partition(h, c))
            throw PreconditionError("blow_up: colour class is not a disjoint union of cliques");

        vector<Color> colors;
        vector<int> origin;
        for (int v = 0; v < h.size(); ++v) {
            int copies = h.color(v) == c ? i : 1;
            for (int k = 0; k < copies; ++k) {
                colors.push_back(h.color(v));
                origin.push_back(v);
            }
        }
        ColoredGraph g(colors);
        for (int a = 0; a < g.size(); ++a)
            for (int b = a + 1; b < g.size(); ++b)
                if (origin[a] == origin[b] || h.adjacent(origin[a], origin[b]))
                    g.set_edge(a, b);
        return g;
    }

    auto detect_blow_up(const ColoredGraph & g) -> optional<BlowUp>
    {
        for (auto c : all_colors)
            if (! clique_partition(g, c))
                throw PreconditionError("detect_blow_up: colour classes must be disjoint unions of cliques");

        for (auto c : all_colors) {
            // true twins: adjacent, and equal neighbourhoods once each other is removed
            const Bitset & cls = g.class_mask(c);
            vector<int> twin_class(g.size(), -1);
            vector<vector<int>> classes;
            for (auto v = cls.first(); v < cls.size(); v = cls.next(v)) {
                if (twin_class[v] >= 0)
                    continue;
                Bitset closed_v = g.neighbours(int(v));
                closed_v.set(v);
                vector<int> members{int(v)};
                twin_class[v] = int(classes.size());
                for (auto u = cls.next(v); u < cls.size(); u = cls.next(u)) {
                    if (twin_class[u] >= 0 || ! g.adjacent(int(v), int(u)))
                        continue;
                    Bitset closed_u = g.neighbours(int(u));
                    closed_u.set(u);
                    if (closed_u == closed_v) {
                        twin_class[u] = int(classes.size());
                        members.push_back(int(u));
                    }
                }
                classes.push_back(std::move(members));
            }
            if (classes.empty())
                continue;
            std::size_t i = classes.front().size();
            if (i < 2 || ! std::all_of(classes.begin(), classes.end(), [&](auto & k) { return k.size() == i; }))
                continue;

            vector<int> keep;
            for (int v = 0; v < g.size(); ++v)
                if (g.color(v) != c || classes[twin_class[v]].front() == v)
                    keep.push_back(v);
            return BlowUp{induced_subgraph(g, keep), c, int(i)};
        }
        return std::nullopt;
    }

    auto disjoint_union(const ColoredGraph & g, const ColoredGraph & h) -> ColoredGraph
    {
        vector<Color> colors = g.colors();
        colors.insert(colors.end(), h.colors().begin(), h.colors().end());
        ColoredGraph result(colors);
        for (auto [u, v] : g.edges())
            result.set_edge(u, v);
        for (auto [u, v] : h.edges())
            result.set_edge(g.size() + u, g.size() + v);
        return result;
    }

    auto join(const ColoredGraph & g, const ColoredGraph & h) -> ColoredGraph
    {
        auto result = disjoint_union(g, h);
        for (int u = 0; u < g.size(); ++u)
            for (int v = 0; v < h.size(); ++v)
                result.set_edge(u, g.size() + v);
        return result;
    }

    auto complete_graph(Color c, int n) -> ColoredGraph
    {
        ColoredGraph g(vector<Color>(n, c));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.set_edge(u, v);
        return g;
    }

    auto edgeless_graph(Color c, int n) -> ColoredGraph
    {
        return ColoredGraph(vector<Color>(n, c));
    }
}

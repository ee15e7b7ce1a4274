#include <cuhg/enumerate.hh>

#include <map>
#include <unordered_set>

using std::vector;

namespace cuhg
{
    namespace
    {
        // Every one-vertex extension of g (new vertex last).
        template <typename F_>
        auto for_each_extension(const ColoredGraph & g, bool allow_red, bool allow_blue, F_ && f) -> void
        {
            int n = g.size();
            for (auto c : all_colors) {
                if ((c == Color::red && ! allow_red) || (c == Color::blue && ! allow_blue))
                    continue;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                    ColoredGraph h = g;
                    int v = h.add_vertex(c);
                    for (int u = 0; u < n; ++u)
                        if ((mask >> u) & 1U)
                            h.set_edge(u, v);
                    f(h);
                }
            }
        }
    }

    auto enumerate_graphs(int max_n, const GraphFilter & keep, bool allow_red, bool allow_blue)
        -> vector<vector<ColoredGraph>>
    {
        vector<vector<ColoredGraph>> levels(1);
        levels[0].push_back(ColoredGraph{});
        for (int m = 1; m <= max_n; ++m) {
            std::map<vector<std::uint64_t>, ColoredGraph> found;
            for (auto & g : levels[m - 1])
                for_each_extension(g, allow_red, allow_blue, [&](const ColoredGraph & h) {
                    auto code = canonical_form(h).code;
                    if (found.count(code))
                        return;
                    if (keep && ! keep(h))
                        return;
                    found.emplace(std::move(code), h);
                });
            levels.emplace_back();
            for (auto & [code, _] : found)
                levels.back().push_back(graph_from_code(code));
        }
        return levels;
    }

    auto marked_code(const ColoredGraph & a, int marked) -> vector<std::uint64_t>
    {
        vector<vector<int>> cells;
        for (int v = 0; v < marked; ++v)
            cells.push_back({v});
        vector<int> red, blue;
        for (int v = marked; v < a.size(); ++v)
            (a.color(v) == Color::red ? red : blue).push_back(v);
        cells.push_back(red);
        cells.push_back(blue);
        return canonical_form(a, cells).code;
    }

    auto marked_extensions(const ColoredGraph & j, int max_n, const GraphFilter & keep) -> vector<ColoredGraph>
    {
        vector<ColoredGraph> result;
        vector<ColoredGraph> frontier{j};
        int marked = j.size();
        for (int m = marked + 1; m <= max_n; ++m) {
            std::map<vector<std::uint64_t>, ColoredGraph> found;
            for (auto & g : frontier)
                for_each_extension(g, true, true, [&](const ColoredGraph & h) {
                    auto code = marked_code(h, marked);
                    if (found.count(code))
                        return;
                    if (keep && ! keep(h))
                        return;
                    found.emplace(std::move(code), h);
                });
            frontier.clear();
            for (auto & [_, h] : found) {
                frontier.push_back(h);
                result.push_back(h);
            }
        }
        return result;
    }
}

#include <cuhg/graph_io.hh>
#include <cuhg/isomorphism.hh>
#include <cuhg/omitted.hh>
#include <cuhg/patterns.hh>

#include <algorithm>
#include <map>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace cuhg
{
    auto universe_name(Universe u) -> string
    {
        switch (u) {
            case Universe::all: return "all";
            case Universe::clique_union: return "clique-union";
            case Universe::red_only: return "red";
            case Universe::blue_only: return "blue";
        }
        return "all";
    }

    auto parse_universe(const string & s) -> optional<Universe>
    {
        if (s == "all") return Universe::all;
        if (s == "clique-union") return Universe::clique_union;
        if (s == "red") return Universe::red_only;
        if (s == "blue") return Universe::blue_only;
        return std::nullopt;
    }

    auto OmittedSet::contains(const ColoredGraph & h) const -> bool
    {
        for (auto & m : members)
            if (is_isomorphic(m.graph, h))
                return true;
        return false;
    }

    auto OmittedSet::names() const -> vector<string>
    {
        vector<string> result;
        for (auto & m : members)
            result.push_back(m.name);
        return result;
    }

    auto pattern_name_of(const ColoredGraph & h) -> optional<string>
    {
        for (auto & p : catalog())
            if (p.family != "K" && p.family != "Kbar" && is_isomorphic(p.graph, h))
                return p.name;
        if (h.size() == 0)
            return std::nullopt;
        for (auto c : all_colors)
            if (h.count(c) == h.size()) {
                int n = h.size();
                string cn{color_name(c)};
                if (h.edge_count() == n * (n - 1) / 2)
                    return "K:" + cn + ":" + std::to_string(n);
                if (h.edge_count() == 0)
                    return "Kbar:" + cn + ":" + std::to_string(n);
            }
        return std::nullopt;
    }

    namespace
    {
        auto delete_vertex(const ColoredGraph & h, int x) -> ColoredGraph
        {
            vector<int> keep;
            for (int v = 0; v < h.size(); ++v)
                if (v != x)
                    keep.push_back(v);
            return induced_subgraph(h, keep);
        }

        auto display_name(const ColoredGraph & h) -> string
        {
            if (auto n = pattern_name_of(h))
                return *n;
            string s = "graph(";
            for (auto c : h.colors())
                s += (c == Color::red ? 'r' : 'b');
            for (auto [u, v] : h.edges())
                s += " " + std::to_string(u) + "-" + std::to_string(v);
            return s + ")";
        }
    }

    auto minimally_omitted(const ColoredGraph & g, int k, Universe universe) -> OmittedSet
    {
        OmittedSet result;
        result.bound = k;
        result.universe = universe;

        bool allow_red = universe != Universe::blue_only;
        bool allow_blue = universe != Universe::red_only;

        // realized graphs by size, keyed by canonical code
        std::set<vector<std::uint64_t>> realized_prev;
        vector<ColoredGraph> realized_graphs{ColoredGraph{}};
        realized_prev.insert(canonical_form(ColoredGraph{}).code);

        for (int m = 1; m <= k; ++m) {
            std::map<vector<std::uint64_t>, ColoredGraph> candidates;
            for (auto & base : realized_graphs) {
                for (auto c : all_colors) {
                    if ((c == Color::red && ! allow_red) || (c == Color::blue && ! allow_blue))
                        continue;
                    int n = base.size();
                    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                        ColoredGraph h = base;
                        int v = h.add_vertex(c);
                        for (int u = 0; u < n; ++u)
                            if ((mask >> u) & 1U)
                                h.set_edge(u, v);
                        auto code = canonical_form(h).code;
                        if (! candidates.count(code))
                            candidates.emplace(std::move(code), std::move(h));
                    }
                }
            }

            std::set<vector<std::uint64_t>> realized_now;
            vector<ColoredGraph> realized_now_graphs;
            for (auto & [code, h0] : candidates) {
                auto h = graph_from_code(code);
                if (universe == Universe::clique_union
                    && (! clique_partition(h, Color::red) || ! clique_partition(h, Color::blue)))
                    continue;
                bool all_realized = true;
                for (int x = 0; x < h.size() && all_realized; ++x)
                    if (! realized_prev.count(canonical_form(delete_vertex(h, x)).code))
                        all_realized = false;
                if (! all_realized)
                    continue;
                if (contains_induced(g, h)) {
                    realized_now.insert(code);
                    realized_now_graphs.push_back(h);
                    continue;
                }
                OmittedMember member{h, display_name(h), {}};
                for (int x = 0; x < h.size(); ++x) {
                    auto e = contains_induced(g, delete_vertex(h, x));
                    member.witnesses.push_back(e ? e->image : vector<int>{});
                }
                result.members.push_back(std::move(member));
            }
            realized_prev = std::move(realized_now);
            realized_graphs = std::move(realized_now_graphs);
        }
        return result;
    }

    auto check_omitted_structure(const OmittedSet & o) -> StructureReport
    {
        StructureReport report;
        for (auto & m : o.members) {
            const auto & h = m.graph;
            if (h.count(Color::red) == 0 || h.count(Color::blue) == 0)
                continue;
            for (auto c : all_colors) {
                auto cls = h.class_mask(c).members();
                int n = int(cls.size());
                int edges = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (h.adjacent(cls[i], cls[j]))
                            ++edges;
                bool independent = edges == 0;
                bool k2 = n == 2 && edges == 1;
                bool twin_clique = false;
                if (n >= 3 && edges == n * (n - 1) / 2) {
                    twin_clique = true;
                    for (int i = 1; i < n && twin_clique; ++i) {
                        Bitset a = h.neighbours(cls[0]), b = h.neighbours(cls[i]);
                        a.reset(cls[i]);
                        b.reset(cls[0]);
                        twin_clique = a == b;
                    }
                }
                if (! (independent || k2 || twin_clique))
                    report.violations.push_back(m.name + ": " + string(color_name(c))
                        + " class is neither a twin clique of size >= 3, a K2, nor independent");
            }
        }
        report.pass = report.violations.empty();
        return report;
    }

    auto tilde_consistency(const OmittedSet & o_g, const OmittedSet & o_gt) -> bool
    {
        if (o_g.members.size() != o_gt.members.size())
            return false;
        std::multiset<vector<std::uint64_t>> lhs, rhs;
        for (auto & m : o_g.members)
            lhs.insert(canonical_form(cross_complement(m.graph)).code);
        for (auto & m : o_gt.members)
            rhs.insert(canonical_form(m.graph).code);
        return lhs == rhs;
    }

    auto to_json(const OmittedSet & o) -> nlohmann::json
    {
        nlohmann::json members = nlohmann::json::array();
        for (auto & m : o.members)
            members.push_back({{"name", m.name}, {"graph", to_text(m.graph)}, {"witnesses", m.witnesses}});
        return {{"bound", o.bound}, {"universe", universe_name(o.universe)}, {"names", o.names()}, {"members", members}};
    }
}

#include <cuhg/errors.hh>
#include <cuhg/patterns.hh>

#include <charconv>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace cuhg
{
    namespace
    {
        auto make(const string & colors, std::initializer_list<std::pair<int, int>> edges) -> ColoredGraph
        {
            vector<Color> cs;
            for (char c : colors)
                cs.push_back(c == 'r' ? Color::red : Color::blue);
            ColoredGraph g(cs);
            for (auto [u, v] : edges)
                g.set_edge(u, v);
            return g;
        }
    }

    // r1 = 0, r2 = 1, b1 = 2 (or b1 = 1, b2 = 2 for the blue-heavy ones)
    auto pattern_Tr() -> ColoredGraph { return make("rrb", {{0, 2}, {2, 1}, {1, 0}}); }
    auto pattern_Tr_tilde() -> ColoredGraph { return make("rrb", {{0, 1}}); }
    auto pattern_Tb() -> ColoredGraph { return make("rbb", {{0, 1}, {1, 2}, {2, 0}}); }
    auto pattern_Tb_tilde() -> ColoredGraph { return make("rbb", {{1, 2}}); }
    auto pattern_Qr() -> ColoredGraph { return make("rrb", {{2, 0}, {0, 1}}); }
    auto pattern_Qb() -> ColoredGraph { return make("rbb", {{0, 1}, {1, 2}}); }

    // r1 = 0, r2 = 1, b1 = 2, b2 = 3
    auto pattern_D() -> ColoredGraph { return make("rrbb", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}); }
    auto pattern_D_tilde() -> ColoredGraph { return make("rrbb", {{0, 1}, {1, 3}, {3, 2}}); }

    auto pattern_P3(Color c) -> ColoredGraph
    {
        ColoredGraph g(vector<Color>(3, c));
        g.set_edge(0, 1);
        g.set_edge(1, 2);
        return g;
    }

    auto pattern_K(Color c, int n) -> ColoredGraph { return complete_graph(c, n); }
    auto pattern_Kbar(Color c, int n) -> ColoredGraph { return edgeless_graph(c, n); }

    auto catalog() -> vector<Pattern>
    {
        return {
            {"Tr", "Tr", pattern_Tr()},
            {"Tr~", "Tr~", pattern_Tr_tilde()},
            {"Tb", "Tb", pattern_Tb()},
            {"Tb~", "Tb~", pattern_Tb_tilde()},
            {"Qr", "Qr", pattern_Qr()},
            {"Qb", "Qb", pattern_Qb()},
            {"D", "D", pattern_D()},
            {"D~", "D~", pattern_D_tilde()},
            {"P3_red", "P3_red", pattern_P3(Color::red)},
            {"P3_blue", "P3_blue", pattern_P3(Color::blue)},
            {"K:red:3", "K", pattern_K(Color::red, 3)},
            {"Kbar:red:3", "Kbar", pattern_Kbar(Color::red, 3)},
        };
    }

    auto named_pattern(string_view name) -> Pattern
    {
        for (auto & p : catalog())
            if (p.family != "K" && p.family != "Kbar" && p.name == name)
                return p;

        auto colon = name.find(':');
        if (colon != string_view::npos) {
            auto family = name.substr(0, colon);
            auto rest = name.substr(colon + 1);
            auto colon2 = rest.find(':');
            if ((family == "K" || family == "Kbar") && colon2 != string_view::npos) {
                auto c = parse_color(rest.substr(0, colon2));
                auto num = rest.substr(colon2 + 1);
                int n = 0;
                auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
                if (c && ec == std::errc{} && p == num.data() + num.size() && n >= 1 && n <= 8) {
                    string canonical = string(family) + ":" + string(color_name(*c)) + ":" + std::to_string(n);
                    return {canonical, string(family), family == "K" ? pattern_K(*c, n) : pattern_Kbar(*c, n)};
                }
            }
        }
        throw InputError("unknown pattern '" + string(name) + "'");
    }

    auto tilde_partner(string_view name) -> optional<string>
    {
        if (name == "Tr") return "Tr~";
        if (name == "Tr~") return "Tr";
        if (name == "Tb") return "Tb~";
        if (name == "Tb~") return "Tb";
        if (name == "D") return "D~";
        if (name == "D~") return "D";
        return std::nullopt;
    }

    namespace
    {
        struct Matcher
        {
            const ColoredGraph & g;
            const ColoredGraph & h;
            vector<int> order;
            PartialMap map;
            Bitset used;
            Bitset allowed;

            auto run(std::size_t k) -> bool
            {
                if (k == order.size())
                    return true;
                int x = order[k];
                Bitset cand = g.class_mask(h.color(x)) & allowed;
                cand.subtract(used);
                for (int i = 0; i < int(k) && cand.any(); ++i) {
                    int y = order[i];
                    if (h.adjacent(x, y))
                        cand &= g.neighbours(map.image[y]);
                    else
                        cand.subtract(g.neighbours(map.image[y]));
                }
                for (auto c = cand.first(); c < cand.size(); c = cand.next(c)) {
                    map.image[x] = int(c);
                    used.set(c);
                    if (run(k + 1))
                        return true;
                    used.reset(c);
                }
                map.image[x] = -1;
                return false;
            }
        };
    }

    auto contains_induced_seeded(const ColoredGraph & g, const ColoredGraph & h, const PartialMap & seed,
        const Bitset & allowed) -> optional<PartialMap>
    {
        if (int(seed.image.size()) != h.size())
            throw PreconditionError("contains_induced_seeded: seed size mismatch");
        if (! is_partial_isomorphism(h, g, seed))
            return std::nullopt;

        Matcher m{g, h, {}, seed, Bitset(g.size()), allowed};
        Bitset ordered(h.size());
        for (int v = 0; v < h.size(); ++v)
            if (seed.defined(v)) {
                m.order.push_back(v);
                ordered.set(v);
                m.used.set(seed.image[v]);
            }
        std::size_t fixed = m.order.size();
        // remaining vertices: most already-ordered neighbours first
        while (int(m.order.size()) < h.size()) {
            int best = -1;
            std::size_t best_score = 0;
            for (int v = 0; v < h.size(); ++v) {
                if (ordered.test(v))
                    continue;
                std::size_t score = (h.neighbours(v) & ordered).count();
                if (best < 0 || score > best_score) {
                    best = v;
                    best_score = score;
                }
            }
            m.order.push_back(best);
            ordered.set(best);
        }
        if (m.run(fixed))
            return m.map;
        return std::nullopt;
    }

    auto contains_induced(const ColoredGraph & g, const ColoredGraph & h) -> optional<PartialMap>
    {
        if (h.size() > g.size())
            return std::nullopt;
        Bitset all(g.size());
        all.set_all();
        return contains_induced_seeded(g, h, PartialMap::empty(h.size()), all);
    }
}

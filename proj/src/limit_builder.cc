#include <cuhg/errors.hh>
#include <cuhg/graph_io.hh>
#include <cuhg/limit_builder.hh>
#include <cuhg/placement.hh>

#include <algorithm>
#include <bit>
#include <array>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

using nlohmann::json;
using std::string;
using std::vector;

namespace cuhg
{
    namespace
    {
        constexpr int max_subset = 7;

        // Missing one-point extension: a vertex of colour c whose neighbourhood
        // inside s[0..k) is given by bit i of adj.
        struct Demand
        {
            std::array<int, max_subset> s{};
            int k = 0;
            Color c = Color::red;
            std::uint32_t adj = 0;
        };

        // Memoized "is s + v in the class" on the isomorphism-free key of
        // (colours of s, edges inside s, colour of v, adjacency of v).
        class TypeOracle
        {
            public:
                explicit TypeOracle(const ClassSpec & spec) : _spec(spec) {}

                auto in_spec(const ColoredGraph & g, const int * s, int k, Color c, std::uint32_t adj) -> bool
                {
                    std::uint64_t key = std::uint64_t(k);
                    int shift = 4;
                    auto push = [&](bool b) {
                        if (b)
                            key |= std::uint64_t{1} << shift;
                        ++shift;
                    };
                    for (int i = 0; i < k; ++i)
                        push(g.color(s[i]) == Color::blue);
                    for (int i = 0; i < k; ++i)
                        for (int j = i + 1; j < k; ++j)
                            push(g.adjacent(s[i], s[j]));
                    push(c == Color::blue);
                    for (int i = 0; i < k; ++i)
                        push((adj >> i) & 1U);

                    auto it = _memo.find(key);
                    if (it != _memo.end())
                        return it->second;

                    vector<Color> colors;
                    for (int i = 0; i < k; ++i)
                        colors.push_back(g.color(s[i]));
                    colors.push_back(c);
                    ColoredGraph h(colors);
                    for (int i = 0; i < k; ++i) {
                        for (int j = i + 1; j < k; ++j)
                            if (g.adjacent(s[i], s[j]))
                                h.set_edge(i, j);
                        if ((adj >> i) & 1U)
                            h.set_edge(i, k);
                    }
                    bool ok = member(_spec, h);
                    _memo.emplace(key, ok);
                    return ok;
                }

            private:
                const ClassSpec & _spec;
                std::unordered_map<std::uint64_t, bool> _memo;
        };

        // Walks every subset s with |s| <= max_k in lexicographic order, keeping
        // for each colour the partition of class(c) \ s by neighbourhood in s.
        // Reports every empty cell whose type is in the class. Subsets entirely
        // below the watermark are walked but not reported.
        class Scanner
        {
            public:
                template <typename F_>
                Scanner(const ColoredGraph & g, TypeOracle & oracle, int max_k, int watermark, F_ && emit) :
                    _g(g),
                    _oracle(oracle),
                    _max_k(std::min(max_k, max_subset)),
                    _watermark(watermark),
                    _emit(std::forward<F_>(emit))
                {
                }

                auto run() -> bool
                {
                    if (_max_k < 0)
                        return true;
                    _cells.resize(_max_k + 1);
                    for (int d = 0; d <= _max_k; ++d)
                        for (auto c : all_colors)
                            _cells[d][index(c)].assign(std::size_t{1} << d, Bitset(_g.size()));
                    for (auto c : all_colors)
                        _cells[0][index(c)][0] = _g.class_mask(c);
                    if (_watermark == 0 && ! report(0))
                        return false;
                    return recurse(0, 0);
                }

            private:
                auto report(int k) -> bool
                {
                    for (auto c : all_colors) {
                        auto & cells = _cells[k][index(c)];
                        for (std::uint32_t i = 0; i < cells.size(); ++i)
                            if (cells[i].none() && _oracle.in_spec(_g, _s.data(), k, c, i)) {
                                Demand d;
                                d.s = _s;
                                d.k = k;
                                d.c = c;
                                d.adj = i;
                                if (! _emit(d))
                                    return false;
                            }
                    }
                    return true;
                }

                auto recurse(int k, int start) -> bool
                {
                    if (k >= _max_k)
                        return true;
                    int from_x = (k + 1 == _max_k) ? std::max(start, _watermark) : start;
                    for (int x = from_x; x < _g.size(); ++x) {
                        const Bitset & nx = _g.neighbours(x);
                        for (auto c : all_colors) {
                            auto & from = _cells[k][index(c)];
                            auto & to = _cells[k + 1][index(c)];
                            std::uint32_t half = std::uint32_t{1} << k;
                            for (std::uint32_t i = 0; i < from.size(); ++i) {
                                to[i | half].assign_and(from[i], nx);
                                to[i].assign_and_not(from[i], nx);
                                to[i | half].reset(x);
                                to[i].reset(x);
                            }
                        }
                        _s[k] = x;
                        if (x >= _watermark && ! report(k + 1))
                            return false;
                        if (! recurse(k + 1, x + 1))
                            return false;
                    }
                    return true;
                }

                const ColoredGraph & _g;
                TypeOracle & _oracle;
                int _max_k;
                int _watermark;
                std::function<bool(const Demand &)> _emit;
                std::array<int, max_subset> _s{};
                vector<std::array<vector<Bitset>, 2>> _cells;
        };

        auto realized(const ColoredGraph & g, const Demand & d, Bitset & scratch) -> bool
        {
            scratch = g.class_mask(d.c);
            for (int i = 0; i < d.k; ++i) {
                scratch.reset(d.s[i]);
                if ((d.adj >> i) & 1U)
                    scratch &= g.neighbours(d.s[i]);
                else
                    scratch.subtract(g.neighbours(d.s[i]));
            }
            return scratch.any();
        }

        auto describe(const Demand & d) -> string
        {
            std::ostringstream out;
            out << color_name(d.c) << " over {";
            for (int i = 0; i < d.k; ++i)
                out << (i ? "," : "") << d.s[i] << ((d.adj >> i) & 1U ? "+" : "-");
            out << "}";
            return out.str();
        }

        class Builder
        {
            public:
                Builder(const ClassSpec & spec, const ColoredGraph & g, const BuildOptions & opts) :
                    _opts(opts),
                    _state(spec, g),
                    _oracle(spec),
                    _rng(opts.seed)
                {
                }

                auto run(Approximant & out) -> void
                {
                    scan_from(0);
                    int phase = -1, added = 0, failed = 0;
                    Bitset scratch;
                    while (true) {
                        int k = 0;
                        while (k <= max_subset && _pending[k].empty())
                            ++k;
                        if (k > max_subset)
                            break;
                        if (k != phase) {
                            out.log.push_back("serving types over " + std::to_string(k) + "-subsets at order "
                                + std::to_string(_state.graph().size()));
                            phase = k;
                        }
                        Demand d = _pending[k].front();
                        _pending[k].pop_front();
                        if (realized(_state.graph(), d, scratch))
                            continue;
                        int n = _state.graph().size();
                        if (n >= _opts.budget) {
                            out.budget_exhausted = true;
                            out.log.push_back("budget of " + std::to_string(_opts.budget) + " vertices exhausted");
                            break;
                        }
                        if (realize(d)) {
                            ++added;
                            scan_from(n);
                        }
                        else {
                            ++failed;
                            out.log.push_back("no placement found for type " + describe(d));
                        }
                    }
                    out.log.push_back(std::to_string(added) + " vertices added, " + std::to_string(failed)
                        + " placements failed");
                    out.graph = _state.graph();
                }

            private:
                auto realize(const Demand & d) -> bool
                {
                    const auto & g = _state.graph();
                    int n = g.size();
                    PlacementState::Request req;
                    req.color = d.c;
                    vector<signed char> fixed(n, -1);
                    int forced_clique = -1;
                    for (int i = 0; i < d.k; ++i) {
                        bool b = (d.adj >> i) & 1U;
                        req.forced.emplace_back(d.s[i], b);
                        fixed[d.s[i]] = b ? 1 : 0;
                        if (b && g.color(d.s[i]) == d.c)
                            forced_clique = _state.clique_of(d.s[i]);
                    }

                    vector<int> options;
                    if (forced_clique >= 0)
                        options.push_back(forced_clique);
                    else {
                        for (int k = 0; k < _state.clique_count(); ++k)
                            if (_state.clique_color(k) == d.c && ! _state.clique_members(k).empty())
                                options.push_back(k);
                        std::stable_sort(options.begin(), options.end(), [&](int a, int b) {
                            return _state.clique_members(a).size() < _state.clique_members(b).size();
                        });
                        options.push_back(-1);
                    }

                    for (int k : options) {
                        req.clique_order = {k};
                        req.restrict_to_clique_order = true;
                        req.preference = hints(d, k, fixed);
                        _state.nodes = 0;
                        _state.limit_hit = false;
                        _state.node_limit = _opts.node_limit;
                        if (_state.place(req, [] { return true; }))
                            return true;
                    }
                    return false;
                }

                // Greedily adopts the cross adjacencies of pending demands that
                // the new vertex could also realize, then fills the rest at random.
                auto hints(const Demand & d, int clique, const vector<signed char> & fixed) -> vector<signed char>
                {
                    const auto & g = _state.graph();
                    int n = g.size();
                    vector<signed char> pref(n, -1);
                    Bitset in_clique(n);
                    if (clique >= 0)
                        for (int u : _state.clique_members(clique))
                            in_clique.set(u);

                    constexpr std::size_t scan_cap = 20000;
                    std::size_t scanned = 0;
                    Bitset scratch;
                    for (auto & bucket : _pending)
                    for (auto & e : bucket) {
                        if (++scanned > scan_cap)
                            goto fill;
                        if (e.c != d.c)
                            continue;
                        bool ok = true;
                        for (int i = 0; i < e.k && ok; ++i) {
                            int u = e.s[i];
                            bool b = (e.adj >> i) & 1U;
                            if (fixed[u] >= 0)
                                ok = fixed[u] == (b ? 1 : 0);
                            else if (g.color(u) == d.c)
                                ok = in_clique.test(u) == b;
                            else
                                ok = pref[u] < 0 || pref[u] == (b ? 1 : 0);
                        }
                        if (! ok || realized(g, e, scratch))
                            continue;
                        for (int i = 0; i < e.k; ++i) {
                            int u = e.s[i];
                            if (fixed[u] < 0 && g.color(u) != d.c)
                                pref[u] = ((e.adj >> i) & 1U) ? 1 : 0;
                        }
                    }

                fill:
                    vector<int> loose;
                    for (int u = 0; u < n; ++u)
                        if (g.color(u) != d.c && fixed[u] < 0 && pref[u] < 0) {
                            pref[u] = (_rng() & 1U) ? 1 : 0;
                            loose.push_back(u);
                        }
                    spread(d.c, clique, pref, fixed, loose);
                    return pref;
                }

                // Flips loose bits towards a new vertex that fills thin
                // adjacency cells: inside each other-colour clique against every
                // vertex of its own colour, and inside its own clique for every
                // pair of other-colour vertices.
                auto spread(Color c, int clique, vector<signed char> & pref, const vector<signed char> & fixed,
                    const vector<int> & loose) -> void
                {
                    const auto & g = _state.graph();
                    if (loose.empty())
                        return;
                    constexpr int want = 2;
                    auto bit = [&](int w) { return fixed[w] >= 0 ? fixed[w] > 0 : pref[w] > 0; };
                    auto deficit = [](int count) { return count < want ? want - count : 0; };

                    auto rows = g.class_mask(c).members();
                    // rc[k][r][x bit * 2 + row bit] for clique k of the other colour
                    std::unordered_map<int, vector<std::array<int, 4>>> rc;
                    for (int u : loose) {
                        int k = _state.clique_of(u);
                        if (rc.count(k))
                            continue;
                        auto & ck = rc[k];
                        ck.assign(rows.size(), {0, 0, 0, 0});
                        for (int w : _state.clique_members(k))
                            for (std::size_t r = 0; r < rows.size(); ++r)
                                ++ck[r][(bit(w) ? 2 : 0) + (g.adjacent(w, rows[r]) ? 1 : 0)];
                    }

                    auto others = g.class_mask(complement_color(c)).members();
                    std::size_t m = others.size();
                    vector<int> pos(g.size(), -1);
                    for (std::size_t i = 0; i < m; ++i)
                        pos[others[i]] = int(i);
                    // cc[i * m + j][a_i * 2 + a_j] counts members of the own clique
                    vector<std::array<int, 4>> cc;
                    if (clique >= 0 && ! _state.clique_members(clique).empty()) {
                        cc.assign(m * m, {0, 0, 0, 0});
                        for (int y : _state.clique_members(clique))
                            for (std::size_t i = 0; i < m; ++i) {
                                int ai = g.adjacent(y, others[i]) ? 2 : 0;
                                for (std::size_t j = 0; j < m; ++j)
                                    ++cc[i * m + j][ai + (g.adjacent(y, others[j]) ? 1 : 0)];
                            }
                    }

                    for (int pass = 0; pass < 4; ++pass) {
                        bool changed = false;
                        for (int u : loose) {
                            auto & ck = rc[_state.clique_of(u)];
                            int from = pref[u] > 0 ? 2 : 0, to = 2 - from;
                            int delta = 0;
                            for (std::size_t r = 0; r < rows.size(); ++r) {
                                int rb = g.adjacent(u, rows[r]) ? 1 : 0;
                                auto & cell = ck[r];
                                delta += deficit(cell[from + rb] - 1) - deficit(cell[from + rb]);
                                delta += deficit(cell[to + rb] + 1) - deficit(cell[to + rb]);
                            }
                            if (! cc.empty()) {
                                std::size_t i = pos[u];
                                for (std::size_t j = 0; j < m; ++j) {
                                    if (j == i)
                                        continue;
                                    int bj = bit(others[j]) ? 1 : 0;
                                    auto & cell = cc[i * m + j];
                                    delta += deficit(cell[to + bj] + 1) - deficit(cell[to + bj]);
                                    delta -= deficit(cell[from + bj] + 1) - deficit(cell[from + bj]);
                                }
                            }
                            if (delta < 0) {
                                for (std::size_t r = 0; r < rows.size(); ++r) {
                                    int rb = g.adjacent(u, rows[r]) ? 1 : 0;
                                    --ck[r][from + rb];
                                    ++ck[r][to + rb];
                                }
                                pref[u] = static_cast<signed char>(1 - pref[u]);
                                changed = true;
                            }
                        }
                        if (! changed)
                            break;
                    }
                }

                BuildOptions _opts;
                PlacementState _state;
                TypeOracle _oracle;
                std::mt19937_64 _rng;
                std::array<std::deque<Demand>, max_subset + 1> _pending;

                auto scan_from(int watermark) -> void
                {
                    Scanner scan(_state.graph(), _oracle, _opts.level - 1, watermark, [&](const Demand & d) {
                        _pending[d.k].push_back(d);
                        return true;
                    });
                    scan.run();
                }
        };

        auto level_of(const ClassSpec & spec, const ColoredGraph & g, int t_max) -> int
        {
            TypeOracle oracle(spec);
            int smallest_missing = max_subset + 1;
            Scanner scan(g, oracle, t_max - 1, 0, [&](const Demand & d) {
                smallest_missing = std::min(smallest_missing, d.k);
                return d.k > 1;
            });
            scan.run();
            return std::min(t_max, smallest_missing);
        }

        template <typename F_>
        auto for_each_combination(const vector<int> & items, int k, F_ && f) -> bool
        {
            vector<int> idx(k);
            for (int i = 0; i < k; ++i)
                idx[i] = i;
            if (k > int(items.size()))
                return true;
            vector<int> chosen(k);
            while (true) {
                for (int i = 0; i < k; ++i)
                    chosen[i] = items[idx[i]];
                if (! f(chosen))
                    return false;
                int i = k - 1;
                while (i >= 0 && idx[i] == int(items.size()) - k + i)
                    --i;
                if (i < 0)
                    return true;
                ++idx[i];
                for (int j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
            }
        }

        auto all_cells_nonempty(const ColoredGraph & g, const vector<int> & u, const Bitset & target) -> bool
        {
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << u.size()); ++mask) {
                Bitset w = target;
                for (std::size_t i = 0; i < u.size(); ++i) {
                    w.reset(u[i]);
                    if ((mask >> i) & 1U)
                        w &= g.neighbours(u[i]);
                    else
                        w.subtract(g.neighbours(u[i]));
                }
                if (w.none())
                    return false;
            }
            return true;
        }

        auto maximal_cliques(const ColoredGraph & g, Color c) -> vector<vector<int>>
        {
            auto parts = clique_partition(g, c);
            if (! parts)
                throw PreconditionError("scan: colour class is not a disjoint union of cliques");
            return *parts;
        }
    }

    auto extension_closure(const ClassSpec & spec, const ColoredGraph & g, const BuildOptions & opts) -> Approximant
    {
        if (opts.level < 0 || opts.level > max_subset + 1)
            throw PreconditionError("extension_closure: level must lie in [0, " + std::to_string(max_subset + 1) + "]");
        if (! member(spec, g))
            throw PreconditionError("extension_closure: start graph is not in the class");

        Approximant a;
        a.spec = spec;
        a.target_level = opts.level;
        a.budget = opts.budget;
        a.seed = opts.seed;
        a.graph = g;
        if (opts.level == 0) {
            a.level = 0;
            return a;
        }

        Builder b(spec, g, opts);
        b.run(a);
        if (! member(spec, a.graph))
            throw InternalAssertion("extension_closure: produced a graph outside the class");
        a.level = level_of(spec, a.graph, opts.level);
        a.log.push_back("final order " + std::to_string(a.graph.size()) + ", level " + std::to_string(a.level) + " of "
            + std::to_string(opts.level));
        return a;
    }

    auto extension_closure(const ClassSpec & spec, const ColoredGraph & g, int t, int budget, std::uint64_t seed)
        -> Approximant
    {
        BuildOptions opts;
        opts.level = t;
        opts.budget = budget;
        opts.seed = seed;
        return extension_closure(spec, g, opts);
    }

    auto extension_level(const ClassSpec & spec, const ColoredGraph & g, int t_max) -> int
    {
        if (t_max <= 0)
            return 0;
        return level_of(spec, g, std::min(t_max, max_subset + 1));
    }

    auto verify_extension_property(const Approximant & a, int t) -> bool
    {
        const auto & g = a.graph;
        int n = g.size();
        if (! member(a.spec, g))
            return false;
        vector<int> all(n);
        for (int v = 0; v < n; ++v)
            all[v] = v;

        for (int k = 0; k < t && k <= n; ++k) {
            bool ok = for_each_combination(all, k, [&](const vector<int> & s) {
                // realized types: (colour, adjacency pattern) of every vertex outside s
                vector<char> seen(std::size_t{2} << k, 0);
                Bitset in_s(n);
                for (int x : s)
                    in_s.set(x);
                for (int v = 0; v < n; ++v) {
                    if (in_s.test(v))
                        continue;
                    std::uint32_t code = 0;
                    for (int i = 0; i < k; ++i)
                        if (g.adjacent(v, s[i]))
                            code |= std::uint32_t{1} << i;
                    seen[(std::size_t(index(g.color(v))) << k) | code] = 1;
                }
                for (auto c : all_colors)
                    for (std::uint32_t code = 0; code < (std::uint32_t{1} << k); ++code) {
                        if (seen[(std::size_t(index(c)) << k) | code])
                            continue;
                        vector<int> verts = s;
                        ColoredGraph h = induced_subgraph(g, verts);
                        int x = h.add_vertex(c);
                        for (int i = 0; i < k; ++i)
                            if ((code >> i) & 1U)
                                h.set_edge(i, x);
                        if (member(a.spec, h))
                            return false;
                    }
                return true;
            });
            if (! ok)
                return false;
        }
        return true;
    }

    auto parity_design() -> ColoredGraph
    {
        constexpr int m = 8, q = 7;
        // lines of the Fano plane on the non-zero vectors 1..7
        auto is_line = [](int a, int b, int c) { return (a ^ b) == c; };
        // first permutation (lexicographic) sending no line onto a line
        std::array<int, q> sigma{};
        for (int i = 0; i < q; ++i)
            sigma[i] = i + 1;
        auto scrambles = [&]() {
            for (int a = 1; a <= q; ++a)
                for (int b = a + 1; b <= q; ++b) {
                    int c = a ^ b;
                    if (c <= b)
                        continue;
                    if (is_line(sigma[a - 1], sigma[b - 1], sigma[c - 1]))
                        return false;
                }
            return true;
        };
        while (! scrambles())
            std::next_permutation(sigma.begin(), sigma.end());

        vector<Color> colors(std::size_t(q * m), Color::red);
        colors.resize(std::size_t(2 * q * m), Color::blue);
        ColoredGraph g(colors);
        for (int c = 0; c < 2 * q; ++c)
            for (int x = 0; x < m; ++x)
                for (int y = x + 1; y < m; ++y)
                    g.set_edge(c * m + x, c * m + y);
        auto dot = [](int c, int x) { return std::popcount(unsigned(c & x)) & 1; };
        for (int i = 0; i < q; ++i)
            for (int x = 0; x < m; ++x)
                for (int j = 0; j < q; ++j)
                    for (int y = 0; y < m; ++y) {
                        int a = dot(j + 1, x) ^ (sigma[j] == i + 1 ? 1 : 0);
                        int b = dot(i + 1, y);
                        g.set_edge(i * m + x, q * m + j * m + y, a == b);
                    }
        return g;
    }

    auto start_graph(const ClassSpec & spec) -> ColoredGraph
    {
        if (same_constraints(spec, spec_f_inf_inf()))
            return parity_design();
        return ColoredGraph{};
    }

    auto build_family(const ClassSpec & spec, const BuildOptions & opts) -> Approximant
    {
        auto g = start_graph(spec);
        if (g.size() > opts.budget)
            g = ColoredGraph{};
        auto a = extension_closure(spec, g, opts);
        if (g.size() > 0)
            a.log.insert(a.log.begin(), "started from the parity design on " + std::to_string(g.size()) + " vertices");
        return a;
    }

    auto build_generic_bipartite(int t, int budget) -> Approximant
    {
        auto a = extension_closure(spec_generic_bipartite(), ColoredGraph{}, t, budget);
        auto depth = bipartite_witness_depth(a.graph, a.graph.class_mask(Color::red), a.graph.class_mask(Color::blue), 3);
        a.log.push_back("bipartite witness depth " + std::to_string(depth));
        return a;
    }

    auto build_G_rb(CliqueBound r, CliqueBound b, int t, int budget) -> Approximant
    {
        auto a = extension_closure(spec_A(r, b), ColoredGraph{}, t, budget);
        a.log.push_back("clique genericity depth 2: " + string(clique_genericity_scan(a.graph, 2) ? "yes" : "no"));
        return a;
    }

    auto to_json(const Approximant & a) -> json
    {
        json j;
        j["graph"] = to_json(a.graph);
        j["spec"] = to_json(a.spec);
        j["level"] = a.level;
        j["target_level"] = a.target_level;
        j["budget"] = a.budget;
        j["seed"] = a.seed;
        j["budget_exhausted"] = a.budget_exhausted;
        j["log"] = a.log;
        return j;
    }

    auto approximant_from_json(const json & j) -> Approximant
    {
        if (! j.is_object())
            throw InputError("approximant: expected an object");
        for (auto key : {"graph", "spec", "level"})
            if (! j.contains(key))
                throw InputError(string("approximant: missing field '") + key + "'");
        Approximant a;
        a.graph = graph_from_json(j.at("graph"));
        a.spec = spec_from_json(j.at("spec"));
        auto int_field = [&](const char * key, int fallback) -> int {
            if (! j.contains(key))
                return fallback;
            if (! j.at(key).is_number_integer())
                throw InputError(string("approximant.") + key + ": expected an integer");
            return j.at(key).get<int>();
        };
        a.level = int_field("level", 0);
        a.target_level = int_field("target_level", a.level);
        a.budget = int_field("budget", a.graph.size());
        if (j.contains("seed")) {
            if (! j.at("seed").is_number_unsigned() && ! j.at("seed").is_number_integer())
                throw InputError("approximant.seed: expected an integer");
            a.seed = j.at("seed").get<std::uint64_t>();
        }
        if (j.contains("budget_exhausted")) {
            if (! j.at("budget_exhausted").is_boolean())
                throw InputError("approximant.budget_exhausted: expected a boolean");
            a.budget_exhausted = j.at("budget_exhausted").get<bool>();
        }
        if (j.contains("log")) {
            if (! j.at("log").is_array())
                throw InputError("approximant.log: expected an array");
            for (auto & e : j.at("log"))
                a.log.push_back(e.is_string() ? e.get<string>() : e.dump());
        }
        if (! member(a.spec, a.graph))
            throw InputError("approximant: graph is not in the stated class");
        return a;
    }

    auto bipartite_witness_depth(const ColoredGraph & g, const Bitset & side_a, const Bitset & side_b, int max_depth)
        -> int
    {
        auto a = side_a.members(), b = side_b.members();
        int depth = 0;
        for (int m = 1; m <= max_depth; ++m) {
            bool ok = for_each_combination(a, m, [&](const vector<int> & u) { return all_cells_nonempty(g, u, side_b); })
                && for_each_combination(b, m, [&](const vector<int> & u) { return all_cells_nonempty(g, u, side_a); });
            if (! ok)
                break;
            depth = m;
        }
        return depth;
    }

    auto clique_genericity_scan(const ColoredGraph & g, int depth) -> bool
    {
        for (auto c : all_colors) {
            auto others = g.class_mask(complement_color(c)).members();
            for (auto & k : maximal_cliques(g, c)) {
                Bitset target(g.size());
                for (int v : k)
                    target.set(v);
                for (int m = 1; m <= depth; ++m)
                    if (! for_each_combination(others, m, [&](const vector<int> & u) { return all_cells_nonempty(g, u, target); }))
                        return false;
            }
        }
        return true;
    }

    auto neighbours_every_clique_scan(const ColoredGraph & g, int depth) -> bool
    {
        for (auto c : all_colors) {
            auto other_cliques = maximal_cliques(g, complement_color(c));
            for (auto & k : maximal_cliques(g, c))
                for (int m = 1; m <= depth; ++m) {
                    bool ok = for_each_combination(k, m, [&](const vector<int> & u) {
                        for (auto & mk : other_cliques) {
                            Bitset target(g.size());
                            for (int v : mk)
                                target.set(v);
                            if (! all_cells_nonempty(g, u, target))
                                return false;
                        }
                        return true;
                    });
                    if (! ok)
                        return false;
                }
        }
        return true;
    }

    auto joint_neighbour_scan(const ColoredGraph & g, int depth) -> bool
    {
        for (auto c : all_colors) {
            auto verts = g.class_mask(c).members();
            auto other_cliques = maximal_cliques(g, complement_color(c));
            for (int m = 1; m <= depth; ++m) {
                bool ok = for_each_combination(verts, m, [&](const vector<int> & u) {
                    Bitset common = g.class_mask(complement_color(c));
                    for (int x : u)
                        common &= g.neighbours(x);
                    for (auto & mk : other_cliques) {
                        bool hit = false;
                        for (int v : mk)
                            if (common.test(v)) {
                                hit = true;
                                break;
                            }
                        if (! hit)
                            return false;
                    }
                    return true;
                });
                if (! ok)
                    return false;
            }
        }
        return true;
    }

    auto partition_lemma_violations(const ColoredGraph & g, Color c) -> int
    {
        int bad = 0;
        auto others = g.class_mask(complement_color(c)).members();
        for (auto & k : maximal_cliques(g, c)) {
            if (k.size() != 2)
                continue;
            for (int w : others) {
                int hits = int(g.adjacent(w, k[0])) + int(g.adjacent(w, k[1]));
                if (hits != 1)
                    ++bad;
            }
        }
        return bad;
    }
}

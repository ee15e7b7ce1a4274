#include <cuhg/errors.hh>
#include <cuhg/isomorphism.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::optional;
using std::vector;

namespace cuhg
{
    namespace
    {
        using Cells = vector<vector<int>>;

        // One-dimensional colour refinement to the coarsest equitable partition
        // finer than the input. Sub-cells are ordered by their neighbour-count
        // signature, so the result is invariant under relabelling.
        auto refine(const ColoredGraph & g, Cells cells) -> Cells
        {
            int n = g.size();
            while (true) {
                vector<Bitset> masks;
                masks.reserve(cells.size());
                for (auto & c : cells) {
                    Bitset m(n);
                    for (int v : c)
                        m.set(v);
                    masks.push_back(std::move(m));
                }

                Cells next;
                next.reserve(cells.size());
                bool changed = false;
                for (auto & c : cells) {
                    if (c.size() == 1) {
                        next.push_back(c);
                        continue;
                    }
                    std::map<vector<int>, vector<int>> split;
                    for (int v : c) {
                        vector<int> sig(masks.size());
                        for (std::size_t i = 0; i < masks.size(); ++i)
                            sig[i] = int((g.neighbours(v) & masks[i]).count());
                        split[sig].push_back(v);
                    }
                    if (split.size() > 1)
                        changed = true;
                    for (auto & [_, part] : split)
                        next.push_back(std::move(part));
                }
                cells = std::move(next);
                if (! changed)
                    return cells;
            }
        }

        auto code_for(const ColoredGraph & g, const vector<int> & order, const vector<std::size_t> & cell_sizes)
            -> vector<std::uint64_t>
        {
            int n = g.size();
            vector<std::uint64_t> code;
            code.push_back(std::uint64_t(n));
            code.push_back(cell_sizes.size());
            for (auto s : cell_sizes)
                code.push_back(s);
            std::uint64_t word = 0;
            int bits = 0;
            auto push = [&](bool b) {
                word = (word << 1) | std::uint64_t(b);
                if (++bits == 64) {
                    code.push_back(word);
                    word = 0;
                    bits = 0;
                }
            };
            for (int i = 0; i < n; ++i)
                push(g.color(order[i]) == Color::blue);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    push(g.adjacent(order[i], order[j]));
            if (bits > 0)
                code.push_back(word << (64 - bits));
            return code;
        }

        struct UnionFind
        {
            vector<int> parent;
            explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }
            auto unite(int a, int b) -> void
            {
                a = find(a);
                b = find(b);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        };

        struct Searcher
        {
            const ColoredGraph & g;
            vector<std::size_t> cell_sizes;
            optional<vector<std::uint64_t>> best_code;
            vector<int> best_order;
            vector<vector<int>> automorphisms;

            auto twins(int u, int w) const -> bool
            {
                Bitset nu = g.neighbours(u), nw = g.neighbours(w);
                nu.reset(w);
                nw.reset(u);
                return nu == nw;
            }

            auto search(const Cells & cells, vector<int> & prefix) -> void
            {
                auto target = std::find_if(cells.begin(), cells.end(), [](auto & c) { return c.size() > 1; });
                if (target == cells.end()) {
                    vector<int> order;
                    for (auto & c : cells)
                        order.push_back(c.front());
                    auto code = code_for(g, order, cell_sizes);
                    if (! best_code || code < *best_code) {
                        best_code = std::move(code);
                        best_order = std::move(order);
                    }
                    else if (code == *best_code) {
                        // best_order[i] -> order[i] is an automorphism
                        vector<int> gamma(g.size());
                        for (int i = 0; i < g.size(); ++i)
                            gamma[best_order[i]] = order[i];
                        automorphisms.push_back(std::move(gamma));
                    }
                    return;
                }

                std::size_t t = std::size_t(target - cells.begin());
                vector<int> explored;
                for (int v : cells[t]) {
                    bool skip = false;
                    for (int e : explored)
                        if (twins(e, v)) {
                            skip = true;
                            break;
                        }
                    if (! skip && ! explored.empty()) {
                        UnionFind uf(g.size());
                        for (auto & gamma : automorphisms) {
                            if (! std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; }))
                                continue;
                            for (int x = 0; x < g.size(); ++x)
                                uf.unite(x, gamma[x]);
                        }
                        for (int e : explored)
                            if (uf.find(e) == uf.find(v)) {
                                skip = true;
                                break;
                            }
                    }
                    if (skip)
                        continue;
                    explored.push_back(v);

                    Cells child;
                    child.reserve(cells.size() + 1);
                    for (std::size_t i = 0; i < cells.size(); ++i) {
                        if (i != t) {
                            child.push_back(cells[i]);
                            continue;
                        }
                        child.push_back({v});
                        vector<int> rest;
                        for (int u : cells[i])
                            if (u != v)
                                rest.push_back(u);
                        child.push_back(std::move(rest));
                    }
                    prefix.push_back(v);
                    search(refine(g, std::move(child)), prefix);
                    prefix.pop_back();
                }
            }
        };
    }

    auto CodeHash::operator()(const vector<std::uint64_t> & code) const -> std::size_t
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto w : code) {
            h ^= w;
            h *= 1099511628211ULL;
            h ^= h >> 29;
        }
        return std::size_t(h);
    }

    auto canonical_form(const ColoredGraph & g, const vector<vector<int>> & cells) -> CanonicalForm
    {
        vector<char> seen(g.size(), 0);
        Cells initial;
        vector<std::size_t> sizes;
        for (auto & c : cells) {
            if (c.empty())
                continue;
            for (int v : c) {
                if (v < 0 || v >= g.size() || seen[v])
                    throw PreconditionError("canonical_form: cells must partition the vertex set");
                if (g.color(v) != g.color(c.front()))
                    throw PreconditionError("canonical_form: cells must be colour-homogeneous");
                seen[v] = 1;
            }
            initial.push_back(c);
            sizes.push_back(c.size());
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw PreconditionError("canonical_form: cells must partition the vertex set");

        Searcher s{g, sizes, std::nullopt, {}, {}};
        vector<int> prefix;
        s.search(refine(g, std::move(initial)), prefix);

        CanonicalForm result;
        result.code = s.best_code ? *s.best_code : code_for(g, {}, sizes);
        result.labeling.assign(g.size(), 0);
        for (int i = 0; i < int(s.best_order.size()); ++i)
            result.labeling[s.best_order[i]] = i;
        return result;
    }

    auto canonical_form(const ColoredGraph & g) -> CanonicalForm
    {
        vector<vector<int>> cells(2);
        for (int v = 0; v < g.size(); ++v)
            cells[index(g.color(v))].push_back(v);
        return canonical_form(g, cells);
    }

    auto graph_from_code(const vector<std::uint64_t> & code) -> ColoredGraph
    {
        if (code.size() < 2)
            throw PreconditionError("graph_from_code: truncated code");
        int n = int(code[0]);
        std::size_t pos = 2 + code[1];
        std::size_t bit = 0;
        auto next_bit = [&]() -> bool {
            std::size_t w = pos + bit / 64;
            if (w >= code.size())
                throw PreconditionError("graph_from_code: truncated code");
            bool b = (code[w] >> (63 - bit % 64)) & 1U;
            ++bit;
            return b;
        };
        vector<Color> colors(n);
        for (int i = 0; i < n; ++i)
            colors[i] = next_bit() ? Color::blue : Color::red;
        ColoredGraph g(colors);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (next_bit())
                    g.set_edge(i, j);
        return g;
    }

    namespace
    {
        auto exhaustive_isomorphism(const ColoredGraph & g, const ColoredGraph & h) -> optional<PartialMap>
        {
            vector<int> g_red, g_blue, h_red, h_blue;
            for (int v = 0; v < g.size(); ++v)
                (g.color(v) == Color::red ? g_red : g_blue).push_back(v);
            for (int v = 0; v < h.size(); ++v)
                (h.color(v) == Color::red ? h_red : h_blue).push_back(v);
            if (g_red.size() != h_red.size() || g_blue.size() != h_blue.size())
                return std::nullopt;

            PartialMap m = PartialMap::empty(g.size());
            auto reds = h_red;
            do {
                auto blues = h_blue;
                do {
                    for (std::size_t i = 0; i < g_red.size(); ++i)
                        m.image[g_red[i]] = reds[i];
                    for (std::size_t i = 0; i < g_blue.size(); ++i)
                        m.image[g_blue[i]] = blues[i];
                    if (is_induced_embedding(g, h, m))
                        return m;
                } while (std::next_permutation(blues.begin(), blues.end()));
            } while (std::next_permutation(reds.begin(), reds.end()));
            return std::nullopt;
        }
    }

    auto is_isomorphic(const ColoredGraph & g, const ColoredGraph & h, IsoMethod method) -> optional<PartialMap>
    {
        if (g.size() != h.size() || g.count(Color::red) != h.count(Color::red) || g.edge_count() != h.edge_count())
            return std::nullopt;
        if (method == IsoMethod::exhaustive)
            return exhaustive_isomorphism(g, h);

        auto cg = canonical_form(g), ch = canonical_form(h);
        if (cg.code != ch.code)
            return std::nullopt;
        vector<int> h_at(h.size());
        for (int v = 0; v < h.size(); ++v)
            h_at[ch.labeling[v]] = v;
        PartialMap m = PartialMap::empty(g.size());
        for (int v = 0; v < g.size(); ++v)
            m.image[v] = h_at[cg.labeling[v]];
        return m;
    }

    namespace
    {
        auto extend_rec(const ColoredGraph & g, PartialMap & m, Bitset & used, const vector<int> & order, std::size_t k)
            -> bool
        {
            if (k == order.size())
                return true;
            int x = order[k];
            Bitset cand = g.class_mask(g.color(x));
            cand.subtract(used);
            int deg = int(g.neighbours(x).count());
            for (int y = 0; y < g.size(); ++y)
                if (m.image[y] >= 0) {
                    if (g.adjacent(x, y))
                        cand &= g.neighbours(m.image[y]);
                    else
                        cand.subtract(g.neighbours(m.image[y]));
                }
            for (auto c = cand.first(); c < cand.size(); c = cand.next(c)) {
                if (int(g.neighbours(int(c)).count()) != deg)
                    continue;
                m.image[x] = int(c);
                used.set(c);
                if (extend_rec(g, m, used, order, k + 1))
                    return true;
                used.reset(c);
                m.image[x] = -1;
            }
            return false;
        }
    }

    auto extend_to_automorphism(const ColoredGraph & g, const PartialMap & partial) -> optional<PartialMap>
    {
        if (! is_partial_isomorphism(g, g, partial))
            return std::nullopt;
        PartialMap m = partial;
        Bitset used(g.size());
        for (int v = 0; v < g.size(); ++v)
            if (m.image[v] >= 0) {
                if (g.neighbours(v).count() != g.neighbours(m.image[v]).count())
                    return std::nullopt;
                used.set(m.image[v]);
            }

        // Unmapped vertices in order of most already-placed neighbours first.
        vector<int> order;
        Bitset placed(g.size());
        for (int v = 0; v < g.size(); ++v)
            if (m.image[v] >= 0)
                placed.set(v);
        while (placed.count() < std::size_t(g.size())) {
            int best = -1;
            std::size_t best_score = 0;
            for (int v = 0; v < g.size(); ++v) {
                if (placed.test(v))
                    continue;
                std::size_t score = (g.neighbours(v) & placed).count() + 1;
                if (best < 0 || score > best_score) {
                    best = v;
                    best_score = score;
                }
            }
            order.push_back(best);
            placed.set(best);
        }
        if (! extend_rec(g, m, used, order, 0))
            return std::nullopt;
        return m;
    }
}

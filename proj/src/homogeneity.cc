#include <cuhg/errors.hh>
#include <cuhg/homogeneity.hh>
#include <cuhg/isomorphism.hh>
#include <cuhg/limit_builder.hh>
#include <cuhg/patterns.hh>

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

using std::string;
using std::vector;

namespace cuhg
{
    namespace
    {
        auto tuple_type(const ColoredGraph & g, const vector<int> & t) -> string
        {
            string key;
            for (int v : t)
                key += g.color(v) == Color::red ? 'r' : 'b';
            key += ':';
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j)
                    key += g.adjacent(t[i], t[j]) ? '1' : '0';
            return key;
        }

        // Canonical code of g with the tuple individualized in order.
        auto tuple_code(const ColoredGraph & g, const vector<int> & t) -> vector<std::uint64_t>
        {
            vector<vector<int>> cells;
            vector<char> used(g.size(), 0);
            for (int v : t) {
                cells.push_back({v});
                used[v] = 1;
            }
            for (auto c : all_colors) {
                vector<int> rest;
                for (int v = 0; v < g.size(); ++v)
                    if (! used[v] && g.color(v) == c)
                        rest.push_back(v);
                if (! rest.empty())
                    cells.push_back(std::move(rest));
            }
            return canonical_form(g, cells).code;
        }
    }

    auto is_ultrahomogeneous_finite(const ColoredGraph & g) -> bool
    {
        int n = g.size();
        if (n > max_exact_uh_order)
            throw PreconditionError("is_ultrahomogeneous_finite: at most " + std::to_string(max_exact_uh_order)
                + " vertices supported, got " + std::to_string(n));

        // Induction on tuple length: once all k-tuples of one atomic type form
        // a single orbit, it suffices that for one representative b of each
        // type, same-type extensions (b, y) are conjugate under Stab(b).
        std::map<string, vector<int>> reps{{tuple_type(g, {}), {}}};
        for (int k = 0; k < n; ++k) {
            std::map<string, vector<int>> next;
            for (auto & [type, b] : reps) {
                vector<char> in_b(n, 0);
                for (int v : b)
                    in_b[v] = 1;
                std::map<string, vector<int>> groups;
                for (int y = 0; y < n; ++y) {
                    if (in_b[y])
                        continue;
                    auto t = b;
                    t.push_back(y);
                    groups[tuple_type(g, t)].push_back(y);
                }
                for (auto & [ext_type, ys] : groups) {
                    auto t = b;
                    t.push_back(ys.front());
                    auto code = tuple_code(g, t);
                    for (std::size_t i = 1; i < ys.size(); ++i) {
                        t.back() = ys[i];
                        if (tuple_code(g, t) != code)
                            return false;
                    }
                    t.back() = ys.front();
                    next.emplace(ext_type, t);
                }
            }
            reps = std::move(next);
        }
        return true;
    }

    auto k_homogeneity(const ColoredGraph & g, int k) -> bool
    {
        if (k < 0 || k > 5)
            throw PreconditionError("k_homogeneity: k must lie in [0, 5]");
        int n = g.size();
        k = std::min(k, n);

        // per size j: realized-extension mask keyed by atomic type of an ordered tuple
        vector<std::unordered_map<std::uint32_t, std::uint64_t>> seen(k + 1);
        vector<vector<vector<int>>> perms(k + 1);
        for (int j = 0; j <= k; ++j) {
            vector<int> p(j);
            std::iota(p.begin(), p.end(), 0);
            do
                perms[j].push_back(p);
            while (std::next_permutation(p.begin(), p.end()));
        }

        vector<int> s;
        // cells[j][c][pattern] over class(c) \ s
        vector<std::array<vector<Bitset>, 2>> cells(k + 1);
        for (int j = 0; j <= k; ++j)
            for (auto c : all_colors)
                cells[j][index(c)].assign(std::size_t{1} << j, Bitset(n));
        for (auto c : all_colors)
            cells[0][index(c)][0] = g.class_mask(c);

        auto check = [&](int j) -> bool {
            std::uint64_t mask = 0;
            for (auto c : all_colors)
                for (std::uint32_t p = 0; p < (std::uint32_t{1} << j); ++p)
                    if (cells[j][index(c)][p].any())
                        mask |= std::uint64_t{1} << ((std::uint32_t(index(c)) << j) | p);
            for (auto & perm : perms[j]) {
                // tuple t[a] = s[perm[a]]
                std::uint32_t key = std::uint32_t(j);
                int shift = 3;
                for (int a = 0; a < j; ++a, ++shift)
                    if (g.color(s[perm[a]]) == Color::blue)
                        key |= std::uint32_t{1} << shift;
                for (int a = 0; a < j; ++a)
                    for (int b = a + 1; b < j; ++b, ++shift)
                        if (g.adjacent(s[perm[a]], s[perm[b]]))
                            key |= std::uint32_t{1} << shift;
                std::uint64_t permuted = 0;
                for (int c = 0; c < 2; ++c)
                    for (std::uint32_t p = 0; p < (std::uint32_t{1} << j); ++p) {
                        if (! ((mask >> ((std::uint32_t(c) << j) | p)) & 1U))
                            continue;
                        std::uint32_t q = 0;
                        for (int a = 0; a < j; ++a)
                            if ((p >> perm[a]) & 1U)
                                q |= std::uint32_t{1} << a;
                        permuted |= std::uint64_t{1} << ((std::uint32_t(c) << j) | q);
                    }
                auto [it, fresh] = seen[j].emplace(key, permuted);
                if (! fresh && it->second != permuted)
                    return false;
            }
            return true;
        };

        std::function<bool(int, int)> walk = [&](int j, int start) -> bool {
            if (! check(j))
                return false;
            if (j == k)
                return true;
            for (int x = start; x < n; ++x) {
                const Bitset & nx = g.neighbours(x);
                for (auto c : all_colors) {
                    auto & from = cells[j][index(c)];
                    auto & to = cells[j + 1][index(c)];
                    std::uint32_t half = std::uint32_t{1} << j;
                    for (std::uint32_t i = 0; i < from.size(); ++i) {
                        to[i | half].assign_and(from[i], nx);
                        to[i].assign_and_not(from[i], nx);
                        to[i | half].reset(x);
                        to[i].reset(x);
                    }
                }
                s.push_back(x);
                bool ok = walk(j + 1, x + 1);
                s.pop_back();
                if (! ok)
                    return false;
            }
            return true;
        };
        return walk(0, 0);
    }

    auto piecewise_report(const ColoredGraph & g, int witness_depth) -> PiecewiseReport
    {
        auto reds = clique_partition(g, Color::red), blues = clique_partition(g, Color::blue);
        if (! reds || ! blues)
            throw PreconditionError("piecewise_check: colour classes must be disjoint unions of cliques");
        PiecewiseReport report;
        for (std::size_t i = 0; i < reds->size(); ++i)
            for (std::size_t j = 0; j < blues->size(); ++j) {
                auto verts = (*reds)[i];
                verts.insert(verts.end(), (*blues)[j].begin(), (*blues)[j].end());
                auto piece = induced_subgraph(g, verts);
                PieceVerdict v;
                v.red_clique = int(i);
                v.blue_clique = int(j);
                v.order = piece.size();
                if (piece.size() <= max_exact_uh_order) {
                    v.homogeneous = is_ultrahomogeneous_finite(piece);
                    v.kind = v.homogeneous ? "exact" : "none";
                }
                else {
                    const auto & rm = piece.class_mask(Color::red);
                    const auto & bm = piece.class_mask(Color::blue);
                    long a = long(rm.count()), b = long(bm.count());
                    long cross = 0;
                    bool all_one = true, all_co = true;
                    for (int u = 0; u < piece.size(); ++u) {
                        const auto & other = piece.color(u) == Color::red ? bm : rm;
                        long deg = long((piece.neighbours(u) & other).count());
                        long other_size = piece.color(u) == Color::red ? b : a;
                        if (piece.color(u) == Color::red)
                            cross += deg;
                        all_one = all_one && deg == 1;
                        all_co = all_co && deg == other_size - 1;
                    }
                    if (cross == 0 || cross == a * b)
                        v.kind = "homogeneously-connected";
                    else if (a == b && all_one)
                        v.kind = "matching";
                    else if (a == b && all_co)
                        v.kind = "co-matching";
                    else if (bipartite_witness_depth(piece, rm, bm, witness_depth) >= witness_depth)
                        v.kind = "generic";
                    else
                        v.kind = "none";
                    v.homogeneous = v.kind != "none";
                }
                report.holds = report.holds && v.homogeneous;
                report.pieces.push_back(v);
            }
        return report;
    }

    auto piecewise_check(const ColoredGraph & g, int witness_depth) -> bool
    {
        return piecewise_report(g, witness_depth).holds;
    }

    auto theorem_a_precondition(const ColoredGraph & g) -> string
    {
        auto reds = clique_partition(g, Color::red), blues = clique_partition(g, Color::blue);
        if (! reds || ! blues)
            return "colour classes are not disjoint unions of cliques";
        if (detect_blow_up(g))
            return "graph is a blow-up";
        if (reds->size() < 2)
            return "red class has fewer than two cliques";
        if (blues->size() < 2)
            return "blue class has fewer than two cliques";
        auto p = class_profile(g);
        if (p.omega_red == 1 && p.omega_blue == 1)
            return "both colour classes are independent";
        if (p.omega_red == 2 && p.omega_blue == 2 && ! contains_induced(g, pattern_Tr())
            && ! contains_induced(g, pattern_Tr_tilde()) && ! contains_induced(g, pattern_Tb())
            && ! contains_induced(g, pattern_Tb_tilde()))
            return "graph has the F22 shape";
        return "";
    }

    auto theorem_a_predicate(const ColoredGraph & g) -> bool
    {
        auto why = theorem_a_precondition(g);
        if (! why.empty())
            throw PreconditionError("theorem_a_predicate: " + why);
        return contains_induced(g, pattern_D()).has_value() && contains_induced(g, pattern_D_tilde()).has_value();
    }
}

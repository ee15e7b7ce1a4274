#include <cuhg/errors.hh>
#include <cuhg/placement.hh>

using std::function;
using std::vector;

namespace cuhg
{
    PlacementState::PlacementState(const ClassSpec & spec, ColoredGraph g) :
        _spec(spec),
        _g(std::move(g)),
        _clique_of(_g.size(), -1),
        _created(_g.size(), -1)
    {
        for (auto c : all_colors) {
            auto parts = clique_partition(_g, c);
            if (! parts)
                throw PreconditionError("placement: colour classes must be disjoint unions of cliques");
            for (auto & k : *parts) {
                for (int v : k)
                    _clique_of[v] = int(_cliques.size());
                _cliques.push_back({c, k});
                ++_live[index(c)];
            }
        }
        for (auto & p : spec.forbidden) {
            Check ch;
            ch.pattern = p.graph;
            const auto & h = p.graph;
            for (int a = 0; a < h.size(); ++a) {
                ch.by_color[index(h.color(a))].push_back(a);
                for (int b = 0; b < h.size(); ++b)
                    if (a != b)
                        ch.pairs[index(h.color(a))][index(h.color(b))][h.adjacent(a, b) ? 1 : 0].emplace_back(a, b);
            }
            _checks.push_back(std::move(ch));
        }
    }

    auto PlacementState::violation_through(int v, const Bitset & decided) const -> bool
    {
        Bitset allowed = decided;
        allowed.reset(v);
        for (auto & ch : _checks)
            for (int p : ch.by_color[index(_g.color(v))]) {
                auto seed = PartialMap::empty(ch.pattern.size());
                seed.image[p] = v;
                if (contains_induced_seeded(_g, ch.pattern, seed, allowed))
                    return true;
            }
        return false;
    }

    auto PlacementState::violation_through(int v, int w, const Bitset & decided) const -> bool
    {
        Bitset allowed = decided;
        allowed.reset(v);
        allowed.reset(w);
        int adj = _g.adjacent(v, w) ? 1 : 0;
        for (auto & ch : _checks)
            for (auto [p, q] : ch.pairs[index(_g.color(v))][index(_g.color(w))][adj]) {
                auto seed = PartialMap::empty(ch.pattern.size());
                seed.image[p] = v;
                seed.image[q] = w;
                if (contains_induced_seeded(_g, ch.pattern, seed, allowed))
                    return true;
            }
        return false;
    }

    auto PlacementState::add_to_clique(int v, int k) -> void
    {
        for (int u : _cliques[k].members)
            _g.set_edge(u, v);
        _cliques[k].members.push_back(v);
        _clique_of[v] = k;
    }

    auto PlacementState::remove_last() -> void
    {
        int v = _g.size() - 1;
        int k = _clique_of[v];
        _cliques[k].members.pop_back();
        if (_created[v] == k) {
            _cliques.pop_back();
            --_live[index(_g.color(v))];
        }
        _clique_of.pop_back();
        _created.pop_back();
        _g.remove_last_vertex();
    }

    auto PlacementState::undo_last() -> void
    {
        remove_last();
    }

    auto PlacementState::cross_search(int v, vector<int> & free, std::size_t pos, Bitset & decided,
        const vector<signed char> & pref, const function<bool()> & next) -> bool
    {
        if (pos == free.size())
            return next();
        if (node_limit >= 0 && ++nodes > node_limit) {
            limit_hit = true;
            return false;
        }
        int w = free[pos];
        bool first = w < int(pref.size()) && pref[w] == 1;
        for (bool val : {first, ! first}) {
            _g.set_edge(v, w, val);
            decided.set(w);
            if (! violation_through(v, w, decided) && cross_search(v, free, pos + 1, decided, pref, next))
                return true;
            decided.reset(w);
            if (limit_hit)
                break;
        }
        _g.set_edge(v, w, false);
        return false;
    }

    auto PlacementState::place(const Request & req, const function<bool()> & next) -> bool
    {
        if (node_limit >= 0 && ++nodes > node_limit) {
            limit_hit = true;
            return false;
        }
        Color c = req.color;
        int n = _g.size();
        vector<signed char> fv(n, -1);
        for (auto [u, b] : req.forced)
            fv[u] = b ? 1 : 0;

        int forced_clique = -1;
        for (int u = 0; u < n; ++u)
            if (_g.color(u) == c && fv[u] == 1) {
                if (forced_clique >= 0 && forced_clique != _clique_of[u])
                    return false;
                forced_clique = _clique_of[u];
            }

        auto admissible = [&](int k) -> bool {
            if (k < 0)
                return forced_clique < 0 && _spec.count_cap(c).admits(unsigned(_live[index(c)] + 1));
            if (_cliques[k].color != c || _cliques[k].members.empty())
                return false;
            if (forced_clique >= 0 && k != forced_clique)
                return false;
            for (int u : _cliques[k].members)
                if (fv[u] == 0)
                    return false;
            return _spec.size_cap(c).admits(unsigned(_cliques[k].members.size() + 1));
        };

        vector<int> options;
        vector<char> listed(_cliques.size() + 1, 0);
        for (int k : req.clique_order)
            if (k >= -1 && k < int(_cliques.size()) && ! listed[k + 1] && admissible(k)) {
                options.push_back(k);
                listed[k + 1] = 1;
            }
        if (! req.restrict_to_clique_order) {
            for (int k = 0; k < int(_cliques.size()); ++k)
                if (! listed[k + 1] && admissible(k))
                    options.push_back(k);
            if (! listed[0] && admissible(-1))
                options.push_back(-1);
        }

        for (int k : options) {
            int v = _g.add_vertex(c);
            _clique_of.push_back(-1);
            if (k < 0) {
                _created.push_back(int(_cliques.size()));
                _cliques.push_back({c, {}});
                ++_live[index(c)];
                add_to_clique(v, int(_cliques.size()) - 1);
            }
            else {
                _created.push_back(-1);
                add_to_clique(v, k);
            }

            Bitset decided = _g.class_mask(c);
            vector<char> is_forced(n, 0);
            for (auto [u, b] : req.forced)
                if (_g.color(u) != c) {
                    _g.set_edge(v, u, b);
                    decided.set(u);
                    is_forced[u] = 1;
                }

            if (! violation_through(v, decided)) {
                vector<int> free, rest;
                const Bitset & other = _g.class_mask(complement_color(c));
                for (auto u = other.first(); u < other.size(); u = other.next(u)) {
                    if (is_forced[u])
                        continue;
                    if (u < req.preference.size() && req.preference[u] >= 0)
                        free.push_back(int(u));
                    else
                        rest.push_back(int(u));
                }
                free.insert(free.end(), rest.begin(), rest.end());
                if (cross_search(v, free, 0, decided, req.preference, next))
                    return true;
            }
            remove_last();
            if (limit_hit)
                return false;
        }
        return false;
    }
}

#include <cuhg/amalgamation.hh>
#include <cuhg/enumerate.hh>
#include <cuhg/errors.hh>
#include <cuhg/placement.hh>

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <thread>

using std::optional;
using std::string;
using std::vector;

namespace cuhg
{
    auto AmalgamProblem::over_prefix(const ColoredGraph & a1, const ColoredGraph & a2, int j_size) -> AmalgamProblem
    {
        vector<int> prefix(j_size);
        for (int i = 0; i < j_size; ++i)
            prefix[i] = i;
        AmalgamProblem p{induced_subgraph(a1, prefix), a1, a2, PartialMap::identity(j_size), PartialMap::identity(j_size)};
        return p;
    }

    auto problem_defect(const ClassSpec & spec, const AmalgamProblem & p) -> string
    {
        if (! is_induced_embedding(p.j, p.a1, p.iota1))
            return "iota1 is not an induced embedding";
        if (! is_induced_embedding(p.j, p.a2, p.iota2))
            return "iota2 is not an induced embedding";
        if (! member(spec, p.j))
            return "j is not in the class";
        if (! member(spec, p.a1))
            return "a1 is not in the class";
        if (! member(spec, p.a2))
            return "a2 is not in the class";
        return {};
    }

    auto amalgam_defect(const ClassSpec & spec, const AmalgamProblem & p, const AmalgamResult & r) -> string
    {
        if (! is_induced_embedding(p.a1, r.a, r.kappa1))
            return "kappa1 is not an induced embedding";
        if (! is_induced_embedding(p.a2, r.a, r.kappa2))
            return "kappa2 is not an induced embedding";
        for (int v = 0; v < p.j.size(); ++v)
            if (r.kappa1.image[p.iota1.image[v]] != r.kappa2.image[p.iota2.image[v]])
                return "square does not commute at vertex " + std::to_string(v) + " of j";
        if (! member(spec, r.a))
            return "amalgam is not in the class";
        return {};
    }

    auto validate_amalgam(const ClassSpec & spec, const AmalgamProblem & p, const AmalgamResult & r) -> bool
    {
        return amalgam_defect(spec, p, r).empty();
    }

    namespace
    {
        // Shared scaffolding for the one-vertex-at-a-time procedures.
        struct Stepper
        {
            const AmalgamProblem & p;
            ColoredGraph a;
            vector<int> phi;  // a2 vertex -> a vertex, or -1

            explicit Stepper(const AmalgamProblem & prob) : p(prob), a(prob.a1), phi(prob.a2.size(), -1)
            {
                for (int z = 0; z < p.j.size(); ++z)
                    phi[p.iota2.image[z]] = p.iota1.image[z];
            }

            auto new_vertices() const -> vector<int>
            {
                vector<int> order;
                for (auto c : all_colors)
                    for (int v = 0; v < p.a2.size(); ++v)
                        if (phi[v] < 0 && p.a2.color(v) == c)
                            order.push_back(v);
                return order;
            }

            auto in_image(int x) const -> bool { return std::find(phi.begin(), phi.end(), x) != phi.end(); }

            auto mapped_neighbour(int v, Color c) const -> int
            {
                for (int z = 0; z < p.a2.size(); ++z)
                    if (phi[z] >= 0 && p.a2.color(z) == c && p.a2.adjacent(v, z))
                        return z;
                return -1;
            }

            auto first_neighbour_of_color(int r, Color c) const -> int
            {
                Bitset n = a.neighbours(r) & a.class_mask(c);
                return n.any() ? int(n.first()) : -1;
            }

            // Reuses the clique partner of r if there is one, otherwise adds a
            // vertex joined to r and to every other-coloured non-neighbour of r.
            auto partner_case(int v, int r, const char * who) -> void
            {
                Color c = p.a2.color(v);
                int partner = first_neighbour_of_color(r, c);
                if (partner >= 0) {
                    if (in_image(partner))
                        throw InternalAssertion(string(who) + ": clique partner already lies in the image");
                    phi[v] = partner;
                    return;
                }
                Bitset others = a.class_mask(complement_color(c));
                others.subtract(a.neighbours(r));
                int x = a.add_vertex(c);
                a.set_edge(x, r);
                others.for_each([&](std::size_t b) { a.set_edge(x, int(b)); });
                phi[v] = x;
            }

            // New vertex of colour c joined to the mapped other-coloured
            // neighbours of v; the remaining mapped other-coloured vertices are
            // marked. Every clique of the other colour with at least two
            // vertices not yet joined to x then gets one edge, to its lowest
            // unmarked member.
            auto mark_and_cover(int v, const char * who) -> void
            {
                Color c = p.a2.color(v);
                Color o = complement_color(c);
                int x = a.add_vertex(c);
                Bitset marked(a.size());
                for (int z = 0; z < p.a2.size(); ++z)
                    if (phi[z] >= 0 && p.a2.color(z) == o) {
                        if (p.a2.adjacent(v, z))
                            a.set_edge(x, phi[z]);
                        else
                            marked.set(phi[z]);
                    }
                auto cliques = clique_partition(a, o);
                if (! cliques)
                    throw InternalAssertion(string(who) + ": intermediate graph left the clique-union class");
                for (auto & k : *cliques) {
                    vector<int> unjoined;
                    for (int u : k)
                        if (! a.adjacent(x, u))
                            unjoined.push_back(u);
                    if (unjoined.size() < 2)
                        continue;
                    auto pick = std::find_if(unjoined.begin(), unjoined.end(), [&](int u) { return ! marked.test(u); });
                    if (pick == unjoined.end())
                        throw InternalAssertion(string(who) + ": every unjoined vertex of a clique is marked");
                    a.set_edge(x, *pick);
                }
                phi[v] = x;
            }

            auto finish(const ClassSpec & spec, const char * who) -> AmalgamResult
            {
                AmalgamResult r{a, PartialMap::identity(p.a1.size()), PartialMap{phi}};
                if (auto d = amalgam_defect(spec, p, r); ! d.empty())
                    throw InternalAssertion(string(who) + ": " + d);
                return r;
            }
        };
    }

    auto amalgam_f21(const AmalgamProblem & p) -> AmalgamResult
    {
        static const ClassSpec spec = spec_f21();
        if (auto d = problem_defect(spec, p); ! d.empty())
            throw PreconditionError("amalgam_f21: " + d);

        Stepper s(p);
        for (int v : s.new_vertices()) {
            if (p.a2.color(v) == Color::red) {
                int z = s.mapped_neighbour(v, Color::red);
                if (z >= 0)
                    s.partner_case(v, s.phi[z], "amalgam_f21");
                else {
                    int x = s.a.add_vertex(Color::red);
                    for (int w = 0; w < p.a2.size(); ++w)
                        if (s.phi[w] >= 0 && p.a2.color(w) == Color::blue && p.a2.adjacent(v, w))
                            s.a.set_edge(x, s.phi[w]);
                    s.phi[v] = x;
                }
            }
            else
                s.mark_and_cover(v, "amalgam_f21");
        }
        return s.finish(spec, "amalgam_f21");
    }

    auto amalgam_f22(const AmalgamProblem & p) -> AmalgamResult
    {
        static const ClassSpec spec = spec_f22();
        if (auto d = problem_defect(spec, p); ! d.empty())
            throw PreconditionError("amalgam_f22: " + d);

        // The blue case is the red case with colours interchanged, so both
        // go through the same colour-parametric steps.
        Stepper s(p);
        for (int v : s.new_vertices()) {
            int z = s.mapped_neighbour(v, p.a2.color(v));
            if (z >= 0)
                s.partner_case(v, s.phi[z], "amalgam_f22");
            else
                s.mark_and_cover(v, "amalgam_f22");
        }
        return s.finish(spec, "amalgam_f22");
    }

    auto generic_amalgam(const ClassSpec & spec, const AmalgamProblem & p) -> optional<AmalgamResult>
    {
        if (auto d = problem_defect(spec, p); ! d.empty())
            throw PreconditionError("generic_amalgam: " + d);

        PlacementState st(spec, p.a1);
        vector<int> phi(p.a2.size(), -1);
        vector<char> used(p.a1.size() + p.a2.size() + 1, 0);
        for (int z = 0; z < p.j.size(); ++z) {
            phi[p.iota2.image[z]] = p.iota1.image[z];
            used[p.iota1.image[z]] = 1;
        }
        vector<int> order;
        for (auto c : all_colors)
            for (int v = 0; v < p.a2.size(); ++v)
                if (phi[v] < 0 && p.a2.color(v) == c)
                    order.push_back(v);

        std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
            if (k == order.size())
                return true;
            int x = order[k];
            const auto & g = st.graph();

            for (int y = 0; y < g.size(); ++y) {
                if (used[y] || g.color(y) != p.a2.color(x))
                    continue;
                bool ok = true;
                for (int z = 0; z < p.a2.size() && ok; ++z)
                    if (phi[z] >= 0 && g.adjacent(y, phi[z]) != p.a2.adjacent(x, z))
                        ok = false;
                if (! ok)
                    continue;
                phi[x] = y;
                used[y] = 1;
                if (rec(k + 1))
                    return true;
                phi[x] = -1;
                used[y] = 0;
            }

            PlacementState::Request req{p.a2.color(x), {}, {}, false, {}};
            for (int z = 0; z < p.a2.size(); ++z)
                if (phi[z] >= 0)
                    req.forced.emplace_back(phi[z], p.a2.adjacent(x, z));
            return st.place(req, [&]() -> bool {
                int v = st.graph().size() - 1;
                phi[x] = v;
                used[v] = 1;
                if (rec(k + 1))
                    return true;
                phi[x] = -1;
                used[v] = 0;
                return false;
            });
        };

        if (! rec(0))
            return std::nullopt;
        AmalgamResult r{st.graph(), PartialMap::identity(p.a1.size()), PartialMap{phi}};
        r.kappa1.image.resize(p.a1.size());
        if (auto d = amalgam_defect(spec, p, r); ! d.empty())
            throw InternalAssertion("generic_amalgam: " + d);
        return r;
    }

    namespace
    {
        enum class FastPath
        {
            none,
            f21,
            f22
        };

        auto fast_path_for(const ClassSpec & spec) -> FastPath
        {
            auto same = [&](const ClassSpec & other) { return same_constraints(spec, other); };
            if (same(spec_f21()))
                return FastPath::f21;
            if (same(spec_f22()))
                return FastPath::f22;
            return FastPath::none;
        }

        struct Outcome
        {
            bool ok = true;
            bool specialised = false;
            bool invalid = false;
        };

        auto solve_one(const ClassSpec & spec, FastPath fast, const AmalgamProblem & p) -> Outcome
        {
            Outcome o;
            if (fast != FastPath::none) {
                try {
                    auto r = fast == FastPath::f21 ? amalgam_f21(p) : amalgam_f22(p);
                    o.specialised = true;
                    if (validate_amalgam(spec, p, r))
                        return o;
                }
                catch (const InternalAssertion &) {
                }
                o.invalid = true;
            }
            auto r = generic_amalgam(spec, p);
            if (! r)
                o.ok = false;
            else if (! validate_amalgam(spec, p, *r)) {
                o.invalid = true;
                o.ok = false;
            }
            return o;
        }
    }

    auto check_amalgamation_property(const ClassSpec & spec, int n, int jobs) -> APReport
    {
        APReport report;
        FastPath fast = fast_path_for(spec);
        auto in_class = [&](const ColoredGraph & g) { return member(spec, g); };
        jobs = std::max(1, jobs);

        auto bases = enumerate_graphs(std::max(0, n - 1), in_class);
        for (auto & level : bases)
            for (auto & j : level) {
                auto ext = marked_extensions(j, n, in_class);
                vector<std::pair<int, int>> pairs;
                for (int a = 0; a < int(ext.size()); ++a)
                    for (int b = a; b < int(ext.size()); ++b)
                        pairs.emplace_back(a, b);

                std::atomic<long> first_fail{std::numeric_limits<long>::max()};
                std::atomic<long> specialised{0}, generic{0}, invalid{0}, validated{0};
                auto worker = [&](int t) {
                    for (long i = t; i < long(pairs.size()); i += jobs) {
                        if (i > first_fail.load())
                            break;
                        auto p = AmalgamProblem::over_prefix(ext[pairs[i].first], ext[pairs[i].second], j.size());
                        auto o = solve_one(spec, fast, p);
                        (o.specialised ? specialised : generic)++;
                        if (o.specialised && o.invalid)
                            ++generic;
                        if (o.invalid)
                            ++invalid;
                        if (o.ok)
                            ++validated;
                        if (! o.ok) {
                            long cur = first_fail.load();
                            while (i < cur && ! first_fail.compare_exchange_weak(cur, i))
                                ;
                        }
                    }
                };
                if (jobs == 1)
                    worker(0);
                else {
                    vector<std::thread> threads;
                    for (int t = 0; t < jobs; ++t)
                        threads.emplace_back(worker, t);
                    for (auto & th : threads)
                        th.join();
                }

                report.specialised += specialised;
                report.generic += generic;
                report.invalid += invalid;
                report.validated += validated;
                long fail = first_fail.load();
                report.problems += fail == std::numeric_limits<long>::max() ? long(pairs.size()) : fail + 1;
                if (fail != std::numeric_limits<long>::max()) {
                    report.holds = false;
                    report.counterexample
                        = AmalgamProblem::over_prefix(ext[pairs[fail].first], ext[pairs[fail].second], j.size());
                    report.verified_n = 0;
                    return report;
                }
            }
        report.verified_n = n;
        return report;
    }
}

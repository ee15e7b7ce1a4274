// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "problems.hh"

#include <cuhg/amalgamation.hh>
#include <cuhg/class_spec.hh>
#include <cuhg/classifier.hh>
#include <cuhg/errors.hh>
#include <cuhg/homogeneity.hh>
#include <cuhg/isomorphism.hh>
#include <cuhg/limit_builder.hh>
#include <cuhg/omitted.hh>
#include <cuhg/patterns.hh>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cuhg;
using std::string;
using std::vector;

namespace
{
    using Names = std::set<string>;

    struct Check
    {
        bool ok = true;
        std::ostringstream detail;

        auto require(bool cond, const string & what) -> void
        {
            if (! cond) {
                ok = false;
                detail << "; failed: " << what;
            }
        }
    };

    auto names_of(const OmittedSet & o) -> Names
    {
        auto v = o.names();
        return {v.begin(), v.end()};
    }

    auto show(const Names & n) -> string
    {
        string s = "{";
        for (auto & x : n)
            s += (s.size() > 1 ? ", " : "") + x;
        return s + "}";
    }

    // Level-4, budget-200 approximants shared by criteria 5 to 9.
    auto approximant(const string & family) -> const Approximant &
    {
        static std::map<string, Approximant> cache;
        auto it = cache.find(family);
        if (it == cache.end()) {
            BuildOptions opts;
            opts.level = 4;
            opts.budget = 200;
            it = cache.emplace(family, build_family(spec_by_name(family), opts)).first;
        }
        return it->second;
    }

    const vector<string> concordance_families = {"G(2,2)", "G(3,3)", "G(inf,inf)", "F21", "F(inf,1)", "F(inf,2)",
        "F(inf,inf)", "F(inf,1,2)", "F(inf,1,3)", "F(inf,2,2)", "F(inf,2,3)"};

    auto catalog_fidelity(Check & c) -> void
    {
        for (auto [g, h, name] : {std::tuple{pattern_D(), pattern_D_tilde(), "D"},
                 std::tuple{pattern_Tr(), pattern_Tr_tilde(), "Tr"}, std::tuple{pattern_Tb(), pattern_Tb_tilde(), "Tb"}})
            c.require(is_isomorphic(cross_complement(g), h).has_value(), string("cross complement of ") + name);
        auto d = pattern_D();
        c.require(d.size() == 4 && d.edge_count() == 5, "D has 4 vertices and 5 edges");
        c.require(catalog().size() == 12, "twelve families");
        c.detail << "D: " << d.size() << " vertices, " << d.edge_count() << " edges";
    }

    auto clique_union_table(Check & c) -> void
    {
        auto u = CliqueBound::unbounded(), two = CliqueBound::of(2);
        struct Case
        {
            CliqueBound s, t;
            Names expected;
        };
        vector<Case> cases = {{two, two, {"Kbar:red:3", "P3_red", "K:red:3"}}, {u, two, {"P3_red", "K:red:3"}},
            {two, u, {"Kbar:red:3", "P3_red"}}, {u, u, {"P3_red"}}};
        for (auto & k : cases) {
            auto spec = spec_red_clique_union(k.s, k.t);
            auto a = extension_closure(spec, ColoredGraph{}, 4, 40);
            auto got = names_of(minimally_omitted(a.graph, 3, Universe::red_only));
            c.detail << "(" << k.s.to_string() << "," << k.t.to_string() << ") " << show(got) << " ";
            c.require(got == k.expected, "table row (" + k.s.to_string() + "," + k.t.to_string() + ")");
        }
    }

    auto amalgamation_certificates(Check & c) -> void
    {
        vector<string> specs = {"F21", "F22", "F(inf,1)", "F(inf,2)", "F(inf,inf)", "F(inf,1,2)", "F(inf,1,3)",
            "F(inf,2,2)", "F(inf,2,3)"};
        for (auto r : {"2", "3", "inf"})
            for (auto b : {"2", "3", "inf"})
                specs.push_back(string("G(") + r + "," + b + ")");
        long problems = 0;
        for (auto & name : specs) {
            auto rep = check_amalgamation_property(spec_by_name(name), 4);
            problems += rep.problems;
            c.require(rep.holds && rep.verified_n == 4 && rep.invalid == 0, name);
        }
        c.detail << specs.size() << " classes, " << problems << " problems";
    }

    auto engine_equivalence(Check & c) -> void
    {
        long total = 0, failures = 0;
        for (auto [spec, engine] : {std::pair{spec_f21(), &amalgam_f21}, std::pair{spec_f22(), &amalgam_f22}}) {
            for (auto & p : suite::one_point_problems(spec, 5)) {
                ++total;
                bool ok = false;
                try {
                    ok = validate_amalgam(spec, p, engine(p));
                }
                catch (const InternalAssertion &) {
                }
                auto g = generic_amalgam(spec, p);
                ok = ok && g && validate_amalgam(spec, p, *g);
                failures += ! ok;
            }
        }
        c.require(failures == 0, std::to_string(failures) + " failing problems");
        c.detail << total << " problems, " << failures << " failures";
    }

    auto theorem_a_concordance(Check & c) -> void
    {
        int checked = 0, exempt = 0;
        for (auto & f : concordance_families) {
            auto & a = approximant(f);
            c.require(a.level >= 4, f + " reaches level 4");
            if (! theorem_a_precondition(a.graph).empty()) {
                ++exempt;
                continue;
            }
            ++checked;
            c.require(theorem_a_predicate(a.graph) == piecewise_check(a.graph), f);
        }
        c.detail << checked << " agree, " << exempt << " outside the precondition";
    }

    auto round_trips(Check & c) -> void
    {
        int n = 0;
        auto expect = [&](const string & got, const string & want) {
            ++n;
            c.require(got == want, want + " came back as " + got);
        };
        for (auto & f : concordance_families)
            expect(classify(approximant(f)).label.to_string(), f);
        for (auto f : {"F22", "GenericBipartite", "Matching", "CoMatching"})
            expect(classify(approximant(f)).label.to_string(), f);
        for (auto f : {"G(2,2)", "F21", "F(inf,2)"}) {
            auto & a = approximant(f);
            expect(classify(blow_up(a.graph, Color::red, 2), a.spec).label.to_string(),
                "BlowUpOf(" + string(f) + ", red, 2)");
        }
        for (auto f : {"G(3,3)", "F(inf,1)"}) {
            auto & a = approximant(f);
            expect(classify(class_complement(a.graph, Color::red), a.spec).label.to_string(),
                "ClassComplementOf(" + string(f) + ", red)");
        }
        c.detail << n << " round trips";
    }

    auto omitted_signatures(Check & c, std::map<string, OmittedSet> & sets) -> void
    {
        sets["F(inf,inf)"] = minimally_omitted(approximant("F(inf,inf)").graph, 4);
        sets["F22"] = minimally_omitted(approximant("F22").graph, 4);
        auto inf = names_of(sets["F(inf,inf)"]), f22 = names_of(sets["F22"]);
        c.require(inf == Names{"P3_red", "P3_blue", "D", "D~"}, "F(inf,inf) signature");
        c.require(f22 == Names{"P3_red", "P3_blue", "K:red:3", "K:blue:3", "Tr", "Tr~", "Tb", "Tb~"}, "F22 signature");
        c.detail << "F(inf,inf) " << show(inf) << " F22 " << show(f22);
    }

    auto structure_check(Check & c, std::map<string, OmittedSet> & sets) -> void
    {
        for (auto & [name, o] : sets)
            c.require(check_omitted_structure(o).pass, "structure of " + name);
        int scanned = 0;
        auto families = concordance_families;
        families.push_back("F22");
        for (auto & f : families) {
            auto o = sets.count(f) ? sets[f] : minimally_omitted(approximant(f).graph, 4);
            ++scanned;
            c.require(! o.contains(pattern_Qr()) && ! o.contains(pattern_Qb()), "Q patterns absent for " + f);
        }
        c.detail << sets.size() << " structure checks, " << scanned << " omitted sets scanned for Qr/Qb";
    }

    auto partition_lemma(Check & c) -> void
    {
        auto & f21 = approximant("F21");
        auto & f22 = approximant("F22");
        int v21 = partition_lemma_violations(f21.graph, Color::red);
        int v22r = partition_lemma_violations(f22.graph, Color::red);
        int v22b = partition_lemma_violations(f22.graph, Color::blue);
        c.require(f21.level >= 4 && f22.level >= 4, "level 4 approximants");
        c.require(v21 == 0 && v22r == 0 && v22b == 0, "zero violations");
        c.detail << "violations F21 " << v21 << ", F22 red " << v22r << ", F22 blue " << v22b;
    }

    auto falsification_probe(Check & c) -> void
    {
        auto spec = spec_baseline();
        spec.cap_size(Color::red, CliqueBound::of(3)).forbid("D");
        for (int n = 4; n <= 6; ++n) {
            auto rep = check_amalgamation_property(spec, n);
            c.require(rep.holds == ! rep.counterexample.has_value(), "verdict matches counterexample");
            c.require(rep.verified_n <= n, "verified_n within the searched range");
            if (rep.counterexample) {
                c.detail << "counterexample at n = " << n << ", " << rep.problems << " problems examined";
                return;
            }
            c.detail << "n = " << n << " inconclusive; ";
        }
        c.detail << "inconclusive-at-n 6";
    }
}

int main()
{
    using clock = std::chrono::steady_clock;
    std::map<string, OmittedSet> sets;
    struct Criterion
    {
        int id;
        string title;
        double limit_s;
        std::function<void(Check &)> body;
    };
    vector<Criterion> criteria = {
        {1, "catalog fidelity", 1, catalog_fidelity},
        {2, "clique-union omitted table", 10, clique_union_table},
        {3, "amalgamation certificates", 600, amalgamation_certificates},
        {4, "engine equivalence", 0, engine_equivalence},
        {5, "D and D~ criterion concordance", 300, theorem_a_concordance},
        {6, "classification round trips", 0, round_trips},
        {7, "omitted-set signatures", 0, [&](Check & c) { omitted_signatures(c, sets); }},
        {8, "omitted-set structure", 0, [&](Check & c) { structure_check(c, sets); }},
        {9, "partition lemma scan", 0, partition_lemma},
        {10, "falsification probe", 0, falsification_probe},
    };
    int failed = 0;
    for (auto & cr : criteria) {
        Check c;
        auto start = clock::now();
        try {
            cr.body(c);
        }
        catch (const std::exception & e) {
            c.require(false, string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        if (cr.limit_s > 0)
            c.require(secs < cr.limit_s, "runtime over " + std::to_string(int(cr.limit_s)) + " s");
        failed += ! c.ok;
        std::printf("%s criterion %d (%s): %s [%.2f s]\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(),
            c.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}

#include "oracles.hh"

#include <cuhg/classifier.hh>
#include <cuhg/errors.hh>
#include <cuhg/graph_io.hh>
#include <cuhg/patterns.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace cuhg;

namespace
{
    auto level4(const ClassSpec & spec) -> Approximant
    {
        BuildOptions opts;
        opts.level = 4;
        return build_family(spec, opts);
    }

    auto label_of(const Approximant & a) -> std::string { return classify(a).label.to_string(); }
}

TEST_SUITE("homogeneity-classifier")
{
    TEST_CASE("family labels")
    {
        auto only_blue_edge = spec_baseline();
        only_blue_edge.forbid("K:blue:2");
        CHECK(label_of(level4(only_blue_edge)) == "F(inf,1)");
        CHECK(label_of(level4(spec_A(CliqueBound::of(2), CliqueBound::of(2)))) == "G(2,2)");
        CHECK(label_of(level4(spec_f21())) == "F21");
        CHECK(label_of(level4(spec_f_inf_2(3))) == "F(inf,2,3)");
        CHECK(label_of(level4(spec_f_inf_1().swapped())) == "ColorsSwapped(F(inf,1))");
    }

    TEST_CASE("bipartite cases")
    {
        auto matching = graph_from_text("n 6\ncolors rrrbbb\ne 0 3\ne 1 4\ne 2 5\n");
        CHECK(classify(matching).label.to_string() == "Matching");
        CHECK(classify(cross_complement(matching)).label.to_string() == "CoMatching");
        CHECK(classify(oracle::make("rrbb", {})).label.to_string() == "HomogeneouslyConnected");
        CHECK(label_of(level4(spec_generic_bipartite())) == "GenericBipartite");
        // unequal sides admit no perfect matching
        CHECK_THROWS_AS(classify(oracle::make("rrb", {{0, 2}})), UnclassifiableAtLevel);
    }

    TEST_CASE("wrappers")
    {
        auto g22 = level4(spec_A(CliqueBound::of(2), CliqueBound::of(2)));
        auto c = classify(blow_up(g22.graph, Color::red, 3), g22.spec);
        CHECK(c.label.to_string() == "BlowUpOf(G(2,2), red, 3)");
        CHECK(c.evidence.reductions.size() == 1);

        auto f21 = level4(spec_f21());
        CHECK(classify(class_complement(f21.graph, Color::blue), f21.spec).label.to_string()
            == "ClassComplementOf(F21, blue)");
        auto both = class_complement(class_complement(f21.graph, Color::red), Color::blue);
        CHECK(classify(both, f21.spec).label.to_string() == "ClassComplementOf(F21, red+blue)");
        auto wrapped = class_complement(blow_up(f21.graph, Color::red, 2), Color::red);
        CHECK(classify(wrapped, f21.spec).label.to_string() == "ClassComplementOf(BlowUpOf(F21, red, 2), red)");
    }

    TEST_CASE("bare graphs report observed bounds")
    {
        auto g22 = level4(spec_A(CliqueBound::of(2), CliqueBound::of(2)));
        auto c = classify(g22.graph);
        CHECK(c.label.to_string() == "G(2,2)");
        CHECK(c.label.tags == std::vector<std::string>{"observed-bounds"});
        CHECK(c.evidence.d_realized);
        CHECK(c.evidence.dtilde_realized);

        auto gu = level4(spec_A(CliqueBound::unbounded(), CliqueBound::unbounded()));
        CHECK(classify(gu).label.to_string() == "G(inf,inf)");
        CHECK(classify(gu.graph).label.tags.size() == 1);
    }

    TEST_CASE("isomorphism invariance")
    {
        std::mt19937_64 rng(3);
        for (auto name : {"F21", "F(inf,2)", "G(3,3)"}) {
            auto a = level4(spec_by_name(name));
            std::vector<int> perm(a.graph.size());
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(classify(relabel(a.graph, perm), a.spec).label.to_string() == label_of(a));
        }
    }

    TEST_CASE("G(r,b) inputs realize the triangle patterns")
    {
        auto a = level4(spec_A(CliqueBound::of(3), CliqueBound::of(3)));
        REQUIRE(label_of(a) == "G(3,3)");
        auto p = class_profile(a.graph);
        CHECK(p.omega_red >= 2);
        CHECK(p.omega_blue >= 2);
        for (auto g : {pattern_Tr(), pattern_Tr_tilde(), pattern_Tb(), pattern_Tb_tilde(), pattern_Qr(), pattern_Qb()})
            CHECK(contains_induced(a.graph, g));
    }

    TEST_CASE("unsaturated approximants are reported")
    {
        BuildOptions opts;
        opts.level = 2;
        auto a = build_family(spec_f22(), opts);
        try {
            classify(a.graph);
            FAIL("expected UnclassifiableAtLevel");
        }
        catch (const UnclassifiableAtLevel & e) {
            CHECK(std::string(e.what()).find("F22") != std::string::npos);
        }
    }

    TEST_CASE("preconditions")
    {
        CHECK_THROWS_AS(classify(oracle::make("rrrr", {{0, 1}, {1, 2}, {2, 3}})), PreconditionError);
        auto g22 = level4(spec_A(CliqueBound::of(2), CliqueBound::of(2)));
        CHECK_THROWS_AS(classify(g22.graph, spec_f21()), PreconditionError);
    }

    TEST_CASE("evidence JSON")
    {
        auto c = classify(level4(spec_f_inf_2()));
        auto j = to_json(c.evidence);
        CHECK(j["omitted"]["bound"] == 4);
        CHECK(j["d_realized"] == false);
        auto l = to_json(c.label);
        CHECK(l["label"] == "F(inf,2)");
    }
}

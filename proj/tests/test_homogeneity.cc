#include "oracles.hh"

#include <cuhg/class_spec.hh>
#include <cuhg/errors.hh>
#include <cuhg/homogeneity.hh>
#include <cuhg/limit_builder.hh>
#include <cuhg/patterns.hh>

#include <doctest.h>

#include <random>

using namespace cuhg;
using oracle::make;

namespace
{
    auto level4(const ClassSpec & spec) -> Approximant
    {
        BuildOptions opts;
        opts.level = 4;
        return build_family(spec, opts);
    }
}

TEST_SUITE("homogeneity-classifier")
{
    TEST_CASE("finite ultrahomogeneity")
    {
        CHECK(is_ultrahomogeneous_finite(complete_graph(Color::red, 3)));
        CHECK(! is_ultrahomogeneous_finite(make("rrrr", {{0, 1}, {1, 2}, {2, 3}})));
        CHECK(is_ultrahomogeneous_finite(ColoredGraph{}));
        // D: a red vertex of blue degree 3 next to one of degree 2
        CHECK(is_ultrahomogeneous_finite(pattern_D()) == oracle::ultrahomogeneous(pattern_D()));
        CHECK(! is_ultrahomogeneous_finite(pattern_D()));
        CHECK_THROWS_AS(is_ultrahomogeneous_finite(complete_graph(Color::red, 13)), PreconditionError);
    }

    TEST_CASE("finite ultrahomogeneity against the oracle")
    {
        std::mt19937_64 rng(11);
        int uh = 0;
        for (int i = 0; i < 300; ++i) {
            auto g = oracle::random_graph(rng, 2 + i % 5, i % 3 == 0 ? 0.2 : 0.5);
            bool v = is_ultrahomogeneous_finite(g);
            CHECK(v == oracle::ultrahomogeneous(g));
            uh += v;
        }
        CHECK(uh > 0);
        for (auto & p : catalog())
            CHECK(is_ultrahomogeneous_finite(p.graph) == oracle::ultrahomogeneous(p.graph));
    }

    TEST_CASE("k-homogeneity")
    {
        CHECK(k_homogeneity(make("rrrr", {{0, 1}, {1, 2}, {2, 3}}), 0));
        CHECK(! k_homogeneity(make("rrrr", {{0, 1}, {1, 2}, {2, 3}}), 2));
        CHECK(k_homogeneity(complete_graph(Color::blue, 5), 4));
        CHECK_THROWS_AS(k_homogeneity(ColoredGraph{}, 6), PreconditionError);

        // a finite graph is ultrahomogeneous iff it is n-homogeneous
        std::mt19937_64 rng(5);
        for (int i = 0; i < 200; ++i) {
            auto g = oracle::random_graph(rng, 2 + i % 4);
            CHECK(k_homogeneity(g, g.size()) == oracle::ultrahomogeneous(g));
        }
    }

    TEST_CASE("approximants are k-homogeneous below their level")
    {
        auto a = level4(spec_f22());
        REQUIRE(a.level == 4);
        CHECK(k_homogeneity(a.graph, 3));

        int broken = 0;
        for (int x = 0; x < a.graph.size(); ++x) {
            std::vector<int> keep;
            for (int v = 0; v < a.graph.size(); ++v)
                if (v != x)
                    keep.push_back(v);
            broken += ! k_homogeneity(induced_subgraph(a.graph, keep), 3);
        }
        CHECK(broken > 0);
    }

    TEST_CASE("piecewise check")
    {
        auto g22 = level4(spec_A(CliqueBound::of(2), CliqueBound::of(2)));
        auto rep = piecewise_report(g22.graph);
        CHECK(rep.holds);
        CHECK(rep.pieces.size() == 4);

        auto f21 = level4(spec_f21());
        CHECK(! piecewise_check(f21.graph));

        auto joined = join(complete_graph(Color::red, 3), complete_graph(Color::blue, 2));
        auto jr = piecewise_report(joined);
        CHECK(jr.holds);
        REQUIRE(jr.pieces.size() == 1);
        CHECK(jr.pieces[0].homogeneous);

        // pieces of 12 or fewer vertices are decided exactly
        auto small = piecewise_report(join(complete_graph(Color::red, 2), complete_graph(Color::blue, 2)));
        CHECK(small.pieces.at(0).kind == "exact");
        auto lone = piecewise_report(make("rrbb", {{0, 1}, {2, 3}, {0, 2}}));
        CHECK(lone.pieces.at(0).kind == "none");
        CHECK(! piecewise_check(make("rrbb", {{0, 1}, {2, 3}, {0, 2}})));
        CHECK_THROWS_AS(piecewise_check(make("rrr", {{0, 1}, {1, 2}})), PreconditionError);
    }

    TEST_CASE("large pieces use the taxonomy")
    {
        auto a = build_family(spec_A(CliqueBound::of(1), CliqueBound::of(1)), BuildOptions{});
        auto rep = piecewise_report(a.graph);
        REQUIRE(rep.pieces.size() == 1);
        CHECK(rep.pieces[0].order > max_exact_uh_order);
        CHECK(rep.pieces[0].kind == "generic");
        CHECK(rep.holds);

        // thirteen red and blue vertices joined by a perfect matching, both classes cliques
        ColoredGraph g;
        for (int i = 0; i < 13; ++i)
            g.add_vertex(Color::red);
        for (int i = 0; i < 13; ++i)
            g.add_vertex(Color::blue);
        for (int i = 0; i < 13; ++i)
            for (int j = i + 1; j < 13; ++j) {
                g.set_edge(i, j);
                g.set_edge(13 + i, 13 + j);
            }
        for (int i = 0; i < 13; ++i)
            g.set_edge(i, 13 + i);
        CHECK(piecewise_report(g).pieces.at(0).kind == "matching");
        CHECK(piecewise_report(cross_complement(g)).pieces.at(0).kind == "co-matching");
        g.set_edge(0, 14);
        CHECK(piecewise_report(g).pieces.at(0).kind == "none");
    }

    TEST_CASE("D and D~ criterion")
    {
        auto g33 = level4(spec_A(CliqueBound::of(3), CliqueBound::of(3)));
        CHECK(theorem_a_precondition(g33.graph).empty());
        CHECK(theorem_a_predicate(g33.graph));
        CHECK(piecewise_check(g33.graph));

        auto f2 = level4(spec_f_inf_2());
        CHECK(theorem_a_precondition(f2.graph).empty());
        CHECK(! theorem_a_predicate(f2.graph));
        CHECK(! piecewise_check(f2.graph));

        auto f22 = level4(spec_f22());
        CHECK(theorem_a_precondition(f22.graph) == "graph has the F22 shape");
        CHECK_THROWS_AS(theorem_a_predicate(f22.graph), PreconditionError);

        CHECK(! theorem_a_precondition(blow_up(g33.graph, Color::red, 2)).empty());
        CHECK(! theorem_a_precondition(make("rb", {{0, 1}})).empty());
    }
}

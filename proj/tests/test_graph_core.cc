#include "oracles.hh"

#include <cuhg/enumerate.hh>
#include <cuhg/errors.hh>
#include <cuhg/graph_io.hh>
#include <cuhg/isomorphism.hh>
#include <cuhg/limit_builder.hh>
#include <cuhg/patterns.hh>

#include <doctest.h>

using namespace cuhg;
using oracle::make;

TEST_SUITE("graph-core")
{
    TEST_CASE("colours and clique bounds")
    {
        CHECK(complement_color(Color::red) == Color::blue);
        CHECK(complement_color(Color::blue) == Color::red);
        CHECK(CliqueBound::of(3) < CliqueBound::unbounded());
        CHECK(CliqueBound::of(2).successor() == CliqueBound::of(3));
        CHECK(CliqueBound::unbounded().successor() == CliqueBound::unbounded());
        CHECK(CliqueBound::parse("inf") == CliqueBound::unbounded());
        CHECK(CliqueBound::parse("7") == CliqueBound::of(7));
        CHECK(! CliqueBound::parse("x"));
    }

    TEST_CASE("induced subgraph")
    {
        auto d = pattern_D();
        auto e = induced_subgraph(d, std::vector<int>{0, 2});
        CHECK(e.size() == 2);
        CHECK(e.color(0) == Color::red);
        CHECK(e.color(1) == Color::blue);
        CHECK(e.adjacent(0, 1));
        CHECK(induced_subgraph(d, std::vector<int>{0, 1, 2, 3}) == d);
        CHECK(induced_subgraph(d, std::vector<int>{}).size() == 0);
        CHECK_THROWS_AS(induced_subgraph(d, std::vector<int>{0, 9}), PreconditionError);
    }

    TEST_CASE("isomorphism")
    {
        auto tr = pattern_Tr();
        auto swapped = relabel(tr, {1, 0, 2});
        auto m = is_isomorphic(tr, swapped);
        REQUIRE(m);
        CHECK(is_induced_embedding(tr, swapped, *m));
        CHECK(! is_isomorphic(pattern_Tr(), pattern_Tb()));

        SUBCASE("agrees with the permutation oracle on random 6-vertex graphs")
        {
            std::mt19937_64 rng(11);
            std::vector<ColoredGraph> gs;
            for (int i = 0; i < 50; ++i)
                gs.push_back(oracle::random_graph(rng, 6, i % 2 ? 0.5 : 0.2));
            // a few guaranteed positives
            for (int i = 0; i < 10; ++i) {
                std::vector<int> perm{5, 3, 1, 0, 2, 4};
                gs.push_back(relabel(gs[i], perm));
            }
            int disagreements = 0, positives = 0;
            for (std::size_t i = 0; i < gs.size(); ++i)
                for (std::size_t j = i; j < gs.size(); ++j) {
                    bool expect = oracle::isomorphic(gs[i], gs[j]);
                    auto got = is_isomorphic(gs[i], gs[j]);
                    auto brute = is_isomorphic(gs[i], gs[j], IsoMethod::exhaustive);
                    positives += expect;
                    if (expect != got.has_value() || expect != brute.has_value())
                        ++disagreements;
                    if (got)
                        CHECK(is_induced_embedding(gs[i], gs[j], *got));
                }
            CHECK(disagreements == 0);
            CHECK(positives > 60);
        }
    }

    TEST_CASE("cross complement")
    {
        auto dt = cross_complement(pattern_D());
        CHECK(oracle::edge_set(dt) == std::set<std::pair<int, int>>{{0, 1}, {1, 3}, {2, 3}});
        CHECK(is_isomorphic(dt, pattern_D_tilde()));

        auto pair = make("rb", {});
        CHECK(cross_complement(pair).adjacent(0, 1));

        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            auto g = oracle::random_graph(rng, 7);
            CHECK(cross_complement(cross_complement(g)) == g);
            CHECK(cross_complement(class_complement(g, Color::red)) == class_complement(cross_complement(g), Color::red));
        }
    }

    TEST_CASE("class complement")
    {
        auto k2 = make("rr", {{0, 1}});
        CHECK(class_complement(k2, Color::red).edge_count() == 0);

        // symmetric difference with the complete graph on the red class
        auto tr = pattern_Tr();
        auto expect = oracle::edge_set(tr);
        expect.erase({0, 1});
        auto got = class_complement(tr, Color::red);
        CHECK(oracle::edge_set(got) == expect);
        CHECK(got.adjacent(0, 2));
        CHECK(got.adjacent(1, 2));
        CHECK(! got.adjacent(0, 1));

        std::mt19937_64 rng(6);
        for (int i = 0; i < 100; ++i) {
            auto g = oracle::random_graph(rng, 7);
            CHECK(class_complement(class_complement(g, Color::blue), Color::blue) == g);
        }
    }

    TEST_CASE("blow-up")
    {
        auto rb = make("rb", {{0, 1}});
        auto g = blow_up(rb, Color::red, 2);
        CHECK(is_isomorphic(g, pattern_Tr()));

        // r - b - r expanded by hand: reds 0,1 | 2,3 then b
        auto path = make("rbr", {{0, 1}, {1, 2}});
        auto five = blow_up(path, Color::red, 2);
        auto hand = make("rrrrb", {{0, 1}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
        CHECK(five.size() == 5);
        CHECK(is_isomorphic(five, hand));

        CHECK_THROWS_AS(blow_up(make("rr", {}), Color::red, 1), PreconditionError);
        CHECK_THROWS_AS(blow_up(pattern_P3(Color::red), Color::red, 2), PreconditionError);
    }

    TEST_CASE("detect_blow_up inverts blow_up")
    {
        auto d = detect_blow_up(pattern_Tr());
        REQUIRE(d);
        CHECK(d->color == Color::red);
        CHECK(d->factor == 2);
        CHECK(is_isomorphic(d->base, make("rb", {{0, 1}})));

        CHECK(! detect_blow_up(make("r", {})));
        CHECK(! detect_blow_up(build_family(spec_f22(), BuildOptions{}).graph));
        CHECK_THROWS_AS(detect_blow_up(pattern_P3(Color::red)), PreconditionError);

        SUBCASE("exhaustive over small bases")
        {
            // red independent, blue a clique union, at most 6 vertices
            auto graphs = enumerate_graphs(6, [](const ColoredGraph & h) {
                for (auto [u, v] : h.edges())
                    if (h.color(u) == Color::red && h.color(v) == Color::red)
                        return false;
                return clique_partition(h, Color::blue).has_value();
            });
            int checked = 0, failures = 0;
            for (auto & level : graphs)
                for (auto & h : level) {
                    if (h.count(Color::red) == 0)
                        continue;
                    for (int i = 2; i <= 3; ++i) {
                        auto g = blow_up(h, Color::red, i);
                        auto back = detect_blow_up(g);
                        ++checked;
                        if (! back || back->color != Color::red || back->factor != i || ! is_isomorphic(back->base, h))
                            ++failures;
                    }
                }
            CHECK(checked > 100);
            CHECK(failures == 0);
        }
    }

    TEST_CASE("class profile")
    {
        auto p = class_profile(pattern_D());
        CHECK(p.omega_red == 2);
        CHECK(p.omega_blue == 2);
        CHECK(p.alpha_red == 1);
        CHECK(p.alpha_blue == 1);
        CHECK(! p.homogeneously_connected);

        CHECK(! class_profile(pattern_P3(Color::red)).p3_free_red);

        auto kk = class_profile(blow_up(edgeless_graph(Color::red, 2), Color::red, 3));
        CHECK(kk.omega_red == 3);
        CHECK(kk.alpha_red == 2);

        auto empty = class_profile(ColoredGraph{});
        CHECK(empty.omega_red == 0);
        CHECK(empty.alpha_blue == 0);

        auto h = make("rb", {{0, 1}});
        CHECK(class_profile(h).homogeneously_connected);
        CHECK(class_profile(blow_up(h, Color::red, 2)).omega_red == 2);
    }

    TEST_CASE("join and disjoint union")
    {
        auto k2 = complete_graph(Color::red, 2);
        auto b = complete_graph(Color::blue, 1);
        CHECK(is_isomorphic(join(k2, b), pattern_Tr()));
        CHECK(is_isomorphic(disjoint_union(k2, b), pattern_Tr_tilde()));
        CHECK(join(pattern_D(), ColoredGraph{}) == pattern_D());
    }

    TEST_CASE("text and JSON formats round-trip")
    {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 30; ++i) {
            auto g = oracle::random_graph(rng, 9);
            auto text = to_text(g);
            CHECK(graph_from_text(text) == g);
            CHECK(to_text(graph_from_text(text)) == text);
            auto j = to_json(g);
            CHECK(graph_from_json(j) == g);
            CHECK(to_json(graph_from_json(j)) == j);
            CHECK(parse_graph(j.dump()) == g);
        }
    }

    TEST_CASE("malformed input is rejected with a location")
    {
        CHECK_THROWS_WITH_AS(graph_from_text("n 2\ncolors rx\n"), doctest::Contains("line 2"), InputError);
        CHECK_THROWS_WITH_AS(graph_from_text("n 2\ncolors rb\ne 0 5\n"), doctest::Contains("line 3"), InputError);
        CHECK_THROWS_WITH_AS(graph_from_text("n 2\ncolors rb\ne 0 1\ne 1 0\n"), doctest::Contains("duplicate"), InputError);
        CHECK_THROWS_AS(graph_from_text("colors rb\n"), InputError);
        CHECK_THROWS_WITH_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":[{"id":0,"color":"green"}],"edges":[]})")),
            doctest::Contains("vertices[0]"), InputError);
        // several edges in one file
        auto g = graph_from_text("n 4\ncolors rrbb\ne 0 1\ne 2 3\ne 0 2\n");
        CHECK(g.edge_count() == 3);
    }
}

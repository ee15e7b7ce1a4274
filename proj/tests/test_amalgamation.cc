#include "oracles.hh"
#include "problems.hh"

#include <cuhg/amalgamation.hh>
#include <cuhg/class_spec.hh>
#include <cuhg/errors.hh>
#include <cuhg/patterns.hh>

#include <doctest.h>

using namespace cuhg;
using oracle::make;

namespace
{
    auto red_k3_cap_without_d() -> ClassSpec
    {
        auto s = spec_baseline();
        s.cap_size(Color::red, CliqueBound::of(3)).forbid("D");
        return s;
    }
}

TEST_SUITE("amalgamation-engine")
{
    TEST_CASE("membership")
    {
        CHECK(! member(spec_f22(), pattern_Tr()));
        CHECK(member(spec_A(CliqueBound::of(2), CliqueBound::of(2)), ColoredGraph{}));
        CHECK(! member(spec_f21(), complete_graph(Color::blue, 2)));
        CHECK(! member(spec_baseline(), pattern_P3(Color::blue)));
        CHECK(member(spec_baseline(), pattern_D()));
        auto three = disjoint_union(complete_graph(Color::red, 1), disjoint_union(complete_graph(Color::red, 1), complete_graph(Color::red, 1)));
        CHECK(! member(spec_f_inf_1(2), three));
        CHECK(member(spec_f_inf_1(3), three));
    }

    TEST_CASE("spec files")
    {
        auto j = nlohmann::json::parse(R"({"forbidden":["Tr","Tr~","K:red:3","Kbar:blue:2",
            {"custom": {"vertices":[{"id":0,"color":"red"},{"id":1,"color":"blue"}],"edges":[[0,1]]}}],
            "max_clique_size":{"red":"inf","blue":2},"max_clique_count":{"red":3,"blue":"inf"}})");
        auto s = spec_from_json(j);
        CHECK(s.size_cap(Color::red) == CliqueBound::of(2));
        CHECK(s.count_cap(Color::blue) == CliqueBound::of(1));
        CHECK(s.count_cap(Color::red) == CliqueBound::of(3));
        CHECK(! member(s, make("rb", {{0, 1}})));
        CHECK(same_constraints(spec_from_json(to_json(s)), s));
        for (auto name : {"F21", "F22", "F(inf,1)", "F(inf,2,3)", "F(inf,inf)", "G(2,inf)", "Matching"})
            CHECK(same_constraints(spec_from_json(to_json(spec_by_name(name))), spec_by_name(name)));
        CHECK_THROWS_AS(spec_by_name("F(9,9)"), InputError);
        CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"forbidden":["Nope"]})")), InputError);
    }

    TEST_CASE("F21 engine")
    {
        // j = b; a1 = b + red edge r r' with b ~ r; a2 = b + red v, v not ~ b
        auto a1 = make("brr", {{0, 1}, {1, 2}});
        auto a2 = make("br", {});
        auto p = AmalgamProblem::over_prefix(a1, a2, 1);
        auto r = amalgam_f21(p);
        CHECK(validate_amalgam(spec_f21(), p, r));
        CHECK(r.a.size() <= a1.size() + 1);

        // degenerate: a2 = j = a1
        auto q = AmalgamProblem::over_prefix(a1, a1, 3);
        auto rq = amalgam_f21(q);
        CHECK(rq.a == a1);
        CHECK(rq.kappa1 == PartialMap::identity(3));

        CHECK_THROWS_AS(amalgam_f21(AmalgamProblem::over_prefix(pattern_Tr(), make("rr", {{0, 1}}), 1)), PreconditionError);
    }

    TEST_CASE("F22 engine")
    {
        auto p = AmalgamProblem::over_prefix(complete_graph(Color::red, 2), complete_graph(Color::red, 1), 0);
        auto r = amalgam_f22(p);
        CHECK(validate_amalgam(spec_f22(), p, r));

        // blue new vertex
        auto a1 = make("rrb", {{0, 1}, {0, 2}});
        auto a2 = make("rrb", {{0, 1}, {1, 2}});
        auto q = AmalgamProblem::over_prefix(a1, a2, 2);
        auto rq = amalgam_f22(q);
        CHECK(validate_amalgam(spec_f22(), q, rq));
        CHECK(rq.a.size() <= a1.size() + 1);
    }

    TEST_CASE("engines on the one-point suite, |a1| <= 4")
    {
        for (auto [spec, engine] : {std::pair{spec_f21(), &amalgam_f21}, std::pair{spec_f22(), &amalgam_f22}}) {
            auto problems = suite::one_point_problems(spec, 4);
            CHECK(problems.size() > 100);
            int bad = 0, generic_bad = 0, oversize = 0;
            for (auto & p : problems) {
                auto r = engine(p);
                bad += ! validate_amalgam(spec, p, r);
                oversize += r.a.size() > p.a1.size() + 1;
                auto g = generic_amalgam(spec, p);
                generic_bad += ! g || ! validate_amalgam(spec, p, *g);
            }
            CHECK(bad == 0);
            CHECK(oversize == 0);
            CHECK(generic_bad == 0);
        }
    }

    TEST_CASE("generic amalgam")
    {
        // free amalgam in the unconstrained cross class
        auto spec = spec_A(CliqueBound::of(2), CliqueBound::of(2));
        auto p = AmalgamProblem::over_prefix(make("rb", {{0, 1}}), make("rr", {{0, 1}}), 1);
        auto r = generic_amalgam(spec, p);
        REQUIRE(r);
        CHECK(validate_amalgam(spec, p, *r));

        // identification: only a single red vertex is allowed
        auto lone = spec_baseline();
        lone.cap_size(Color::red, CliqueBound::of(1)).cap_count(Color::red, CliqueBound::of(1));
        auto one = complete_graph(Color::red, 1);
        auto q = AmalgamProblem::over_prefix(one, one, 0);
        auto rq = generic_amalgam(lone, q);
        REQUIRE(rq);
        CHECK(rq->a.size() == 1);
    }

    TEST_CASE("generic amalgam is complete on its search space")
    {
        auto spec = red_k3_cap_without_d();
        auto problems = suite::one_point_problems(spec, 4);
        int absent = 0, confirmed = 0, positives = 0, positives_confirmed = 0;
        for (std::size_t i = 0; i < problems.size(); ++i) {
            auto & p = problems[i];
            auto r = generic_amalgam(spec, p);
            if (! r) {
                ++absent;
                confirmed += ! suite::amalgam_exists(spec, p);
            }
            else if (i % 17 == 0) {
                ++positives;
                positives_confirmed += suite::amalgam_exists(spec, p);
            }
        }
        CHECK(absent > 0);
        CHECK(confirmed == absent);
        CHECK(positives_confirmed == positives);
    }

    TEST_CASE("amalgamation property reports")
    {
        auto r = check_amalgamation_property(spec_f21(), 4);
        CHECK(r.holds);
        CHECK(r.verified_n == 4);
        CHECK(r.invalid == 0);
        CHECK(r.problems > 0);

        auto bad = check_amalgamation_property(red_k3_cap_without_d(), 4);
        CHECK(! bad.holds);
        REQUIRE(bad.counterexample);
        CHECK(problem_defect(red_k3_cap_without_d(), *bad.counterexample).empty());
        CHECK(! generic_amalgam(red_k3_cap_without_d(), *bad.counterexample));

        // parallel runs report the same first counterexample
        auto par = check_amalgamation_property(red_k3_cap_without_d(), 4, 3);
        REQUIRE(par.counterexample);
        CHECK(par.counterexample->a1 == bad.counterexample->a1);
        CHECK(par.counterexample->a2 == bad.counterexample->a2);
    }
}

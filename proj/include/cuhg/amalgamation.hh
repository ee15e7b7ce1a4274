#pragma once

#include <cuhg/class_spec.hh>

#include <optional>
#include <string>
#include <vector>

namespace cuhg
{
    struct AmalgamProblem
    {
        ColoredGraph j, a1, a2;
        PartialMap iota1, iota2;

        /// Problem where j is the induced subgraph on the first |j| vertices of
        /// both a1 and a2 and the embeddings are inclusions.
        static auto over_prefix(const ColoredGraph & a1, const ColoredGraph & a2, int j_size) -> AmalgamProblem;
    };

    /// a contains a1 as its first |a1| vertices, so kappa1 is the inclusion.
    struct AmalgamResult
    {
        ColoredGraph a;
        PartialMap kappa1, kappa2;
    };

    /// Empty string when the problem is well formed for spec, else the reason.
    auto problem_defect(const ClassSpec & spec, const AmalgamProblem & p) -> std::string;

    /// Empty string when r is a valid amalgam (commuting square, induced
    /// embeddings, membership), else the reason.
    auto amalgam_defect(const ClassSpec & spec, const AmalgamProblem & p, const AmalgamResult & r) -> std::string;

    auto validate_amalgam(const ClassSpec & spec, const AmalgamProblem & p, const AmalgamResult & r) -> bool;

    /// The hand-written amalgamation procedures for F21 and F22. Problems with
    /// several new vertices are processed one vertex at a time, red before
    /// blue, then by id. Throws PreconditionError on bad input and
    /// InternalAssertion if a step the construction rules out is reached.
    auto amalgam_f21(const AmalgamProblem & p) -> AmalgamResult;
    auto amalgam_f22(const AmalgamProblem & p) -> AmalgamResult;

    /// Exhaustive search: identify each new vertex of a2 with an existing
    /// vertex, or add it to a clique and choose its cross edges. Returns
    /// nullopt only when no amalgam on at most |a1| + |a2| - |j| vertices exists.
    auto generic_amalgam(const ClassSpec & spec, const AmalgamProblem & p) -> std::optional<AmalgamResult>;

    struct APReport
    {
        bool holds = true;
        /// Largest size checked; never extrapolated beyond.
        int verified_n = 0;
        std::optional<AmalgamProblem> counterexample;
        long problems = 0;
        long validated = 0;
        long specialised = 0;
        long generic = 0;
        /// Amalgams that failed re-validation (always expected to be zero).
        long invalid = 0;
    };

    /// Checks every problem (j, a1, a2) with |a1|, |a2| <= n, up to
    /// isomorphism fixing j and swapping a1 with a2, in canonical order.
    /// The first counterexample in that order is reported regardless of jobs.
    auto check_amalgamation_property(const ClassSpec & spec, int n, int jobs = 1) -> APReport;
}

#pragma once

#include <cuhg/class_spec.hh>
#include <cuhg/colored_graph.hh>
#include <cuhg/limit_builder.hh>
#include <cuhg/omitted.hh>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cuhg
{
    struct LabelWrapper
    {
        enum class Kind
        {
            blow_up,
            class_complement,
            colors_swapped
        };

        Kind kind;
        Color color = Color::red;
        int factor = 0;
        /// class_complement only; both colours print as "red+blue"
        bool both_colors = false;

        auto apply(const std::string & inner) const -> std::string;
    };

    struct FamilyLabel
    {
        /// e.g. "G(2,inf)", "F(inf,1,3)", "Matching"
        std::string base;
        /// innermost first
        std::vector<LabelWrapper> wrappers;
        /// "observed-bounds" when family bounds were read off the graph
        std::vector<std::string> tags;

        auto to_string() const -> std::string;
    };

    struct ClassificationEvidence
    {
        ColorClassProfile profile;
        bool d_realized = false, dtilde_realized = false;
        /// Empty (bound 0) unless the signature branch ran.
        OmittedSet omitted;
        /// Reduction steps in the order they were applied to the input.
        std::vector<std::string> reductions;
        bool piecewise = false;
        std::vector<std::string> candidates;
    };

    struct Classification
    {
        FamilyLabel label;
        ClassificationEvidence evidence;
    };

    /// Reduces g by blow-up collapse and class complementation, then labels
    /// the basic graph. base_spec, when given, describes the reduced graph's
    /// class; its caps fix the G(r,b) and F^k parameters. Without it bounds
    /// are the observed clique counts and the label is tagged observed-bounds.
    /// Throws UnclassifiableAtLevel when no family fits.
    auto classify(const ColoredGraph & g, const std::optional<ClassSpec> & base_spec = std::nullopt) -> Classification;
    auto classify(const Approximant & a) -> Classification;
    /// Builds the family approximant first.
    auto classify(const ClassSpec & spec, const BuildOptions & opts) -> Classification;

    auto to_json(const FamilyLabel & l) -> nlohmann::json;
    auto to_json(const ClassificationEvidence & e) -> nlohmann::json;
}

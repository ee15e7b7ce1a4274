#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace cuhg
{
    inline constexpr const char * tool_version = "0.1.0";

    struct RunConfig
    {
        /// build, classify, omitted, amalgam-check, uh-check, piecewise-check or catalog
        std::string command;
        /// graph or approximant file (text or JSON)
        std::string in;
        /// report destination; stdout when empty
        std::string out;
        /// classify: separate evidence file
        std::string evidence;
        /// family name (e.g. "F(inf,2)") or spec JSON file
        std::string spec;
        int level = 4;
        int budget = 200;
        std::optional<std::uint64_t> seed;
        /// omitted: size bound k
        int bound = 4;
        std::string universe = "all";
        /// amalgam-check: largest |a1|, |a2|
        int max_size = 4;
        int jobs = 1;
        /// json or text
        std::string format = "json";
    };

    /// Exit codes: 0 success, 1 input error, 2 indeterminate (unclassifiable,
    /// target level not reached), 3 internal assertion.
    namespace exit_code
    {
        inline constexpr int ok = 0, input_error = 1, indeterminate = 2, internal = 3;
    }

    /// Runs one command and writes its report. FF_SEED in the environment
    /// overrides config.seed. Errors are reported on err.
    auto run(const RunConfig & config, std::ostream & out, std::ostream & err) -> int;

    /// Everything in a report except "timestamp" is a function of the config and inputs.
    auto strip_volatile(nlohmann::json report) -> nlohmann::json;
}

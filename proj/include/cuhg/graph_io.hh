#pragma once

#include <cuhg/colored_graph.hh>

#include <json.hpp>

#include <string>
#include <string_view>

namespace cuhg
{
    /// "n <count>", "colors <r|b...>", then one "e u v" line per edge (u < v, sorted).
    auto to_text(const ColoredGraph & g) -> std::string;

    /// Throws InputError with a line number on malformed input.
    auto graph_from_text(std::string_view text) -> ColoredGraph;

    auto to_json(const ColoredGraph & g) -> nlohmann::json;

    auto to_json(const ColorClassProfile & p) -> nlohmann::json;

    /// Throws InputError naming the offending field.
    auto graph_from_json(const nlohmann::json & j) -> ColoredGraph;

    /// JSON if the first non-blank character is '{', text otherwise. A JSON
    /// object with a "graph" member (an approximant file) yields that graph.
    auto parse_graph(std::string_view content) -> ColoredGraph;

    auto read_file(const std::string & path) -> std::string;
    auto write_file(const std::string & path, std::string_view content) -> void;
    auto read_graph_file(const std::string & path) -> ColoredGraph;

    /// 64-bit FNV-1a, rendered as 16 hex digits.
    auto fnv1a_hex(std::string_view data) -> std::string;
}

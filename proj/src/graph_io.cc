#include <cuhg/errors.hh>
#include <cuhg/graph_io.hh>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;
using std::string;
using std::string_view;
using std::vector;

namespace cuhg
{
    auto to_text(const ColoredGraph & g) -> string
    {
        string out = "n " + std::to_string(g.size()) + "\ncolors ";
        for (auto c : g.colors())
            out += (c == Color::red ? 'r' : 'b');
        out += '\n';
        for (auto [u, v] : g.edges())
            out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

    namespace
    {
        auto fail(int line, const string & what) -> InputError
        {
            return InputError("line " + std::to_string(line) + ": " + what);
        }

        auto parse_int(const string & tok, int line, const string & what) -> long
        {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(tok, &used);
            }
            catch (const std::exception &) {
                throw fail(line, "expected integer for " + what + ", got '" + tok + "'");
            }
            if (used != tok.size())
                throw fail(line, "expected integer for " + what + ", got '" + tok + "'");
            return v;
        }
    }

    auto graph_from_text(string_view text) -> ColoredGraph
    {
        std::istringstream in{string(text)};
        string raw;
        int line_no = 0;
        long n = -1;
        bool have_colors = false;
        ColoredGraph g;
        std::set<std::pair<int, int>> seen;

        while (std::getline(in, raw)) {
            ++line_no;
            if (! raw.empty() && raw.back() == '\r')
                raw.pop_back();
            std::istringstream ls(raw);
            string key;
            if (! (ls >> key) || key[0] == '#')
                continue;
            vector<string> toks;
            for (string t; ls >> t;)
                toks.push_back(t);

            if (n < 0) {
                if (key != "n" || toks.size() != 1)
                    throw fail(line_no, "expected 'n <count>'");
                n = parse_int(toks[0], line_no, "vertex count");
                if (n < 0)
                    throw fail(line_no, "vertex count must be non-negative");
                continue;
            }
            if (! have_colors) {
                if (key != "colors" || toks.size() > 1)
                    throw fail(line_no, "expected 'colors <r|b...>'");
                string cs = toks.empty() ? string{} : toks[0];
                if (long(cs.size()) != n)
                    throw fail(line_no, "colors string has " + std::to_string(cs.size()) + " entries, expected " + std::to_string(n));
                vector<Color> colors;
                for (char c : cs) {
                    if (c == 'r')
                        colors.push_back(Color::red);
                    else if (c == 'b')
                        colors.push_back(Color::blue);
                    else
                        throw fail(line_no, string("unknown colour '") + c + "'");
                }
                g = ColoredGraph(colors);
                have_colors = true;
                continue;
            }
            if (key != "e" || toks.size() != 2)
                throw fail(line_no, "expected 'e u v'");
            long u = parse_int(toks[0], line_no, "edge endpoint");
            long v = parse_int(toks[1], line_no, "edge endpoint");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw fail(line_no, "edge endpoint out of range");
            if (u == v)
                throw fail(line_no, "loop edge");
            std::pair<int, int> key_pair{int(std::min(u, v)), int(std::max(u, v))};
            if (! seen.insert(key_pair).second)
                throw fail(line_no, "duplicate edge");
            g.set_edge(int(u), int(v));
        }
        if (n < 0)
            throw fail(line_no, "missing 'n <count>' line");
        if (! have_colors)
            throw fail(line_no, "missing 'colors' line");
        return g;
    }

    auto to_json(const ColoredGraph & g) -> json
    {
        json vs = json::array();
        for (int v = 0; v < g.size(); ++v)
            vs.push_back({{"id", v}, {"color", string(color_name(g.color(v)))}});
        json es = json::array();
        for (auto [u, v] : g.edges())
            es.push_back({u, v});
        return {{"vertices", vs}, {"edges", es}};
    }

    auto to_json(const ColorClassProfile & p) -> json
    {
        return {{"omega", {{"red", p.omega_red}, {"blue", p.omega_blue}}},
            {"alpha", {{"red", p.alpha_red}, {"blue", p.alpha_blue}}},
            {"p3_free", {{"red", p.p3_free_red}, {"blue", p.p3_free_blue}}},
            {"homogeneously_connected", p.homogeneously_connected}};
    }

    auto graph_from_json(const json & j) -> ColoredGraph
    {
        if (! j.is_object() || ! j.contains("vertices") || ! j["vertices"].is_array())
            throw InputError("graph: missing 'vertices' array");
        auto & vs = j["vertices"];
        vector<Color> colors(vs.size());
        vector<char> seen(vs.size(), 0);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            auto & v = vs[i];
            string where = "graph.vertices[" + std::to_string(i) + "]";
            if (! v.is_object() || ! v.contains("id") || ! v["id"].is_number_integer())
                throw InputError(where + ": missing integer 'id'");
            auto id = v["id"].get<long>();
            if (id < 0 || id >= long(vs.size()) || seen[id])
                throw InputError(where + ": id must be a distinct integer in [0, n)");
            if (! v.contains("color") || ! v["color"].is_string())
                throw InputError(where + ": missing 'color'");
            auto c = parse_color(v["color"].get<string>());
            if (! c)
                throw InputError(where + ": unknown colour '" + v["color"].get<string>() + "'");
            seen[id] = 1;
            colors[id] = *c;
        }
        ColoredGraph g(colors);
        if (j.contains("edges")) {
            auto & es = j["edges"];
            if (! es.is_array())
                throw InputError("graph.edges: expected array");
            std::set<std::pair<int, int>> dup;
            for (std::size_t i = 0; i < es.size(); ++i) {
                string where = "graph.edges[" + std::to_string(i) + "]";
                auto & e = es[i];
                if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                    throw InputError(where + ": expected [u, v]");
                long u = e[0].get<long>(), v = e[1].get<long>();
                if (u < 0 || v < 0 || u >= g.size() || v >= g.size())
                    throw InputError(where + ": endpoint out of range");
                if (u == v)
                    throw InputError(where + ": loop edge");
                if (! dup.insert(std::minmax(int(u), int(v))).second)
                    throw InputError(where + ": duplicate edge");
                g.set_edge(int(u), int(v));
            }
        }
        return g;
    }

    auto parse_graph(string_view content) -> ColoredGraph
    {
        auto first = content.find_first_not_of(" \t\r\n");
        if (first != string_view::npos && content[first] == '{') {
            json j;
            try {
                j = json::parse(content);
            }
            catch (const json::parse_error & e) {
                throw InputError(string("malformed JSON: ") + e.what());
            }
            if (j.contains("graph"))
                return graph_from_json(j["graph"]);
            return graph_from_json(j);
        }
        return graph_from_text(content);
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw InputError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto write_file(const string & path, string_view content) -> void
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw InputError("cannot write '" + path + "'");
        out << content;
    }

    auto read_graph_file(const string & path) -> ColoredGraph
    {
        return parse_graph(read_file(path));
    }

    auto fnv1a_hex(string_view data) -> string
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned char c : data) {
            h ^= c;
            h *= 1099511628211ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
}

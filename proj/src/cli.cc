#include <cuhg/amalgamation.hh>
#include <cuhg/class_spec.hh>
#include <cuhg/classifier.hh>
#include <cuhg/cli.hh>
#include <cuhg/errors.hh>
#include <cuhg/graph_io.hh>
#include <cuhg/homogeneity.hh>
#include <cuhg/limit_builder.hh>
#include <cuhg/omitted.hh>
#include <cuhg/patterns.hh>

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace cuhg
{
    namespace
    {
        struct Input
        {
            ColoredGraph graph;
            optional<Approximant> approximant;
        };

        struct Outcome
        {
            int code = exit_code::ok;
            json result;
            string text;
            string error;
        };

        auto utc_timestamp() -> string
        {
            std::time_t now = std::time(nullptr);
            std::tm tm{};
            gmtime_r(&now, &tm);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buf;
        }

        auto parse_json(const string & content, const string & where) -> json
        {
            try {
                return json::parse(content);
            }
            catch (const json::parse_error & e) {
                throw InputError(where + ": " + e.what());
            }
        }

        auto load_input(const string & path, json & inputs) -> Input
        {
            if (path.empty())
                throw InputError("--in is required");
            auto content = read_file(path);
            inputs.push_back({{"role", "in"}, {"path", path}, {"fnv1a", fnv1a_hex(content)}});
            auto first = content.find_first_not_of(" \t\r\n");
            if (first == string::npos || content[first] != '{')
                return {graph_from_text(content), std::nullopt};
            auto j = parse_json(content, path);
            // a build report wraps the approximant in "result"
            if (j.contains("result") && j["result"].is_object() && j["result"].contains("graph"))
                j = j["result"];
            if (j.contains("graph") && j.contains("spec") && j.contains("level")) {
                auto a = approximant_from_json(j);
                auto g = a.graph;
                return {std::move(g), std::move(a)};
            }
            if (j.contains("graph"))
                return {graph_from_json(j["graph"]), std::nullopt};
            return {graph_from_json(j), std::nullopt};
        }

        auto load_spec(const string & spec, json & inputs) -> ClassSpec
        {
            if (spec.empty())
                throw InputError("--spec is required");
            if (std::filesystem::is_regular_file(spec)) {
                auto content = read_file(spec);
                inputs.push_back({{"role", "spec"}, {"path", spec}, {"fnv1a", fnv1a_hex(content)}});
                return spec_from_json(parse_json(content, spec));
            }
            return spec_by_name(spec);
        }

        auto problem_json(const AmalgamProblem & p) -> json
        {
            return {{"j", to_text(p.j)}, {"a1", to_text(p.a1)}, {"a2", to_text(p.a2)}, {"iota1", p.iota1.image},
                {"iota2", p.iota2.image}};
        }

        auto run_build(const RunConfig & c, std::uint64_t seed, json & inputs) -> Outcome
        {
            auto spec = load_spec(c.spec, inputs);
            BuildOptions opts;
            opts.level = c.level;
            opts.budget = c.budget;
            opts.seed = seed;
            auto a = build_family(spec, opts);
            Outcome o;
            o.result = to_json(a);
            bool verified = verify_extension_property(a, a.level);
            o.result["certificate"] = {{"level", a.level}, {"target_level", a.target_level},
                {"independently_verified", verified}};
            o.result["partial"] = a.level < a.target_level;
            if (! verified)
                throw InternalAssertion("build: independent check rejects level " + std::to_string(a.level));
            if (a.level < a.target_level)
                o.code = exit_code::indeterminate;
            o.text = "order " + std::to_string(a.graph.size()) + ", level " + std::to_string(a.level) + " of "
                + std::to_string(a.target_level) + (a.level < a.target_level ? " (partial)" : "") + "\n";
            return o;
        }

        auto run_classify(const RunConfig & c, json & inputs) -> Outcome
        {
            auto in = load_input(c.in, inputs);
            optional<ClassSpec> spec;
            if (! c.spec.empty())
                spec = load_spec(c.spec, inputs);
            else if (in.approximant)
                spec = in.approximant->spec;
            auto cl = classify(in.graph, spec);
            Outcome o;
            o.result = {{"label", to_json(cl.label)}, {"evidence", to_json(cl.evidence)}};
            if (! c.evidence.empty())
                write_file(c.evidence, to_json(cl.evidence).dump(2) + "\n");
            o.text = cl.label.to_string();
            for (auto & t : cl.label.tags)
                o.text += " [" + t + "]";
            o.text += "\n";
            return o;
        }

        auto run_omitted(const RunConfig & c, json & inputs) -> Outcome
        {
            auto in = load_input(c.in, inputs);
            auto u = parse_universe(c.universe);
            if (! u)
                throw InputError("unknown universe '" + c.universe + "'");
            if (c.bound < 1 || c.bound > 6)
                throw InputError("--bound must lie in [1, 6]");
            auto o_set = minimally_omitted(in.graph, c.bound, *u);
            auto structure = check_omitted_structure(o_set);
            Outcome o;
            o.result = to_json(o_set);
            o.result["structure"] = {{"pass", structure.pass}, {"violations", structure.violations}};
            for (auto & n : o_set.names())
                o.text += n + "\n";
            return o;
        }

        auto run_uh(const RunConfig & c, json & inputs) -> Outcome
        {
            auto in = load_input(c.in, inputs);
            if (in.graph.size() > max_exact_uh_order)
                throw InputError("uh-check: at most " + std::to_string(max_exact_uh_order) + " vertices, got "
                    + std::to_string(in.graph.size()));
            bool uh = is_ultrahomogeneous_finite(in.graph);
            Outcome o;
            o.result = {{"vertices", in.graph.size()}, {"ultrahomogeneous", uh}};
            o.text = uh ? "true\n" : "false\n";
            return o;
        }

        auto run_piecewise(const RunConfig & c, json & inputs) -> Outcome
        {
            auto in = load_input(c.in, inputs);
            if (! clique_partition(in.graph, Color::red) || ! clique_partition(in.graph, Color::blue))
                throw InputError("piecewise-check: colour classes must be disjoint unions of cliques");
            int depth = in.approximant ? std::max(1, in.approximant->level - 2) : 2;
            auto report = piecewise_report(in.graph, depth);
            json pieces = json::array();
            for (auto & p : report.pieces)
                pieces.push_back({{"red_clique", p.red_clique}, {"blue_clique", p.blue_clique}, {"order", p.order},
                    {"homogeneous", p.homogeneous}, {"kind", p.kind}});
            json theorem_a = {{"precondition", nullptr}, {"predicate", nullptr}, {"agrees", nullptr}};
            auto why = theorem_a_precondition(in.graph);
            if (why.empty()) {
                bool pred = theorem_a_predicate(in.graph);
                theorem_a["predicate"] = pred;
                theorem_a["agrees"] = pred == report.holds;
            }
            else
                theorem_a["precondition"] = why;
            Outcome o;
            o.result = {{"holds", report.holds}, {"witness_depth", depth}, {"pieces", pieces}, {"theorem_a", theorem_a}};
            o.text = string("piecewise: ") + (report.holds ? "true" : "false") + "\n";
            if (why.empty())
                o.text += string("D and D~ realized: ") + (theorem_a["predicate"].get<bool>() ? "true" : "false") + "\n";
            else
                o.text += "theorem A not applicable: " + why + "\n";
            return o;
        }

        auto run_amalgam(const RunConfig & c, json & inputs) -> Outcome
        {
            auto spec = load_spec(c.spec, inputs);
            if (c.max_size < 1 || c.max_size > 6)
                throw InputError("--max-size must lie in [1, 6]");
            auto r = check_amalgamation_property(spec, c.max_size, std::max(1, c.jobs));
            Outcome o;
            // a clean run only speaks for the sizes it covered
            string verdict = r.counterexample ? "counterexample" : "inconclusive-at-n";
            o.result = {{"spec", to_json(spec)}, {"verdict", verdict}, {"verified_n", r.verified_n},
                {"problems", r.problems}, {"validated", r.validated}, {"specialised", r.specialised},
                {"generic", r.generic}, {"invalid", r.invalid},
                {"counterexample", r.counterexample ? problem_json(*r.counterexample) : json(nullptr)}};
            if (r.invalid > 0)
                throw InternalAssertion("amalgam-check: " + std::to_string(r.invalid) + " amalgams failed re-validation");
            o.text = r.counterexample ? "counterexample found at n <= " + std::to_string(c.max_size) + "\n"
                                      : "no counterexample up to n = " + std::to_string(r.verified_n) + "\n";
            return o;
        }

        auto run_catalog() -> Outcome
        {
            Outcome o;
            json ps = json::array();
            for (auto & p : catalog()) {
                auto partner = tilde_partner(p.name);
                ps.push_back({{"name", p.name}, {"family", p.family}, {"vertices", p.graph.size()},
                    {"edges", p.graph.edge_count()}, {"graph", to_text(p.graph)},
                    {"tilde_partner", partner ? json(*partner) : json(nullptr)}});
                o.text += p.name + " " + std::to_string(p.graph.size()) + " vertices " + std::to_string(p.graph.edge_count())
                    + " edges\n";
            }
            o.result = {{"count", ps.size()}, {"patterns", ps}};
            return o;
        }

        auto status_of(int code) -> string
        {
            switch (code) {
                case exit_code::ok: return "ok";
                case exit_code::input_error: return "input-error";
                case exit_code::indeterminate: return "indeterminate";
                default: return "internal-error";
            }
        }
    }

    auto strip_volatile(json report) -> json
    {
        report.erase("timestamp");
        return report;
    }

    auto run(const RunConfig & c, std::ostream & out, std::ostream & err) -> int
    {
        json inputs = json::array();
        Outcome o;
        optional<std::uint64_t> seed = c.seed;
        try {
            if (const char * env = std::getenv("FF_SEED")) {
                char * end = nullptr;
                auto v = std::strtoull(env, &end, 0);
                if (end == env || *end != '\0')
                    throw InputError("FF_SEED is not an integer: '" + string(env) + "'");
                seed = v;
            }
            if (c.format != "json" && c.format != "text")
                throw InputError("--format must be json or text");
            if (c.command == "build")
                o = run_build(c, seed.value_or(default_build_seed), inputs);
            else if (c.command == "classify")
                o = run_classify(c, inputs);
            else if (c.command == "omitted")
                o = run_omitted(c, inputs);
            else if (c.command == "uh-check")
                o = run_uh(c, inputs);
            else if (c.command == "piecewise-check")
                o = run_piecewise(c, inputs);
            else if (c.command == "amalgam-check")
                o = run_amalgam(c, inputs);
            else if (c.command == "catalog")
                o = run_catalog();
            else
                throw InputError("unknown command '" + c.command + "'");
        }
        catch (const InputError & e) {
            o = {exit_code::input_error, nullptr, "", e.what()};
        }
        catch (const PreconditionError & e) {
            o = {exit_code::input_error, nullptr, "", e.what()};
        }
        catch (const UnclassifiableAtLevel & e) {
            o = {exit_code::indeterminate, nullptr, "", e.what()};
        }
        catch (const InternalAssertion & e) {
            o = {exit_code::internal, nullptr, "", e.what()};
        }
        catch (const std::exception & e) {
            o = {exit_code::internal, nullptr, "", string("unexpected: ") + e.what()};
        }

        json config = {{"command", c.command}, {"in", c.in}, {"out", c.out}, {"evidence", c.evidence},
            {"spec", c.spec}, {"level", c.level}, {"budget", c.budget},
            {"seed", seed ? json(*seed) : json(nullptr)}, {"bound", c.bound}, {"universe", c.universe},
            {"max_size", c.max_size}, {"jobs", c.jobs}, {"format", c.format}};
        json report = {{"tool", "cuhg"}, {"version", tool_version}, {"command", c.command}, {"config", config},
            {"inputs", inputs}, {"timestamp", utc_timestamp()}, {"status", status_of(o.code)},
            {"exit_code", o.code}, {"result", o.result},
            {"error", o.error.empty() ? json(nullptr) : json(o.error)}};

        string body;
        if (c.format == "text")
            body = o.error.empty() ? o.text : "error: " + o.error + "\n";
        else
            body = report.dump(2) + "\n";
        if (! o.error.empty())
            err << "cuhg " << c.command << ": " << o.error << "\n";
        try {
            if (c.out.empty())
                out << body;
            else
                write_file(c.out, body);
        }
        catch (const InputError & e) {
            err << "cuhg: " << e.what() << "\n";
            return exit_code::input_error;
        }
        return o.code;
    }
}

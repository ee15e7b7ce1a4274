#include <cuhg/classifier.hh>
#include <cuhg/errors.hh>
#include <cuhg/graph_io.hh>
#include <cuhg/homogeneity.hh>
#include <cuhg/patterns.hh>

#include <algorithm>
#include <set>

using std::optional;
using std::set;
using std::string;
using std::vector;

namespace cuhg
{
    auto LabelWrapper::apply(const string & inner) const -> string
    {
        switch (kind) {
            case Kind::blow_up:
                return "BlowUpOf(" + inner + ", " + string(color_name(color)) + ", " + std::to_string(factor) + ")";
            case Kind::class_complement:
                return "ClassComplementOf(" + inner + ", " + (both_colors ? string("red+blue") : string(color_name(color)))
                    + ")";
            case Kind::colors_swapped:
                return "ColorsSwapped(" + inner + ")";
        }
        return inner;
    }

    auto FamilyLabel::to_string() const -> string
    {
        string s = base;
        for (auto & w : wrappers)
            s = w.apply(s);
        return s;
    }

    namespace
    {
        using Signature = set<string>;

        struct Family
        {
            string label;
            Signature signature;
        };

        // Minimal omitted graphs on at most four vertices, monochromatic P3s left out.
        auto signature_table() -> vector<Family>
        {
            vector<Family> t = {
                {"F21", {"K:red:3", "K:blue:2", "Tr", "Tr~"}},
                {"F(inf,1)", {"K:blue:2"}},
                {"F22", {"K:red:3", "K:blue:3", "Tr", "Tr~", "Tb", "Tb~"}},
                {"F(inf,2)", {"K:blue:3", "Tb", "Tb~"}},
                {"F(inf,inf)", {"D", "D~"}},
            };
            for (int k : {2, 3}) {
                auto kbar = "Kbar:red:" + std::to_string(k + 1);
                t.push_back({"F(inf,1," + std::to_string(k) + ")", {"K:blue:2", kbar}});
                t.push_back({"F(inf,2," + std::to_string(k) + ")", {"K:blue:3", "Tb", "Tb~", kbar}});
            }
            return t;
        }

        auto p3_free(const ColoredGraph & g, Color c) -> bool { return clique_partition(g, c).has_value(); }

        auto bipartite_label(const ColoredGraph & h) -> optional<string>
        {
            const auto & rm = h.class_mask(Color::red);
            const auto & bm = h.class_mask(Color::blue);
            long a = long(rm.count()), b = long(bm.count());
            long cross = 0;
            bool all_one = true, all_co = true;
            for (int u = 0; u < h.size(); ++u) {
                bool red = h.color(u) == Color::red;
                long deg = long((h.neighbours(u) & (red ? bm : rm)).count());
                if (red)
                    cross += deg;
                all_one = all_one && deg == 1;
                all_co = all_co && deg == (red ? b : a) - 1;
            }
            if (cross == 0 || cross == a * b)
                return "HomogeneouslyConnected";
            // perfect matchings need equal sides
            if (a == b && all_one)
                return "Matching";
            if (a == b && all_co)
                return "CoMatching";
            if (bipartite_witness_depth(h, rm, bm, 2) >= 2)
                return "GenericBipartite";
            return std::nullopt;
        }
    }

    auto classify(const ColoredGraph & g, const optional<ClassSpec> & base_spec) -> Classification
    {
        Classification result;
        auto & ev = result.evidence;
        ColoredGraph h = g;
        vector<LabelWrapper> outer_first;

        while (true) {
            // class_profile would run a clique search on the dense classes
            optional<vector<vector<int>>> parts[2] = {clique_partition(h, Color::red), clique_partition(h, Color::blue)};
            bool flip[2] = {false, false};
            for (auto c : all_colors) {
                auto & pc = parts[index(c)];
                if (! pc)
                    flip[index(c)] = p3_free(class_complement(h, c), c);
                else if (pc->size() == 1 && pc->front().size() >= 2)
                    flip[index(c)] = true;
            }
            if (flip[0] || flip[1]) {
                LabelWrapper w{LabelWrapper::Kind::class_complement};
                w.both_colors = flip[0] && flip[1];
                w.color = flip[0] ? Color::red : Color::blue;
                for (auto c : all_colors)
                    if (flip[index(c)]) {
                        h = class_complement(h, c);
                        ev.reductions.push_back("complement " + string(color_name(c)) + " class");
                    }
                outer_first.push_back(w);
                continue;
            }
            if (! parts[0] || ! parts[1])
                throw PreconditionError("classify: colour classes are not clique unions, even after complementation");
            if (auto bu = detect_blow_up(h)) {
                outer_first.push_back({LabelWrapper::Kind::blow_up, bu->color, bu->factor});
                ev.reductions.push_back("collapse " + string(color_name(bu->color)) + " blow-up of factor "
                    + std::to_string(bu->factor));
                h = std::move(bu->base);
                continue;
            }
            break;
        }

        if (base_spec && ! member(*base_spec, h))
            throw PreconditionError("classify: reduced graph is not in the given base class");

        ev.profile = class_profile(h);
        ev.piecewise = piecewise_check(h);
        auto & label = result.label;
        label.wrappers.assign(outer_first.rbegin(), outer_first.rend());

        if (ev.profile.omega_red == 1 && ev.profile.omega_blue == 1) {
            auto base = bipartite_label(h);
            if (! base)
                throw UnclassifiableAtLevel(
                    "classify: bipartite cross edges are neither homogeneous, a perfect matching, its complement, "
                    "nor generic to depth 2");
            label.base = *base;
            return result;
        }

        ev.d_realized = contains_induced(h, pattern_D()).has_value();
        ev.dtilde_realized = contains_induced(h, pattern_D_tilde()).has_value();
        if (ev.d_realized && ev.dtilde_realized) {
            string r, b;
            if (base_spec) {
                r = base_spec->count_cap(Color::red).to_string();
                b = base_spec->count_cap(Color::blue).to_string();
            }
            else {
                r = std::to_string(ev.profile.alpha_red);
                b = std::to_string(ev.profile.alpha_blue);
                label.tags.push_back("observed-bounds");
            }
            label.base = "G(" + r + "," + b + ")";
            return result;
        }

        ev.omitted = minimally_omitted(h, 4, Universe::all);
        Signature as_is, swapped;
        for (auto & m : ev.omitted.members) {
            auto name = pattern_name_of(m.graph).value_or(m.name);
            auto swapped_name = pattern_name_of(swap_colors(m.graph)).value_or("swapped " + m.name);
            if (name.rfind("P3_", 0) == 0)
                continue;
            as_is.insert(name);
            swapped.insert(swapped_name);
        }

        auto table = signature_table();
        for (auto & f : table)
            if (f.signature == as_is) {
                label.base = f.label;
                return result;
            }
        for (auto & f : table)
            if (f.signature == swapped) {
                label.base = f.label;
                label.wrappers.insert(label.wrappers.begin(), LabelWrapper{LabelWrapper::Kind::colors_swapped});
                return result;
            }

        for (auto & f : table) {
            if (std::includes(as_is.begin(), as_is.end(), f.signature.begin(), f.signature.end()))
                ev.candidates.push_back(f.label);
            if (std::includes(swapped.begin(), swapped.end(), f.signature.begin(), f.signature.end()))
                ev.candidates.push_back("ColorsSwapped(" + f.label + ")");
        }
        string observed, consistent;
        for (auto & n : as_is)
            observed += (observed.empty() ? "" : ", ") + n;
        for (auto & c : ev.candidates)
            consistent += (consistent.empty() ? "" : ", ") + c;
        throw UnclassifiableAtLevel("classify: omitted signature {" + observed
            + "} matches no family; consistent with: " + (consistent.empty() ? string("none") : consistent));
    }

    auto classify(const Approximant & a) -> Classification { return classify(a.graph, a.spec); }

    auto classify(const ClassSpec & spec, const BuildOptions & opts) -> Classification
    {
        return classify(build_family(spec, opts));
    }

    auto to_json(const FamilyLabel & l) -> nlohmann::json
    {
        nlohmann::json ws = nlohmann::json::array();
        for (auto & w : l.wrappers) {
            switch (w.kind) {
                case LabelWrapper::Kind::blow_up:
                    ws.push_back({{"kind", "BlowUpOf"}, {"color", color_name(w.color)}, {"factor", w.factor}});
                    break;
                case LabelWrapper::Kind::class_complement:
                    ws.push_back({{"kind", "ClassComplementOf"},
                        {"colors", w.both_colors ? string("red+blue") : string(color_name(w.color))}});
                    break;
                case LabelWrapper::Kind::colors_swapped:
                    ws.push_back({{"kind", "ColorsSwapped"}});
                    break;
            }
        }
        return {{"label", l.to_string()}, {"base", l.base}, {"wrappers", ws}, {"tags", l.tags}};
    }

    auto to_json(const ClassificationEvidence & e) -> nlohmann::json
    {
        nlohmann::json j = {{"profile", to_json(e.profile)}, {"d_realized", e.d_realized},
            {"dtilde_realized", e.dtilde_realized}, {"reductions", e.reductions}, {"piecewise", e.piecewise},
            {"candidates", e.candidates}};
        j["omitted"] = e.omitted.bound > 0 ? to_json(e.omitted) : nlohmann::json(nullptr);
        return j;
    }
}

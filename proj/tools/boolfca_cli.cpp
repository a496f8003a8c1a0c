// boolfca: command-line front end for the Boolean substructure library.
// stdout carries JSON (or DOT / .cxt when asked for); diagnostics go to stderr.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <boolfca/boolean_enum.hpp>
#include <boolfca/closed_subcontext.hpp>
#include <boolfca/context.hpp>
#include <boolfca/cxt_io.hpp>
#include <boolfca/lattice.hpp>
#include <boolfca/serialize.hpp>
#include <boolfca/substructure_maps.hpp>
#include <boolfca/verify.hpp>

using namespace boolfca;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kViolation = 3 };

struct Globals {
    std::uint64_t budget = EnumerationBudget{}.max_nodes;
    std::size_t max_k = EnumerationBudget{}.max_k;
    bool truncate = false;
    std::string format = "json";
    std::uint64_t seed = 42;

    [[nodiscard]] EnumerationBudget enumeration_budget() const
    {
        return {max_k, budget, truncate ? OnExceed::truncate : OnExceed::fail};
    }
};

std::size_t edit_distance(const std::string& a, const std::string& b)
{
    std::vector<std::size_t> prev(b.size() + 1);
    std::vector<std::size_t> cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string near_misses(const std::string& name, const std::vector<std::string>& candidates)
{
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& c : candidates) scored.emplace_back(edit_distance(name, c), c);
    std::stable_sort(scored.begin(), scored.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::string out;
    for (std::size_t i = 0; i < scored.size() && i < 3; ++i) {
        if (scored[i].first > std::max<std::size_t>(2, name.size() / 2)) break;
        out += (out.empty() ? "" : ", ") + scored[i].second;
    }
    return out.empty() ? "" : " (did you mean: " + out + "?)";
}

std::vector<std::string> split_list(const std::vector<std::string>& values)
{
    std::vector<std::string> out;
    for (const auto& v : values) {
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(item);
    }
    return out;
}

/// Names to an index set; "*" selects everything.
template <typename Find>
IndexSet resolve_names(const std::vector<std::string>& values, const std::vector<std::string>& names, Find find,
                       const char* kind)
{
    IndexSet out;
    for (const auto& n : split_list(values)) {
        if (n == "*") return IndexSet::full(names.size());
        auto i = find(n);
        if (!i) throw InvalidArgument(std::string("unknown ") + kind + " '" + n + "'" + near_misses(n, names));
        out.insert(*i);
    }
    return out;
}

SubcontextSelector resolve_selector(const FormalContext& ctx, const std::vector<std::string>& objects,
                                    const std::vector<std::string>& attributes)
{
    return {resolve_names(objects, ctx.object_names(), [&](const std::string& n) { return ctx.find_object(n); },
                          "object"),
            resolve_names(attributes, ctx.attribute_names(),
                          [&](const std::string& n) { return ctx.find_attribute(n); }, "attribute")};
}

ConceptSet resolve_suborder(const ConceptLattice& lat, const std::vector<std::string>& values)
{
    ConceptSet s = lat.none();
    for (const auto& v : split_list(values)) {
        std::size_t pos = 0;
        unsigned long long i = 0;
        try {
            i = std::stoull(v, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != v.size()) throw InvalidArgument("suborder entries are concept indices, got '" + v + "'");
        if (i >= lat.size())
            throw InvalidArgument("concept index " + v + " out of range (lattice has " + std::to_string(lat.size()) +
                                  " concepts)");
        s.insert(static_cast<std::size_t>(i));
    }
    if (s.empty()) throw InvalidArgument("empty suborder");
    return s;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

template <typename T, typename ToJson>
void emit_items(const std::vector<T>& items, bool count, bool ndjson, bool truncated, ToJson to_json)
{
    if (count) {
        print(json(items.size()));
    } else if (ndjson) {
        for (const auto& x : items) std::cout << to_json(x).dump() << '\n';
    } else {
        json arr = json::array();
        for (const auto& x : items) arr.push_back(to_json(x));
        print({{"count", items.size()}, {"truncated", truncated}, {"items", arr}});
    }
    if (truncated) std::cerr << "warning: node budget exhausted, results are partial\n";
}

json arrows_json(const FormalContext& ctx, const ArrowRelations& a)
{
    json up = json::array();
    json down = json::array();
    json both = json::array();
    for (std::size_t g = 0; g < ctx.num_objects(); ++g)
        for (std::size_t m = 0; m < ctx.num_attributes(); ++m) {
            const json cell = {ctx.object_names()[g], ctx.attribute_names()[m]};
            if (a.has_up(g, m)) up.push_back(cell);
            if (a.has_down(g, m)) down.push_back(cell);
            if (a.has_up(g, m) && a.has_down(g, m)) both.push_back(cell);
        }
    return {{"up", up}, {"down", down}, {"both", both}};
}

json closed_report(const FormalContext& ctx, const ConceptLattice& lat, const ClosedSubcontext& t)
{
    validate_shape(ctx, t);
    const bool closed = is_closed_subcontext(ctx, t);
    const auto boundary = boundary_witnesses(ctx, t);
    json out{{"triple", triple_to_json(ctx, t)},
             {"closed", closed},
             {"closed_relation", closed && t.objects == ctx.all_objects() && t.attributes == ctx.all_attributes()},
             {"relation_within_incidence", relation_within_incidence(ctx, t)},
             {"condition_c", check_condition_C(ctx, t)},
             {"boundary", boundary.holds()}};
    if (t.objects.size() <= 20 && t.attributes.size() <= 20)
        out["double_prime"] = check_double_prime_condition(ctx, t);
    if (is_clarified_triple(t)) out["arrow_characterization"] = check_clarified_arrow_characterization(ctx, t);
    if (closed) {
        out["sublattice"] = suborder_to_json(lat, closed_to_sublattice(lat, t));
        out["arrow_containment"] = arrow_containment(ctx, t);
    }
    return out;
}

json suborder_report(const ConceptLattice& lat, const ConceptSet& s)
{
    json out = suborder_to_json(lat, s);
    const auto k = is_boolean_suborder(lat, s);
    out["boolean_dimension"] = k ? json(*k) : json(nullptr);
    out["join_closed"] = is_sub_join_semilattice(lat, s);
    out["meet_closed"] = is_sub_meet_semilattice(lat, s);
    return out;
}

json lemma_summary(const std::vector<LemmaReport>& reports, bool timing)
{
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, timing));
    return arr;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(const std::vector<std::string>& values)
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& v : split_list(values)) {
        const auto x = v.find('x');
        std::size_t g = 0;
        std::size_t m = 0;
        try {
            if (x == std::string::npos) throw std::invalid_argument(v);
            g = std::stoul(v.substr(0, x));
            m = std::stoul(v.substr(x + 1));
        } catch (const std::exception&) {
            throw InvalidArgument("sizes are written GxM, got '" + v + "'");
        }
        out.emplace_back(g, m);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Boolean substructures of formal contexts and their concept lattices"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--budget", g.budget, "Node budget for exhaustive enumerations")->capture_default_str();
    app.add_option("--max-k", g.max_k, "Largest Boolean dimension accepted")->capture_default_str();
    app.add_flag("--truncate", g.truncate, "Return partial results instead of failing when the budget runs out");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();

    std::string file;
    bool count = false;
    bool ndjson = false;
    std::size_t k = 3;
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    std::vector<std::string> suborder;

    auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Context (.cxt or .json)")->required(); };
    auto add_selector = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--objects,-H", objects, "Object names (comma separated, * for all)");
        auto* a = sub->add_option("--attributes,-N", attributes, "Attribute names (comma separated, * for all)");
        if (required) {
            o->required();
            a->required();
        }
    };

    auto* concepts = app.add_subcommand("concepts", "Concept lattice of a context");
    add_file(concepts);
    concepts->add_flag("--count", count, "Print only the number of concepts");

    auto* exporter = app.add_subcommand("export", "Line diagram as DOT or lattice as JSON");
    add_file(exporter);
    std::string export_as;
    exporter->add_option("--as", export_as, "dot or json (defaults to --format)")->check(CLI::IsMember({"dot", "json"}));

    auto* clarify_cmd = app.add_subcommand("clarify", "Merge duplicate rows and columns");
    add_file(clarify_cmd);
    auto* reduce_cmd = app.add_subcommand("reduce", "Standard context (clarified, no reducible rows/columns)");
    add_file(reduce_cmd);
    auto* arrows_cmd = app.add_subcommand("arrows", "Arrow relations");
    add_file(arrows_cmd);

    std::vector<std::pair<std::string, CLI::App*>> enums;
    for (const char* name : {"srb", "sb", "sob", "slb"}) {
        auto* sub = app.add_subcommand(name, std::string("Enumerate ") + name + "_k");
        add_file(sub);
        sub->add_option("--k", k, "Boolean dimension")->capture_default_str();
        sub->add_flag("--count", count, "Print only the count");
        sub->add_flag("--ndjson", ndjson, "One JSON object per line");
        enums.emplace_back(name, sub);
    }

    auto* closed = app.add_subcommand("closed", "Closed-subcontexts");
    closed->require_subcommand(1);
    auto* closed_check = closed->add_subcommand("check", "Check a triple (H, N, J)");
    add_file(closed_check);
    std::string triple_arg;
    closed_check->add_option("--triple", triple_arg, "Triple as JSON text or @file; default J = I within H x N");
    add_selector(closed_check, false);
    auto* closed_enum = closed->add_subcommand("enumerate", "All closed-subcontexts (one per sublattice)");
    add_file(closed_enum);
    closed_enum->add_flag("--count", count, "Print only the count");
    closed_enum->add_flag("--ndjson", ndjson, "One JSON object per line");
    auto* closed_lift = closed->add_subcommand("from-srb", "Boolean closed-subcontexts lifted from an SRB member");
    add_file(closed_lift);
    add_selector(closed_lift, true);

    auto* phi_cmd = app.add_subcommand("phi", "phi1 / phi2 images of a subcontext [H, N]");
    add_file(phi_cmd);
    add_selector(phi_cmd, true);

    auto* psi_cmd = app.add_subcommand("psi", "Subcontext associated to a Boolean suborder");
    add_file(psi_cmd);
    psi_cmd->add_option("--suborder,-S", suborder, "Concept indices (see `concepts`)")->required();

    auto* interplay = app.add_subcommand("interplay", "psi/phi interplay for a subcontext, a suborder, or the whole file");
    add_file(interplay);
    add_selector(interplay, false);
    interplay->add_option("--suborder,-S", suborder, "Concept indices");
    std::vector<std::size_t> dims;
    interplay->add_option("--k", dims, "Dimensions checked when no selector or suborder is given (default 2,3)");

    auto* verify_cmd = app.add_subcommand("verify", "Lemma-by-lemma verification on fixtures and random contexts");
    std::vector<std::string> lemma_ids;
    std::size_t trials = 50;
    std::vector<double> densities;
    std::vector<std::string> sizes;
    std::string report_path;
    std::string witness_dir;
    std::string replay_path;
    std::vector<std::string> context_files;
    unsigned threads = 1;
    bool timing = false;
    bool list = false;
    bool no_fixtures = false;
    bool no_random = false;
    verify_cmd->add_option("--lemma", lemma_ids, "Lemma id (repeatable) or 'all'");
    verify_cmd->add_option("--trials", trials, "Random contexts per size and density")->capture_default_str();
    verify_cmd->add_option("--density", densities, "Cell densities (default 0.3 0.5 0.7)")
        ->check(CLI::Range(0.0, 1.0));
    verify_cmd->add_option("--size", sizes, "Context sizes GxM (default 4x4 5x5 6x5)");
    verify_cmd->add_option("--context", context_files, "Extra context files to include");
    verify_cmd->add_flag("--no-fixtures", no_fixtures, "Skip the built-in fixtures");
    verify_cmd->add_flag("--no-random", no_random, "Skip random contexts");
    verify_cmd->add_option("--report", report_path, "Write the full JSON report here");
    verify_cmd->add_option("--witness-dir", witness_dir, "Write one replayable file per violation");
    verify_cmd->add_option("--replay", replay_path, "Re-run the lemma of a witness file");
    verify_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
    verify_cmd->add_flag("--timing", timing, "Include elapsed times");
    verify_cmd->add_flag("--list", list, "List lemma ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const EnumerationBudget budget = g.enumeration_budget();
        if (app.got_subcommand(verify_cmd)) {
            if (list) {
                json arr = json::array();
                for (const auto& l : lemma_catalog())
                    arr.push_back({{"lemma", l.id},
                                   {"kind", l.kind == LemmaKind::probe ? "probe" : "proven"},
                                   {"statement", l.statement}});
                print(arr);
                return kOk;
            }
            std::vector<std::string> filter;
            for (const auto& id : split_list(lemma_ids)) {
                if (id == "all") {
                    filter.clear();
                    break;
                }
                if (find_lemma(id) == nullptr) {
                    std::vector<std::string> ids;
                    for (const auto& l : lemma_catalog()) ids.push_back(l.id);
                    throw InvalidArgument("unknown lemma '" + id + "'" + near_misses(id, ids));
                }
                filter.push_back(id);
            }
            SuiteOptions options;
            options.budget = budget;
            options.threads = threads;
            options.timing = timing;
            if (!replay_path.empty()) {
                std::ifstream in(replay_path);
                if (!in) throw Error("cannot open '" + replay_path + "'");
                const json w = json::parse(in);
                const std::string id = w.at("lemma").get<std::string>();
                const bool reproduced = replay_violation(id, w, options);
                print({{"lemma", id}, {"reproduced", reproduced}});
                return reproduced ? kViolation : kOk;
            }
            std::vector<CorpusEntry> corpus;
            if (!no_fixtures) corpus = fixture_corpus();
            for (const auto& f : context_files) corpus.push_back({f, load_context(f)});
            if (!no_random) {
                if (densities.empty()) densities = {0.3, 0.5, 0.7};
                auto shape = sizes.empty() ? std::vector<std::pair<std::size_t, std::size_t>>{{4, 4}, {5, 5}, {6, 5}}
                                           : parse_sizes(sizes);
                for (auto [ng, nm] : shape)
                    if (ng > 8 || nm > 8) throw InvalidArgument("random contexts for verify are limited to 8x8");
                auto random = random_corpus(shape, densities, trials, g.seed);
                corpus.insert(corpus.end(), random.begin(), random.end());
            }
            const auto reports = run_suite(corpus, filter, options);

            json full = {{"seed", g.seed}, {"contexts", corpus.size()}, {"lemmas", lemma_summary(reports, timing)}};
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) throw Error("cannot write '" + report_path + "'");
                out << full.dump(2) << '\n';
            }
            if (!witness_dir.empty()) {
                std::filesystem::create_directories(witness_dir);
                for (const auto& r : reports)
                    for (std::size_t i = 0; i < r.violations.size(); ++i) {
                        json w = r.violations[i];
                        w["lemma"] = r.id;
                        std::ofstream out(std::filesystem::path(witness_dir) / (r.id + "-" + std::to_string(i) + ".json"));
                        out << w.dump(2) << '\n';
                    }
            }
            json summary = json::array();
            bool proven_failure = false;
            for (const auto& r : reports) {
                summary.push_back({{"lemma", r.id},
                                   {"status", r.status()},
                                   {"instances", r.instances},
                                   {"violation_count", r.violation_count}});
                if (r.status() == "fail") proven_failure = true;
                if (r.status() == "counterexample")
                    std::cerr << "*** probe '" << r.id << "' found " << r.violation_count
                              << " counterexample(s); archived in the report ***\n";
                if (r.status() == "fail")
                    std::cerr << "lemma '" << r.id << "' violated " << r.violation_count << " time(s)\n";
                for (const auto& e : r.errors) std::cerr << "budget: " << r.id << ": " << e << '\n';
            }
            print(report_path.empty() ? full : json{{"seed", g.seed}, {"contexts", corpus.size()}, {"lemmas", summary}});
            return proven_failure ? kViolation : kOk;
        }

        CLI::App* chosen = app.get_subcommands().front();
        if (chosen == closed) chosen = closed->get_subcommands().front();
        const FormalContext ctx = load_context(file);

        if (chosen == concepts) {
            const ConceptLattice lat(ctx);
            if (count) {
                print(json(lat.size()));
            } else if (g.format == "text") {
                for (std::size_t i = 0; i < lat.size(); ++i)
                    std::cout << i << ": " << concept_to_json(ctx, lat[i]).dump() << '\n';
            } else {
                json out = lattice_to_json(lat);
                out["count"] = lat.size();
                print(out);
            }
            return kOk;
        }
        if (chosen == exporter) {
            const ConceptLattice lat(ctx);
            const std::string as = export_as.empty() ? g.format : export_as;
            if (as == "dot")
                std::cout << lattice_to_dot(lat);
            else
                print(lattice_to_json(lat));
            return kOk;
        }
        if (chosen == clarify_cmd) {
            const auto c = clarify(ctx);
            if (g.format == "text") {
                std::cout << emit_cxt(c.context);
                return kOk;
            }
            json objects_map = json::object();
            json attributes_map = json::object();
            for (std::size_t i = 0; i < ctx.num_objects(); ++i)
                objects_map[ctx.object_names()[i]] = c.context.object_names()[c.object_map[i]];
            for (std::size_t i = 0; i < ctx.num_attributes(); ++i)
                attributes_map[ctx.attribute_names()[i]] = c.context.attribute_names()[c.attribute_map[i]];
            print({{"context", context_to_json(c.context)},
                   {"object_representative", objects_map},
                   {"attribute_representative", attributes_map}});
            return kOk;
        }
        if (chosen == reduce_cmd) {
            const FormalContext r = reduce(ctx);
            if (g.format == "text")
                std::cout << emit_cxt(r);
            else
                print({{"context", context_to_json(r)}});
            return kOk;
        }
        if (chosen == arrows_cmd) {
            print(arrows_json(ctx, arrow_relations(ctx)));
            return kOk;
        }
        for (const auto& [name, sub] : enums) {
            if (chosen != sub) continue;
            if (name == "srb" || name == "sb") {
                const auto e = name == "srb" ? enumerate_srb(ctx, k, budget) : enumerate_sb(ctx, k, budget);
                emit_items(e.items, count, ndjson, e.truncated,
                           [&](const SubcontextSelector& s) { return selector_to_json(ctx, s); });
            } else {
                const ConceptLattice lat(ctx);
                const auto e = name == "sob" ? enumerate_sob(lat, k, budget) : enumerate_slb(lat, k, budget);
                emit_items(e.items, count, ndjson, e.truncated,
                           [&](const ConceptSet& s) { return suborder_to_json(lat, s); });
            }
            return kOk;
        }
        if (chosen == closed_check) {
            const ConceptLattice lat(ctx);
            ClosedSubcontext t;
            if (!triple_arg.empty()) {
                std::string text = triple_arg;
                if (text.front() == '@') {
                    std::ifstream in(text.substr(1));
                    if (!in) throw Error("cannot open '" + text.substr(1) + "'");
                    std::ostringstream buf;
                    buf << in.rdbuf();
                    text = buf.str();
                }
                json j;
                try {
                    j = json::parse(text);
                } catch (const json::parse_error& e) {
                    throw InvalidArgument(std::string("triple is not valid JSON: ") + e.what());
                }
                t = triple_from_json(ctx, j);
            } else {
                if (objects.empty() || attributes.empty())
                    throw InvalidArgument("closed check needs --triple or both --objects and --attributes");
                t = induced_triple(ctx, resolve_selector(ctx, objects, attributes));
            }
            print(closed_report(ctx, lat, t));
            return kOk;
        }
        if (chosen == closed_enum) {
            const ConceptLattice lat(ctx);
            const auto subs = enumerate_sublattices(lat, budget);
            emit_items(subs.items, count, ndjson, subs.truncated, [&](const ConceptSet& s) {
                json j = triple_to_json(ctx, sublattice_to_closed(lat, s));
                j["sublattice"] = s.to_vector();
                return j;
            });
            return kOk;
        }
        if (chosen == closed_lift) {
            const ConceptLattice lat(ctx);
            const auto sel = resolve_selector(ctx, objects, attributes);
            const auto lifted = boolean_closed_from_srb(lat, sel, budget);
            emit_items(lifted.items, false, false, lifted.truncated, [&](const ClosedSubcontext& t) {
                json j = triple_to_json(ctx, t);
                j["sublattice"] = closed_to_sublattice(lat, t).to_vector();
                return j;
            });
            return kOk;
        }
        if (chosen == phi_cmd) {
            const ConceptLattice lat(ctx);
            const auto sel = resolve_selector(ctx, objects, attributes);
            const auto eq = phi_equal(ctx, sel);
            json rows = json::array();
            for (const auto& c : subcontext_concepts(ctx, sel))
                rows.push_back({{"concept", concept_to_json(ctx, c)},
                                {"phi1", concept_to_json(ctx, phi1(ctx, sel, c))},
                                {"phi2", concept_to_json(ctx, phi2(ctx, sel, c))},
                                {"case", classify_case(ctx, sel, c)}});
            json out{{"selector", selector_to_json(ctx, sel)},
                     {"concepts", rows},
                     {"phi1", suborder_report(lat, phi1_lift(lat, sel))},
                     {"phi2", suborder_report(lat, phi2_lift(lat, sel))},
                     {"phi_equal", eq.equal},
                     {"closed", closedness_via_phi(ctx, sel)}};
            if (eq.cell)
                out["phi_equal_witness"] = {{"concept", concept_to_json(ctx, *eq.concept_witness)},
                                            {"cell", {ctx.object_names()[eq.cell->first],
                                                      ctx.attribute_names()[eq.cell->second]}}};
            print(out);
            return kOk;
        }
        if (chosen == psi_cmd) {
            const ConceptLattice lat(ctx);
            const ConceptSet s = resolve_suborder(lat, suborder);
            const auto sel = psi(lat, s);
            const auto assoc = associated_semilattices(lat, s);
            const auto dim = is_boolean_lattice(subcontext_lattice(ctx, sel));
            print({{"suborder", suborder_report(lat, s)},
                   {"psi", selector_to_json(ctx, sel)},
                   {"psi_boolean_dimension", dim ? json(*dim) : json(nullptr)},
                   {"phi1_psi", suborder_report(lat, assoc.join_assoc)},
                   {"phi2_psi", suborder_report(lat, assoc.meet_assoc)},
                   {"phi1_psi_fixed", assoc.join_assoc == s},
                   {"phi2_psi_fixed", assoc.meet_assoc == s}});
            return kOk;
        }
        if (chosen == interplay) {
            const ConceptLattice lat(ctx);
            if (!objects.empty() || !attributes.empty()) {
                const auto sel = resolve_selector(ctx, objects, attributes);
                const auto img1 = phi1_lift(lat, sel);
                const auto img2 = phi2_lift(lat, sel);
                json out{{"selector", selector_to_json(ctx, sel)},
                         {"phi1", suborder_report(lat, img1)},
                         {"phi2", suborder_report(lat, img2)}};
                if (is_boolean_suborder(lat, img1)) {
                    const auto p1 = psi(lat, img1);
                    out["psi_phi1"] = selector_to_json(ctx, p1);
                    out["psi_phi1_fixed"] = p1 == sel;
                }
                if (is_boolean_suborder(lat, img2)) {
                    const auto p2 = psi(lat, img2);
                    out["psi_phi2"] = selector_to_json(ctx, p2);
                    out["psi_phi2_fixed"] = p2 == sel;
                }
                if (is_contranominal(ctx, sel)) {
                    const auto r = psi_phi_fixedpoint_condition(lat, sel);
                    out["coatom_condition"] = r.coatom_condition;
                    out["atom_condition"] = r.atom_condition;
                }
                print(out);
                return kOk;
            }
            if (!suborder.empty()) {
                const ConceptSet s = resolve_suborder(lat, suborder);
                const auto assoc = associated_semilattices(lat, s);
                json out{{"suborder", suborder_report(lat, s)},
                         {"psi", selector_to_json(ctx, psi(lat, s))},
                         {"phi1_psi", suborder_report(lat, assoc.join_assoc)},
                         {"phi2_psi", suborder_report(lat, assoc.meet_assoc)},
                         {"phi1_psi_fixed", assoc.join_assoc == s},
                         {"phi2_psi_fixed", assoc.meet_assoc == s},
                         {"sublattice", is_sublattice(lat, s)}};
                if (const auto w = non_supremum_witness(lat, s))
                    out["non_supremum"] = {{"element", w->element},
                                           {"constructed", concept_to_json(ctx, w->concept_of_psi)},
                                           {"is_concept_of_psi", w->is_concept_of_psi},
                                           {"phi1_below_phi2", w->strictly_below}};
                print(out);
                return kOk;
            }
            SuiteOptions options;
            options.budget = budget;
            if (!dims.empty()) options.dims = dims;
            const auto reports =
                run_suite({{file, ctx}},
                          {"psi-phi-fixedpoint", "assoc-semilattice", "assoc-fixed", "interplay-subcontext",
                           "interplay-suborder"},
                          options);
            print(lemma_summary(reports, false));
            for (const auto& r : reports)
                if (r.status() == "fail") return kViolation;
            return kOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

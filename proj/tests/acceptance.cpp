// Acceptance suite: one PASS/FAIL line per criterion. Counterexamples and
// reports go to the directory given as argv[1].

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <boolfca/boolean_enum.hpp>
#include <boolfca/closed_subcontext.hpp>
#include <boolfca/fixtures.hpp>
#include <boolfca/serialize.hpp>
#include <boolfca/substructure_maps.hpp>
#include <boolfca/verify.hpp>

using namespace boolfca;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    json archive;  // written to <dir>/criterion-NN.json when not null
};

SubcontextSelector sel(const FormalContext& ctx, const std::string& objects, const std::string& attributes)
{
    SubcontextSelector s;
    for (char c : objects) s.objects.insert(*ctx.find_object(std::string(1, c)));
    for (char c : attributes) s.attributes.insert(*ctx.find_attribute(std::string(1, c)));
    return s;
}

std::string show(const FormalContext& ctx, const SubcontextSelector& s)
{
    std::string out = "[";
    for (std::size_t g : s.objects) out += ctx.object_names()[g];
    out += ",";
    for (std::size_t m : s.attributes) out += ctx.attribute_names()[m];
    return out + "]";
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<CorpusEntry> corpus_with_fixtures()
{
    auto corpus = fixture_corpus();
    for (auto& e : default_corpus()) corpus.push_back(std::move(e));
    return corpus;
}

Outcome running_example_counts()
{
    const auto fig2 = fixtures::fig2();
    const ConceptLattice lat(fig2);
    const auto srb = enumerate_srb(fig2, 3).items;
    const std::vector<SubcontextSelector> expected{sel(fig2, "123", "abc"), sel(fig2, "456", "bcd"),
                                                   sel(fig2, "456", "bce")};
    bool selectors_match = srb.size() == expected.size();
    for (const auto& e : expected)
        selectors_match = selectors_match && std::find(srb.begin(), srb.end(), e) != srb.end();
    const auto sob = enumerate_sob(lat, 3).items.size();
    const auto slb = enumerate_slb(lat, 3).items.size();
    std::ostringstream d;
    d << "concepts=" << lat.size() << " (15), |SRB3|=" << srb.size() << " (3, selectors "
      << (selectors_match ? "match" : "differ") << "), |SOB3|=" << sob << " (15), |SLB3|=" << slb << " (2)";
    const bool pass = lat.size() == 15 && selectors_match && sob == 15 && slb == 2;
    json archive;
    if (!pass) {
        archive["sob3"] = json::array();
        for (const auto& s : enumerate_sob(lat, 3).items) archive["sob3"].push_back(suborder_to_json(lat, s));
    }
    return {pass, d.str(), archive};
}

Outcome running_example_boolean_subcontext()
{
    const auto fig2 = fixtures::fig2();
    const auto s = sel(fig2, "456", "bcde");
    const auto sb = enumerate_sb(fig2, 3).items;
    const bool member = std::find(sb.begin(), sb.end(), s) != sb.end();
    const auto c = clarify(induced_subcontext(fig2, s));
    // Attributes of the subcontext are b, c, d, e at positions 0..3.
    const bool merged = c.attribute_map[2] == c.attribute_map[3] && c.context.num_attributes() == 3;
    return {member && merged,
            std::string("[456,bcde] in SB3: ") + (member ? "yes" : "no") + ", clarify merges d,e: " +
                (merged ? "yes" : "no"),
            nullptr};
}

Outcome chain_phi()
{
    const auto fig3 = fixtures::fig3();
    const ConceptLattice lat(fig3);
    const auto s = sel(fig3, "12", "ab");
    const auto cs = subcontext_concepts(fig3, s);
    const bool one = cs.size() == 1;
    const bool bottom = one && phi1(fig3, s, cs[0]) == lat[lat.bottom()];
    const bool top = one && phi2(fig3, s, cs[0]) == lat[lat.top()];
    return {lat.size() == 3 && bottom && top,
            "lattice size " + std::to_string(lat.size()) + ", phi1 = bottom: " + (bottom ? "yes" : "no") +
                ", phi2 = top: " + (top ? "yes" : "no"),
            nullptr};
}

Outcome fig4_psi_phi()
{
    const auto fig4 = fixtures::fig4();
    const ConceptLattice lat(fig4);
    const auto srb = enumerate_srb(fig4, 3).items.size();
    const auto sob = enumerate_sob(lat, 3).items.size();
    const auto s1 = sel(fig4, "123", "abc");
    const auto s2 = sel(fig4, "234", "abc");
    const auto s3 = sel(fig4, "123", "bcd");
    const auto p11 = psi(lat, phi1_lift(lat, s1));
    const auto p21 = psi(lat, phi2_lift(lat, s1));
    const auto p22 = psi(lat, phi2_lift(lat, s2));
    const auto p13 = psi(lat, phi1_lift(lat, s3));
    const bool e1 = p11 == s1 && p21 == s1;
    const bool e2 = p22 == s2;
    const bool e3 = p13 == s3;
    std::ostringstream d;
    d << "|SRB3|=" << srb << " |SOB3|=" << sob << " (4, 4); S1 fixed by both: " << (e1 ? "yes" : "no")
      << "; psi(phi2(S2))=" << show(fig4, p22) << " (want " << show(fig4, s2) << ")"
      << "; psi(phi1(S3))=" << show(fig4, p13) << " (want " << show(fig4, s3) << ")";
    const bool pass = srb == 4 && sob == 4 && e1 && e2 && e3;
    json archive;
    if (!pass)
        archive = {{"psi_phi2_S2", selector_to_json(fig4, p22)},
                   {"psi_phi1_S2", selector_to_json(fig4, psi(lat, phi1_lift(lat, s2)))},
                   {"psi_phi1_S3", selector_to_json(fig4, p13)},
                   {"psi_phi2_S3", selector_to_json(fig4, psi(lat, phi2_lift(lat, s3)))}};
    return {pass, d.str(), archive};
}

Outcome nonadjointness()
{
    const auto fig5 = fixtures::fig5();
    const ConceptLattice lat(fig5);
    const auto r = nonadjointness_demo(lat);
    const bool psi_ok = r.psi_of_image && *r.psi_of_image == sel(fig5, "12345", "abc");
    return {r.demonstrates() && psi_ok,
            std::string("images equal: ") + (r.images_equal ? "yes" : "no") + ", psi of image = " +
                (r.psi_of_image ? show(fig5, *r.psi_of_image) : "none"),
            nullptr};
}

Outcome bijection()
{
    const auto start = std::chrono::steady_clock::now();
    std::size_t contexts = 0;
    std::size_t sublattices = 0;
    json bad = json::array();
    for (const auto& e : corpus_with_fixtures()) {
        ++contexts;
        const ConceptLattice lat(e.context);
        const auto subs = enumerate_sublattices(lat).items;
        std::set<ClosedSubcontext> images;
        for (const auto& s : subs) {
            const auto t = sublattice_to_closed(lat, s);
            if (!is_closed_subcontext(e.context, t) || closed_to_sublattice(lat, t) != s)
                bad.push_back({{"context", e.name}, {"sublattice", suborder_to_json(lat, s)}});
            if (sublattice_to_closed(lat, closed_to_sublattice(lat, t)) != t) bad.push_back({{"context", e.name}});
            images.insert(t);
        }
        if (images.size() != subs.size()) bad.push_back({{"context", e.name}, {"count_mismatch", true}});
        sublattices += subs.size();
    }
    const double secs = seconds_since(start);
    std::ostringstream d;
    d << contexts << " contexts, " << sublattices << " sublattices, " << bad.size() << " mismatches, " << secs
      << " s (<= 60)";
    return {bad.empty() && secs <= 60.0, d.str(), bad.empty() ? json(nullptr) : bad};
}

Outcome characterizations()
{
    std::uint64_t triples = 0;
    std::uint64_t clarified = 0;
    json bad = json::array();
    for (std::size_t ng = 1; ng <= 3; ++ng)
        for (std::size_t nm = 1; nm <= 3; ++nm)
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (ng * nm)); ++bits) {
                std::vector<std::vector<bool>> table(ng, std::vector<bool>(nm));
                for (std::size_t g = 0; g < ng; ++g)
                    for (std::size_t m = 0; m < nm; ++m) table[g][m] = ((bits >> (g * nm + m)) & 1U) != 0;
                const auto ctx = FormalContext::from_table(table, nm);
                for_each_candidate_triple(ctx, [&](const ClosedSubcontext& t) {
                    ++triples;
                    const bool closed = is_closed_subcontext(ctx, t);
                    bool agree = check_double_prime_condition(ctx, t) == closed && check_condition_C(ctx, t) == closed;
                    if (is_clarified_triple(t)) {
                        ++clarified;
                        agree = agree && check_clarified_arrow_characterization(ctx, t) == closed;
                    }
                    if (!agree && bad.size() < 20)
                        bad.push_back({{"context", context_to_json(ctx)}, {"triple", triple_to_json(ctx, t)}});
                });
            }
    std::ostringstream d;
    d << triples << " triples (" << clarified << " clarified) over all contexts up to 3x3, " << bad.size()
      << " disagreements";
    return {bad.empty(), d.str(), bad.empty() ? json(nullptr) : bad};
}

Outcome semilattice_lemma()
{
    std::uint64_t members = 0;
    json bad = json::array();
    for (const auto& e : corpus_with_fixtures()) {
        const ConceptLattice lat(e.context);
        for (std::size_t k = 1; k <= 3; ++k)
            for (const auto& s : enumerate_srb(e.context, k).items) {
                ++members;
                if (!is_sub_join_semilattice(lat, phi1_lift(lat, s)) || !is_sub_meet_semilattice(lat, phi2_lift(lat, s)))
                    bad.push_back({{"context", e.name}, {"srb", selector_to_json(e.context, s)}});
            }
    }
    const auto fig2 = fixtures::fig2();
    const ConceptLattice lat(fig2);
    const auto r = sel(fig2, "1237", "abce");
    const bool join_ok = is_sub_join_semilattice(lat, phi1_lift(lat, r));
    const bool meet_ok = is_sub_meet_semilattice(lat, phi2_lift(lat, r));
    std::ostringstream d;
    d << members << " SRB members (k=1..3), " << bad.size() << " violations; [1237,abce]: phi1 join-closed "
      << (join_ok ? "yes" : "no") << ", phi2 meet-closed " << (meet_ok ? "yes" : "no");
    return {bad.empty() && !(join_ok && meet_ok), d.str(), bad.empty() ? json(nullptr) : bad};
}

Outcome interplay()
{
    std::size_t checked = 0;
    json bad = json::array();
    for (auto [name, ctx] : {std::pair{"fig2", fixtures::fig2()}, std::pair{"fig4", fixtures::fig4()}}) {
        const ConceptLattice lat(ctx);
        for (const auto& s : enumerate_sob(lat, 3).items) {
            ++checked;
            const auto assoc = associated_semilattices(lat, s);
            const bool join_closed = is_sub_join_semilattice(lat, s);
            const bool meet_closed = is_sub_meet_semilattice(lat, s);
            const bool ok = (assoc.join_assoc == s) == join_closed && (assoc.meet_assoc == s) == meet_closed &&
                            (assoc.join_assoc == s && assoc.meet_assoc == s) == is_sublattice(lat, s);
            if (!ok)
                bad.push_back({{"context", name},
                               {"suborder", suborder_to_json(lat, s)},
                               {"join_closed", join_closed},
                               {"meet_closed", meet_closed},
                               {"phi1_psi", suborder_to_json(lat, assoc.join_assoc)},
                               {"phi2_psi", suborder_to_json(lat, assoc.meet_assoc)}});
        }
    }
    std::ostringstream d;
    d << checked << " suborders in SOB3 of Figs. 2 and 4, " << bad.size() << " violations";
    return {bad.empty(), d.str(), bad.empty() ? json(nullptr) : bad};
}

Outcome conjecture(const fs::path& dir)
{
    SuiteOptions options;
    options.dims = {3};
    options.max_witnesses = 1000;
    const auto reports = run_suite(default_corpus(), {"conjecture"}, options);
    const auto& r = reports.front();
    const fs::path report = dir / "conjecture-report.json";
    std::ofstream(report) << report_to_json(r, false).dump(2) << '\n';
    std::ostringstream d;
    d << r.contexts << " contexts, " << r.violation_count << " counterexamples (k=3), report at " << report.string();
    return {fs::exists(report) && r.errors.empty(), d.str(), nullptr};
}

Outcome non_closure()
{
    const auto start = std::chrono::steady_clock::now();
    const auto w = find_non_closure_witness(4);
    const double secs = seconds_since(start);
    if (!w) return {false, "no witness up to 4x4", nullptr};
    const bool ok = is_closed_subcontext(w->context, w->first) && is_closed_subcontext(w->context, w->second) &&
                    !is_closed_subcontext(w->context, w->meet);
    std::ostringstream d;
    d << "witness in a " << w->context.num_objects() << "x" << w->context.num_attributes() << " context after " << secs
      << " s";
    return {ok && secs <= 120.0, d.str(),
            json{{"context", context_to_json(w->context)},
                 {"first", triple_to_json(w->context, w->first)},
                 {"second", triple_to_json(w->context, w->second)},
                 {"meet", triple_to_json(w->context, w->meet)}}};
}

Outcome oracle_equivalence()
{
    std::size_t mismatches = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        const RandomContextSpec spec{1 + i % 8, 1 + (i / 8) % 8, 0.2 + 0.1 * static_cast<double>(i % 7), 1000 + i};
        auto fast = concepts_of(generate_context(spec));
        auto slow = naive_concepts(generate_context(spec));
        auto less = [](const Concept& a, const Concept& b) { return canonical_less(a, b); };
        std::sort(fast.begin(), fast.end(), less);
        std::sort(slow.begin(), slow.end(), less);
        if (fast != slow) ++mismatches;
    }
    return {mismatches == 0, "500 random contexts up to 8x8, " + std::to_string(mismatches) + " mismatches", nullptr};
}

}  // namespace

int main(int argc, char** argv)
{
    const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance-artifacts");
    fs::create_directories(dir);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"running example counts", running_example_counts},
        {"Boolean subcontext and clarification", running_example_boolean_subcontext},
        {"phi on the chain fixture", chain_phi},
        {"Fig. 4 counts and psi-phi equalities", fig4_psi_phi},
        {"psi-phi non-monotonicity", nonadjointness},
        {"sublattice / closed-subcontext bijection", bijection},
        {"closedness characterizations agree", characterizations},
        {"semilattice images of SRB members", semilattice_lemma},
        {"interplay of suborders and semilattices", interplay},
        {"SRB/SOB conjecture probe", [&] { return conjecture(dir); }},
        {"non-closure witness", non_closure},
        {"fast vs naive concept enumeration", oracle_equivalence},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), nullptr};
        }
        if (!o.pass) ++failures;
        const std::string id = (i + 1 < 10 ? "0" : "") + std::to_string(i + 1);
        if (!o.archive.is_null()) std::ofstream(dir / ("criterion-" + id + ".json")) << o.archive.dump(2) << '\n';
        std::printf("%s %s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id.c_str(), criteria[i].first.c_str(),
                    o.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}

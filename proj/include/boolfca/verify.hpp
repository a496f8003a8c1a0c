#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "boolean_enum.hpp"
#include "closed_subcontext.hpp"
#include "context.hpp"
#include "cxt_io.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "lattice.hpp"
#include "serialize.hpp"
#include "substructure_maps.hpp"

namespace boolfca {

// ---------------------------------------------------------------------------
// Random contexts

struct RandomContextSpec {
    std::size_t n_objects = 5;
    std::size_t n_attributes = 5;
    double density = 0.5;
    std::uint64_t seed = 42;
};

/// Each cell is incident independently with probability `density`.
/// Deterministic for a fixed spec on every platform (explicit mt19937_64
/// and a fixed bits-to-double mapping).
[[nodiscard]] inline FormalContext generate_context(const RandomContextSpec& spec)
{
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
    if (spec.n_objects > kMaxExhaustiveSize || spec.n_attributes > kMaxExhaustiveSize)
        throw InvalidArgument("random contexts are limited to 24x24");
    std::mt19937_64 rng(spec.seed);
    std::vector<std::vector<bool>> table(spec.n_objects, std::vector<bool>(spec.n_attributes));
    for (auto& row : table)
        for (std::size_t m = 0; m < spec.n_attributes; ++m)
            row[m] = static_cast<double>(rng() >> 11) * 0x1.0p-53 < spec.density;
    return FormalContext::from_table(table, spec.n_attributes);
}

struct CorpusEntry {
    std::string name;
    FormalContext context;
};

[[nodiscard]] inline std::vector<CorpusEntry> fixture_corpus()
{
    return {{"fig2", fixtures::fig2()}, {"fig3", fixtures::fig3()}, {"fig4", fixtures::fig4()},
            {"fig5", fixtures::fig5()}};
}

/// sizes × densities × trials contexts; the i-th one uses seed + i.
[[nodiscard]] inline std::vector<CorpusEntry> random_corpus(const std::vector<std::pair<std::size_t, std::size_t>>& sizes,
                                                            const std::vector<double>& densities, std::size_t trials,
                                                            std::uint64_t seed)
{
    std::vector<CorpusEntry> out;
    std::uint64_t index = 0;
    for (double density : densities)
        for (auto [g, m] : sizes)
            for (std::size_t t = 0; t < trials; ++t, ++index) {
                RandomContextSpec spec{g, m, density, seed + index};
                std::string name = "random-" + std::to_string(g) + "x" + std::to_string(m) + "-d" +
                                   std::to_string(static_cast<int>(density * 100 + 0.5)) + "-s" +
                                   std::to_string(spec.seed);
                out.push_back({std::move(name), generate_context(spec)});
            }
    return out;
}

/// Densities {0.3, 0.5, 0.7} × sizes {4×4, 5×5, 6×5} × 50 seeds.
[[nodiscard]] inline std::vector<CorpusEntry> default_corpus(std::uint64_t seed = 42)
{
    return random_corpus({{4, 4}, {5, 5}, {6, 5}}, {0.3, 0.5, 0.7}, 50, seed);
}

// ---------------------------------------------------------------------------
// Per-context cache

struct SuiteOptions {
    /// Boolean dimensions examined by the enumeration-based checks.
    std::vector<std::size_t> dims{2, 3};
    EnumerationBudget budget{};
    unsigned threads = 1;
    /// Witnesses kept per lemma; all violations are still counted.
    std::size_t max_witnesses = 5;
    /// Exhaustive (H, N, J) scans run only when the candidate count stays below this.
    std::uint64_t max_candidate_triples = 50'000;
    /// All [H, N] selectors are examined only when |G| + |M| stays below this.
    std::size_t max_selector_bits = 12;
    bool timing = false;
};

/// Number of candidate triples (H, N, J ⊆ I ∩ (H×N)).
[[nodiscard]] inline std::uint64_t candidate_triple_count(const FormalContext& ctx)
{
    if (ctx.num_objects() > 4 || ctx.num_attributes() > 4) return UINT64_MAX;
    std::uint64_t total = 0;
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << ctx.num_objects()); ++h)
        for (std::uint64_t n = 0; n < (std::uint64_t{1} << ctx.num_attributes()); ++n) {
            std::size_t cells = 0;
            for (std::size_t g : ObjectSet(h)) cells += (ctx.row(g) & AttributeSet(n)).size();
            total += std::uint64_t{1} << cells;
        }
    return total;
}

/// (H, N, J) as a standalone context (indices renumbered).
[[nodiscard]] inline FormalContext triple_as_context(const FormalContext& ctx, const ClosedSubcontext& t)
{
    FormalContext relation(ctx.object_names(), ctx.attribute_names(), t.rows);
    return induced_subcontext(relation, {t.objects, t.attributes});
}

/// Lazily computed structures shared by the lemma checks of one context.
class ContextAnalysis {
public:
    struct SelectorConcepts {
        SubcontextSelector selector;
        std::vector<Concept> concepts;
    };

    ContextAnalysis(const FormalContext& ctx, const SuiteOptions& options) : ctx_(ctx), options_(options) {}

    [[nodiscard]] const FormalContext& context() const { return ctx_; }
    [[nodiscard]] const SuiteOptions& options() const { return options_; }

    const ConceptLattice& lattice()
    {
        if (!lattice_) lattice_.emplace(ctx_);
        return *lattice_;
    }
    const std::vector<ConceptSet>& sublattices()
    {
        if (!sublattices_) {
            auto e = enumerate_sublattices(lattice(), options_.budget);
            if (e.truncated) throw BudgetExceeded("sublattice enumeration truncated");
            sublattices_ = std::move(e.items);
        }
        return *sublattices_;
    }
    /// K_S for every sublattice S, in the same order.
    const std::vector<ClosedSubcontext>& closed()
    {
        if (!closed_) {
            closed_.emplace();
            for (const auto& s : sublattices()) closed_->push_back(sublattice_to_closed(lattice(), s));
        }
        return *closed_;
    }
    const std::vector<SubcontextSelector>& srb(std::size_t k) { return cached(srb_, k, [&] {
            return enumerate_srb(ctx_, k, options_.budget); }); }
    const std::vector<SubcontextSelector>& sb(std::size_t k) { return cached(sb_, k, [&] {
            return enumerate_sb(ctx_, k, options_.budget); }); }
    const std::vector<ConceptSet>& sob(std::size_t k) { return cached(sob_, k, [&] {
            return enumerate_sob(lattice(), k, options_.budget); }); }

    [[nodiscard]] bool all_selectors_feasible() const
    {
        return ctx_.num_objects() + ctx_.num_attributes() <= options_.max_selector_bits;
    }
    /// Every [H, N] with its concepts when feasible, otherwise the SB members
    /// of the examined dimensions.
    const std::vector<SelectorConcepts>& selectors()
    {
        if (!selectors_) {
            selectors_.emplace();
            std::vector<SubcontextSelector> sels;
            if (all_selectors_feasible()) {
                for (std::uint64_t h = 0; h < (std::uint64_t{1} << ctx_.num_objects()); ++h)
                    for (std::uint64_t n = 0; n < (std::uint64_t{1} << ctx_.num_attributes()); ++n)
                        sels.push_back({ObjectSet(h), AttributeSet(n)});
            } else {
                std::set<SubcontextSelector> unique;
                for (std::size_t k : options_.dims)
                    for (const auto& s : sb(k)) unique.insert(s);
                unique.insert(SubcontextSelector::whole(ctx_));
                sels.assign(unique.begin(), unique.end());
            }
            for (const auto& s : sels) selectors_->push_back({s, subcontext_concepts(ctx_, s)});
        }
        return *selectors_;
    }

    const FormalContext& clarified()
    {
        if (!clarified_) clarified_ = clarify(ctx_).context;
        return *clarified_;
    }
    const ConceptLattice& clarified_lattice()
    {
        if (!clarified_lattice_) clarified_lattice_.emplace(clarified());
        return *clarified_lattice_;
    }

    [[nodiscard]] bool candidate_scan_feasible() const
    {
        return candidate_triple_count(ctx_) <= options_.max_candidate_triples;
    }

private:
    template <typename T, typename F>
    const std::vector<T>& cached(std::map<std::size_t, std::vector<T>>& cache, std::size_t k, F&& compute)
    {
        auto it = cache.find(k);
        if (it == cache.end()) {
            auto e = compute();
            if (e.truncated) throw BudgetExceeded("enumeration truncated");
            it = cache.emplace(k, std::move(e.items)).first;
        }
        return it->second;
    }

    const FormalContext& ctx_;
    const SuiteOptions& options_;
    std::optional<ConceptLattice> lattice_;
    std::optional<std::vector<ConceptSet>> sublattices_;
    std::optional<std::vector<ClosedSubcontext>> closed_;
    std::map<std::size_t, std::vector<SubcontextSelector>> srb_;
    std::map<std::size_t, std::vector<SubcontextSelector>> sb_;
    std::map<std::size_t, std::vector<ConceptSet>> sob_;
    std::optional<std::vector<SelectorConcepts>> selectors_;
    std::optional<FormalContext> clarified_;
    std::optional<ConceptLattice> clarified_lattice_;
};

// ---------------------------------------------------------------------------
// Lemma checks

/// Collects instance counts and violations for one lemma on one context.
class LemmaSink {
public:
    explicit LemmaSink(std::size_t max_witnesses) : max_witnesses_(max_witnesses) {}

    void instance(std::uint64_t n = 1) { instances_ += n; }
    /// Records a violation; returns false so callers can `return sink.fail(...)`.
    bool fail(json detail)
    {
        ++violations_;
        if (witnesses_.size() < max_witnesses_) witnesses_.push_back(std::move(detail));
        return false;
    }
    /// Counts one instance and records a violation unless `ok`.
    bool expect(bool ok, const std::function<json()>& detail)
    {
        ++instances_;
        if (!ok) fail(detail());
        return ok;
    }

    [[nodiscard]] std::uint64_t instances() const { return instances_; }
    [[nodiscard]] std::uint64_t violations() const { return violations_; }
    [[nodiscard]] std::vector<json>& witnesses() { return witnesses_; }

private:
    std::size_t max_witnesses_;
    std::uint64_t instances_ = 0;
    std::uint64_t violations_ = 0;
    std::vector<json> witnesses_;
};

enum class LemmaKind { proven, probe };

struct LemmaInfo {
    std::string id;
    std::string statement;
    LemmaKind kind = LemmaKind::proven;
    std::function<void(ContextAnalysis&, LemmaSink&)> check;
};

namespace detail {

inline json suborder_json(const ConceptLattice& lat, const ConceptSet& s) { return suborder_to_json(lat, s); }

inline bool same_lattice(const ConceptLattice& lat, const ClosedSubcontext& t, const ConceptSet& expected)
{
    return is_closed_subcontext(lat.context(), t) && closed_to_sublattice(lat, t) == expected;
}

inline bool triple_leq(const ClosedSubcontext& a, const ClosedSubcontext& b)
{
    if (!a.objects.is_subset_of(b.objects) || !a.attributes.is_subset_of(b.attributes)) return false;
    for (std::size_t g = 0; g < a.rows.size(); ++g)
        if (!a.rows[g].is_subset_of(b.rows[g])) return false;
    return true;
}

inline void check_characterization(ContextAnalysis& an, LemmaSink& sink, const char* which)
{
    const FormalContext& ctx = an.context();
    const std::string name = which;
    auto visit = [&](const ClosedSubcontext& t) {
        if (name == "arrows" && !is_clarified_triple(t)) return;
        const bool expected = is_closed_subcontext(ctx, t);
        bool got = false;
        if (name == "double-prime") got = check_double_prime_condition(ctx, t);
        else if (name == "condition-c") got = check_condition_C(ctx, t);
        else got = check_clarified_arrow_characterization(ctx, t);
        sink.expect(got == expected, [&] {
            return json{{"triple", triple_to_json(ctx, t)}, {"closed", expected}, {"characterization", got}};
        });
    };
    if (an.candidate_scan_feasible()) {
        for_each_candidate_triple(ctx, visit);
        return;
    }
    if (an.all_selectors_feasible())
        for (const auto& s : an.selectors()) visit(induced_triple(ctx, s.selector));
    for (const auto& t : an.closed()) visit(t);
}

template <typename F>
void for_each_dim(ContextAnalysis& an, F&& f)
{
    for (std::size_t k : an.options().dims) f(k);
}

}  // namespace detail

/// Every lemma the suite knows, in report order.
[[nodiscard]] inline const std::vector<LemmaInfo>& lemma_catalog()
{
    static const std::vector<LemmaInfo> catalog = [] {
        std::vector<LemmaInfo> c;
        c.push_back({"bijection", "S -> K_S and closed-subcontext -> concepts are inverse bijections",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         const auto& subs = an.sublattices();
                         const auto& closed = an.closed();
                         std::set<ClosedSubcontext> distinct;
                         for (std::size_t i = 0; i < subs.size(); ++i) {
                             const auto& t = closed[i];
                             const bool ok = is_closed_subcontext(lat.context(), t) &&
                                             closed_to_sublattice(lat, t) == subs[i] &&
                                             sublattice_to_closed(lat, closed_to_sublattice(lat, t)) == t;
                             sink.expect(ok, [&] {
                                 return json{{"sublattice", detail::suborder_json(lat, subs[i])},
                                             {"triple", triple_to_json(lat.context(), t)}};
                             });
                             distinct.insert(t);
                         }
                         sink.expect(distinct.size() == subs.size(), [&] {
                             return json{{"sublattices", subs.size()}, {"distinct_triples", distinct.size()}};
                         });
                         if (!an.candidate_scan_feasible()) return;
                         std::size_t closed_count = 0;
                         for_each_candidate_triple(lat.context(), [&](const ClosedSubcontext& t) {
                             if (!is_closed_subcontext(lat.context(), t)) return;
                             ++closed_count;
                             sink.expect(sublattice_to_closed(lat, closed_to_sublattice(lat, t)) == t, [&] {
                                 return json{{"triple", triple_to_json(lat.context(), t)}};
                             });
                         });
                         sink.expect(closed_count == subs.size(), [&] {
                             return json{{"sublattices", subs.size()}, {"closed_subcontexts", closed_count}};
                         });
                     }});
        c.push_back({"boundary", "closed (H,N,J): H = G or some m in N has m^J = H; N = M or some g in H has g^J = N",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         for (const auto& t : an.closed())
                             sink.expect(boundary_witnesses(an.context(), t).holds(),
                                         [&] { return json{{"triple", triple_to_json(an.context(), t)}}; });
                     }});
        c.push_back({"smallest-closed",
                     "every concept set lies in a smallest closed-subcontext (checked for all concept pairs)",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         const auto& subs = an.sublattices();
                         const auto& closed = an.closed();
                         for (std::size_t i = 0; i < lat.size(); ++i)
                             for (std::size_t j = i; j < lat.size(); ++j) {
                                 const ConceptSet t = ConceptSet::of(lat.size(), {i, j});
                                 const ClosedSubcontext s = smallest_closed_containing(lat, t);
                                 bool ok = is_closed_subcontext(lat.context(), s) &&
                                           t.is_subset_of(closed_to_sublattice(lat, s));
                                 for (std::size_t x = 0; x < subs.size() && ok; ++x)
                                     if (t.is_subset_of(subs[x])) ok = detail::triple_leq(s, closed[x]);
                                 sink.expect(ok, [&] {
                                     return json{{"concepts", {i, j}}, {"triple", triple_to_json(lat.context(), s)}};
                                 });
                             }
                     }});
        c.push_back({"char-double-prime", "closed iff X^JJ contains X^JI for all X in H and all X in N",
                     LemmaKind::proven,
                     [](ContextAnalysis& an, LemmaSink& sink) { detail::check_characterization(an, sink, "double-prime"); }});
        c.push_back({"char-condition-c", "closed iff the cell condition (C) and the extremal-concept clause hold",
                     LemmaKind::proven,
                     [](ContextAnalysis& an, LemmaSink& sink) { detail::check_characterization(an, sink, "condition-c"); }});
        c.push_back({"char-arrows", "clarified (H,N,J) is closed iff no cell of I in H x N outside J is a J-arrow",
                     LemmaKind::proven,
                     [](ContextAnalysis& an, LemmaSink& sink) { detail::check_characterization(an, sink, "arrows"); }});
        c.push_back({"canonical-closed",
                     "(A,B,AxB), (A,M,I), (G,B,I), (C,B,AxB u CxD), (C,B,I) give {c}, ideal, filter, pair, interval",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         const auto& ctx = lat.context();
                         for (std::size_t i = 0; i < lat.size(); ++i) {
                             const Concept& c = lat[i];
                             auto single = lat.none();
                             single.insert(i);
                             sink.expect(detail::same_lattice(lat, concept_triple(ctx, c), single),
                                         [&] { return json{{"construction", "concept"}, {"concept", i}}; });
                             sink.expect(detail::same_lattice(lat, ideal_triple(ctx, c), lat.down_set(i)),
                                         [&] { return json{{"construction", "ideal"}, {"concept", i}}; });
                             sink.expect(detail::same_lattice(lat, filter_triple(ctx, c), lat.up_set(i)),
                                         [&] { return json{{"construction", "filter"}, {"concept", i}}; });
                             for (std::size_t j = 0; j < lat.size(); ++j) {
                                 if (i == j || !lat.leq(i, j)) continue;
                                 const auto pair = ConceptSet::of(lat.size(), {i, j});
                                 sink.expect(detail::same_lattice(lat, pair_triple(ctx, c, lat[j]), pair), [&] {
                                     return json{{"construction", "pair"}, {"lower", i}, {"upper", j}};
                                 });
                                 sink.expect(detail::same_lattice(lat, interval_triple(ctx, c, lat[j]),
                                                                  lat.up_set(i) & lat.down_set(j)),
                                             [&] {
                                                 return json{{"construction", "interval"}, {"lower", i}, {"upper", j}};
                                             });
                             }
                         }
                     }});
        c.push_back({"arrow-containment", "closed (H,N,J): up-arrows of J lie in those of I, down-arrows likewise",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         for (const auto& t : an.closed())
                             sink.expect(arrow_containment(an.context(), t),
                                         [&] { return json{{"triple", triple_to_json(an.context(), t)}}; });
                     }});
        c.push_back({"arrow-containment-clarified", "clarified closed (H,N,J): the arrow containments hold",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         for (const auto& t : an.closed()) {
                             if (!is_clarified_triple(t)) continue;
                             sink.expect(arrow_containment(an.context(), t),
                                         [&] { return json{{"triple", triple_to_json(an.context(), t)}}; });
                         }
                     }});
        c.push_back({"boolean-restriction", "a sublattice S is Boolean of dimension k iff the lattice of K_S is",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         const auto& subs = an.sublattices();
                         for (std::size_t i = 0; i < subs.size(); ++i) {
                             const auto as_suborder = is_boolean_suborder(lat, subs[i]);
                             const auto as_lattice =
                                 is_boolean_lattice(ConceptLattice(triple_as_context(lat.context(), an.closed()[i])));
                             sink.expect(as_suborder == as_lattice, [&] {
                                 return json{{"sublattice", detail::suborder_json(lat, subs[i])}};
                             });
                         }
                     }});
        c.push_back({"lifting", "lifting an SRB member yields Boolean closed-subcontexts whose lattices are in SLB_k",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             std::set<ConceptSet> slb;
                             for (const auto& s : an.sob(k))
                                 if (is_sublattice(lat, s)) slb.insert(s);
                             for (const auto& sel : an.srb(k)) {
                                 const auto lifted = boolean_closed_from_srb(lat, sel, an.options().budget);
                                 if (lifted.truncated) throw BudgetExceeded("lift enumeration truncated");
                                 for (const auto& t : lifted.items) {
                                     const bool ok = is_closed_subcontext(lat.context(), t) &&
                                                     is_boolean_lattice(ConceptLattice(triple_as_context(lat.context(), t))) == k &&
                                                     slb.count(closed_to_sublattice(lat, t)) == 1;
                                     sink.expect(ok, [&] {
                                         return json{{"srb", selector_to_json(lat.context(), sel)},
                                                     {"triple", triple_to_json(lat.context(), t)}};
                                     });
                                 }
                             }
                         });
                     }});
        c.push_back({"lifting-complete", "every Boolean sublattice arises by lifting some SRB member (probe)",
                     LemmaKind::probe, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             std::set<ConceptSet> reached;
                             for (const auto& sel : an.srb(k))
                                 for (const auto& t : boolean_closed_from_srb(lat, sel, an.options().budget).items)
                                     reached.insert(closed_to_sublattice(lat, t));
                             for (const auto& s : an.sob(k)) {
                                 if (!is_sublattice(lat, s)) continue;
                                 sink.expect(reached.count(s) == 1, [&] {
                                     return json{{"k", k}, {"sublattice", detail::suborder_json(lat, s)}};
                                 });
                             }
                         });
                     }});
        c.push_back({"subsemilattice", "SRB member: phi1 image is join-closed and phi2 image is meet-closed",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             for (const auto& sel : an.srb(k)) {
                                 const bool ok = is_sub_join_semilattice(lat, phi1_lift(lat, sel)) &&
                                                 is_sub_meet_semilattice(lat, phi2_lift(lat, sel));
                                 sink.expect(ok, [&] { return json{{"srb", selector_to_json(lat.context(), sel)}}; });
                             }
                         });
                     }});
        c.push_back({"phi-equal", "phi1(S) = phi2(S) iff (A' \\ B) x (B' \\ A) lies in I for every concept; "
                                  "cases 1-3 everywhere imply equality",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         const auto& ctx = lat.context();
                         for (const auto& s : an.selectors()) {
                             const bool lifts_equal = phi1_lift(lat, s.selector) == phi2_lift(lat, s.selector);
                             const bool product_test = phi_equal(ctx, s.selector).equal;
                             bool easy_cases = true;
                             for (const auto& c : s.concepts) easy_cases = easy_cases && classify_case(ctx, s.selector, c) != 4;
                             sink.expect(lifts_equal == product_test && (!easy_cases || lifts_equal),
                                         [&] { return json{{"selector", selector_to_json(ctx, s.selector)}}; });
                         }
                     }});
        c.push_back({"phi-equal-full", "H = G or N = M implies phi1(S) = phi2(S)", LemmaKind::proven,
                     [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         const auto& ctx = lat.context();
                         std::vector<SubcontextSelector> sels;
                         for (std::uint64_t n = 0; n < (std::uint64_t{1} << ctx.num_attributes()); ++n)
                             sels.push_back({ctx.all_objects(), AttributeSet(n)});
                         for (std::uint64_t h = 0; h < (std::uint64_t{1} << ctx.num_objects()); ++h)
                             sels.push_back({ObjectSet(h), ctx.all_attributes()});
                         for (const auto& sel : sels)
                             sink.expect(phi1_lift(lat, sel) == phi2_lift(lat, sel),
                                         [&] { return json{{"selector", selector_to_json(ctx, sel)}}; });
                     }});
        c.push_back({"phi-interval", "phi1(A,B) <= phi2(A,B), bounding exactly the concepts (C,D) with A in C, B in D",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         const auto& ctx = lat.context();
                         for (const auto& s : an.selectors())
                             for (const auto& c : s.concepts) {
                                 const auto [lo, hi] = phi_interval(ctx, s.selector, c);
                                 const std::size_t l = *lat.index_of(lo);
                                 const std::size_t u = *lat.index_of(hi);
                                 bool ok = lat.leq(l, u);
                                 for (std::size_t x = 0; x < lat.size() && ok; ++x) {
                                     const bool inside = lat.leq(l, x) && lat.leq(x, u);
                                     const bool contains = c.extent.is_subset_of(lat[x].extent) &&
                                                           c.intent.is_subset_of(lat[x].intent);
                                     ok = inside == contains;
                                 }
                                 sink.expect(ok, [&] {
                                     return json{{"selector", selector_to_json(ctx, s.selector)},
                                                 {"concept", concept_to_json(ctx, c)}};
                                 });
                             }
                     }});
        c.push_back({"order-embedding", "phi1 and phi2 are order embeddings", LemmaKind::proven,
                     [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& ctx = an.context();
                         for (const auto& s : an.selectors()) {
                             std::vector<Concept> p1;
                             std::vector<Concept> p2;
                             for (const auto& c : s.concepts) {
                                 p1.push_back(phi1(ctx, s.selector, c));
                                 p2.push_back(phi2(ctx, s.selector, c));
                             }
                             bool ok = true;
                             for (std::size_t a = 0; a < s.concepts.size() && ok; ++a)
                                 for (std::size_t b = 0; b < s.concepts.size() && ok; ++b) {
                                     const bool le = s.concepts[a].extent.is_subset_of(s.concepts[b].extent);
                                     ok = le == p1[a].extent.is_subset_of(p1[b].extent) &&
                                          le == p2[a].extent.is_subset_of(p2[b].extent);
                                 }
                             sink.expect(ok, [&] { return json{{"selector", selector_to_json(ctx, s.selector)}}; });
                         }
                     }});
        c.push_back({"sob-existence", "SB_k nonempty implies SOB_k nonempty", LemmaKind::proven,
                     [](ContextAnalysis& an, LemmaSink& sink) {
                         detail::for_each_dim(an, [&](std::size_t k) {
                             sink.expect(an.sb(k).empty() || !an.sob(k).empty(),
                                         [&] { return json{{"k", k}, {"sb", an.sb(k).size()}}; });
                         });
                     }});
        c.push_back({"injectivity",
                     "clarified context: SRB members with different H have different phi1 images, "
                     "different N different phi2 images",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.clarified_lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             const auto srb = enumerate_srb(an.clarified(), k, an.options().budget).items;
                             std::vector<ConceptSet> img1;
                             std::vector<ConceptSet> img2;
                             for (const auto& s : srb) {
                                 img1.push_back(phi1_lift(lat, s));
                                 img2.push_back(phi2_lift(lat, s));
                             }
                             for (std::size_t a = 0; a < srb.size(); ++a)
                                 for (std::size_t b = a + 1; b < srb.size(); ++b) {
                                     const bool ok = (srb[a].objects == srb[b].objects || img1[a] != img1[b]) &&
                                                     (srb[a].attributes == srb[b].attributes || img2[a] != img2[b]);
                                     sink.expect(ok, [&] {
                                         return json{{"first", selector_to_json(an.clarified(), srb[a])},
                                                     {"second", selector_to_json(an.clarified(), srb[b])}};
                                     });
                                 }
                         });
                     }});
        c.push_back({"conjecture", "clarified context: |SRB_k| <= |SOB_k| (unproven; probe only)", LemmaKind::probe,
                     [](ContextAnalysis& an, LemmaSink& sink) {
                         detail::for_each_dim(an, [&](std::size_t k) {
                             const auto srb = enumerate_srb(an.clarified(), k, an.options().budget).items.size();
                             const auto sob = enumerate_sob(an.clarified_lattice(), k, an.options().budget).items.size();
                             sink.expect(srb <= sob,
                                         [&] { return json{{"k", k}, {"srb", srb}, {"sob", sob}}; });
                         });
                     }});
        c.push_back({"psi-boolean", "psi of a Boolean suborder of dimension k is a Boolean subcontext of dimension k",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             const auto& sb = an.sb(k);
                             for (const auto& s : an.sob(k)) {
                                 const auto sel = psi(lat, s);
                                 const bool ok = is_boolean_lattice(subcontext_lattice(lat.context(), sel)) == k &&
                                                 std::binary_search(sb.begin(), sb.end(), sel, selector_less);
                                 sink.expect(ok, [&] {
                                     return json{{"suborder", detail::suborder_json(lat, s)},
                                                 {"psi", selector_to_json(lat.context(), sel)}};
                                 });
                             }
                         });
                     }});
        c.push_back({"psi-phi-fixedpoint",
                     "SRB member S: psi(phi1(S)) = S iff every (n', n'') is a coatom of phi1(S); dually for phi2",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             for (const auto& sel : an.srb(k)) {
                                 const auto r = psi_phi_fixedpoint_condition(lat, sel);
                                 sink.expect(r.consistent(), [&] {
                                     return json{{"srb", selector_to_json(lat.context(), sel)},
                                                 {"phi1_fixed", r.phi1_fixed},
                                                 {"coatom_condition", r.coatom_condition},
                                                 {"phi2_fixed", r.phi2_fixed},
                                                 {"atom_condition", r.atom_condition}};
                                 });
                             }
                         });
                     }});
        c.push_back({"non-supremum",
                     "a middle element that is no join of atoms or no meet of coatoms yields a concept of psi(S) "
                     "with phi1 != phi2",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             for (const auto& s : an.sob(k)) {
                                 const auto w = non_supremum_witness(lat, s);
                                 if (!w) continue;
                                 sink.expect(w->is_concept_of_psi && w->strictly_below, [&] {
                                     return json{{"suborder", detail::suborder_json(lat, s)},
                                                 {"element", w->element},
                                                 {"constructed", concept_to_json(lat.context(), w->concept_of_psi)},
                                                 {"is_concept_of_psi", w->is_concept_of_psi},
                                                 {"psi", selector_to_json(lat.context(), psi(lat, s))}};
                                 });
                             }
                         });
                     }});
        c.push_back({"assoc-semilattice", "phi1(psi(S)) is join-closed and phi2(psi(S)) meet-closed",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             for (const auto& s : an.sob(k)) {
                                 const auto assoc = associated_semilattices(lat, s);
                                 const bool ok = is_sub_join_semilattice(lat, assoc.join_assoc) &&
                                                 is_sub_meet_semilattice(lat, assoc.meet_assoc);
                                 sink.expect(ok, [&] { return json{{"suborder", detail::suborder_json(lat, s)}}; });
                             }
                         });
                     }});
        c.push_back({"assoc-fixed",
                     "join-closed S has phi1(psi(S)) = S; meet-closed S has phi2(psi(S)) = S",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             for (const auto& s : an.sob(k)) {
                                 const auto assoc = associated_semilattices(lat, s);
                                 const bool ok = (!is_sub_join_semilattice(lat, s) || assoc.join_assoc == s) &&
                                                 (!is_sub_meet_semilattice(lat, s) || assoc.meet_assoc == s);
                                 sink.expect(ok, [&] { return json{{"suborder", detail::suborder_json(lat, s)}}; });
                             }
                         });
                     }});
        c.push_back({"interplay-subcontext",
                     "S in SB: psi(phi_i(S)) = S iff a suitably closed Boolean suborder has psi-image S; "
                     "reduced S: phi_i(S) = phi_i(psi(phi_i(S)))",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         const auto& ctx = lat.context();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             std::set<SubcontextSelector> from_join;
                             std::set<SubcontextSelector> from_meet;
                             std::set<SubcontextSelector> from_lattice;
                             for (const auto& s : an.sob(k)) {
                                 const auto sel = psi(lat, s);
                                 const bool j = is_sub_join_semilattice(lat, s);
                                 const bool m = is_sub_meet_semilattice(lat, s);
                                 if (j) from_join.insert(sel);
                                 if (m) from_meet.insert(sel);
                                 if (j && m) from_lattice.insert(sel);
                             }
                             const auto& srb = an.srb(k);
                             for (const auto& sel : an.sb(k)) {
                                 const auto img1 = phi1_lift(lat, sel);
                                 const auto img2 = phi2_lift(lat, sel);
                                 const bool fixed1 = psi(lat, img1) == sel;
                                 const bool fixed2 = psi(lat, img2) == sel;
                                 bool ok = fixed1 == (from_join.count(sel) == 1) &&
                                           fixed2 == (from_meet.count(sel) == 1) &&
                                           (fixed1 && fixed2) == (from_lattice.count(sel) == 1);
                                 if (std::binary_search(srb.begin(), srb.end(), sel, selector_less))
                                     ok = ok && phi1_lift(lat, psi(lat, img1)) == img1 &&
                                          phi2_lift(lat, psi(lat, img2)) == img2;
                                 sink.expect(ok, [&] {
                                     return json{{"k", k},
                                                 {"selector", selector_to_json(ctx, sel)},
                                                 {"psi_phi1_fixed", fixed1},
                                                 {"psi_phi2_fixed", fixed2},
                                                 {"join_closed_preimage", from_join.count(sel) == 1},
                                                 {"meet_closed_preimage", from_meet.count(sel) == 1},
                                                 {"sublattice_preimage", from_lattice.count(sel) == 1}};
                                 });
                             }
                         });
                     }});
        c.push_back({"interplay-suborder",
                     "S in SOB: phi1(psi(S)) = S iff join-closed; phi2(psi(S)) = S iff meet-closed; both iff sublattice",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& lat = an.lattice();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             for (const auto& s : an.sob(k)) {
                                 const auto assoc = associated_semilattices(lat, s);
                                 const bool j = is_sub_join_semilattice(lat, s);
                                 const bool m = is_sub_meet_semilattice(lat, s);
                                 const bool f1 = assoc.join_assoc == s;
                                 const bool f2 = assoc.meet_assoc == s;
                                 sink.expect(f1 == j && f2 == m && (f1 && f2) == is_sublattice(lat, s), [&] {
                                     return json{{"suborder", detail::suborder_json(lat, s)},
                                                 {"join_closed", j},
                                                 {"meet_closed", m},
                                                 {"phi1_psi_fixed", f1},
                                                 {"phi2_psi_fixed", f2}};
                                 });
                             }
                         });
                     }});
        c.push_back({"closed-via-phi", "[H,N] is closed iff phi1 and phi2 fix each of its concepts",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& ctx = an.context();
                         for (const auto& s : an.selectors()) {
                             const bool a = closedness_via_phi(ctx, s.selector);
                             const bool b = is_closed_subcontext(ctx, induced_triple(ctx, s.selector));
                             sink.expect(a == b, [&] { return json{{"selector", selector_to_json(ctx, s.selector)}}; });
                         }
                     }});
        c.push_back({"srb-sb", "SRB_k is the set of reduced SB_k members; SB_k members reduce to N^c(k)",
                     LemmaKind::proven, [](ContextAnalysis& an, LemmaSink& sink) {
                         const auto& ctx = an.context();
                         detail::for_each_dim(an, [&](std::size_t k) {
                             std::vector<SubcontextSelector> reduced;
                             for (const auto& sel : an.sb(k)) {
                                 const FormalContext sub = induced_subcontext(ctx, sel);
                                 sink.expect(is_contranominal(reduce(sub)) == k,
                                             [&] { return json{{"k", k}, {"selector", selector_to_json(ctx, sel)}}; });
                                 if (is_reduced(sub)) reduced.push_back(sel);
                             }
                             sink.expect(reduced == an.srb(k),
                                         [&] { return json{{"k", k}, {"srb", an.srb(k).size()}, {"reduced_sb", reduced.size()}}; });
                         });
                     }});
        return c;
    }();
    return catalog;
}

[[nodiscard]] inline const LemmaInfo* find_lemma(const std::string& id)
{
    for (const auto& l : lemma_catalog())
        if (l.id == id) return &l;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Suite

struct LemmaReport {
    std::string id;
    std::string statement;
    LemmaKind kind = LemmaKind::proven;
    std::size_t contexts = 0;
    std::uint64_t instances = 0;
    std::uint64_t violation_count = 0;
    /// Each entry: {"context_name", "context", "detail"}; replayable.
    std::vector<json> violations;
    std::vector<std::string> errors;
    double elapsed_ms = 0.0;

    /// "pass", "fail" (proven lemma violated), "counterexample" (probe
    /// violated) or "budget" (no violation, but some context was skipped).
    [[nodiscard]] std::string status() const
    {
        if (violation_count > 0) return kind == LemmaKind::probe ? "counterexample" : "fail";
        return errors.empty() ? "pass" : "budget";
    }
};

[[nodiscard]] inline json report_to_json(const LemmaReport& r, bool timing)
{
    json out{{"lemma", r.id},
             {"statement", r.statement},
             {"kind", r.kind == LemmaKind::probe ? "probe" : "proven"},
             {"status", r.status()},
             {"contexts", r.contexts},
             {"instances", r.instances},
             {"violation_count", r.violation_count},
             {"violations", r.violations},
             {"errors", r.errors}};
    if (timing) out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

/// Runs the selected lemmas (all when `filter` is empty) on every context.
/// Contexts may be processed in parallel; results are merged in corpus order,
/// so the report is identical for any thread count.
[[nodiscard]] inline std::vector<LemmaReport> run_suite(const std::vector<CorpusEntry>& corpus,
                                                        const std::vector<std::string>& filter,
                                                        const SuiteOptions& options = {})
{
    std::vector<const LemmaInfo*> lemmas;
    if (filter.empty()) {
        for (const auto& l : lemma_catalog()) lemmas.push_back(&l);
    } else {
        for (const auto& id : filter) {
            const LemmaInfo* l = find_lemma(id);
            if (l == nullptr) throw InvalidArgument("unknown lemma '" + id + "'");
            lemmas.push_back(l);
        }
    }

    struct Cell {
        std::uint64_t instances = 0;
        std::uint64_t violations = 0;
        std::vector<json> witnesses;
        std::optional<std::string> error;
        double elapsed_ms = 0.0;
    };
    std::vector<std::vector<Cell>> cells(corpus.size(), std::vector<Cell>(lemmas.size()));

    auto process = [&](std::size_t ci) {
        ContextAnalysis an(corpus[ci].context, options);
        for (std::size_t li = 0; li < lemmas.size(); ++li) {
            Cell& cell = cells[ci][li];
            LemmaSink sink(options.max_witnesses);
            const auto start = std::chrono::steady_clock::now();
            try {
                lemmas[li]->check(an, sink);
            } catch (const BudgetExceeded& e) {
                cell.error = corpus[ci].name + ": " + e.what();
            }
            cell.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            cell.instances = sink.instances();
            cell.violations = sink.violations();
            cell.witnesses = std::move(sink.witnesses());
        }
    };

    const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(corpus.size())));
    if (threads <= 1) {
        for (std::size_t ci = 0; ci < corpus.size(); ++ci) process(ci);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t ci = next++; ci < corpus.size(); ci = next++) process(ci);
            });
        for (auto& t : pool) t.join();
    }

    std::vector<LemmaReport> reports;
    for (std::size_t li = 0; li < lemmas.size(); ++li) {
        LemmaReport r;
        r.id = lemmas[li]->id;
        r.statement = lemmas[li]->statement;
        r.kind = lemmas[li]->kind;
        for (std::size_t ci = 0; ci < corpus.size(); ++ci) {
            Cell& cell = cells[ci][li];
            ++r.contexts;
            r.instances += cell.instances;
            r.violation_count += cell.violations;
            r.elapsed_ms += cell.elapsed_ms;
            if (cell.error) r.errors.push_back(*cell.error);
            for (auto& w : cell.witnesses) {
                if (r.violations.size() >= options.max_witnesses) break;
                r.violations.push_back({{"context_name", corpus[ci].name},
                                        {"context", context_to_json(corpus[ci].context)},
                                        {"detail", std::move(w)}});
            }
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

/// Re-runs a lemma on the context stored in a violation entry; true iff the
/// lemma still reports a violation there.
[[nodiscard]] inline bool replay_violation(const std::string& lemma_id, const json& violation,
                                           const SuiteOptions& options = {})
{
    const LemmaInfo* lemma = find_lemma(lemma_id);
    if (lemma == nullptr) throw InvalidArgument("unknown lemma '" + lemma_id + "'");
    const FormalContext ctx = context_from_json(violation.at("context"));
    ContextAnalysis an(ctx, options);
    LemmaSink sink(1);
    lemma->check(an, sink);
    return sink.violations() > 0;
}

// ---------------------------------------------------------------------------
// Closed-subcontexts are not closed under intersection

struct NonClosureWitness {
    FormalContext context;
    ClosedSubcontext first;
    ClosedSubcontext second;
    ClosedSubcontext meet;
};

namespace detail {

inline std::optional<NonClosureWitness> non_closure_in(const FormalContext& ctx)
{
    const ConceptLattice lat(ctx);
    const auto subs = enumerate_sublattices(lat).items;
    std::vector<ClosedSubcontext> closed;
    for (const auto& s : subs) closed.push_back(sublattice_to_closed(lat, s));
    for (std::size_t a = 0; a < closed.size(); ++a)
        for (std::size_t b = a + 1; b < closed.size(); ++b) {
            ClosedSubcontext meet = intersect(closed[a], closed[b]);
            if (meet.relation_size() == 0) continue;
            if (!is_closed_subcontext(ctx, meet)) return NonClosureWitness{ctx, closed[a], closed[b], std::move(meet)};
        }
    return std::nullopt;
}

}  // namespace detail

/// Two closed-subcontexts whose componentwise intersection, with a nonempty
/// relation, is not closed. Searches every context up to 3×3 first, then
/// `random_trials` random contexts up to max_size × max_size.
[[nodiscard]] inline std::optional<NonClosureWitness> find_non_closure_witness(std::size_t max_size = 4,
                                                                              std::uint64_t seed = 42,
                                                                              std::size_t random_trials = 2000)
{
    if (max_size > 4) throw InvalidArgument("non-closure search limited to 4x4 contexts");
    const std::size_t exhaustive = std::min<std::size_t>(max_size, 3);
    for (std::size_t ng = 1; ng <= exhaustive; ++ng)
        for (std::size_t nm = 1; nm <= exhaustive; ++nm)
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (ng * nm)); ++bits) {
                std::vector<std::vector<bool>> table(ng, std::vector<bool>(nm));
                for (std::size_t g = 0; g < ng; ++g)
                    for (std::size_t m = 0; m < nm; ++m) table[g][m] = ((bits >> (g * nm + m)) & 1U) != 0;
                if (auto w = detail::non_closure_in(FormalContext::from_table(table, nm))) return w;
            }
    if (max_size <= 3) return std::nullopt;
    for (std::size_t t = 0; t < random_trials; ++t) {
        const RandomContextSpec spec{max_size, max_size, 0.5, seed + t};
        if (auto w = detail::non_closure_in(generate_context(spec))) return w;
    }
    return std::nullopt;
}

}  // namespace boolfca

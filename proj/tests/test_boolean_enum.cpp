#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <boolfca/boolean_enum.hpp>
#include <boolfca/fixtures.hpp>
#include <boolfca/verify.hpp>

#include "oracles.hpp"

using namespace boolfca;

namespace {

using MaskPair = std::pair<oracle::Mask, oracle::Mask>;

std::set<MaskPair> as_masks(const SelectorEnumeration& e)
{
    std::set<MaskPair> out;
    for (const auto& s : e.items)
        out.insert({static_cast<oracle::Mask>(s.objects.bits()), static_cast<oracle::Mask>(s.attributes.bits())});
    return out;
}

SubcontextSelector sel(const FormalContext& ctx, const std::string& objects, const std::string& attributes)
{
    SubcontextSelector s;
    for (char c : objects) s.objects.insert(*ctx.find_object(std::string(1, c)));
    for (char c : attributes) s.attributes.insert(*ctx.find_attribute(std::string(1, c)));
    return s;
}

bool contains(const SelectorEnumeration& e, const SubcontextSelector& s)
{
    return std::find(e.items.begin(), e.items.end(), s) != e.items.end();
}

/// Library suborders translated to sorted oracle indices.
std::set<std::vector<std::size_t>> as_oracle(const ConceptLattice& lat, const SuborderEnumeration& e,
                                            const std::vector<std::pair<oracle::Mask, oracle::Mask>>& cs)
{
    std::vector<std::size_t> from_lib(lat.size());
    for (std::size_t i = 0; i < cs.size(); ++i) from_lib[*lat.index_of_extent(ObjectSet(cs[i].first))] = i;
    std::set<std::vector<std::size_t>> out;
    for (const auto& s : e.items) {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < lat.size(); ++i)
            if (s.contains(i)) v.push_back(from_lib[i]);
        std::sort(v.begin(), v.end());
        out.insert(v);
    }
    return out;
}

std::set<std::vector<std::size_t>> oracle_slb(const std::vector<std::pair<oracle::Mask, oracle::Mask>>& cs, int k)
{
    const auto sob = oracle::boolean_suborders(oracle::concept_order(cs), k);
    const auto subs = oracle::sublattices(cs);
    std::set<std::vector<std::size_t>> out;
    for (const auto& s : sob)
        if (subs.count(s)) out.insert(s);
    return out;
}

}  // namespace

TEST_CASE("reduced Boolean subcontexts of the running example")
{
    const auto fig2 = fixtures::fig2();
    const auto srb = enumerate_srb(fig2, 3);
    REQUIRE(srb.items.size() == 3);
    CHECK(contains(srb, sel(fig2, "456", "bcd")));
    CHECK(contains(srb, sel(fig2, "456", "bce")));
    CHECK(contains(srb, sel(fig2, "123", "abc")));
    CHECK(std::is_sorted(srb.items.begin(), srb.items.end(), selector_less));
    CHECK(is_contranominal(induced_subcontext(fig2, sel(fig2, "123", "abc"))) == 3u);
    CHECK_FALSE(is_contranominal(induced_subcontext(fig2, sel(fig2, "456", "bcde"))));
}

TEST_CASE("Boolean subcontexts of the running example")
{
    const auto fig2 = fixtures::fig2();
    const auto sb = enumerate_sb(fig2, 3);
    CHECK(contains(sb, sel(fig2, "456", "bcde")));
    CHECK(contains(sb, sel(fig2, "1237", "abce")));
    CHECK_FALSE(contains(sb, sel(fig2, "456", "bc")));
    for (const auto& s : enumerate_srb(fig2, 3).items) CHECK(contains(sb, s));
}

TEST_CASE("SRB and SB match brute force")
{
    std::vector<FormalContext> ctxs{fixtures::fig2(), fixtures::fig4(), fixtures::fig5(), fixtures::contranominal(3)};
    std::mt19937_64 rng(41);
    for (int i = 0; i < 25; ++i) ctxs.push_back(generate_context({2 + rng() % 4, 2 + rng() % 4, 0.6, rng()}));
    for (const auto& ctx : ctxs) {
        const auto t = oracle::table_of(ctx);
        for (int k = 0; k <= 3; ++k) {
            CHECK(as_masks(enumerate_srb(ctx, k)) == oracle::reduced_boolean_subcontexts(t, k));
            if (ctx.num_objects() + ctx.num_attributes() <= 10)
                CHECK(as_masks(enumerate_sb(ctx, k)) == oracle::boolean_subcontexts(t, k));
        }
    }
}

TEST_CASE("SOB and SLB match brute force")
{
    std::vector<FormalContext> ctxs{fixtures::fig2(), fixtures::fig4(), fixtures::fig5(), fixtures::contranominal(3)};
    std::mt19937_64 rng(43);
    for (int i = 0; i < 20; ++i) ctxs.push_back(generate_context({2 + rng() % 4, 2 + rng() % 4, 0.5, rng()}));
    for (const auto& ctx : ctxs) {
        const ConceptLattice lat(ctx);
        const auto cs = oracle::concepts(oracle::table_of(ctx));
        const auto order = oracle::concept_order(cs);
        for (int k = 0; k <= 3; ++k) {
            CHECK(as_oracle(lat, enumerate_sob(lat, k), cs) == oracle::boolean_suborders(order, k));
            if (cs.size() <= 20) CHECK(as_oracle(lat, enumerate_slb(lat, k), cs) == oracle_slb(cs, k));
        }
    }
}

TEST_CASE("counts on the fixtures")
{
    const ConceptLattice fig2(fixtures::fig2());
    CHECK(enumerate_slb(fig2, 3).items.size() == 2);
    // The running example's count of dimension-3 suborders, by brute force.
    const auto cs = oracle::concepts(oracle::table_of(fixtures::fig2()));
    CHECK(enumerate_sob(fig2, 3).items.size() == oracle::boolean_suborders(oracle::concept_order(cs), 3).size());

    const auto fig4 = fixtures::fig4();
    const ConceptLattice lat4(fig4);
    CHECK(enumerate_srb(fig4, 3).items.size() == 4);
    CHECK(enumerate_sob(lat4, 3).items.size() == 4);

    const ConceptLattice b2(fixtures::contranominal(2));
    CHECK(enumerate_sob(b2, 2).items.size() == 1);
    CHECK(enumerate_sob(b2, 3).items.empty());
    CHECK(enumerate_sob(b2, 0).items.size() == 4);
}

TEST_CASE("budgets")
{
    const auto fig2 = fixtures::fig2();
    CHECK_THROWS_AS(enumerate_srb(fig2, 9), BudgetExceeded);
    EnumerationBudget tiny;
    tiny.max_nodes = 5;
    CHECK_THROWS_AS(enumerate_sb(fig2, 3, tiny), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_sob(ConceptLattice(fig2), 3, tiny), BudgetExceeded);
    tiny.on_exceed = OnExceed::truncate;
    const auto part = enumerate_sob(ConceptLattice(fig2), 3, tiny);
    CHECK(part.truncated);
    const auto full = enumerate_sob(ConceptLattice(fig2), 3);
    for (const auto& s : part.items) CHECK(std::find(full.items.begin(), full.items.end(), s) != full.items.end());
}

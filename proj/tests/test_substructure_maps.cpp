#include <catch_amalgamated.hpp>

#include <random>

#include <boolfca/boolean_enum.hpp>
#include <boolfca/closed_subcontext.hpp>
#include <boolfca/fixtures.hpp>
#include <boolfca/substructure_maps.hpp>
#include <boolfca/verify.hpp>

#include "oracles.hpp"

using namespace boolfca;

namespace {

SubcontextSelector sel(const FormalContext& ctx, const std::string& objects, const std::string& attributes)
{
    SubcontextSelector s;
    for (char c : objects) s.objects.insert(*ctx.find_object(std::string(1, c)));
    for (char c : attributes) s.attributes.insert(*ctx.find_attribute(std::string(1, c)));
    return s;
}

ConceptSet lift(const ConceptLattice& lat, const std::vector<std::size_t>& ids)
{
    ConceptSet s = lat.none();
    for (std::size_t i : ids) s.insert(i);
    return s;
}

/// ψ by brute force: atoms/coatoms from the induced order, minimal generators
/// by scanning every subset of the extent (intent).
SubcontextSelector brute_psi(const ConceptLattice& lat, const ConceptSet& s)
{
    const FormalContext& ctx = lat.context();
    const auto elems = s.to_vector();
    auto lower = [&](std::size_t x) {
        std::size_t n = 0;
        for (std::size_t y : elems) n += lat.less(y, x) ? 1 : 0;
        return n;
    };
    auto upper = [&](std::size_t x) {
        std::size_t n = 0;
        for (std::size_t y : elems) n += lat.less(x, y) ? 1 : 0;
        return n;
    };
    SubcontextSelector out;
    for (std::size_t x : elems) {
        if (lower(x) == 1) {
            const std::uint64_t e = lat[x].extent.bits();
            for (std::uint64_t o = e;; o = (o - 1) & e) {
                if (ctx.closure_objects(ObjectSet(o)) == lat[x].extent) {
                    bool minimal = true;
                    for (std::size_t g : ObjectSet(o))
                        if (ctx.closure_objects(ObjectSet(o) - ObjectSet{g}) == lat[x].extent) minimal = false;
                    if (minimal) out.objects |= ObjectSet(o);
                }
                if (o == 0) break;
            }
        }
        if (upper(x) == 1) {
            const std::uint64_t i = lat[x].intent.bits();
            for (std::uint64_t a = i;; a = (a - 1) & i) {
                if (ctx.closure_attributes(AttributeSet(a)) == lat[x].intent) {
                    bool minimal = true;
                    for (std::size_t m : AttributeSet(a))
                        if (ctx.closure_attributes(AttributeSet(a) - AttributeSet{m}) == lat[x].intent) minimal = false;
                    if (minimal) out.attributes |= AttributeSet(a);
                }
                if (a == 0) break;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("phi maps match their definitions")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ctx = generate_context({5, 5, 0.5, rng()});
        const ConceptLattice lat(ctx);
        const SubcontextSelector s{ObjectSet(rng() & 31), AttributeSet(rng() & 31)};
        bool equal = true;
        for (const auto& c : subcontext_concepts(ctx, s)) {
            const Concept p1 = phi1(ctx, s, c);
            const Concept p2 = phi2(ctx, s, c);
            CHECK(p1.extent == ctx.closure_objects(c.extent));
            CHECK(p1.intent == ctx.derive_objects(c.extent));
            CHECK(p2.extent == ctx.derive_attributes(c.intent));
            CHECK(p2.intent == ctx.closure_attributes(c.intent));
            CHECK(p1.extent.is_subset_of(p2.extent));
            equal = equal && p1 == p2;
            // The interval [φ₁, φ₂] holds exactly the concepts extending (A, B).
            for (const auto& d : lat.concepts()) {
                const bool between = p1.extent.is_subset_of(d.extent) && d.extent.is_subset_of(p2.extent);
                CHECK(between == (c.extent.is_subset_of(d.extent) && c.intent.is_subset_of(d.intent)));
            }
            const int kase = classify_case(ctx, s, c);
            CHECK((kase == 1) == (p1 == c && p2 == c));
        }
        CHECK(phi_equal(ctx, s).equal == equal);
        CHECK(closedness_via_phi(ctx, s) == is_closed_subcontext(ctx, induced_triple(ctx, s)));
    }
}

TEST_CASE("phi on a three-element chain")
{
    const auto fig3 = fixtures::fig3();
    const ConceptLattice lat(fig3);
    const auto s = sel(fig3, "12", "ab");
    const auto cs = subcontext_concepts(fig3, s);
    REQUIRE(cs.size() == 1);
    CHECK(phi1(fig3, s, cs[0]) == lat[lat.bottom()]);
    CHECK(phi2(fig3, s, cs[0]) == lat[lat.top()]);
    CHECK(classify_case(fig3, s, cs[0]) == 4);
    const auto eq = phi_equal(fig3, s);
    CHECK_FALSE(eq.equal);
    REQUIRE(eq.cell);
    CHECK_FALSE(fig3.incident(eq.cell->first, eq.cell->second));
    CHECK_THROWS_AS(phi1(fig3, s, lat[lat.top()]), InvalidArgument);
}

TEST_CASE("psi matches brute force")
{
    for (auto ctx : {fixtures::fig2(), fixtures::fig4(), fixtures::fig5()}) {
        const ConceptLattice lat(ctx);
        for (std::size_t k = 1; k <= 3; ++k)
            for (const auto& s : enumerate_sob(lat, k).items) CHECK(psi(lat, s) == brute_psi(lat, s));
    }
    const auto fig2 = fixtures::fig2();
    const ConceptLattice lat(fig2);
    const auto image = phi1_lift(lat, sel(fig2, "12345678", "abc"));
    CHECK(psi(lat, image) == sel(fig2, "1234", "abc"));
    CHECK_THROWS_AS(psi(lat, lift(lat, {0, 1, 2})), InvalidArgument);
}

TEST_CASE("psi of the reduced Boolean subcontexts of Fig. 4")
{
    const auto fig4 = fixtures::fig4();
    const ConceptLattice lat(fig4);
    const auto s1 = sel(fig4, "123", "abc");
    const auto s2 = sel(fig4, "234", "abc");
    const auto s3 = sel(fig4, "123", "bcd");
    CHECK(psi(lat, phi1_lift(lat, s1)) == s1);
    CHECK(psi(lat, phi2_lift(lat, s1)) == s1);
    // The fixed points of S₂ and S₃ sit on the other φ than the printed example
    // says: φ₂ of a contranominal scale depends on N only, so φ₂(S₂) = φ₂(S₁).
    CHECK(phi2_lift(lat, s2) == phi2_lift(lat, s1));
    CHECK(psi(lat, phi2_lift(lat, s2)) == s1);
    CHECK(psi(lat, phi1_lift(lat, s2)) == s2);
    CHECK(phi1_lift(lat, s3) == phi1_lift(lat, s1));
    CHECK(psi(lat, phi1_lift(lat, s3)) == s1);
    CHECK(psi(lat, phi2_lift(lat, s3)) == s3);
}

TEST_CASE("associated semilattices")
{
    for (auto ctx : {fixtures::fig2(), fixtures::fig4(), fixtures::fig5()}) {
        const ConceptLattice lat(ctx);
        for (std::size_t k = 1; k <= 3; ++k)
            for (const auto& s : enumerate_sob(lat, k).items) {
                if (is_boolean_lattice(subcontext_lattice(ctx, psi(lat, s))) != k) continue;
                const auto assoc = associated_semilattices(lat, s);
                CHECK(is_sub_join_semilattice(lat, assoc.join_assoc));
                CHECK(is_sub_meet_semilattice(lat, assoc.meet_assoc));
            }
    }
    // Without that, closure fails: ψ{0, 1, 8, 14} on Fig. 2 is B(3) and its
    // images are not both closed.
    const ConceptLattice lat(fixtures::fig2());
    const auto assoc = associated_semilattices(lat, lift(lat, {0, 1, 8, 14}));
    CHECK_FALSE((is_sub_join_semilattice(lat, assoc.join_assoc) && is_sub_meet_semilattice(lat, assoc.meet_assoc)));
}

TEST_CASE("join-closed suborder that psi does not recover")
{
    const auto fig2 = fixtures::fig2();
    const ConceptLattice lat(fig2);
    const auto s = lift(lat, {0, 3, 4, 5, 8, 10, 11, 14});
    REQUIRE(is_boolean_suborder(lat, s) == 3u);
    CHECK(is_sub_join_semilattice(lat, s));
    // (34, bc) is minimally generated by {3, 4}, which drags object 4 into ψ(S).
    const auto assoc = associated_semilattices(lat, s);
    CHECK(assoc.join_assoc == lift(lat, {2, 3, 4, 5, 8, 10, 11, 14}));
    CHECK(assoc.join_assoc != s);
}

TEST_CASE("psi of a Boolean suborder can have a larger dimension")
{
    const auto fig2 = fixtures::fig2();
    const ConceptLattice lat(fig2);
    const auto s = lift(lat, {0, 1, 8, 14});
    REQUIRE(is_boolean_suborder(lat, s) == 2u);
    // minG_obj of (124, a) is {{1, 2}}.
    const auto p = psi(lat, s);
    CHECK(p == sel(fig2, "123", "abcde"));
    CHECK(is_boolean_lattice(subcontext_lattice(fig2, p)) == 3u);
}

TEST_CASE("psi-phi fixed point and the coatom condition")
{
    // Attributes a and c share the extent {3}, so φ₁(S) has c in a coatom intent.
    const auto ctx = FormalContext::from_strings({"...x", ".x..", "x.x.", "...."});
    const ConceptLattice lat(ctx);
    const auto s = sel(ctx, "13", "ad");
    REQUIRE(is_contranominal(ctx, s) == 2u);
    const auto report = psi_phi_fixedpoint_condition(lat, s);
    CHECK_FALSE(report.consistent());
    CHECK(report.coatom_condition);
    CHECK_FALSE(report.phi1_fixed);

    // On the clarified fixtures the two sides agree.
    for (auto c : {fixtures::fig4(), fixtures::fig5()}) {
        const ConceptLattice l(c);
        for (const auto& srb : enumerate_srb(c, 2).items)
            if (is_clarified(c)) CHECK(psi_phi_fixedpoint_condition(l, srb).consistent());
    }
}

TEST_CASE("reduced Boolean subcontext whose phi image moves under psi")
{
    const auto ctx = FormalContext::from_strings({"xxx.", "....", ".x.x", "x..."});
    const ConceptLattice lat(ctx);
    const auto s = sel(ctx, "13", "cd");
    REQUIRE(is_contranominal(ctx, s) == 2u);
    const auto image = phi2_lift(lat, s);
    CHECK(phi2_lift(lat, psi(lat, image)) != image);
}

TEST_CASE("middle elements that are not joins of atoms")
{
    const auto fig2 = fixtures::fig2();
    const ConceptLattice lat(fig2);
    const auto s = lift(lat, {0, 5, 6, 7, 10, 11, 12, 14});
    REQUIRE(is_boolean_suborder(lat, s) == 3u);
    const auto w = non_supremum_witness(lat, s);
    REQUIRE(w);
    CHECK(w->element == 12);
    CHECK(w->not_join_of_atoms);
    // ({5, 6}, {d}) is not a concept of ψ(S) = [3456, bcd]: 3 has d too.
    CHECK(psi(lat, s) == sel(fig2, "3456", "bcd"));
    CHECK(w->concept_of_psi.extent == sel(fig2, "56", "").objects);
    CHECK_FALSE(w->is_concept_of_psi);
    CHECK_FALSE(w->strictly_below);

    // The Boolean lattice itself has no such element.
    const ConceptLattice b3(fixtures::contranominal(3));
    CHECK_FALSE(non_supremum_witness(b3, b3.all()));
}

TEST_CASE("reducible Boolean subcontext loses meet closure")
{
    const auto fig2 = fixtures::fig2();
    const ConceptLattice lat(fig2);
    const auto s = sel(fig2, "1237", "abce");
    REQUIRE(is_boolean_lattice(subcontext_lattice(fig2, s)) == 3u);
    CHECK(is_sub_join_semilattice(lat, phi1_lift(lat, s)));
    CHECK_FALSE(is_sub_meet_semilattice(lat, phi2_lift(lat, s)));
}

TEST_CASE("psi composed with phi is not adjoint")
{
    const ConceptLattice lat(fixtures::fig5());
    const auto r = nonadjointness_demo(lat);
    CHECK(r.demonstrates());
    CHECK(r.image.size() == 8);
    REQUIRE(r.psi_of_image);
    CHECK(*r.psi_of_image == sel(fixtures::fig5(), "12345", "abc"));
    CHECK_THROWS_AS(nonadjointness_demo(ConceptLattice(fixtures::fig4())), InvalidArgument);
}

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boolean_enum.hpp"
#include "context.hpp"
#include "error.hpp"
#include "index_set.hpp"
#include "lattice.hpp"

namespace boolfca {

/// Concepts of [H, N] in the parent's index space, canonically sorted.
[[nodiscard]] inline std::vector<Concept> subcontext_concepts(const FormalContext& ctx, const SubcontextSelector& sel)
{
    if (!sel.valid_for(ctx)) throw InvalidArgument("selector out of range");
    auto out = collect_concepts(
        sel.objects, [&](ObjectSet a) { return derive_objects_in(ctx, sel, a); },
        [&](AttributeSet b) { return derive_attributes_in(ctx, sel, b); });
    std::sort(out.begin(), out.end(), [](const Concept& a, const Concept& b) { return canonical_less(a, b); });
    return out;
}

[[nodiscard]] inline bool is_subcontext_concept(const FormalContext& ctx, const SubcontextSelector& sel,
                                                const Concept& c)
{
    return c.extent.is_subset_of(sel.objects) && c.intent.is_subset_of(sel.attributes) &&
           derive_objects_in(ctx, sel, c.extent) == c.intent && derive_attributes_in(ctx, sel, c.intent) == c.extent;
}

namespace detail {

inline void require_subcontext_concept(const FormalContext& ctx, const SubcontextSelector& sel, const Concept& c)
{
    if (!is_subcontext_concept(ctx, sel, c)) throw InvalidArgument("not a concept of the subcontext");
}

}  // namespace detail

/// φ₁(A, B) = (A'', A') with the parent's derivations.
[[nodiscard]] inline Concept phi1(const FormalContext& ctx, const SubcontextSelector& sel, const Concept& c)
{
    detail::require_subcontext_concept(ctx, sel, c);
    const AttributeSet intent = ctx.derive_objects(c.extent);
    return {ctx.derive_attributes(intent), intent};
}

/// φ₂(A, B) = (B', B'') with the parent's derivations.
[[nodiscard]] inline Concept phi2(const FormalContext& ctx, const SubcontextSelector& sel, const Concept& c)
{
    detail::require_subcontext_concept(ctx, sel, c);
    const ObjectSet extent = ctx.derive_attributes(c.intent);
    return {extent, ctx.derive_objects(extent)};
}

/// Image of 𝔅([H, N]) under φ₁ as a suborder of the parent lattice.
[[nodiscard]] inline ConceptSet phi1_lift(const ConceptLattice& lat, const SubcontextSelector& sel)
{
    ConceptSet out = lat.none();
    for (const auto& c : subcontext_concepts(lat.context(), sel))
        out.insert(*lat.index_of_extent(lat.context().closure_objects(c.extent)));
    return out;
}

[[nodiscard]] inline ConceptSet phi2_lift(const ConceptLattice& lat, const SubcontextSelector& sel)
{
    ConceptSet out = lat.none();
    for (const auto& c : subcontext_concepts(lat.context(), sel))
        out.insert(*lat.index_of_extent(lat.context().derive_attributes(c.intent)));
    return out;
}

/// 1: A' = B and B' = A;  2: A' = B, A ⊊ B';  3: B ⊊ A', B' = A;
/// 4: B ⊊ A' and A ⊊ B'.
[[nodiscard]] inline int classify_case(const FormalContext& ctx, const SubcontextSelector& sel, const Concept& c)
{
    detail::require_subcontext_concept(ctx, sel, c);
    const bool intent_fixed = ctx.derive_objects(c.extent) == c.intent;
    const bool extent_fixed = ctx.derive_attributes(c.intent) == c.extent;
    if (intent_fixed) return extent_fixed ? 1 : 2;
    return extent_fixed ? 3 : 4;
}

struct PhiEqualResult {
    bool equal = true;
    /// On failure: a subcontext concept and a cell of (A' \ B) × (B' \ A) outside I.
    std::optional<Concept> concept_witness;
    std::optional<std::pair<std::size_t, std::size_t>> cell;
};

/// φ₁ and φ₂ agree on [H, N] iff (A' \ B) × (B' \ A) ⊆ I for every concept.
[[nodiscard]] inline PhiEqualResult phi_equal(const FormalContext& ctx, const SubcontextSelector& sel)
{
    PhiEqualResult out;
    for (const auto& c : subcontext_concepts(ctx, sel)) {
        const AttributeSet extra_attributes = ctx.derive_objects(c.extent) - c.intent;
        const ObjectSet extra_objects = ctx.derive_attributes(c.intent) - c.extent;
        for (std::size_t g : extra_objects) {
            const AttributeSet missing = extra_attributes - ctx.row(g);
            if (!missing.empty()) {
                out.equal = false;
                out.concept_witness = c;
                out.cell = std::pair{g, missing.first()};
                return out;
            }
        }
    }
    return out;
}

/// (φ₁(A, B), φ₂(A, B)); the interval between them holds exactly the
/// concepts (C, D) with A ⊆ C and B ⊆ D.
[[nodiscard]] inline std::pair<Concept, Concept> phi_interval(const FormalContext& ctx, const SubcontextSelector& sel,
                                                              const Concept& c)
{
    return {phi1(ctx, sel, c), phi2(ctx, sel, c)};
}

/// ψ(S) = [⋃ minG_obj(atoms of S), ⋃ minG_att(coatoms of S)] for a Boolean
/// suborder S.
[[nodiscard]] inline SubcontextSelector psi(const ConceptLattice& lat, const ConceptSet& s)
{
    if (!is_boolean_suborder(lat, s)) throw InvalidArgument("psi requires a Boolean suborder");
    SubcontextSelector out;
    suborder_atoms(lat, s).for_each([&](std::size_t a) { out.objects |= min_generator_objects(lat, a); });
    suborder_coatoms(lat, s).for_each([&](std::size_t c) { out.attributes |= min_generator_attributes(lat, c); });
    return out;
}

/// (φ₁(ψ(S)), φ₂(ψ(S))).
struct AssociatedSemilattices {
    ConceptSet join_assoc;
    ConceptSet meet_assoc;
};

[[nodiscard]] inline AssociatedSemilattices associated_semilattices(const ConceptLattice& lat, const ConceptSet& s)
{
    const SubcontextSelector sel = psi(lat, s);
    return {phi1_lift(lat, sel), phi2_lift(lat, sel)};
}

/// For an SRB member: whether ψ∘φᵢ fixes it, next to the coatom/atom
/// conditions that should be equivalent to it.
struct FixedpointReport {
    bool phi1_fixed = false;
    /// every n ∈ N gives a coatom (n', n'') of φ₁(S)
    bool coatom_condition = false;
    bool phi2_fixed = false;
    /// every h ∈ H gives an atom (h'', h') of φ₂(S)
    bool atom_condition = false;

    [[nodiscard]] bool consistent() const
    {
        return phi1_fixed == coatom_condition && phi2_fixed == atom_condition;
    }
};

[[nodiscard]] inline FixedpointReport psi_phi_fixedpoint_condition(const ConceptLattice& lat,
                                                                   const SubcontextSelector& sel)
{
    const FormalContext& ctx = lat.context();
    if (!is_contranominal(ctx, sel)) throw InvalidArgument("selector does not induce a contranominal scale");
    FixedpointReport out;
    const ConceptSet image1 = phi1_lift(lat, sel);
    const ConceptSet image2 = phi2_lift(lat, sel);
    out.phi1_fixed = psi(lat, image1) == sel;
    out.phi2_fixed = psi(lat, image2) == sel;

    const ConceptSet coatoms = suborder_coatoms(lat, image1);
    out.coatom_condition = true;
    for (std::size_t n : sel.attributes)
        out.coatom_condition =
            out.coatom_condition && coatoms.contains(lat.concept_of_attributes(AttributeSet::singleton(n)));
    const ConceptSet atoms = suborder_atoms(lat, image2);
    out.atom_condition = true;
    for (std::size_t h : sel.objects)
        out.atom_condition = out.atom_condition && atoms.contains(lat.concept_of_objects(ObjectSet::singleton(h)));
    return out;
}

/// A middle element C of a Boolean suborder that is not a join of atoms or
/// not a meet of coatoms, together with the concept (A, B) built from the
/// generators below/above it.
struct NonSupremumWitness {
    std::size_t element = 0;
    bool not_join_of_atoms = false;
    bool not_meet_of_coatoms = false;
    Concept concept_of_psi;
    Concept lower;
    Concept upper;
    /// (A, B) really is a concept of ψ(S)
    bool is_concept_of_psi = false;
    /// φ₁(A, B) < φ₂(A, B)
    bool strictly_below = false;
};

[[nodiscard]] inline std::optional<NonSupremumWitness> non_supremum_witness(const ConceptLattice& lat,
                                                                            const ConceptSet& s)
{
    if (!is_boolean_suborder(lat, s)) throw InvalidArgument("non-supremum witness requires a Boolean suborder");
    const auto bottom = *suborder_bottom(lat, s);
    const auto top = *suborder_top(lat, s);
    const auto atoms = suborder_atoms(lat, s).to_vector();
    const auto coatoms = suborder_coatoms(lat, s).to_vector();

    auto is_join_of_atoms = [&](std::size_t c) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
            ConceptSet subset = lat.none();
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (((mask >> i) & 1U) != 0) subset.insert(atoms[i]);
            if (lat.join(subset) == c) return true;
        }
        return false;
    };
    auto is_meet_of_coatoms = [&](std::size_t c) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << coatoms.size()); ++mask) {
            ConceptSet subset = lat.none();
            for (std::size_t i = 0; i < coatoms.size(); ++i)
                if (((mask >> i) & 1U) != 0) subset.insert(coatoms[i]);
            if (lat.meet(subset) == c) return true;
        }
        return false;
    };

    const SubcontextSelector assoc = psi(lat, s);
    for (std::size_t c : s.to_vector()) {
        if (c == bottom || c == top) continue;
        const bool no_join = !is_join_of_atoms(c);
        const bool no_meet = !is_meet_of_coatoms(c);
        if (!no_join && !no_meet) continue;
        NonSupremumWitness w;
        w.element = c;
        w.not_join_of_atoms = no_join;
        w.not_meet_of_coatoms = no_meet;
        for (std::size_t a : atoms)
            if (lat.leq(a, c)) w.concept_of_psi.extent |= min_generator_objects(lat, a);
        for (std::size_t u : coatoms)
            if (lat.leq(c, u)) w.concept_of_psi.intent |= min_generator_attributes(lat, u);
        w.is_concept_of_psi = is_subcontext_concept(lat.context(), assoc, w.concept_of_psi);
        if (w.is_concept_of_psi) {
            w.lower = phi1(lat.context(), assoc, w.concept_of_psi);
            w.upper = phi2(lat.context(), assoc, w.concept_of_psi);
            w.strictly_below = w.lower != w.upper && w.lower.extent.is_subset_of(w.upper.extent);
        }
        return w;
    }
    return std::nullopt;
}

/// [H, N] (with the induced incidence) is closed iff φ₁ and φ₂ both fix
/// every one of its concepts.
[[nodiscard]] inline bool closedness_via_phi(const FormalContext& ctx, const SubcontextSelector& sel)
{
    for (const auto& c : subcontext_concepts(ctx, sel))
        if (phi1(ctx, sel, c) != c || phi2(ctx, sel, c) != c) return false;
    return true;
}

/// Three nested subcontexts S₁ ≤ S ≤ S₂ whose φ-images coincide while ψ of
/// the common image is the middle one, so ψ∘φ₁ is neither monotone nor
/// antitone.
struct NonadjointnessReport {
    SubcontextSelector s1;
    SubcontextSelector s;
    SubcontextSelector s2;
    bool nested = false;
    bool images_equal = false;
    ConceptSet image;
    std::optional<SubcontextSelector> psi_of_image;
    bool psi_is_middle = false;

    /// S₁ < S < S₂ but ψφ₁(S₁) = ψφ₁(S₂) = S: monotone would force
    /// ψφ₁(S₁) ≤ ψφ₁(S) ≤ ψφ₁(S₂) with S₁ ≠ S, antitone the reverse.
    [[nodiscard]] bool demonstrates() const { return nested && images_equal && psi_is_middle && s1 != s2; }
};

[[nodiscard]] inline NonadjointnessReport nonadjointness_demo(const ConceptLattice& lat, const SubcontextSelector& s1,
                                                              const SubcontextSelector& s, const SubcontextSelector& s2)
{
    NonadjointnessReport out;
    out.s1 = s1;
    out.s = s;
    out.s2 = s2;
    auto le = [](const SubcontextSelector& a, const SubcontextSelector& b) {
        return a.objects.is_subset_of(b.objects) && a.attributes.is_subset_of(b.attributes);
    };
    out.nested = le(s1, s) && le(s, s2) && s1 != s && s != s2;
    const ConceptSet image = phi1_lift(lat, s);
    out.image = image;
    out.images_equal = phi1_lift(lat, s1) == image && phi1_lift(lat, s2) == image && phi2_lift(lat, s2) == image &&
                       phi2_lift(lat, s1) == image;
    if (is_boolean_suborder(lat, image)) {
        out.psi_of_image = psi(lat, image);
        out.psi_is_middle = *out.psi_of_image == s;
    }
    return out;
}

/// The demonstration on the 6×6 fixture with objects 1..6 and attributes a..f:
/// S₁ = [{1,2,3,4},{a,b,c}], S = [{1,...,5},{a,b,c}], S₂ = [{1,...,6},{a,b,c}].
[[nodiscard]] inline NonadjointnessReport nonadjointness_demo(const ConceptLattice& lat)
{
    const FormalContext& ctx = lat.context();
    const std::vector<std::string> objects{"1", "2", "3", "4", "5", "6"};
    const std::vector<std::string> attributes{"a", "b", "c", "d", "e", "f"};
    if (ctx.object_names() != objects || ctx.attribute_names() != attributes)
        throw InvalidArgument("fixture mismatch: expected objects 1..6 and attributes a..f");
    const AttributeSet abc{0, 1, 2};
    return nonadjointness_demo(lat, {ObjectSet::full(4), abc}, {ObjectSet::full(5), abc}, {ObjectSet::full(6), abc});
}

}  // namespace boolfca

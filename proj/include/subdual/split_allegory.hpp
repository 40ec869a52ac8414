#pragma once

#include <concepts>
#include <utility>

#include "subdual/errors.hpp"
#include "subdual/relation.hpp"
#include "subdual/stone.hpp"
#include "subdual/subordination.hpp"

namespace subdual {

/// The operations of a finite allegory needed to split its equivalences.
/// compose(f, g) is "first f, then g"; leq is the allegory's hom-set order.
template <class C>
concept AllegoryCalculus = requires(const typename C::Morphism& f, const typename C::Morphism& g,
                                    const typename C::Object& o) {
    { C::compose(f, g) } -> std::same_as<typename C::Morphism>;
    { C::dagger(f) } -> std::same_as<typename C::Morphism>;
    { C::meet(f, g) } -> std::same_as<typename C::Morphism>;
    { C::leq(f, g) } -> std::same_as<bool>;
    { C::identity(o) } -> std::same_as<typename C::Morphism>;
    { C::source(f) } -> std::same_as<typename C::Object>;
    { C::target(f) } -> std::same_as<typename C::Object>;
    { C::is_morphism(f) } -> std::same_as<bool>;
};

/// Finite Stone spaces and relations, ordered by inclusion.
struct RelCalculus {
    using Object = Carrier;
    using Morphism = Rel;

    static Rel compose(const Rel& f, const Rel& g) { return subdual::compose(f, g); }
    static Rel dagger(const Rel& f) { return converse(f); }
    static Rel meet(const Rel& f, const Rel& g) { return rel_meet(f, g); }
    static bool leq(const Rel& f, const Rel& g) { return rel_leq(f, g); }
    static Rel identity(const Carrier& x) { return Rel::identity(x); }
    static Carrier source(const Rel& f) { return f.source(); }
    static Carrier target(const Rel& f) { return f.target(); }
    static bool is_morphism(const Rel&) { return true; }
};

/// Finite boolean algebras and subordinations. The hom-sets are ordered by
/// reverse inclusion; this is the only place where that order is applied.
struct SubCalculus {
    using Object = BoolAlg;
    using Morphism = Subordination;

    static Subordination compose(const Subordination& f, const Subordination& g) { return compose_subordinations(f, g); }
    static Subordination dagger(const Subordination& f) { return sub_dagger(f); }
    static Subordination meet(const Subordination& f, const Subordination& g) { return sub_meet(f, g); }
    static bool leq(const Subordination& f, const Subordination& g) { return sub_subset(g, f); }
    static Subordination identity(const BoolAlg& a) { return Subordination::order(a); }
    static BoolAlg source(const Subordination& f) { return f.source(); }
    static BoolAlg target(const Subordination& f) { return f.target(); }
    static bool is_morphism(const Subordination& f) { return is_subordination(f); }
};

static_assert(AllegoryCalculus<RelCalculus>);
static_assert(AllegoryCalculus<SubCalculus>);

/// id <= e, e = e^dagger and e;e <= e in the calculus' own order.
template <AllegoryCalculus C>
bool is_allegory_equivalence(const typename C::Morphism& e)
{
    if (!(C::source(e) == C::target(e)) || !C::is_morphism(e)) return false;
    return C::leq(C::identity(C::source(e)), e) && e == C::dagger(e) && C::leq(C::compose(e, e), e);
}

/// g f /\ h <= (g /\ h f^dagger) f in applicative notation, for f: C->D, g: D->E, h: C->E.
template <AllegoryCalculus C>
bool allegory_modular_law(const typename C::Morphism& f, const typename C::Morphism& g, const typename C::Morphism& h)
{
    const auto lhs = C::meet(C::compose(f, g), h);
    const auto rhs = C::compose(f, C::meet(g, C::compose(C::dagger(f), h)));
    return C::leq(lhs, rhs);
}

/// An object of the split allegory: a base object with an equivalence on it.
/// The equivalence is the identity morphism of the object.
template <AllegoryCalculus C>
class SubObject {
public:
    SubObject(typename C::Object base, typename C::Morphism equivalence)
        : base_(std::move(base)), equivalence_(std::move(equivalence))
    {
        if (!(C::source(equivalence_) == base_) || !(C::target(equivalence_) == base_))
            throw MismatchError("split object: equivalence does not live on the base object");
        if (!is_allegory_equivalence<C>(equivalence_)) throw ValidationError("split object: morphism is not an equivalence");
    }

    const typename C::Object& base() const noexcept { return base_; }
    const typename C::Morphism& equivalence() const noexcept { return equivalence_; }

    friend bool operator==(const SubObject&, const SubObject&) = default;

private:
    typename C::Object base_;
    typename C::Morphism equivalence_;
};

/// A candidate morphism of the split allegory. Construction checks shapes only;
/// check_split_morphism decides the absorption laws.
template <AllegoryCalculus C>
class SplitMorphism {
public:
    SplitMorphism(SubObject<C> source, SubObject<C> target, typename C::Morphism morphism)
        : source_(std::move(source)), target_(std::move(target)), morphism_(std::move(morphism))
    {
        if (!(C::source(morphism_) == source_.base()) || !(C::target(morphism_) == target_.base()))
            throw MismatchError("split morphism: underlying morphism does not fit the objects");
    }

    const SubObject<C>& source() const noexcept { return source_; }
    const SubObject<C>& target() const noexcept { return target_; }
    const typename C::Morphism& morphism() const noexcept { return morphism_; }

    friend bool operator==(const SplitMorphism&, const SplitMorphism&) = default;

private:
    SubObject<C> source_;
    SubObject<C> target_;
    typename C::Morphism morphism_;
};

using StoneEObject = SubObject<RelCalculus>;
using SubS5Object = SubObject<SubCalculus>;
using CompatibleRelation = SplitMorphism<RelCalculus>;
using CompatibleSubordination = SplitMorphism<SubCalculus>;

/// The identity of a split object, which is its equivalence.
template <AllegoryCalculus C>
SplitMorphism<C> split_identity(const SubObject<C>& obj)
{
    return SplitMorphism<C>(obj, obj, obj.equivalence());
}

/// f e = f = e' f.
template <AllegoryCalculus C>
bool check_split_morphism(const SplitMorphism<C>& m)
{
    const auto& f = m.morphism();
    return C::compose(m.source().equivalence(), f) == f && C::compose(f, m.target().equivalence()) == f;
}

/// First m1, then m2.
template <AllegoryCalculus C>
SplitMorphism<C> split_compose(const SplitMorphism<C>& m1, const SplitMorphism<C>& m2)
{
    if (!(m1.target() == m2.source())) throw MismatchError("split_compose: objects do not chain");
    return SplitMorphism<C>(m1.source(), m2.target(), C::compose(m1.morphism(), m2.morphism()));
}

template <AllegoryCalculus C>
SplitMorphism<C> split_dagger(const SplitMorphism<C>& m)
{
    return SplitMorphism<C>(m.target(), m.source(), C::dagger(m.morphism()));
}

/// m^dagger m and m m^dagger are the split identities.
template <AllegoryCalculus C>
bool split_is_iso(const SplitMorphism<C>& m)
{
    const auto& f = m.morphism();
    const auto fd = C::dagger(f);
    return C::compose(f, fd) == m.source().equivalence() && C::compose(fd, f) == m.target().equivalence();
}

/// e <= m^dagger m and m m^dagger <= e' in the ambient order.
template <AllegoryCalculus C>
bool split_is_map(const SplitMorphism<C>& m)
{
    const auto& f = m.morphism();
    const auto fd = C::dagger(f);
    return C::leq(m.source().equivalence(), C::compose(f, fd)) && C::leq(C::compose(fd, f), m.target().equivalence());
}

/// The discrete space as a Gleason space: finite discrete spaces are their own
/// Gleason covers, so G(Y) = (Y, id).
StoneEObject gleason_finite(Carrier y);

/// The projection X -> X/E as a split morphism (X, E) -> (X/E, id).
CompatibleRelation projection_morphism(const QuotientData& q);

}  // namespace subdual

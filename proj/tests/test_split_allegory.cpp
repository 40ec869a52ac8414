#include <doctest.h>

#include "subdual/enumeration.hpp"
#include "subdual/errors.hpp"
#include "subdual/split_allegory.hpp"

using namespace subdual;

namespace {

Rel partition(int n, const std::vector<std::vector<int>>& classes)
{
    Rel e(Carrier{n}, Carrier{n});
    for (const auto& c : classes)
        for (int a : c)
            for (int b : c) e.set(a, b);
    return e;
}

}  // namespace

TEST_CASE("objects need equivalences")
{
    CHECK_NOTHROW(StoneEObject(Carrier{2}, Rel::identity(Carrier{2})));
    CHECK_THROWS_AS(StoneEObject(Carrier{2}, Rel::from_pairs(Carrier{2}, Carrier{2}, {{0, 1}})), ValidationError);
    CHECK_THROWS_AS(StoneEObject(Carrier{3}, Rel::identity(Carrier{2})), MismatchError);
    // in the subordination calculus the order is reversed, so <= is an equivalence and the full relation is not
    CHECK_NOTHROW(SubS5Object(BoolAlg(2), Subordination::order(BoolAlg(2))));
    CHECK_THROWS_AS(SubS5Object(BoolAlg(2), Subordination::full(BoolAlg(2), BoolAlg(2))), ValidationError);
}

TEST_CASE("split identities are the equivalences")
{
    const StoneEObject o(Carrier{3}, partition(3, {{0, 1}, {2}}));
    const auto id = split_identity(o);
    CHECK(id.morphism() == o.equivalence());
    CHECK(check_split_morphism(id));
    CHECK(split_is_iso(id));
    CHECK(split_is_map(id));
    // the ambient identity is not a morphism of a non-discrete object
    CHECK_FALSE(check_split_morphism(CompatibleRelation(o, o, Rel::identity(Carrier{3}))));
}

TEST_CASE("order between S5 objects can fail compatibility")
{
    const BoolAlg b(2);
    const SubS5Object o(b, clop_functor(partition(2, {{0, 1}})));
    CHECK_FALSE(check_split_morphism(CompatibleSubordination(o, o, Subordination::order(b))));
}

TEST_CASE("composition of split morphisms stays compatible; identity and associativity")
{
    for (int n = 0; n <= 2; ++n) {
        const auto ms = all_split_morphisms(n, n);
        for (const auto& f : ms)
            for (const auto& g : ms) {
                if (!(f.target() == g.source())) continue;
                const auto fg = split_compose(f, g);
                CHECK(check_split_morphism(fg));
                CHECK(split_compose(split_identity(f.source()), f) == f);
                CHECK(split_compose(f, split_identity(f.target())) == f);
                for (const auto& h : ms)
                    if (g.target() == h.source()) CHECK(split_compose(split_compose(f, g), h) == split_compose(f, split_compose(g, h)));
            }
    }
    const auto subs = all_compatible_subs(2, 2);
    for (const auto& f : subs)
        for (const auto& g : subs)
            if (f.target() == g.source()) CHECK(check_split_morphism(split_compose(f, g)));
}

TEST_CASE("projection is an isomorphism onto the Gleason space of the quotient")
{
    const Rel e = partition(3, {{0, 1}, {2}});
    const QuotientData q = quotient(Carrier{3}, e);
    const CompatibleRelation p = projection_morphism(q);
    CHECK(p.target() == gleason_finite(Carrier{2}));
    CHECK(check_split_morphism(p));
    CHECK(split_is_iso(p));
    CHECK(split_is_map(p));
    CHECK(gleason_finite(Carrier{1}).equivalence() == Rel::identity(Carrier{1}));
    CHECK(is_irreducible(gleason_finite(Carrier{4}).equivalence()));
}

TEST_CASE("isos exist exactly between objects with equally many classes")
{
    std::vector<StoneEObject> objects;
    for (int n = 0; n <= 3; ++n)
        for (const Rel& e : all_equivalences(n)) objects.emplace_back(Carrier{n}, e);
    for (const auto& a : objects)
        for (const auto& b : objects) {
            bool iso = false;
            for (const Rel& r : all_relations(a.base().size, b.base().size)) {
                const CompatibleRelation m(a, b, r);
                if (check_split_morphism(m) && split_is_iso(m)) {
                    iso = true;
                    CHECK(split_is_map(m));
                    CHECK(split_is_map(split_dagger(m)));
                }
            }
            const auto ka = quotient(a.base(), a.equivalence()).classes.size();
            const auto kb = quotient(b.base(), b.equivalence()).classes.size();
            CHECK(iso == (ka == kb));
        }
}

TEST_CASE("a relation relating one class to two classes is not a map")
{
    const StoneEObject one(Carrier{1}, Rel::identity(Carrier{1}));
    const StoneEObject two(Carrier{2}, Rel::identity(Carrier{2}));
    const CompatibleRelation m(one, two, Rel::full(Carrier{1}, Carrier{2}));
    CHECK(check_split_morphism(m));
    CHECK_FALSE(split_is_map(m));
    CHECK_FALSE(split_is_iso(m));
}

TEST_CASE("split maps agree with the map conditions through Clop")
{
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            for (const auto& cs : all_compatible_subs(m, n)) {
                const Subordination& t = cs.morphism();
                const bool conditions = check_map_conditions(t, cs.source().equivalence(), cs.target().equivalence());
                CHECK(split_is_map(cs) == conditions);
            }
}

TEST_CASE("allegory modular law in both calculi")
{
    const auto rels = all_relations(2, 2);
    for (const Rel& f : rels)
        for (const Rel& g : rels)
            for (std::size_t k = 0; k < rels.size(); k += 3) CHECK(allegory_modular_law<RelCalculus>(f, g, rels[k]));
    const auto subs = all_sub_cores(2, 2);
    for (const auto& f : subs)
        for (const auto& g : subs)
            for (const auto& h : subs) CHECK(allegory_modular_law<SubCalculus>(f, g, h));
}

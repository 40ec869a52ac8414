#include <doctest.h>

#include "subdual/devries.hpp"
#include "subdual/enumeration.hpp"
#include "subdual/errors.hpp"
#include "subdual/stone.hpp"

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

TEST_CASE("de Vries algebra axioms")
{
    CHECK(check_devries_algebra(BoolAlg(2), Subordination::order(BoolAlg(2))).empty());
    const auto full = check_devries_algebra(BoolAlg(1), Subordination::full(BoolAlg(1), BoolAlg(1)));
    REQUIRE_FALSE(full.empty());
    CHECK(full.front().axiom == "S5");
    const auto merged = check_devries_algebra(BoolAlg(2), clop_functor(partition(2, {{0, 1}})));
    REQUIRE_FALSE(merged.empty());
    CHECK(merged.front().axiom == "S8");
    CHECK(merged.front().to_string() == "S8 violated at a=1");
    CHECK_THROWS_AS(DeVriesAlgebra(BoolAlg(2), clop_functor(partition(2, {{0, 1}}))), ValidationError);
    // only <= survives on a finite algebra
    for (int n = 0; n <= 2; ++n) {
        int valid = 0;
        for (const Subordination& s : all_sub_cores(n, n))
            if (check_devries_algebra(BoolAlg(n), s).empty()) {
                ++valid;
                CHECK(s == Subordination::order(BoolAlg(n)));
            }
        CHECK(valid == 1);
    }
}

TEST_CASE("morphism axioms")
{
    const DeVriesAlgebra a = DeVriesAlgebra::canonical(1);
    CHECK(check_devries_morphism(devries_identity(a)).empty());
    CHECK(check_devries_morphism(devries_identity(DeVriesAlgebra::canonical(3))).empty());

    const DeVriesMorphism zero(a, a, {Element{0}, Element{0}});
    const auto v = check_devries_morphism(zero);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().axiom == "M3");
    CHECK(v.front().to_string() == "M3 violated at (0,0)");
    // and at (top, top): top < top but not (not f(0)) < f(1)
    const Element top = a.algebra().top();
    CHECK(a.precedes(top, top));
    CHECK_FALSE(a.precedes(a.algebra().complement(zero(a.algebra().complement(top))), zero(top)));

    const DeVriesMorphism not_meet(DeVriesAlgebra::canonical(2), DeVriesAlgebra::canonical(1),
                                   {Element{0}, Element{1}, Element{1}, Element{1}});
    const auto w = check_devries_morphism(not_meet);
    REQUIRE_FALSE(w.empty());
    CHECK(w.front().axiom == "M2");
}

TEST_CASE("morphism counts")
{
    CHECK(all_devries_morphisms(2, 2).size() == 4);
    CHECK(brute_force_devries_morphisms(2, 2).size() == 4);
    CHECK(all_devries_morphisms(1, 3).size() == 1);
    CHECK(all_devries_morphisms(3, 1).size() == 3);
    CHECK(all_devries_morphisms(0, 2).empty());
    CHECK(all_devries_morphisms(2, 0).size() == 1);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) CHECK(brute_force_devries_morphisms(m, n) == all_devries_morphisms(m, n));
}

TEST_CASE("star composition")
{
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            for (const DeVriesMorphism& f : all_devries_morphisms(m, n)) {
                CHECK(star_compose(f, devries_identity(f.source())) == f);
                CHECK(star_compose(devries_identity(f.target()), f) == f);
                for (int k = 0; k <= 2; ++k)
                    for (const DeVriesMorphism& g : all_devries_morphisms(n, k)) {
                        const DeVriesMorphism gf = star_compose(g, f);
                        CHECK(check_devries_morphism(gf).empty());
                        CHECK(gf == plain_compose(g, f));
                    }
            }
}

TEST_CASE("morphisms and subordinations correspond")
{
    const DeVriesAlgebra a2 = DeVriesAlgebra::canonical(2);
    CHECK(morphism_to_subordination(devries_identity(a2)) == Subordination::order(BoolAlg(2)));
    CHECK(subordination_to_morphism(Subordination::order(BoolAlg(2)), a2, a2) == devries_identity(a2));
    CHECK_THROWS_AS(subordination_to_morphism(Subordination::full(BoolAlg(2), BoolAlg(2)), a2, a2), ValidationError);

    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            for (const DeVriesMorphism& f : all_devries_morphisms(m, n)) {
                const Subordination s = morphism_to_subordination(f);
                CHECK(is_subordination(s));
                CHECK(subordination_to_morphism(s, f.target(), f.source()) == f);
                for (int k = 0; k <= 2; ++k)
                    for (const DeVriesMorphism& g : all_devries_morphisms(n, k))
                        CHECK(morphism_to_subordination(star_compose(g, f)) ==
                              compose_subordinations(morphism_to_subordination(g), s));
            }
            const DeVriesAlgebra a = DeVriesAlgebra::canonical(m);
            const DeVriesAlgebra b = DeVriesAlgebra::canonical(n);
            for (const Subordination& s : all_map_subs(m, n))
                CHECK(morphism_to_subordination(subordination_to_morphism(s, a, b)) == s);
        }
}

TEST_CASE("atom functions")
{
    const DeVriesAlgebra a = DeVriesAlgebra::canonical(2);
    const DeVriesAlgebra b = DeVriesAlgebra::canonical(2);
    CHECK(dual_of_atom_function(a, b, {0, 1}) == devries_identity(a));
    const DeVriesMorphism swap = dual_of_atom_function(a, b, {1, 0});
    CHECK(swap(Element{0b01}) == Element{0b10});
    CHECK(swap(Element{0b11}) == Element{0b11});
    // both atoms of B sent to atom 0 of A
    const DeVriesMorphism collapse = dual_of_atom_function(a, b, {0, 0});
    CHECK(collapse(Element{0b01}) == Element{0b11});
    CHECK(collapse(Element{0b10}) == Element{0b00});
}

TEST_CASE("isomorphisms and bijections")
{
    const DeVriesAlgebra a = DeVriesAlgebra::canonical(2);
    const Subordination le = Subordination::order(BoolAlg(2));
    const ExtractedBijection id = iso_to_bijection(le, le, a, a);
    for (Word x = 0; x < 4; ++x) {
        CHECK(id.forward[x] == Element{x});
        CHECK(id.backward[x] == Element{x});
    }
    CHECK(iso_bound_identity_violations(le, le, a, a).empty());
    CHECK_THROWS_AS(iso_to_bijection(Subordination::full(BoolAlg(2), BoolAlg(2)), le, a, a), ValidationError);

    const std::vector<Element> swap{Element{0}, Element{2}, Element{1}, Element{3}};
    const Subordination t = iso_from_bijection(swap, a, a);
    const Subordination q = iso_from_bijection(swap, a, a);
    CHECK(compose_subordinations(t, q) == le);
    const ExtractedBijection back = iso_to_bijection(t, q, a, a);
    CHECK(back.forward == swap);
    CHECK(back.backward == swap);
    CHECK(iso_bound_identity_violations(t, q, a, a).empty());
}

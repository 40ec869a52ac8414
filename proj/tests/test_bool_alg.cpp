#include <doctest.h>

#include <bit>

#include "subdual/bool_alg.hpp"
#include "subdual/errors.hpp"

using namespace subdual;

TEST_CASE("powerset algebra sizes")
{
    CHECK(powerset_algebra(0).element_count() == 1);
    CHECK(powerset_algebra(0).top() == powerset_algebra(0).bottom());
    CHECK(powerset_algebra(1).element_count() == 2);
    const BoolAlg b = powerset_algebra(2);
    CHECK(b.element_count() == 4);
    CHECK(b.atoms().size() == 2);
    CHECK(b.coatoms().size() == 2);
    CHECK_THROWS_AS(powerset_algebra(7), SizeError);
    CHECK_THROWS_AS(powerset_algebra(-1), SizeError);
}

TEST_CASE("atoms are the popcount-one elements in index order")
{
    CHECK(powerset_algebra(0).atoms().empty());
    CHECK(powerset_algebra(2).atoms() == std::vector<Element>{{0b01}, {0b10}});
    for (int n = 0; n <= 6; ++n) {
        const BoolAlg b(n);
        std::vector<Element> expected;
        for (Word x = 0; x < Word(b.element_count()); ++x)
            if (std::popcount(x) == 1) expected.push_back({x});
        CHECK(b.atoms() == expected);
        CHECK(static_cast<int>(b.atoms().size()) == n);
    }
}

TEST_CASE("lattice_eval")
{
    const BoolAlg b(2);
    for (const Element x : b.elements())
        CHECK(std::get<Element>(lattice_eval(b, LatticeOp::meet, x, b.complement(x))) == b.bottom());
    CHECK(b.join_all(b.atoms()) == b.top());
    CHECK(std::get<bool>(lattice_eval(b, LatticeOp::leq, {0b01}, Element{0b11})));
    CHECK_FALSE(std::get<bool>(lattice_eval(b, LatticeOp::leq, {0b01}, Element{0b10})));
    CHECK_THROWS_AS(b.meet({0b100}, {0b1}), MismatchError);
}

TEST_CASE("order, meet and join agree; De Morgan")
{
    for (int n = 0; n <= 3; ++n) {
        const BoolAlg b(n);
        for (const Element x : b.elements())
            for (const Element y : b.elements()) {
                const bool le = b.leq(x, y);
                CHECK(le == (b.meet(x, y) == x));
                CHECK(le == (b.join(x, y) == y));
                CHECK(b.complement(b.meet(x, y)) == b.join(b.complement(x), b.complement(y)));
                CHECK(b.complement(b.join(x, y)) == b.meet(b.complement(x), b.complement(y)));
            }
    }
}

TEST_CASE("bounds")
{
    const BoolAlg b(2);
    CHECK(b.upper_bounds(ElementSet{0}) == b.all());
    CHECK(b.lower_bounds(ElementSet{1} << 3) == b.all());
    const std::vector<Element> atoms{{0b01}, {0b10}};
    CHECK(b.upper_bounds(atoms) == std::vector<Element>{{0b11}});
    CHECK(b.meet_all(ElementSet{0}) == b.top());
    CHECK(b.join_all(ElementSet{0}) == b.bottom());
    // against a filter over all elements
    for (int n = 0; n <= 3; ++n) {
        const BoolAlg a(n);
        for (ElementSet s = 0; s < (ElementSet{1} << a.element_count()); s += 7) {
            ElementSet up = 0;
            ElementSet down = 0;
            for (int y = 0; y < a.element_count(); ++y) {
                bool above = true;
                bool below = true;
                for (int x = 0; x < a.element_count(); ++x)
                    if ((s >> x) & 1U) {
                        above = above && (x & ~y) == 0;
                        below = below && (y & ~x) == 0;
                    }
                if (above) up |= ElementSet{1} << y;
                if (below) down |= ElementSet{1} << y;
            }
            CHECK(a.upper_bounds(s) == up);
            CHECK(a.lower_bounds(s) == down);
        }
    }
}

TEST_CASE("ideal representation")
{
    const IdealRep i{{0b101}};
    CHECK(i.contains({0b001}));
    CHECK(i.contains({0b000}));
    CHECK_FALSE(i.contains({0b010}));
}

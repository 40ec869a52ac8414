#include <doctest.h>

#include "oracles.hpp"
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

TEST_CASE("clop examples")
{
    const Carrier x{3};
    CHECK(clop_functor(Rel::identity(x)) == Subordination::order(BoolAlg(3)));
    CHECK(clop_functor(Rel(x, x)) == Subordination::full(BoolAlg(3), BoolAlg(3)));
    const Subordination s = clop_functor(partition(3, {{0, 1}, {2}}));
    for (Word v = 0; v < 8; ++v) CHECK(s.related(Word{0b001}, v) == ((v & 0b011) == 0b011));
}

TEST_CASE("clop matches its definition")
{
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const Rel& r : all_relations(a, b)) {
                const Subordination s = clop_functor(r);
                CHECK(oracle::is_subordination(s));
                for (int u = 0; u < (1 << a); ++u)
                    for (int v = 0; v < (1 << b); ++v) {
                        bool inside = true;
                        for (auto [i, j] : oracle::pairs_of(r))
                            if (((u >> i) & 1) && !((v >> j) & 1)) inside = false;
                        CHECK(s.related(Word(u), Word(v)) == inside);
                    }
            }
}

TEST_CASE("ult examples and round trips")
{
    CHECK(ult_functor(Subordination::order(BoolAlg(3))) == Rel::identity(Carrier{3}));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            for (const Rel& r : all_relations(a, b)) CHECK(ult_functor(clop_functor(r)) == r);
            for (const Subordination& s : all_sub_cores(a, b)) CHECK(clop_functor(ult_functor(s)) == s);
        }
}

TEST_CASE("order reversal and dagger commutation")
{
    const auto all = all_relations(2, 2);
    for (const Rel& r1 : all)
        for (const Rel& r2 : all) CHECK(rel_leq(r1, r2) == sub_subset(clop_functor(r2), clop_functor(r1)));
    for (const Rel& r : all_relations(3, 3)) CHECK(clop_functor(converse(r)) == sub_dagger(clop_functor(r)));
}

TEST_CASE("functoriality at 2 points")
{
    const auto all = all_relations(2, 2);
    for (const Rel& r1 : all)
        for (const Rel& r2 : all) CHECK(clop_functor(compose(r1, r2)) == compose_subordinations(clop_functor(r1), clop_functor(r2)));
    const auto subs = all_sub_cores(2, 2);
    for (const Subordination& s1 : subs)
        for (const Subordination& s2 : subs)
            CHECK(ult_functor(compose_subordinations(s1, s2)) == compose(ult_functor(s1), ult_functor(s2)));
}

TEST_CASE("S5 iff the Ult image is an equivalence")
{
    for (int n = 0; n <= 3; ++n)
        for (const Subordination& s : all_sub_cores(n, n))
            CHECK(check_s5_axioms(s).empty() == oracle::is_equivalence(oracle::pairs_of(ult_functor(s)), n));
}

TEST_CASE("quotient")
{
    const Carrier x{3};
    const QuotientData id = quotient(x, Rel::identity(x));
    CHECK(id.classes.size() == 3);
    CHECK(id.projection == Rel::identity(x));

    const QuotientData q = quotient(x, partition(3, {{0, 1}, {2}}));
    CHECK(q.classes == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(q.projection == Rel::graph(x, Carrier{2}, {0, 0, 1}));
    CHECK_THROWS_AS(quotient(x, Rel::from_pairs(x, x, {{0, 1}})), ValidationError);

    for (int n = 0; n <= 4; ++n)
        for (const Rel& e : all_equivalences(n)) {
            const QuotientData qe = quotient(Carrier{n}, e);
            CHECK(compose(qe.projection, converse(qe.projection)) == e);
            CHECK(compose(converse(qe.projection), qe.projection) == Rel::identity(qe.quotient_carrier()));
            CHECK(is_map(qe.projection));
            // classes ordered by least member
            for (std::size_t k = 1; k < qe.classes.size(); ++k) CHECK(qe.classes[k - 1].front() < qe.classes[k].front());
        }
}

TEST_CASE("Q functor")
{
    const Carrier x{3};
    const Rel e = partition(3, {{0, 1}, {2}});
    const QuotientData q = quotient(x, e);
    CHECK(q_functor(e, q, q) == Rel::identity(Carrier{2}));
    for (const Rel& r : all_relations(3, 3)) {
        const bool compatible = compose(e, r) == r && compose(r, e) == r;
        if (!compatible) {
            CHECK_THROWS_AS(q_functor(r, q, q), ValidationError);
            continue;
        }
        CHECK(q_lift(q_functor(r, q, q), q, q) == r);
    }
    for (const Rel& rq : all_relations(2, 2)) CHECK(q_functor(q_lift(rq, q, q), q, q) == rq);
}

TEST_CASE("irreducibility")
{
    CHECK(is_irreducible(Rel::identity(Carrier{3})));
    CHECK_FALSE(is_irreducible(partition(2, {{0, 1}})));
    for (int n = 0; n <= 4; ++n)
        for (const Rel& e : all_equivalences(n)) {
            CHECK(is_irreducible(e) == check_s8(clop_functor(e)));
            CHECK(is_irreducible(e) == (e == Rel::identity(Carrier{n})));
        }
}

TEST_CASE("finite regular-open functor is Clop")
{
    CHECK(discrete_closure(0b1011) == 0b1011);
    CHECK(devries_functor_finite(Rel::identity(Carrier{2})) == Subordination::order(BoolAlg(2)));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const Rel& r : all_relations(a, b)) CHECK(devries_functor_finite(r) == clop_functor(r));
}

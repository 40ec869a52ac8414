#include <doctest.h>

#include "oracles.hpp"
#include "subdual/enumeration.hpp"
#include "subdual/errors.hpp"
#include "subdual/relation.hpp"

using namespace subdual;

TEST_CASE("composition example")
{
    const Carrier x{3};
    const Rel r = Rel::from_pairs(x, x, {{0, 1}, {1, 2}});
    const Rel s = Rel::from_pairs(x, x, {{1, 1}, {2, 0}});
    CHECK(compose(r, s) == Rel::from_pairs(x, x, {{0, 1}, {1, 0}}));
    CHECK(oracle::pairs_of(compose(r, s)) == oracle::compose(oracle::pairs_of(r), oracle::pairs_of(s), 3));
    CHECK(compose(r, Rel::identity(x)) == r);
    CHECK_THROWS_AS(compose(r, Rel(Carrier{2}, Carrier{2})), MismatchError);
}

TEST_CASE("composition matches the membership oracle")
{
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 2; ++c) {
                if (a * b + b * c > 14) continue;
                for (std::uint64_t i = 0; i < (std::uint64_t{1} << (a * b)); ++i)
                    for (std::uint64_t j = 0; j < (std::uint64_t{1} << (b * c)); ++j) {
                        const Rel r = relation_from_code(a, b, i);
                        const Rel s = relation_from_code(b, c, j);
                        CHECK(oracle::pairs_of(compose(r, s)) == oracle::compose(oracle::pairs_of(r), oracle::pairs_of(s), b));
                    }
            }
}

TEST_CASE("associativity over 2-point carriers")
{
    const auto all = all_relations(2, 2);
    for (const Rel& r : all)
        for (const Rel& s : all)
            for (const Rel& t : all) CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
}

TEST_CASE("converse")
{
    const Carrier two{2};
    CHECK(converse(Rel::identity(two)) == Rel::identity(two));
    CHECK(converse(Rel::from_pairs(two, two, {{0, 1}})) == Rel::from_pairs(two, two, {{1, 0}}));
    for (int n = 2; n <= 3; ++n) {
        const auto all = all_relations(n, n);
        for (std::size_t i = 0; i < all.size(); i += 7)
            for (std::size_t j = 0; j < all.size(); j += 11) {
                CHECK(converse(converse(all[i])) == all[i]);
                CHECK(converse(compose(all[i], all[j])) == compose(converse(all[j]), converse(all[i])));
                if (rel_leq(all[i], all[j])) CHECK(rel_leq(converse(all[i]), converse(all[j])));
            }
    }
}

TEST_CASE("meet and inclusion")
{
    const Carrier x{3};
    const Rel full = Rel::full(x, x);
    for (const Rel& r : all_relations(3, 3)) {
        CHECK(rel_meet(r, r) == r);
        CHECK(rel_meet(r, full) == r);
        CHECK(rel_leq(Rel(x, x), r));
    }
    CHECK_THROWS_AS(rel_meet(Rel(x, x), Rel(Carrier{2}, Carrier{2})), MismatchError);
}

TEST_CASE("distributivity and monotonicity over 2-point carriers")
{
    const auto all = all_relations(2, 2);
    for (const Rel& r : all)
        for (const Rel& s : all)
            for (const Rel& t : all) {
                const Rel u = Rel(r.matrix() | s.matrix());
                CHECK(compose(u, t) == Rel(compose(r, t).matrix() | compose(s, t).matrix()));
                CHECK(compose(t, u) == Rel(compose(t, r).matrix() | compose(t, s).matrix()));
                if (rel_leq(r, s)) {
                    CHECK(rel_leq(compose(r, t), compose(s, t)));
                    CHECK(rel_leq(compose(t, r), compose(t, s)));
                }
            }
}

TEST_CASE("modular law")
{
    const Carrier two{2};
    const Rel id = Rel::identity(two);
    CHECK(check_modular_law(id, id, id));
    const auto all = all_relations(2, 2);
    int failures = 0;
    for (const Rel& r : all)
        for (const Rel& s : all)
            for (const Rel& t : all)
                if (!check_modular_law(r, s, t)) ++failures;
    CHECK(failures == 0);
}

TEST_CASE("equivalences")
{
    CHECK(is_equivalence(Rel::identity(Carrier{3})));
    CHECK_FALSE(is_equivalence(Rel::from_pairs(Carrier{2}, Carrier{2}, {{0, 1}})));
    CHECK(is_equivalence(Rel::from_pairs(Carrier{3}, Carrier{3}, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}})));
    for (int n = 0; n <= 3; ++n)
        for (const Rel& r : all_relations(n, n)) CHECK(is_equivalence(r) == oracle::is_equivalence(oracle::pairs_of(r), n));
}

TEST_CASE("maps are total function graphs")
{
    CHECK(is_map(Rel::graph(Carrier{3}, Carrier{2}, {0, 1, 1})));
    CHECK_FALSE(is_map(Rel(Carrier{2}, Carrier{2})));
    CHECK_FALSE(is_map(Rel::from_pairs(Carrier{2}, Carrier{2}, {{0, 0}, {0, 1}})));
    CHECK(is_map(Rel(Carrier{0}, Carrier{0})));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const Rel& r : all_relations(a, b)) {
                bool graph = true;
                for (int i = 0; i < a; ++i) {
                    int images = 0;
                    for (int j = 0; j < b; ++j) images += r.related(i, j);
                    graph = graph && images == 1;
                }
                CHECK(is_map(r) == graph);
            }
}

TEST_CASE("empty carriers")
{
    const Rel e = Rel::identity(Carrier{0});
    CHECK(e.pairs().empty());
    CHECK(compose(e, e) == e);
    CHECK(is_equivalence(e));
}

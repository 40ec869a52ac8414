#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "subdual/enumeration.hpp"
#include "subdual/errors.hpp"

using namespace subdual;

TEST_CASE("SplitMix64 reference values")
{
    // the published outputs for seed 0
    SplitMix64 g(0);
    CHECK(g.next() == 0xE220A8397B1DCDAFULL);
    CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(g.next() == 0x06C45D188009454FULL);
    CHECK(SplitMix64::at(0, 1) == 0x6E789E6AA1B965F4ULL);
    SplitMix64 h(12345);
    for (std::uint64_t k = 0; k < 100; ++k) CHECK(h.next() == SplitMix64::at(12345, k));
    SplitMix64 b(7);
    for (int i = 0; i < 1000; ++i) CHECK(b.below(5) < 5);
}

TEST_CASE("Bell numbers")
{
    const std::vector<std::uint64_t> expected{1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n < 8; ++n) {
        CHECK(bell_number(n) == expected[n]);
        CHECK(bell_number(n) == oracle::bell(n));
    }
    for (int n = 0; n <= 4; ++n) {
        CHECK(all_equivalences(n).size() == expected[n]);
        CHECK(brute_force_equivalences(n) == all_equivalences(n));
        CHECK(s5_subordinations(n).size() == expected[n]);
    }
}

TEST_CASE("space sizes")
{
    CHECK(all_sub_cores(1, 1).size() == 2);
    CHECK(all_sub_cores(2, 2).size() == 16);
    CHECK(all_relations(3, 3).size() == 512);
    CHECK(all_relations(0, 0).size() == 1);
    CHECK(all_equivalences(1).size() == 1);
    CHECK(all_split_morphisms(2, 2).size() == 26);
    CHECK(all_compatible_subs(2, 2).size() == 26);
    CHECK(all_functions(2, 3).size() == 9);
    CHECK(all_functions(2, 3).front() == std::vector<int>{0, 0});
    CHECK(all_permutations(3).size() == 6);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
            // brute force runs in element-code order, so compare as sets
            const auto brute = brute_force_subordinations(m, n);
            const auto cores = all_sub_cores(m, n);
            CHECK(brute.size() == cores.size());
            for (const Subordination& s : brute) CHECK(std::find(cores.begin(), cores.end(), s) != cores.end());
            CHECK(all_map_subs(m, n).size() == all_devries_morphisms(n, m).size());
        }
}

TEST_CASE("count agrees with enumeration")
{
    for (SpaceKind kind : {SpaceKind::relations, SpaceKind::equivalences, SpaceKind::sub_cores, SpaceKind::compatible_subs,
                           SpaceKind::map_subs, SpaceKind::devries_morphisms, SpaceKind::split_morphisms})
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) {
                const InstanceSpace space{kind, a, b, std::nullopt};
                CHECK(count(space) == enumerate(space).size());
                CHECK(InstanceStream(space).size() == count(space));
            }
}

TEST_CASE("space names")
{
    for (SpaceKind kind : {SpaceKind::relations, SpaceKind::equivalences, SpaceKind::sub_cores, SpaceKind::compatible_subs,
                           SpaceKind::map_subs, SpaceKind::devries_morphisms, SpaceKind::split_morphisms})
        CHECK(parse_space_kind(to_string(kind)) == kind);
    CHECK(parse_space_kind("sub_cores") == SpaceKind::sub_cores);
    CHECK_FALSE(parse_space_kind("widgets").has_value());
}

TEST_CASE("exhaustive streams are canonical and duplicate-free")
{
    const InstanceStream rel({SpaceKind::relations, 2, 2, std::nullopt});
    std::set<std::uint64_t> codes;
    for (std::uint64_t i = 0; i < rel.size(); ++i) {
        const Rel r = std::get<Rel>(rel.at(i));
        CHECK(relation_code(r) == i);
        codes.insert(relation_code(r));
    }
    CHECK(codes.size() == 16);

    const InstanceStream subs({SpaceKind::sub_cores, 2, 1, std::nullopt});
    for (std::uint64_t i = 0; i < subs.size(); ++i) CHECK(std::get<Subordination>(subs.at(i)) == all_sub_cores(2, 1)[i]);
}

TEST_CASE("random streams are reproducible and valid")
{
    const InstanceSpace space{SpaceKind::equivalences, 5, 0, RandomMode{42, 200}};
    const InstanceStream s1(space);
    const InstanceStream s2(space);
    CHECK(s1.size() == 200);
    for (std::uint64_t i = 0; i < 200; ++i) {
        const Rel e = std::get<Rel>(s1.at(i));
        CHECK(e == std::get<Rel>(s2.at(i)));
        CHECK(is_equivalence(e));
    }
    // different seeds differ somewhere
    const InstanceStream other({SpaceKind::equivalences, 5, 0, RandomMode{43, 200}});
    bool differs = false;
    for (std::uint64_t i = 0; i < 200; ++i) differs = differs || !(std::get<Rel>(other.at(i)) == std::get<Rel>(s1.at(i)));
    CHECK(differs);

    const InstanceStream cores({SpaceKind::sub_cores, 3, 3, RandomMode{1, 50}});
    for (std::uint64_t i = 0; i < cores.size(); ++i) CHECK(is_subordination(std::get<Subordination>(cores.at(i))));
    const InstanceStream maps({SpaceKind::map_subs, 2, 2, RandomMode{9, 30}});
    for (std::uint64_t i = 0; i < maps.size(); ++i) {
        const Subordination s = std::get<Subordination>(maps.at(i));
        const Subordination le = Subordination::order(BoolAlg(2));
        CHECK(check_map_conditions(s, le, le));
    }
}

TEST_CASE("the exhaustive cap")
{
    CHECK(count({SpaceKind::relations, 5, 5, std::nullopt}) == (std::uint64_t{1} << 25));
    CHECK_THROWS_AS(InstanceStream({SpaceKind::relations, 5, 5, std::nullopt}), SizeError);
    CHECK_NOTHROW(InstanceStream({SpaceKind::relations, 5, 5, RandomMode{0, 10}}));
    CHECK(InstanceStream({SpaceKind::relations, 4, 5, std::nullopt}).size() == kExhaustiveCap);
}

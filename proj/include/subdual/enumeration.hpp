#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subdual/devries.hpp"
#include "subdual/relation.hpp"
#include "subdual/split_allegory.hpp"
#include "subdual/subordination.hpp"

namespace subdual {

/// SplitMix64. The k-th output for seed s (k = 0, 1, ...) is
///   z = s + (k + 1) * 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// so any position of a stream can be computed directly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept;
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;

    static std::uint64_t at(std::uint64_t seed, std::uint64_t k) noexcept;

private:
    std::uint64_t state_;
};

enum class SpaceKind { relations, equivalences, sub_cores, compatible_subs, map_subs, devries_morphisms, split_morphisms };

std::string to_string(SpaceKind kind);
std::optional<SpaceKind> parse_space_kind(const std::string& name);

struct RandomMode {
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
};

/// Size parameters per kind:
///   relations           first x second points
///   equivalences        first points
///   sub_cores           first x second atoms
///   compatible_subs     first x second atoms (S5 subordinations on both sides)
///   map_subs            first -> second atoms, with <= on both sides
///   devries_morphisms   first -> second atoms, canonical de Vries algebras
///   split_morphisms     first x second points (equivalences on both sides)
struct InstanceSpace {
    SpaceKind kind = SpaceKind::relations;
    int first = 0;
    int second = 0;
    std::optional<RandomMode> random;
};

inline constexpr std::uint64_t kExhaustiveCap = std::uint64_t{1} << 20;

using Instance = std::variant<Rel, Subordination, CompatibleRelation, CompatibleSubordination, DeVriesMorphism>;

/// Exact size of the exhaustive space: closed forms for relations (2^(nm)),
/// equivalences (Bell numbers), sub_cores (2^(mn)) and devries_morphisms
/// (m^n); brute-force filtering for the rest.
std::uint64_t count(const InstanceSpace& space);

/// A deterministic, index-addressable stream of instances. Exhaustive streams
/// follow the canonical order; random streams draw instance i from positions
/// of the seed's SplitMix64 sequence, so ranges can be processed independently.
class InstanceStream {
public:
    explicit InstanceStream(InstanceSpace space);

    std::uint64_t size() const noexcept { return size_; }
    Instance at(std::uint64_t index) const;
    const InstanceSpace& space() const noexcept { return space_; }

private:
    InstanceSpace space_;
    std::uint64_t size_ = 0;
    std::vector<Instance> materialized_;
};

std::vector<Instance> enumerate(const InstanceSpace& space);

// Building blocks, each in canonical order.

/// Row-major code: bit i * m + j is the pair (i, j).
Rel relation_from_code(int n, int m, std::uint64_t code);
std::uint64_t relation_code(const Rel& r);
std::vector<Rel> all_relations(int n, int m);
std::vector<Rel> all_equivalences(int n);
std::uint64_t bell_number(int n);
Subordination subordination_from_core_code(int m, int n, std::uint64_t code);
std::vector<Subordination> all_sub_cores(int m, int n);
std::vector<Subordination> s5_subordinations(int n);
std::vector<CompatibleRelation> all_split_morphisms(int n1, int n2);
std::vector<CompatibleSubordination> all_compatible_subs(int m, int n);
std::vector<Subordination> all_map_subs(int m, int n);
std::vector<DeVriesMorphism> all_devries_morphisms(int m, int n);
/// Every function {0..domain-1} -> {0..codomain-1}, in lexicographic order of the table.
std::vector<std::vector<int>> all_functions(int domain, int codomain);
std::vector<std::vector<int>> all_permutations(int n);

// Brute-force certification filters over element-level tables.

/// Every relation between element sets filtered by S1-S4.
std::vector<Subordination> brute_force_subordinations(int m, int n);
/// Every element-function table filtered by M1-M4.
std::vector<DeVriesMorphism> brute_force_devries_morphisms(int m, int n);
/// Every endo-relation filtered by reflexivity, symmetry and transitivity.
std::vector<Rel> brute_force_equivalences(int n);

}  // namespace subdual

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "subdual/bit_matrix.hpp"

namespace subdual {

inline constexpr int kMaxAtoms = 6;

/// An element of a finite powerset algebra: bit i is set iff atom i lies below it.
struct Element {
    Word bits = 0;

    friend auto operator<=>(const Element&, const Element&) = default;
};

/// A set of elements of one algebra, packed by element code (at most 64 elements).
using ElementSet = Word;

/// The powerset boolean algebra over `atom_count` atoms. Every finite boolean
/// algebra is of this form, and every subset has a meet and a join.
class BoolAlg {
public:
    explicit BoolAlg(int atom_count);

    int atom_count() const noexcept { return atoms_; }
    int element_count() const noexcept { return 1 << atoms_; }

    Element bottom() const noexcept { return {0}; }
    Element top() const noexcept { return {low_mask(atoms_)}; }

    bool contains(Element x) const noexcept { return (x.bits & ~low_mask(atoms_)) == 0; }
    Element element(Word code) const;

    Element meet(Element x, Element y) const;
    Element join(Element x, Element y) const;
    Element complement(Element x) const;
    bool leq(Element x, Element y) const;

    std::vector<Element> elements() const;
    /// Singletons in index order; the ultrafilter at atom x is {c | x <= c}.
    std::vector<Element> atoms() const;
    std::vector<Element> coatoms() const;

    /// Meet of a family; the empty meet is the top.
    Element meet_all(std::span<const Element> xs) const;
    /// Join of a family; the empty join is the bottom.
    Element join_all(std::span<const Element> xs) const;
    Element meet_all(ElementSet xs) const noexcept;
    Element join_all(ElementSet xs) const noexcept;

    ElementSet upper_bounds(ElementSet xs) const noexcept;
    ElementSet lower_bounds(ElementSet xs) const noexcept;
    std::vector<Element> upper_bounds(std::span<const Element> xs) const;
    std::vector<Element> lower_bounds(std::span<const Element> xs) const;

    /// {y | x <= y} and {y | y <= x} as element sets.
    ElementSet up_set(Element x) const noexcept;
    ElementSet down_set(Element x) const noexcept;

    /// Every element as an element set.
    ElementSet all() const noexcept { return low_mask(element_count()); }

    ElementSet to_set(std::span<const Element> xs) const;
    std::vector<Element> to_elements(ElementSet s) const;

    friend bool operator==(const BoolAlg&, const BoolAlg&) = default;

private:
    void check(Element x) const;

    int atoms_ = 0;
};

BoolAlg powerset_algebra(int atom_count);

/// A principal ideal {x | x <= generator}. Finite ideals are principal.
struct IdealRep {
    Element generator;

    bool contains(Element x) const noexcept { return (x.bits & ~generator.bits) == 0; }
    friend bool operator==(const IdealRep&, const IdealRep&) = default;
};

enum class LatticeOp { meet, join, complement, leq };

/// Evaluates one lattice operation. complement ignores `y`; the others require it.
std::variant<Element, bool> lattice_eval(const BoolAlg& algebra, LatticeOp op, Element x,
                                         std::optional<Element> y = std::nullopt);

}  // namespace subdual

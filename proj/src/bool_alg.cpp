#include "subdual/bool_alg.hpp"

#include <bit>
#include <string>

#include "subdual/detail/order_tables.hpp"
#include "subdual/errors.hpp"

namespace subdual {

BoolAlg::BoolAlg(int atom_count) : atoms_(atom_count)
{
    if (atom_count < 0 || atom_count > kMaxAtoms) {
        throw SizeError("atom count must lie in [0, " + std::to_string(kMaxAtoms) + "], got " +
                        std::to_string(atom_count));
    }
}

BoolAlg powerset_algebra(int atom_count) { return BoolAlg(atom_count); }

void BoolAlg::check(Element x) const
{
    if (!contains(x)) {
        throw MismatchError("element " + std::to_string(x.bits) + " does not belong to the algebra with " +
                            std::to_string(atoms_) + " atoms");
    }
}

Element BoolAlg::element(Word code) const
{
    check(Element{code});
    return Element{code};
}

Element BoolAlg::meet(Element x, Element y) const
{
    check(x);
    check(y);
    return {x.bits & y.bits};
}

Element BoolAlg::join(Element x, Element y) const
{
    check(x);
    check(y);
    return {x.bits | y.bits};
}

Element BoolAlg::complement(Element x) const
{
    check(x);
    return {~x.bits & top().bits};
}

bool BoolAlg::leq(Element x, Element y) const
{
    check(x);
    check(y);
    return (x.bits & ~y.bits) == 0;
}

std::vector<Element> BoolAlg::elements() const
{
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(element_count()));
    for (int c = 0; c < element_count(); ++c) out.push_back({static_cast<Word>(c)});
    return out;
}

std::vector<Element> BoolAlg::atoms() const
{
    std::vector<Element> out;
    for (int i = 0; i < atoms_; ++i) out.push_back({Word{1} << i});
    return out;
}

std::vector<Element> BoolAlg::coatoms() const
{
    std::vector<Element> out;
    for (int i = 0; i < atoms_; ++i) out.push_back({top().bits & ~(Word{1} << i)});
    return out;
}

Element BoolAlg::meet_all(std::span<const Element> xs) const
{
    Element acc = top();
    for (Element x : xs) acc = meet(acc, x);
    return acc;
}

Element BoolAlg::join_all(std::span<const Element> xs) const
{
    Element acc = bottom();
    for (Element x : xs) acc = join(acc, x);
    return acc;
}

Element BoolAlg::meet_all(ElementSet xs) const noexcept
{
    Word acc = top().bits;
    while (xs) {
        acc &= static_cast<Word>(std::countr_zero(xs));
        xs &= xs - 1;
    }
    return {acc};
}

Element BoolAlg::join_all(ElementSet xs) const noexcept
{
    Word acc = 0;
    while (xs) {
        acc |= static_cast<Word>(std::countr_zero(xs));
        xs &= xs - 1;
    }
    return {acc};
}

ElementSet BoolAlg::up_set(Element x) const noexcept { return detail::kUpSets[x.bits & 63] & all(); }

ElementSet BoolAlg::down_set(Element x) const noexcept { return detail::kDownSets[x.bits & 63]; }

ElementSet BoolAlg::upper_bounds(ElementSet xs) const noexcept
{
    // y bounds xs from above iff y >= join(xs).
    return up_set(join_all(xs));
}

ElementSet BoolAlg::lower_bounds(ElementSet xs) const noexcept { return down_set(meet_all(xs)); }

std::vector<Element> BoolAlg::upper_bounds(std::span<const Element> xs) const
{
    return to_elements(upper_bounds(to_set(xs)));
}

std::vector<Element> BoolAlg::lower_bounds(std::span<const Element> xs) const
{
    return to_elements(lower_bounds(to_set(xs)));
}

ElementSet BoolAlg::to_set(std::span<const Element> xs) const
{
    ElementSet s = 0;
    for (Element x : xs) {
        check(x);
        s |= Word{1} << x.bits;
    }
    return s;
}

std::vector<Element> BoolAlg::to_elements(ElementSet s) const
{
    std::vector<Element> out;
    while (s) {
        out.push_back({static_cast<Word>(std::countr_zero(s))});
        s &= s - 1;
    }
    return out;
}

std::variant<Element, bool> lattice_eval(const BoolAlg& algebra, LatticeOp op, Element x, std::optional<Element> y)
{
    if (op == LatticeOp::complement) return algebra.complement(x);
    if (!y) throw std::invalid_argument("binary lattice operation needs a second operand");
    switch (op) {
    case LatticeOp::meet:
        return algebra.meet(x, *y);
    case LatticeOp::join:
        return algebra.join(x, *y);
    case LatticeOp::leq:
        return algebra.leq(x, *y);
    case LatticeOp::complement:
        break;
    }
    return algebra.complement(x);
}

}  // namespace subdual

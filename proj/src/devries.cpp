#include "subdual/devries.hpp"

#include <bit>
#include <string>

#include "subdual/errors.hpp"

namespace subdual {

namespace {

Word lowest(Word set) { return static_cast<Word>(std::countr_zero(set)); }

Element at(const std::vector<Element>& table, Word a) { return table[static_cast<std::size_t>(a)]; }

// S[X] for a set of source elements.
ElementSet image_of_set(const Subordination& s, ElementSet xs)
{
    ElementSet out = 0;
    for (; xs; xs &= xs - 1) out |= s.matrix().row(std::countr_zero(xs));
    return out;
}

// S^{-1}[Y] for a set of target elements.
ElementSet preimage_of_set(const Subordination& s, ElementSet ys)
{
    ElementSet out = 0;
    for (int a = 0; a < s.matrix().rows(); ++a)
        if (s.matrix().row(a) & ys) out |= Word{1} << a;
    return out;
}

}  // namespace

std::vector<Violation> check_devries_algebra(const BoolAlg& algebra, const Subordination& proximity)
{
    if (proximity.source() != algebra || proximity.target() != algebra)
        throw MismatchError("check_devries_algebra: proximity does not live on the algebra");
    std::vector<Violation> out = check_subordination(proximity);
    for (auto& v : check_s5_axioms(proximity)) out.push_back(std::move(v));
    if (auto v = s8_violation(proximity)) out.push_back(*v);
    return out;
}

DeVriesAlgebra::DeVriesAlgebra(BoolAlg algebra, Subordination proximity)
    : algebra_(algebra), proximity_(std::move(proximity))
{
    if (auto v = check_devries_algebra(algebra_, proximity_); !v.empty())
        throw ValidationError("not a de Vries algebra: " + v.front().to_string());
}

DeVriesAlgebra DeVriesAlgebra::canonical(int atom_count)
{
    const BoolAlg b(atom_count);
    return DeVriesAlgebra(b, Subordination::order(b));
}

DeVriesMorphism::DeVriesMorphism(DeVriesAlgebra source, DeVriesAlgebra target, std::vector<Element> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table))
{
    if (static_cast<int>(table_.size()) != source_.algebra().element_count())
        throw MismatchError("de Vries function table is not total on the source algebra");
    for (Element y : table_)
        if (!target_.algebra().contains(y)) throw MismatchError("de Vries function value outside the target algebra");
}

DeVriesMorphism devries_identity(const DeVriesAlgebra& a)
{
    return DeVriesMorphism(a, a, a.algebra().elements());
}

std::vector<Violation> check_devries_morphism(const DeVriesMorphism& f)
{
    std::vector<Violation> out;
    const BoolAlg& a_alg = f.source().algebra();
    const BoolAlg& b_alg = f.target().algebra();
    const auto& t = f.table();
    const int n = a_alg.element_count();
    const Word top_a = a_alg.top().bits;
    const Word top_b = b_alg.top().bits;

    if (t[0].bits != 0) out.push_back({"M1", {0}});

    [&] {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (at(t, Word(x & y)).bits != (t[x].bits & t[y].bits)) {
                    out.push_back({"M2", {Word(x), Word(y)}});
                    return;
                }
    }();

    [&] {
        const Subordination& prec_a = f.source().proximity();
        for (int x = 0; x < n; ++x)
            for (Word ys = prec_a.matrix().row(x); ys; ys &= ys - 1) {
                const Word y = lowest(ys);
                const Element lhs{top_b & ~at(t, top_a & ~Word(x)).bits};
                if (!f.target().precedes(lhs, at(t, y))) {
                    out.push_back({"M3", {Word(x), y}});
                    return;
                }
            }
    }();

    for (int x = 0; x < n; ++x) {
        Word join = 0;
        for (Word below = f.source().proximity().preimage(Element{Word(x)}); below; below &= below - 1)
            join |= at(t, lowest(below)).bits;
        if (join != t[x].bits) {
            out.push_back({"M4", {Word(x)}});
            break;
        }
    }
    return out;
}

DeVriesMorphism star_compose(const DeVriesMorphism& g, const DeVriesMorphism& f)
{
    if (!(f.target() == g.source())) throw MismatchError("star_compose: algebras do not chain");
    const DeVriesAlgebra& a = f.source();
    std::vector<Element> table;
    for (int x = 0; x < a.algebra().element_count(); ++x) {
        Word join = 0;
        for (Word below = a.proximity().preimage(Element{Word(x)}); below; below &= below - 1)
            join |= g(f(Element{lowest(below)})).bits;
        table.push_back({join});
    }
    return DeVriesMorphism(a, g.target(), std::move(table));
}

DeVriesMorphism plain_compose(const DeVriesMorphism& g, const DeVriesMorphism& f)
{
    if (!(f.target() == g.source())) throw MismatchError("plain_compose: algebras do not chain");
    std::vector<Element> table;
    for (Element x : f.table()) table.push_back(g(x));
    return DeVriesMorphism(f.source(), g.target(), std::move(table));
}

Subordination morphism_to_subordination(const DeVriesMorphism& f)
{
    const BoolAlg& a_alg = f.source().algebra();
    const BoolAlg& b_alg = f.target().algebra();
    BitMatrix m(b_alg.element_count(), a_alg.element_count());
    for (int x = 0; x < a_alg.element_count(); ++x) {
        // b S_f x iff b <= f(x') for some x' < x.
        ElementSet related = 0;
        for (Word below = f.source().proximity().preimage(Element{Word(x)}); below; below &= below - 1)
            related |= b_alg.down_set(f(Element{lowest(below)}));
        for (; related; related &= related - 1) m.set(std::countr_zero(related), x);
    }
    return Subordination(b_alg, a_alg, m);
}

DeVriesMorphism subordination_to_morphism(const Subordination& s, const DeVriesAlgebra& a, const DeVriesAlgebra& b)
{
    if (s.source() != a.algebra() || s.target() != b.algebra())
        throw MismatchError("subordination_to_morphism: subordination does not fit the algebras");
    if (auto v = check_subordination(s); !v.empty())
        throw ValidationError("not a subordination: " + v.front().to_string());
    if (!is_compatible(s, a.proximity(), b.proximity()))
        throw ValidationError("subordination is not compatible with the proximities");
    if (auto v = map_condition_violations(s, a.proximity(), b.proximity()); !v.empty())
        throw ValidationError("map condition '" + v.front().axiom + "' failed: " + v.front().to_string());
    std::vector<Element> table;
    for (int y = 0; y < b.algebra().element_count(); ++y)
        table.push_back(a.algebra().join_all(s.preimage(Element{Word(y)})));
    return DeVriesMorphism(b, a, std::move(table));
}

DeVriesMorphism dual_of_atom_function(const DeVriesAlgebra& a, const DeVriesAlgebra& b, const std::vector<int>& h)
{
    if (static_cast<int>(h.size()) != b.algebra().atom_count())
        throw MismatchError("atom function must be defined on every atom of the target algebra");
    for (int v : h)
        if (v < 0 || v >= a.algebra().atom_count()) throw ValidationError("atom function value outside the source atoms");
    std::vector<Element> table;
    for (int x = 0; x < a.algebra().element_count(); ++x) {
        Word join = 0;
        for (int y = 0; y < b.algebra().atom_count(); ++y)
            if ((Word(x) >> h[y]) & 1U) join |= Word{1} << y;
        table.push_back({join});
    }
    return DeVriesMorphism(a, b, std::move(table));
}

ExtractedBijection iso_to_bijection(const Subordination& t, const Subordination& q, const DeVriesAlgebra& a,
                                    const DeVriesAlgebra& b)
{
    if (t.source() != a.algebra() || t.target() != b.algebra() || q.source() != b.algebra() ||
        q.target() != a.algebra())
        throw MismatchError("iso_to_bijection: subordinations do not fit the algebras");
    if (compose_subordinations(t, q) != a.proximity() || compose_subordinations(q, t) != b.proximity())
        throw ValidationError("iso_to_bijection: subordinations are not mutually inverse");
    ExtractedBijection out;
    for (int x = 0; x < a.algebra().element_count(); ++x) out.forward.push_back(b.algebra().meet_all(t.image(Element{Word(x)})));
    for (int y = 0; y < b.algebra().element_count(); ++y) out.backward.push_back(a.algebra().meet_all(q.image(Element{Word(y)})));
    return out;
}

std::vector<Violation> iso_bound_identity_violations(const Subordination& t, const Subordination& q,
                                                     const DeVriesAlgebra& a, const DeVriesAlgebra& b)
{
    const BoolAlg& aa = a.algebra();
    const BoolAlg& ba = b.algebra();
    const Subordination& s_a = a.proximity();
    const Subordination& s_b = b.proximity();
    std::vector<Violation> out;
    auto record = [&](const char* name, Word at_elem) {
        for (const auto& v : out)
            if (v.axiom == name) return;
        out.push_back({name, {at_elem}});
    };

    for (int x = 0; x < aa.element_count(); ++x) {
        const Element e{Word(x)};
        const ElementSet t_img = t.image(e);
        const ElementSet q_pre = q.preimage(e);
        if (q_pre != preimage_of_set(s_b, ba.lower_bounds(t_img))) record("bound-lower", e.bits);
        if (t_img != image_of_set(s_b, ba.upper_bounds(q_pre))) record("bound-upper", e.bits);
        const ElementSet via_join = s_b.image(ba.join_all(q_pre));
        const ElementSet via_meet = s_b.image(ba.meet_all(t_img));
        if (t_img != via_join || via_join != via_meet) record("T-image", e.bits);
        const ElementSet pre_meet = s_b.preimage(ba.meet_all(t_img));
        const ElementSet pre_join = s_b.preimage(ba.join_all(q_pre));
        if (q_pre != pre_meet || pre_meet != pre_join) record("Q-preimage", e.bits);
    }
    for (int y = 0; y < ba.element_count(); ++y) {
        const Element e{Word(y)};
        const ElementSet q_img = q.image(e);
        const ElementSet t_pre = t.preimage(e);
        const ElementSet via_join = s_a.image(aa.join_all(t_pre));
        const ElementSet via_meet = s_a.image(aa.meet_all(q_img));
        if (q_img != via_join || via_join != via_meet) record("Q-image", e.bits);
        const ElementSet pre_meet = s_a.preimage(aa.meet_all(q_img));
        const ElementSet pre_join = s_a.preimage(aa.join_all(t_pre));
        if (t_pre != pre_meet || pre_meet != pre_join) record("T-preimage", e.bits);
    }
    return out;
}

Subordination iso_from_bijection(const std::vector<Element>& h, const DeVriesAlgebra& a, const DeVriesAlgebra& b)
{
    if (static_cast<int>(h.size()) != a.algebra().element_count())
        throw MismatchError("iso_from_bijection: table is not total");
    BitMatrix m(a.algebra().element_count(), b.algebra().element_count());
    for (int x = 0; x < a.algebra().element_count(); ++x) m.set_row(x, b.proximity().image(h[x]));
    return Subordination(a.algebra(), b.algebra(), m);
}

}  // namespace subdual

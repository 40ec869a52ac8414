#include "subdual/stone.hpp"

#include <bit>

#include "subdual/errors.hpp"

namespace subdual {

Subordination clop_functor(const Rel& r)
{
    const BoolAlg a(r.source().size);
    const BoolAlg b(r.target().size);
    BitMatrix m(a.element_count(), b.element_count());
    for (int u = 0; u < a.element_count(); ++u) {
        const Word img = r.image(static_cast<Word>(u));
        m.set_row(u, b.up_set(Element{img}));
    }
    return Subordination(a, b, m);
}

Rel ult_functor(const Subordination& s)
{
    const BoolAlg& a = s.source();
    const BoolAlg& b = s.target();
    Rel r(Carrier{a.atom_count()}, Carrier{b.atom_count()});
    for (int x = 0; x < a.atom_count(); ++x) {
        // S[up(x)]: everything some c >= x is related to.
        Word image = 0;
        for (Word cs = a.up_set(Element{Word{1} << x}); cs; cs &= cs - 1)
            image |= s.matrix().row(std::countr_zero(cs));
        for (int y = 0; y < b.atom_count(); ++y) {
            // S[up(x)] inside up(y) iff every d in the image contains y.
            bool inside = true;
            for (Word ds = image; ds && inside; ds &= ds - 1)
                inside = (static_cast<Word>(std::countr_zero(ds)) >> y) & 1U;
            r.set(x, y, inside);
        }
    }
    return r;
}

QuotientData quotient(Carrier x, const Rel& e)
{
    if (e.source() != x || e.target() != x) throw MismatchError("quotient: relation does not live on the carrier");
    if (!is_equivalence(e)) throw ValidationError("quotient: relation is not an equivalence");
    QuotientData q{x, e, {}, Rel()};
    std::vector<int> class_of(static_cast<std::size_t>(x.size), -1);
    for (int p = 0; p < x.size; ++p) {
        if (class_of[p] >= 0) continue;
        const int k = static_cast<int>(q.classes.size());
        q.classes.emplace_back();
        for (Word members = e.matrix().row(p); members; members &= members - 1) {
            const int m = std::countr_zero(members);
            class_of[m] = k;
            q.classes.back().push_back(m);
        }
    }
    q.projection = Rel::graph(x, q.quotient_carrier(), class_of);
    return q;
}

Rel q_functor(const Rel& r, const QuotientData& q1, const QuotientData& q2)
{
    if (r.source() != q1.base || r.target() != q2.base) throw MismatchError("q_functor: relation does not fit the quotients");
    if (compose(q1.equiv, r) != r || compose(r, q2.equiv) != r)
        throw ValidationError("q_functor: relation is not compatible with the equivalences");
    return compose(compose(converse(q1.projection), r), q2.projection);
}

Rel q_lift(const Rel& r_quot, const QuotientData& q1, const QuotientData& q2)
{
    if (r_quot.source() != q1.quotient_carrier() || r_quot.target() != q2.quotient_carrier())
        throw MismatchError("q_lift: relation does not fit the quotients");
    return compose(compose(q1.projection, r_quot), converse(q2.projection));
}

bool is_irreducible(const Rel& e)
{
    if (!is_equivalence(e)) throw ValidationError("is_irreducible: relation is not an equivalence");
    const int n = e.source().size;
    if (n > 24) throw SizeError("is_irreducible: subset scan limited to 24 points");
    const Word all = low_mask(n);
    for (Word f = 0; f < all; ++f)
        if (e.image(f) == all) return false;
    return true;
}

Word discrete_closure(Word points) noexcept { return points; }

Subordination devries_functor_finite(const Rel& r)
{
    const BoolAlg a(r.source().size);
    const BoolAlg b(r.target().size);
    BitMatrix m(a.element_count(), b.element_count());
    for (int u = 0; u < a.element_count(); ++u)
        m.set_row(u, b.up_set(Element{r.image(discrete_closure(static_cast<Word>(u)))}));
    return Subordination(a, b, m);
}

}  // namespace subdual

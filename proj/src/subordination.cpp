#include "subdual/subordination.hpp"

#include <bit>
#include <cassert>

#include "subdual/detail/order_tables.hpp"
#include "subdual/errors.hpp"

namespace subdual {

namespace {

int code(Word w) { return static_cast<int>(w); }

Word lowest(Word set) { return static_cast<Word>(std::countr_zero(set)); }

void require_endo(const Subordination& s, const char* what)
{
    if (s.source() != s.target()) throw MismatchError(std::string(what) + ": subordination is not an endo-relation");
}

}  // namespace

std::string Violation::to_string() const
{
    if (axiom == "S8" && witness.size() == 1) return "S8 violated at a=" + std::to_string(witness[0]);
    std::string out = axiom + " violated at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(witness[i]);
    }
    return out + ")";
}

Subordination::Subordination(BoolAlg source, BoolAlg target)
    : source_(source), target_(target), matrix_(source.element_count(), target.element_count())
{
}

Subordination::Subordination(BoolAlg source, BoolAlg target, BitMatrix matrix)
    : source_(source), target_(target), matrix_(matrix)
{
    if (matrix.rows() != source.element_count() || matrix.cols() != target.element_count())
        throw MismatchError("subordination matrix does not match the element counts of its algebras");
}

Subordination Subordination::order(BoolAlg algebra)
{
    Subordination s(algebra, algebra);
    for (int a = 0; a < algebra.element_count(); ++a) s.matrix_.set_row(a, algebra.up_set(Element{static_cast<Word>(a)}));
    return s;
}

Subordination Subordination::full(BoolAlg source, BoolAlg target)
{
    return Subordination(source, target, BitMatrix::full(source.element_count(), target.element_count()));
}

Subordination Subordination::from_pairs(BoolAlg source, BoolAlg target, const std::vector<std::pair<Word, Word>>& pairs)
{
    Subordination s(source, target);
    for (auto [a, b] : pairs) {
        if (!source.contains(Element{a}) || !target.contains(Element{b}))
            throw ValidationError("pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside the algebras");
        s.matrix_.set(code(a), code(b));
    }
    return s;
}

Subordination Subordination::from_core(BoolAlg source, BoolAlg target, BitMatrix core)
{
    if (core.rows() != source.atom_count() || core.cols() != target.atom_count())
        throw MismatchError("core table does not match the atom counts of its algebras");
    Subordination s(source, target);
    const Word top_b = target.top().bits;
    for (int a = 0; a < source.element_count(); ++a) {
        // b qualifies iff every coatom above b, i.e. every j outside b, is related to each atom of a.
        Word allowed = top_b;
        for (Word atoms = static_cast<Word>(a); atoms; atoms &= atoms - 1) allowed &= core.row(std::countr_zero(atoms));
        Word row = 0;
        for (int b = 0; b < target.element_count(); ++b) {
            const Word missing = top_b & ~static_cast<Word>(b);
            if ((missing & ~allowed) == 0) row |= Word{1} << b;
        }
        s.matrix_.set_row(a, row);
    }
    s.core_ = core;
    return s;
}

BitMatrix Subordination::core() const
{
    if (core_) return *core_;
    BitMatrix c(source_.atom_count(), target_.atom_count());
    const Word top_b = target_.top().bits;
    for (int i = 0; i < source_.atom_count(); ++i)
        for (int j = 0; j < target_.atom_count(); ++j)
            c.set(i, j, matrix_.test(1 << i, code(top_b & ~(Word{1} << j))));
    return c;
}

std::vector<std::pair<Word, Word>> Subordination::pairs() const
{
    std::vector<std::pair<Word, Word>> out;
    for (int a = 0; a < matrix_.rows(); ++a)
        for (Word row = matrix_.row(a); row; row &= row - 1) out.emplace_back(static_cast<Word>(a), lowest(row));
    return out;
}

std::vector<Violation> check_subordination(const Subordination& s)
{
    std::vector<Violation> out;
    const BitMatrix& m = s.matrix();
    const int na = s.source().element_count();
    const Word top_a = s.source().top().bits;
    const Word top_b = s.target().top().bits;
    const Word all_b = s.target().all();

    if (!m.test(0, 0))
        out.push_back({"S1", {0, 0}});
    else if (!m.test(code(top_a), code(top_b)))
        out.push_back({"S1", {top_a, top_b}});

    // S2: a S c and b S c imply (a or b) S c.
    [&] {
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < na; ++b) {
                const Word bad = m.row(a) & m.row(b) & ~m.row(a | b);
                if (bad) {
                    out.push_back({"S2", {Word(a), Word(b), lowest(bad)}});
                    return;
                }
            }
    }();

    // S3: a S c and a S d imply a S (c and d).
    [&] {
        for (int a = 0; a < na; ++a)
            for (Word cs = m.row(a); cs; cs &= cs - 1)
                for (Word ds = m.row(a); ds; ds &= ds - 1) {
                    const Word c = lowest(cs), d = lowest(ds);
                    if (!m.test(a, code(c & d))) {
                        out.push_back({"S3", {Word(a), c, d}});
                        return;
                    }
                }
    }();

    // S4: a <= b S c <= d implies a S d.
    [&] {
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < na; ++b) {
                if (a & ~b) continue;
                for (Word cs = m.row(b); cs; cs &= cs - 1) {
                    const Word c = lowest(cs);
                    const Word bad = detail::kUpSets[c] & all_b & ~m.row(a);
                    if (bad) {
                        out.push_back({"S4", {Word(a), Word(b), c, lowest(bad)}});
                        return;
                    }
                }
            }
    }();
    return out;
}

bool is_subordination(const Subordination& s) { return check_subordination(s).empty(); }

std::vector<Violation> check_s5_axioms(const Subordination& s)
{
    require_endo(s, "check_s5_axioms");
    std::vector<Violation> out;
    const BitMatrix& m = s.matrix();
    const BitMatrix mt = m.transposed();
    const int n = s.source().element_count();
    const Word top = s.source().top().bits;

    for (int a = 0; a < n; ++a) {
        const Word bad = m.row(a) & ~detail::kUpSets[a];
        if (bad) {
            out.push_back({"S5", {Word(a), lowest(bad)}});
            break;
        }
    }
    [&] {
        for (int a = 0; a < n; ++a)
            for (Word bs = m.row(a); bs; bs &= bs - 1) {
                const Word b = lowest(bs);
                if (!m.test(code(top & ~b), code(top & ~Word(a)))) {
                    out.push_back({"S6", {Word(a), b}});
                    return;
                }
            }
    }();
    // S7: every a S b has an interpolant c with a S c S b; scans all c.
    [&] {
        for (int a = 0; a < n; ++a)
            for (Word bs = m.row(a); bs; bs &= bs - 1) {
                const Word b = lowest(bs);
                if ((m.row(a) & mt.row(code(b))) == 0) {
                    out.push_back({"S7", {Word(a), b}});
                    return;
                }
            }
    }();
    return out;
}

std::optional<Violation> s8_violation(const Subordination& s)
{
    require_endo(s, "check_s8");
    const int n = s.source().element_count();
    for (int a = 1; a < n; ++a)
        if ((s.matrix().column(a) & ~Word{1}) == 0) return Violation{"S8", {Word(a)}};
    return std::nullopt;
}

bool check_s8(const Subordination& s) { return !s8_violation(s).has_value(); }

Subordination sub_dagger(const Subordination& s)
{
    const BoolAlg& a_alg = s.source();
    const BoolAlg& b_alg = s.target();
    const Word top_a = a_alg.top().bits;
    const Word top_b = b_alg.top().bits;
    BitMatrix m(b_alg.element_count(), a_alg.element_count());
    for (int b = 0; b < b_alg.element_count(); ++b)
        for (int a = 0; a < a_alg.element_count(); ++a)
            m.set(b, a, s.matrix().test(code(top_a & ~Word(a)), code(top_b & ~Word(b))));
    return Subordination(b_alg, a_alg, m);
}

Subordination compose_subordinations(const Subordination& s1, const Subordination& s2)
{
    if (s1.target() != s2.source())
        throw MismatchError("compose_subordinations: target algebra of the first is not the source of the second");
    Subordination out(s1.source(), s2.target(), s1.matrix().then(s2.matrix()));
    assert(is_subordination(out) || !is_subordination(s1) || !is_subordination(s2));
    return out;
}

Subordination sub_meet(const Subordination& s1, const Subordination& s2)
{
    if (s1.source() != s2.source() || s1.target() != s2.target())
        throw MismatchError("sub_meet: subordinations have different algebras");
    return Subordination::from_core(s1.source(), s1.target(), s1.core() | s2.core());
}

bool sub_subset(const Subordination& s1, const Subordination& s2)
{
    if (s1.source() != s2.source() || s1.target() != s2.target())
        throw MismatchError("sub_subset: subordinations have different algebras");
    return s1.matrix().subset_of(s2.matrix());
}

Qsh qsh_identity(const BoolAlg& algebra)
{
    Qsh q{algebra, algebra, {}};
    for (int a = 0; a < algebra.element_count(); ++a) q.table.push_back({Element{Word(a)}});
    return q;
}

std::vector<Violation> check_qsh(const Qsh& delta)
{
    std::vector<Violation> out;
    const int n = delta.source.element_count();
    if (static_cast<int>(delta.table.size()) != n) {
        out.push_back({"QSH-table", {Word(delta.table.size())}});
        return out;
    }
    for (int a = 0; a < n; ++a)
        if (!delta.target.contains(delta.table[a].generator)) {
            out.push_back({"QSH-range", {Word(a)}});
            return out;
        }
    if (delta.table[code(delta.source.top().bits)].generator != delta.target.top())
        out.push_back({"QSH1", {delta.source.top().bits}});
    [&] {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (delta.table[a & b].generator.bits != (delta.table[a].generator.bits & delta.table[b].generator.bits)) {
                    out.push_back({"QSH2", {Word(a), Word(b)}});
                    return;
                }
    }();
    return out;
}

Qsh to_qsh(const Subordination& s)
{
    Qsh q{s.target(), s.source(), {}};
    for (int b = 0; b < s.target().element_count(); ++b) {
        const ElementSet pre = s.preimage(Element{Word(b)});
        const Element gen = s.source().join_all(pre);
        // S^{-1}[b] must be exactly the down-set of its join.
        assert(pre == s.source().down_set(gen) || !is_subordination(s));
        q.table.push_back({gen});
    }
    return q;
}

Subordination from_qsh(const Qsh& delta)
{
    if (auto v = check_qsh(delta); !v.empty())
        throw ValidationError("not a quasi-semi-homomorphism: " + v.front().to_string());
    BitMatrix m(delta.target.element_count(), delta.source.element_count());
    for (int a = 0; a < delta.source.element_count(); ++a) {
        const ElementSet members = delta.target.down_set(delta.table[a].generator);
        for (Word bs = members; bs; bs &= bs - 1) m.set(code(lowest(bs)), a);
    }
    return Subordination(delta.target, delta.source, m);
}

Qsh compose_qsh(const Qsh& delta1, const Qsh& delta2)
{
    if (delta1.target != delta2.source) throw MismatchError("compose_qsh: algebras do not chain");
    Qsh q{delta1.source, delta2.target, {}};
    for (int a = 0; a < delta1.source.element_count(); ++a) {
        Word gen = 0;
        for (Word members = delta1.target.down_set(delta1.table[a].generator); members; members &= members - 1)
            gen |= delta2.table[code(lowest(members))].generator.bits;
        q.table.push_back({Element{gen}});
    }
    return q;
}

bool is_compatible(const Subordination& t, const Subordination& s_a, const Subordination& s_b)
{
    if (s_a.source() != t.source() || s_a.target() != t.source() || s_b.source() != t.target() ||
        s_b.target() != t.target())
        throw MismatchError("is_compatible: equivalences do not sit on the subordination's algebras");
    return compose_subordinations(s_a, t) == t && compose_subordinations(t, s_b) == t;
}

std::vector<Violation> map_condition_violations(const Subordination& t, const Subordination& s_a,
                                                const Subordination& s_b)
{
    if (s_a.source() != t.source() || s_b.source() != t.target())
        throw MismatchError("map conditions: equivalences do not sit on the subordination's algebras");
    std::vector<Violation> out;
    const Word col0 = t.preimage(Element{0});
    if (col0 & ~Word{1}) out.push_back({"totality", {lowest(col0 & ~Word{1})}});

    const Word top_a = t.source().top().bits;
    const Word top_b = t.target().top().bits;
    const BitMatrix tt = t.matrix().transposed();
    [&] {
        for (int b1 = 0; b1 < s_b.source().element_count(); ++b1)
            for (Word b2s = s_b.matrix().row(b1); b2s; b2s &= b2s - 1) {
                const Word b2 = lowest(b2s);
                // a ranges over T^{-1}[b2]; need (not a) T (not b1) for one of them.
                const Word neg_b1 = top_b & ~Word(b1);
                bool found = false;
                for (Word as = tt.row(code(b2)); as && !found; as &= as - 1)
                    found = t.matrix().test(code(top_a & ~lowest(as)), code(neg_b1));
                if (!found) {
                    out.push_back({"determinism", {Word(b1), b2}});
                    return;
                }
            }
    }();
    return out;
}

bool check_map_conditions(const Subordination& t, const Subordination& s_a, const Subordination& s_b)
{
    return map_condition_violations(t, s_a, s_b).empty();
}

}  // namespace subdual

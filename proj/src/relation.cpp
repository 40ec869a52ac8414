#include "subdual/relation.hpp"

#include <bit>
#include <string>

#include "subdual/errors.hpp"

namespace subdual {

namespace {

void check_carrier(Carrier c)
{
    if (c.size < 0 || c.size > kMaxDim)
        throw SizeError("carrier size must lie in [0, 64], got " + std::to_string(c.size));
}

void check_same_shape(const Rel& a, const Rel& b, const char* what)
{
    if (a.source() != b.source() || a.target() != b.target())
        throw MismatchError(std::string(what) + ": relations have different carriers");
}

}  // namespace

Rel::Rel(Carrier source, Carrier target)
{
    check_carrier(source);
    check_carrier(target);
    matrix_ = BitMatrix(source.size, target.size);
}

Rel Rel::identity(Carrier x)
{
    check_carrier(x);
    return Rel(BitMatrix::identity(x.size));
}

Rel Rel::full(Carrier x, Carrier y)
{
    check_carrier(x);
    check_carrier(y);
    return Rel(BitMatrix::full(x.size, y.size));
}

Rel Rel::from_pairs(Carrier x, Carrier y, const std::vector<std::pair<int, int>>& pairs)
{
    Rel r(x, y);
    for (auto [i, j] : pairs) {
        if (i < 0 || i >= x.size || j < 0 || j >= y.size)
            throw ValidationError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside the carriers");
        r.set(i, j);
    }
    return r;
}

Rel Rel::graph(Carrier x, Carrier y, const std::vector<int>& images)
{
    if (static_cast<int>(images.size()) != x.size) throw MismatchError("function table length differs from domain");
    Rel r(x, y);
    for (int i = 0; i < x.size; ++i) {
        if (images[i] < 0 || images[i] >= y.size) throw ValidationError("function value outside the codomain");
        r.set(i, images[i]);
    }
    return r;
}

Word Rel::image(Word points) const noexcept
{
    Word acc = 0;
    while (points) {
        acc |= matrix_.row(std::countr_zero(points));
        points &= points - 1;
    }
    return acc;
}

Word Rel::preimage(Word points) const noexcept
{
    Word acc = 0;
    for (int i = 0; i < matrix_.rows(); ++i)
        if (matrix_.row(i) & points) acc |= Word{1} << i;
    return acc;
}

std::vector<std::pair<int, int>> Rel::pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < matrix_.rows(); ++i)
        for (int j = 0; j < matrix_.cols(); ++j)
            if (matrix_.test(i, j)) out.emplace_back(i, j);
    return out;
}

Rel compose(const Rel& r, const Rel& s)
{
    if (r.target() != s.source()) throw MismatchError("compose: target of the first relation is not the source of the second");
    return Rel(r.matrix().then(s.matrix()));
}

Rel converse(const Rel& r) { return Rel(r.matrix().transposed()); }

Rel rel_meet(const Rel& a, const Rel& b)
{
    check_same_shape(a, b, "rel_meet");
    return Rel(a.matrix() & b.matrix());
}

bool rel_leq(const Rel& a, const Rel& b)
{
    check_same_shape(a, b, "rel_leq");
    return a.matrix().subset_of(b.matrix());
}

bool check_modular_law(const Rel& r, const Rel& s, const Rel& t)
{
    if (r.target() != s.source() || r.source() != t.source() || s.target() != t.target())
        throw MismatchError("modular law: relation shapes do not fit R: X->Y, S: Y->Z, T: X->Z");
    const Rel lhs = rel_meet(compose(r, s), t);
    const Rel rhs = compose(r, rel_meet(s, compose(converse(r), t)));
    return rel_leq(lhs, rhs);
}

bool is_equivalence(const Rel& e)
{
    if (e.source() != e.target()) return false;
    const Rel id = Rel::identity(e.source());
    return rel_leq(id, e) && e == converse(e) && rel_leq(compose(e, e), e);
}

bool is_map(const Rel& r)
{
    const Rel rr = converse(r);
    return rel_leq(Rel::identity(r.source()), compose(r, rr)) && rel_leq(compose(rr, r), Rel::identity(r.target()));
}

bool is_function_graph(const Rel& r) noexcept
{
    for (int i = 0; i < r.source().size; ++i)
        if (std::popcount(r.matrix().row(i)) != 1) return false;
    return true;
}

}  // namespace subdual

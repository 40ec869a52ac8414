#include "subdual/split_allegory.hpp"

namespace subdual {

StoneEObject gleason_finite(Carrier y) { return StoneEObject(y, Rel::identity(y)); }

CompatibleRelation projection_morphism(const QuotientData& q)
{
    const Carrier xe = q.quotient_carrier();
    return CompatibleRelation(StoneEObject(q.base, q.equiv), StoneEObject(xe, Rel::identity(xe)), q.projection);
}

}  // namespace subdual

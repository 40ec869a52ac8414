#pragma once

#include <vector>

#include "subdual/relation.hpp"
#include "subdual/subordination.hpp"

namespace subdual {

/// Clop on morphisms: U S_R V iff R[U] is contained in V, over the powerset
/// algebras of the carriers.
Subordination clop_functor(const Rel& r);

/// Ult on morphisms: atom x relates to atom y iff S[up(x)] is contained in up(y).
Rel ult_functor(const Subordination& s);

/// The quotient X/E of a finite carrier by an equivalence relation, with
/// classes ordered by least member.
struct QuotientData {
    Carrier base;
    Rel equiv;
    std::vector<std::vector<int>> classes;
    /// Graph of the projection X -> X/E.
    Rel projection;

    Carrier quotient_carrier() const noexcept { return {static_cast<int>(classes.size())}; }

    friend bool operator==(const QuotientData&, const QuotientData&) = default;
};

QuotientData quotient(Carrier x, const Rel& e);

/// Q(R) = pi2 o R o pi1^T for a relation compatible with both equivalences.
Rel q_functor(const Rel& r, const QuotientData& q1, const QuotientData& q2);

/// Lifts a relation between quotients back to the compatible relation pi2^T o R' o pi1.
Rel q_lift(const Rel& r_quot, const QuotientData& q1, const QuotientData& q2);

/// E[F] is proper for every proper subset F. Scans all subsets; carriers up to 24 points.
bool is_irreducible(const Rel& e);

/// Closure in a finite discrete space, which is the identity.
Word discrete_closure(Word points) noexcept;

/// The finite form of the regular-open functor: U D(R) V iff R[cl(U)] is contained in V.
Subordination devries_functor_finite(const Rel& r);

}  // namespace subdual

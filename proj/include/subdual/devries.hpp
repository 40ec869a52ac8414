#pragma once

#include <vector>

#include "subdual/bool_alg.hpp"
#include "subdual/subordination.hpp"

namespace subdual {

/// S1-S8 for an endo-relation on a finite algebra. Finite algebras are
/// complete, so these are all the conditions.
std::vector<Violation> check_devries_algebra(const BoolAlg& algebra, const Subordination& proximity);

/// A finite de Vries algebra (B, <). Every finite one has < equal to <=, but
/// nothing here assumes it; the general formulas run on whatever proximity is stored.
class DeVriesAlgebra {
public:
    /// Throws ValidationError when S1-S8 fail.
    DeVriesAlgebra(BoolAlg algebra, Subordination proximity);

    /// (powerset(n), <=).
    static DeVriesAlgebra canonical(int atom_count);

    const BoolAlg& algebra() const noexcept { return algebra_; }
    const Subordination& proximity() const noexcept { return proximity_; }
    bool precedes(Element a, Element b) const noexcept { return proximity_.related(a, b); }

    friend bool operator==(const DeVriesAlgebra&, const DeVriesAlgebra&) = default;

private:
    BoolAlg algebra_;
    Subordination proximity_;
};

/// A total function between the elements of two de Vries algebras, indexed by element code.
class DeVriesMorphism {
public:
    DeVriesMorphism(DeVriesAlgebra source, DeVriesAlgebra target, std::vector<Element> table);

    const DeVriesAlgebra& source() const noexcept { return source_; }
    const DeVriesAlgebra& target() const noexcept { return target_; }
    const std::vector<Element>& table() const noexcept { return table_; }

    Element operator()(Element a) const { return table_.at(static_cast<std::size_t>(a.bits)); }

    friend bool operator==(const DeVriesMorphism&, const DeVriesMorphism&) = default;

private:
    DeVriesAlgebra source_;
    DeVriesAlgebra target_;
    std::vector<Element> table_;
};

DeVriesMorphism devries_identity(const DeVriesAlgebra& a);

/// M1 f(0) = 0, M2 f(a /\ b) = f(a) /\ f(b), M3 a < b implies not f(not a) < f(b),
/// M4 f(a) = join of f(b) over b < a.
std::vector<Violation> check_devries_morphism(const DeVriesMorphism& f);

/// (g * f)(a) = join of g(f(b)) over b < a, for f: A -> B and g: B -> C.
DeVriesMorphism star_compose(const DeVriesMorphism& g, const DeVriesMorphism& f);

/// Plain function composition g . f.
DeVriesMorphism plain_compose(const DeVriesMorphism& g, const DeVriesMorphism& f);

/// f: A -> B gives S_f: B -> A with b S_f a iff some a' < a has b <= f(a').
Subordination morphism_to_subordination(const DeVriesMorphism& f);

/// S: A -> B compatible with both proximities and satisfying the map
/// conditions gives f_S: B -> A with f_S(b) = join of S^{-1}[b]. Throws
/// ValidationError naming the failed condition otherwise.
DeVriesMorphism subordination_to_morphism(const Subordination& s, const DeVriesAlgebra& a, const DeVriesAlgebra& b);

/// For h: atoms(B) -> atoms(A), the morphism f: A -> B with f(a) = join of the atoms y with h(y) <= a.
DeVriesMorphism dual_of_atom_function(const DeVriesAlgebra& a, const DeVriesAlgebra& b, const std::vector<int>& h);

struct ExtractedBijection {
    std::vector<Element> forward;   // f(a) = meet of T[a]
    std::vector<Element> backward;  // g(b) = meet of Q[b]
};

/// For mutually inverse T: A -> B and Q: B -> A in DeV^S. Throws ValidationError otherwise.
ExtractedBijection iso_to_bijection(const Subordination& t, const Subordination& q, const DeVriesAlgebra& a,
                                    const DeVriesAlgebra& b);

/// The upper/lower bound identities relating an isomorphism pair to the
/// proximities, e.g. Q^{-1}[a] = S_B^{-1}[L(T[a])] and T[a] = S_B[meet T[a]].
/// Empty iff every identity holds at every element.
std::vector<Violation> iso_bound_identity_violations(const Subordination& t, const Subordination& q,
                                                     const DeVriesAlgebra& a, const DeVriesAlgebra& b);

/// The isomorphism a T b iff h(a) S_B b induced by a boolean isomorphism h: A -> B given on elements.
Subordination iso_from_bijection(const std::vector<Element>& h, const DeVriesAlgebra& a, const DeVriesAlgebra& b);

}  // namespace subdual

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subdual/bit_matrix.hpp"
#include "subdual/bool_alg.hpp"

namespace subdual {

/// A failed axiom together with the lexicographically first witnessing tuple
/// of element codes.
struct Violation {
    std::string axiom;
    std::vector<Word> witness;

    std::string to_string() const;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// A relation between the element sets of two finite boolean algebras.
///
/// Between powerset algebras a subordination is determined by its restriction
/// to atoms(A) x coatoms(B): a S b iff x S m for every atom x <= a and every
/// coatom m >= b. Instances built from a core remember it; the element matrix
/// is always materialized.
class Subordination {
public:
    Subordination(BoolAlg source, BoolAlg target);
    Subordination(BoolAlg source, BoolAlg target, BitMatrix matrix);

    /// The order relation <= of an algebra, the identity of BA^S.
    static Subordination order(BoolAlg algebra);
    static Subordination full(BoolAlg source, BoolAlg target);
    static Subordination from_pairs(BoolAlg source, BoolAlg target, const std::vector<std::pair<Word, Word>>& pairs);
    /// Expands an atoms(source) x coatoms(target) table; core(i, j) relates atom i to the coatom missing j.
    static Subordination from_core(BoolAlg source, BoolAlg target, BitMatrix core);

    const BoolAlg& source() const noexcept { return source_; }
    const BoolAlg& target() const noexcept { return target_; }
    const BitMatrix& matrix() const noexcept { return matrix_; }
    const std::optional<BitMatrix>& stored_core() const noexcept { return core_; }

    bool related(Element a, Element b) const noexcept { return matrix_.test(static_cast<int>(a.bits), static_cast<int>(b.bits)); }
    bool related(Word a, Word b) const noexcept { return matrix_.test(static_cast<int>(a), static_cast<int>(b)); }

    /// S[a] and S^{-1}[b] as element sets.
    ElementSet image(Element a) const noexcept { return matrix_.row(static_cast<int>(a.bits)); }
    ElementSet preimage(Element b) const noexcept { return matrix_.column(static_cast<int>(b.bits)); }

    /// Restriction to atoms(source) x coatoms(target).
    BitMatrix core() const;

    std::vector<std::pair<Word, Word>> pairs() const;

    /// Equal algebras and equal matrices; the stored core is a cache and is ignored.
    friend bool operator==(const Subordination& a, const Subordination& b) noexcept
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
    }

private:
    BoolAlg source_;
    BoolAlg target_;
    BitMatrix matrix_;
    std::optional<BitMatrix> core_;
};

/// S1-S4. Empty iff the relation is a subordination.
std::vector<Violation> check_subordination(const Subordination& s);
bool is_subordination(const Subordination& s);

/// S5-S7 for an endo-subordination.
std::vector<Violation> check_s5_axioms(const Subordination& s);
bool check_s8(const Subordination& s);
std::optional<Violation> s8_violation(const Subordination& s);

/// b S^dagger a iff (not a) S (not b).
Subordination sub_dagger(const Subordination& s);

/// First s1, then s2.
Subordination compose_subordinations(const Subordination& s1, const Subordination& s2);

/// Meet in the allegory BA^S, whose hom-sets are ordered by reverse inclusion:
/// the least subordination containing both, obtained by joining cores.
Subordination sub_meet(const Subordination& s1, const Subordination& s2);

/// Plain inclusion of the underlying relations.
bool sub_subset(const Subordination& s1, const Subordination& s2);

/// A quasi-semi-homomorphism A -> ideals(B), one principal ideal per element of A.
struct Qsh {
    BoolAlg source;
    BoolAlg target;
    std::vector<IdealRep> table;

    const IdealRep& operator()(Element a) const { return table.at(static_cast<std::size_t>(a.bits)); }
    friend bool operator==(const Qsh&, const Qsh&) = default;
};

Qsh qsh_identity(const BoolAlg& algebra);
/// Delta(1) = B and Delta(a /\ b) = Delta(a) /\ Delta(b).
std::vector<Violation> check_qsh(const Qsh& delta);

/// For S: A -> B, Delta_S: B -> ideals(A) with Delta_S(b) = S^{-1}[b].
Qsh to_qsh(const Subordination& s);
/// For Delta: A -> ideals(B), S_Delta: B -> A with b S a iff b in Delta(a). Throws ValidationError on invalid input.
Subordination from_qsh(const Qsh& delta);
/// First delta1, then delta2: a |-> union of delta2(b) over b in delta1(a).
Qsh compose_qsh(const Qsh& delta1, const Qsh& delta2);

/// T o S_A = T = S_B o T, i.e. S_A then T and T then S_B both give back T.
bool is_compatible(const Subordination& t, const Subordination& s_a, const Subordination& s_b);

/// The two explicit conditions characterizing maps in SubS5^S:
///   totality:    a T 0 implies a = 0;
///   determinism: b1 S_B b2 implies some a has (not a) T (not b1) and a T b2.
std::vector<Violation> map_condition_violations(const Subordination& t, const Subordination& s_a,
                                                const Subordination& s_b);
bool check_map_conditions(const Subordination& t, const Subordination& s_a, const Subordination& s_b);

}  // namespace subdual

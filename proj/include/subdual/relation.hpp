#pragma once

#include <utility>
#include <vector>

#include "subdual/bit_matrix.hpp"

namespace subdual {

/// A finite discrete space with points 0..size-1.
struct Carrier {
    int size = 0;

    friend bool operator==(const Carrier&, const Carrier&) = default;
};

/// A binary relation between two finite carriers. Finite Stone spaces are
/// discrete, so every relation is closed.
///
/// Composition is written applicatively in the literature (S o R is "first R,
/// then S"); the function compose(r, s) takes its arguments in the order they
/// are applied, so compose(r, s) == s o r.
class Rel {
public:
    Rel() = default;
    Rel(Carrier source, Carrier target);
    explicit Rel(BitMatrix matrix) : matrix_(matrix) {}

    static Rel identity(Carrier x);
    static Rel full(Carrier x, Carrier y);
    static Rel from_pairs(Carrier x, Carrier y, const std::vector<std::pair<int, int>>& pairs);
    /// Graph of a total function given as a table of images.
    static Rel graph(Carrier x, Carrier y, const std::vector<int>& images);

    Carrier source() const noexcept { return {matrix_.rows()}; }
    Carrier target() const noexcept { return {matrix_.cols()}; }

    bool related(int x, int y) const noexcept { return matrix_.test(x, y); }
    void set(int x, int y, bool v = true) noexcept { matrix_.set(x, y, v); }

    /// R[F] for a set of source points packed as a word.
    Word image(Word points) const noexcept;
    /// R^{-1}[G] for a set of target points.
    Word preimage(Word points) const noexcept;

    std::vector<std::pair<int, int>> pairs() const;

    const BitMatrix& matrix() const noexcept { return matrix_; }

    friend bool operator==(const Rel&, const Rel&) = default;
    friend bool operator<(const Rel& a, const Rel& b) noexcept { return a.matrix_ < b.matrix_; }

private:
    BitMatrix matrix_;
};

/// First r, then s.
Rel compose(const Rel& r, const Rel& s);
Rel converse(const Rel& r);
Rel rel_meet(const Rel& a, const Rel& b);
bool rel_leq(const Rel& a, const Rel& b);

/// (R;S) /\ T <= R;(S /\ R^T;T) for R: X->Y, S: Y->Z, T: X->Z.
bool check_modular_law(const Rel& r, const Rel& s, const Rel& t);

bool is_equivalence(const Rel& e);

/// Allegory maps: id <= R;R^T and R^T;R <= id. For carriers these are exactly
/// graphs of total functions.
bool is_map(const Rel& r);

/// Direct test of the functional-graph property, used as an oracle for is_map.
bool is_function_graph(const Rel& r) noexcept;

}  // namespace subdual

#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "subdual/devries.hpp"
#include "subdual/enumeration.hpp"
#include "subdual/relation.hpp"
#include "subdual/split_allegory.hpp"
#include "subdual/stone.hpp"
#include "subdual/subordination.hpp"

namespace subdual {

/// Malformed input: bad JSON, a missing or ill-typed field, an unknown kind.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// h: atoms(domain) -> atoms(codomain), the dual description of a de Vries
/// morphism codomain -> domain.
struct AtomFunction {
    int domain = 0;
    int codomain = 0;
    std::vector<int> table;

    friend bool operator==(const AtomFunction&, const AtomFunction&) = default;
};

using DocumentValue = std::variant<Rel, Subordination, Qsh, DeVriesMorphism, AtomFunction, QuotientData,
                                   CompatibleRelation, CompatibleSubordination>;

/// A parsed input file. The kind decides which alternative is held:
///   relation, equivalence, atom-relation                 Rel
///   subordination, s5-subordination, map-subordination,
///   devries-algebra (its proximity)                      Subordination
///   qsh                                                  Qsh
///   devries-function                                     DeVriesMorphism
///   atom-function                                        AtomFunction
///   quotient                                             QuotientData
///   compatible-relation                                  CompatibleRelation
///   compatible-subordination                             CompatibleSubordination
struct Document {
    std::string kind;
    DocumentValue value;
};

const std::vector<std::string>& document_kinds();

/// Throws ParseError with a line number or field path, and ValidationError
/// when a compatible-* document carries an object equivalence that is not one.
Document parse_document(std::string_view text);

/// Canonical single-line JSON: sorted keys, sorted pairs, no whitespace.
std::string emit(const Document& doc);

/// Violations as human-readable lines; empty iff the document is valid for its kind.
std::vector<std::string> check_document(const Document& doc);

/// Target kinds reachable from a document's kind.
std::vector<std::string> conversion_targets(const std::string& kind);

/// Throws ValidationError when the input does not satisfy the target's
/// preconditions and std::invalid_argument when no conversion exists.
Document convert(const Document& doc, const std::string& target_kind);

/// Enumeration instances in document form, kind chosen by the space.
Document instance_document(SpaceKind kind, const Instance& instance);

}  // namespace subdual

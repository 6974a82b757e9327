#pragma once

#include "lexont/core.hpp"
#include "lexont/hierarchy.hpp"
#include "lexont/store.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lexont {

// A domain-relation application as uttered, e.g. WANT(omelet#1, beer#1).
struct Application {
    std::string relation;
    ConceptSense arg1;
    ConceptSense arg2;

    Application(std::string_view relation_name, ConceptSense first, ConceptSense second);

    // Parses "WANT(omelet#1,beer#1)"; whitespace-insensitive.
    static Application parse(std::string_view text);

    std::string str() const; // "WANT(omelet#1, beer#1)"

    friend bool operator==(const Application& a, const Application& b) = default;
};

// Outcome of checking an application against its relation's signatures.
// When several signatures exist the most salient well-typed one wins;
// failing that, mismatches are reported against the most salient signature.
struct TypecheckResult {
    bool well_typed = false;
    std::vector<int> mismatches; // positions 1/2, ascending; empty iff well_typed
    RelationSignature signature; // the signature the verdict refers to
};

// One bridge introduced at a coerced position: EAT(person#1, omelet#1)
// binds the stray argument to the type the outer relation wanted.
struct CoercionStep {
    int position = 1;
    Application bridge;
};

struct CoercedReading {
    std::vector<CoercionStep> steps; // position order, one step per mismatch
    Application rewritten;           // type-checks by construction
};

using ResolveResult = std::variant<Application, CoercedReading>;

// True iff c unifies with the signature slot type, i.e. is its subtype.
bool unify_arg(const ConceptSense& c, const ConceptSense& sig_type, const TypeGraph& g);

// Throws UnknownRelationSignature when the store has no signature for the
// relation at all.
TypecheckResult typecheck(const Application& app, const Snapshot& s, const TypeGraph& g);

// Most salient signature R(a1, a2) with t_expected ⊑ a1 and t_actual ⊑ a2.
// Salience is weight, ties broken by more specific a2, then more specific
// a1, then relation name, then argument order. Throws NoBridgeRelation when
// no signature qualifies.
RelationSignature salient_relation(const ConceptSense& t_expected, const ConceptSense& t_actual,
                                   const Snapshot& s, const TypeGraph& g);

// Steps 1-9: pass well-typed applications through untouched; otherwise
// coerce each mismatched position through its salient bridge relation and
// rewrite the application with the expected types. One bridge per position,
// never chained.
ResolveResult resolve_metonymy(const Application& app, const Snapshot& s, const TypeGraph& g);

} // namespace lexont

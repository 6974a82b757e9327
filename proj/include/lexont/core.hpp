#pragma once

#include "lexont/errors.hpp"

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace lexont {

// ---------------------------------------------------------------------------
// Dimensions
//
// A dimension is an axis of word meaning along which weighted fillers
// accumulate: "what can sensibly be said of this concept, and in what role".
// The enumeration is closed; parsers reject anything else.
// ---------------------------------------------------------------------------

enum class Dimension {
    HasProp,
    InState,
    AgentOf,
    ObjectOf,
    PartOf,
    HasValue,
    ParticipantIn,
};

inline constexpr std::array<Dimension, 7> kAllDimensions = {
    Dimension::HasProp,   Dimension::InState,  Dimension::AgentOf,
    Dimension::ObjectOf,  Dimension::PartOf,   Dimension::HasValue,
    Dimension::ParticipantIn,
};

std::string_view to_string(Dimension d);
std::optional<Dimension> try_parse_dimension(std::string_view name);
Dimension parse_dimension(std::string_view name); // throws UnknownDimension

// ---------------------------------------------------------------------------
// Primitive relations
//
// The canonical relation vocabulary. Aliases used in surface data
// (instanceOf, agentOf, participantIn, ...) resolve onto it via
// canonical_relation(); lookup is case-insensitive and total over the alias
// table, anything else is an UnknownRelation error.
// ---------------------------------------------------------------------------

enum class Relation {
    Eq,
    Part,
    Inst,
    Inhere,
    Exemp,
    Dep,
    IsA,
    Precedes,
    HasParticipant,
    HasAgent,
    Realizes,
    TypeOf,
    HasProp,
    InState,
    ObjectOf,
    HasValue,
};

std::string_view to_string(Relation r);
Relation canonical_relation(std::string_view alias);

// Relation a dimension reifies to, and back. The mapping is injective, so an
// assertion's dimension is recoverable from its triple.
Relation dimension_relation(Dimension d);
std::optional<Dimension> relation_dimension(Relation r);

// ---------------------------------------------------------------------------
// Concept senses
// ---------------------------------------------------------------------------

// One specific meaning of a word, written book#1 in CLI syntax. The lemma is
// lowercased at construction; sense indices are 1-based and always supplied
// by the caller, never inferred.
struct ConceptSense {
    std::string lemma;
    int sense = 1;

    ConceptSense(std::string_view lemma_text, int sense_index);

    // Accepts "book" (sense 1) or "book#3".
    static ConceptSense parse(std::string_view token);

    std::string str() const; // "book#1"

    auto operator<=>(const ConceptSense&) const = default;
};

// ---------------------------------------------------------------------------
// Properties and tropes
// ---------------------------------------------------------------------------

// A property as used on the surface: an adjective/stative (arity 1, e.g.
// HEAVY) or a relational verb (arity 2, e.g. RIDE).
struct PropertyRef {
    std::string surface;
    int arity = 1;

    PropertyRef(std::string_view surface_text, int arity_value);

    auto operator<=>(const PropertyRef&) const = default;
};

// A property reified as an abstract entity (ARTICULATE -> articulation).
// Names come from the nominalization lexicon only.
struct Trope {
    std::string name;
    PropertyRef source;

    Trope(std::string_view trope_name, PropertyRef source_property);

    auto operator<=>(const Trope&) const = default;
};

// ---------------------------------------------------------------------------
// Assertions
// ---------------------------------------------------------------------------

enum class Source { Fixture, Harvested, Manual };

std::string_view to_string(Source s);
std::optional<Source> try_parse_source(std::string_view name);

// One weighted applicability fact: the filler can sensibly be said of the
// subject sense along the given dimension. (subject, dimension, filler) is
// the identity key; weight is graded typicality in [0,1].
struct Assertion {
    ConceptSense subject;
    Dimension dimension;
    std::string filler;
    double weight = 1.0;
    Source source = Source::Manual;

    Assertion(ConceptSense concept_sense, Dimension dim, std::string_view filler_text,
              double weight_value = 1.0, Source source_tag = Source::Manual);
};

// Identity-key order: subject, dimension, filler. Weight and source do not
// participate.
bool same_key(const Assertion& a, const Assertion& b);
bool key_less(const Assertion& a, const Assertion& b);

} // namespace lexont

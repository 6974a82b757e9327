#pragma once

#include "lexont/core.hpp"
#include "lexont/store.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lexont {

// The eight copular sentence shapes the tagger can hand us. Tagging is
// input: nothing here parses raw sentences.
enum class CopularPattern {
    CommonNounComplement, // "Frido is a dog"
    ProperNameIdentity,   // "Frido is Rex"
    TraitAdjective,       // "Mary is wise"
    StateAdjective,       // "Carlos is ill"
    ActiveProgressive,    // "Sara is running"
    PassiveParticiple,    // "Sara is greeted"
    MeasurePhrase,        // "Sheba is 5 years old"
    EventParticipation,   // "Sheba is running (in the race)"
};

std::string_view to_string(CopularPattern p);
std::optional<CopularPattern> try_parse_copular_pattern(std::string_view name);

struct TaggedCopular {
    std::string subject; // sense token or named individual
    CopularPattern pattern;
    std::string complement;

    TaggedCopular(std::string_view subject_text, CopularPattern pattern_tag,
                  std::string_view complement_text);
};

// Surface property -> trope name lexicon, loaded from a TSV file. Lookup is
// case-insensitive; entries are never derived morphologically.
class NominalizationLexicon {
public:
    static NominalizationLexicon load(const std::filesystem::path& path);
    static NominalizationLexicon parse(const std::string& text, const std::string& origin);

    void add(std::string_view surface, std::string_view trope);
    std::optional<std::string> find(std::string_view surface) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::map<std::string, std::string> entries_; // keys lowercased
};

// One primitive-relation fact. The tail is a trope for stative dimensions,
// a sense for copular identity/instance facts, or a literal string (event
// names, measure values).
struct Triple {
    ConceptSense head;
    Relation relation;
    std::variant<Trope, ConceptSense, std::string> tail;
    double weight = 1.0;

    std::string tail_str() const;
    std::string str() const; // "HasProp(human#1, articulation)"
};

bool operator==(const Triple& a, const Triple& b);

// Pattern -> implicit primitive relation; total over the enum.
Relation classify_copular(const TaggedCopular& t);

// Throws MissingNominalization when the surface has no lexicon entry.
Trope nominalize(const PropertyRef& p, const NominalizationLexicon& lexicon);

// Converts one applicability assertion to a triple. Stative dimensions
// require a nominalization; event dimensions use one when available and the
// verbatim filler otherwise.
Triple reify(const Assertion& a, const NominalizationLexicon& lexicon);

// Reifies a whole snapshot in assertion order.
std::vector<Triple> reify_all(const Snapshot& snapshot, const NominalizationLexicon& lexicon);

} // namespace lexont

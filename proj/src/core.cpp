#include "lexont/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace lexont {

namespace {

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

} // namespace

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownDimension: return "UnknownDimension";
    case ErrorCode::UnknownRelation: return "UnknownRelation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::EmptySnapshot: return "EmptySnapshot";
    case ErrorCode::UnknownSense: return "UnknownSense";
    case ErrorCode::MissingNominalization: return "MissingNominalization";
    case ErrorCode::UnknownRelationSignature: return "UnknownRelationSignature";
    case ErrorCode::NoBridgeRelation: return "NoBridgeRelation";
    case ErrorCode::UnresolvableApplication: return "UnresolvableApplication";
    case ErrorCode::InvalidTemplate: return "InvalidTemplate";
    case ErrorCode::EmptyCompletion: return "EmptyCompletion";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::ProviderError: return "ProviderError";
    case ErrorCode::EmptyDimensionList: return "EmptyDimensionList";
    }
    return "Unknown";
}

std::string_view to_string(Dimension d) {
    switch (d) {
    case Dimension::HasProp: return "HasProp";
    case Dimension::InState: return "InState";
    case Dimension::AgentOf: return "AgentOf";
    case Dimension::ObjectOf: return "ObjectOf";
    case Dimension::PartOf: return "PartOf";
    case Dimension::HasValue: return "HasValue";
    case Dimension::ParticipantIn: return "ParticipantIn";
    }
    return "?";
}

std::optional<Dimension> try_parse_dimension(std::string_view name) {
    for (Dimension d : kAllDimensions) {
        if (name == to_string(d)) return d;
    }
    return std::nullopt;
}

Dimension parse_dimension(std::string_view name) {
    if (auto d = try_parse_dimension(name)) return *d;
    throw Error(ErrorCode::UnknownDimension,
                "unknown dimension tag '" + std::string(name) + "'");
}

std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::Eq: return "Eq";
    case Relation::Part: return "Part";
    case Relation::Inst: return "Inst";
    case Relation::Inhere: return "Inhere";
    case Relation::Exemp: return "Exemp";
    case Relation::Dep: return "Dep";
    case Relation::IsA: return "IsA";
    case Relation::Precedes: return "Precedes";
    case Relation::HasParticipant: return "HasParticipant";
    case Relation::HasAgent: return "HasAgent";
    case Relation::Realizes: return "Realizes";
    case Relation::TypeOf: return "TypeOf";
    case Relation::HasProp: return "HasProp";
    case Relation::InState: return "InState";
    case Relation::ObjectOf: return "ObjectOf";
    case Relation::HasValue: return "HasValue";
    }
    return "?";
}

Relation canonical_relation(std::string_view alias) {
    if (alias.empty()) {
        throw Error(ErrorCode::UnknownRelation, "relation alias is empty");
    }
    // Canonical names plus the surface-table aliases, all lowercased.
    static const std::map<std::string, Relation> table = {
        {"eq", Relation::Eq},
        {"part", Relation::Part},
        {"inst", Relation::Inst},
        {"inhere", Relation::Inhere},
        {"exemp", Relation::Exemp},
        {"dep", Relation::Dep},
        {"isa", Relation::IsA},
        {"precedes", Relation::Precedes},
        {"hasparticipant", Relation::HasParticipant},
        {"hasagent", Relation::HasAgent},
        {"realizes", Relation::Realizes},
        {"typeof", Relation::TypeOf},
        {"hasprop", Relation::HasProp},
        {"instate", Relation::InState},
        {"objectof", Relation::ObjectOf},
        {"hasvalue", Relation::HasValue},
        {"instanceof", Relation::Inst},
        {"agentof", Relation::HasAgent},
        {"participantin", Relation::HasParticipant},
    };
    auto it = table.find(ascii_lower(alias));
    if (it == table.end()) {
        throw Error(ErrorCode::UnknownRelation,
                    "'" + std::string(alias) + "' is not a primitive relation or alias");
    }
    return it->second;
}

Relation dimension_relation(Dimension d) {
    switch (d) {
    case Dimension::HasProp: return Relation::HasProp;
    case Dimension::InState: return Relation::InState;
    case Dimension::AgentOf: return Relation::HasAgent;
    case Dimension::ObjectOf: return Relation::ObjectOf;
    case Dimension::PartOf: return Relation::Part;
    case Dimension::HasValue: return Relation::HasValue;
    case Dimension::ParticipantIn: return Relation::HasParticipant;
    }
    throw Error(ErrorCode::InvalidArgument, "bad dimension value");
}

std::optional<Dimension> relation_dimension(Relation r) {
    for (Dimension d : kAllDimensions) {
        if (dimension_relation(d) == r) return d;
    }
    return std::nullopt;
}

ConceptSense::ConceptSense(std::string_view lemma_text, int sense_index)
    : lemma(ascii_lower(lemma_text)), sense(sense_index) {
    if (lemma.empty()) {
        throw Error(ErrorCode::InvalidArgument, "concept lemma is empty");
    }
    if (sense < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "sense index must be >= 1, got " + std::to_string(sense));
    }
}

ConceptSense ConceptSense::parse(std::string_view token) {
    auto hash = token.find('#');
    if (hash == std::string_view::npos) {
        return ConceptSense(token, 1);
    }
    std::string_view lemma_part = token.substr(0, hash);
    std::string_view sense_part = token.substr(hash + 1);
    if (lemma_part.empty() || sense_part.empty()) {
        throw Error(ErrorCode::ParseError,
                    "malformed concept token '" + std::string(token) + "'");
    }
    int sense_index = 0;
    for (char c : sense_part) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorCode::ParseError,
                        "malformed sense index in '" + std::string(token) + "'");
        }
        sense_index = sense_index * 10 + (c - '0');
        if (sense_index > 1000000) {
            throw Error(ErrorCode::ParseError,
                        "sense index out of range in '" + std::string(token) + "'");
        }
    }
    if (sense_index < 1) {
        throw Error(ErrorCode::ParseError,
                    "sense index must be >= 1 in '" + std::string(token) + "'");
    }
    return ConceptSense(lemma_part, sense_index);
}

std::string ConceptSense::str() const {
    return lemma + "#" + std::to_string(sense);
}

PropertyRef::PropertyRef(std::string_view surface_text, int arity_value)
    : surface(surface_text), arity(arity_value) {
    if (surface.empty()) {
        throw Error(ErrorCode::InvalidArgument, "property surface is empty");
    }
    if (arity != 1 && arity != 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "property arity must be 1 or 2, got " + std::to_string(arity));
    }
}

Trope::Trope(std::string_view trope_name, PropertyRef source_property)
    : name(trope_name), source(std::move(source_property)) {
    if (name.empty()) {
        throw Error(ErrorCode::InvalidArgument, "trope name is empty");
    }
}

std::string_view to_string(Source s) {
    switch (s) {
    case Source::Fixture: return "fixture";
    case Source::Harvested: return "harvested";
    case Source::Manual: return "manual";
    }
    return "?";
}

std::optional<Source> try_parse_source(std::string_view name) {
    if (name == "fixture") return Source::Fixture;
    if (name == "harvested") return Source::Harvested;
    if (name == "manual") return Source::Manual;
    return std::nullopt;
}

Assertion::Assertion(ConceptSense concept_sense, Dimension dim, std::string_view filler_text,
                     double weight_value, Source source_tag)
    : subject(std::move(concept_sense)), dimension(dim), filler(filler_text),
      weight(weight_value), source(source_tag) {
    if (filler.empty()) {
        throw Error(ErrorCode::InvalidArgument, "assertion filler is empty");
    }
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "assertion weight must lie in [0,1], got " + std::to_string(weight));
    }
}

bool same_key(const Assertion& a, const Assertion& b) {
    return a.subject == b.subject && a.dimension == b.dimension && a.filler == b.filler;
}

bool key_less(const Assertion& a, const Assertion& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.filler < b.filler;
}

} // namespace lexont

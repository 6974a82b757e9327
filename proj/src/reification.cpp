#include "lexont/reification.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace lexont {

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    return out;
}

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

} // namespace

std::string_view to_string(CopularPattern p) {
    switch (p) {
    case CopularPattern::CommonNounComplement: return "CommonNounComplement";
    case CopularPattern::ProperNameIdentity: return "ProperNameIdentity";
    case CopularPattern::TraitAdjective: return "TraitAdjective";
    case CopularPattern::StateAdjective: return "StateAdjective";
    case CopularPattern::ActiveProgressive: return "ActiveProgressive";
    case CopularPattern::PassiveParticiple: return "PassiveParticiple";
    case CopularPattern::MeasurePhrase: return "MeasurePhrase";
    case CopularPattern::EventParticipation: return "EventParticipation";
    }
    return "?";
}

std::optional<CopularPattern> try_parse_copular_pattern(std::string_view name) {
    for (auto p : {CopularPattern::CommonNounComplement, CopularPattern::ProperNameIdentity,
                   CopularPattern::TraitAdjective, CopularPattern::StateAdjective,
                   CopularPattern::ActiveProgressive, CopularPattern::PassiveParticiple,
                   CopularPattern::MeasurePhrase, CopularPattern::EventParticipation}) {
        if (name == to_string(p)) return p;
    }
    return std::nullopt;
}

TaggedCopular::TaggedCopular(std::string_view subject_text, CopularPattern pattern_tag,
                             std::string_view complement_text)
    : subject(subject_text), pattern(pattern_tag), complement(complement_text) {
    if (subject.empty()) {
        throw Error(ErrorCode::InvalidArgument, "copular subject is empty");
    }
    if (complement.empty()) {
        throw Error(ErrorCode::InvalidArgument, "copular complement is empty");
    }
}

NominalizationLexicon NominalizationLexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open lexicon file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.string());
}

NominalizationLexicon NominalizationLexicon::parse(const std::string& text,
                                                   const std::string& origin) {
    NominalizationLexicon lex;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw Error(ErrorCode::ParseError,
                        origin + ":" + std::to_string(line_no) + ": expected SURFACE<TAB>TROPE");
        }
        std::string surface = trim(line.substr(0, tab));
        std::string trope = trim(line.substr(tab + 1));
        if (surface.empty() || trope.empty()) {
            throw Error(ErrorCode::ParseError,
                        origin + ":" + std::to_string(line_no) + ": empty surface or trope");
        }
        std::string key = lower(surface);
        if (lex.entries_.count(key)) {
            throw Error(ErrorCode::ParseError, origin + ":" + std::to_string(line_no) +
                                                   ": duplicate lexicon key: " + surface);
        }
        lex.entries_.emplace(std::move(key), std::move(trope));
    }
    return lex;
}

void NominalizationLexicon::add(std::string_view surface, std::string_view trope) {
    entries_[lower(surface)] = std::string(trope);
}

std::optional<std::string> NominalizationLexicon::find(std::string_view surface) const {
    auto it = entries_.find(lower(surface));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string Triple::tail_str() const {
    if (const auto* trope = std::get_if<Trope>(&tail)) return trope->name;
    if (const auto* sense = std::get_if<ConceptSense>(&tail)) return sense->str();
    return std::get<std::string>(tail);
}

std::string Triple::str() const {
    std::string out(to_string(relation));
    out += '(';
    out += head.str();
    out += ", ";
    out += tail_str();
    out += ')';
    return out;
}

bool operator==(const Triple& a, const Triple& b) {
    return a.head == b.head && a.relation == b.relation && a.tail == b.tail &&
           a.weight == b.weight;
}

Relation classify_copular(const TaggedCopular& t) {
    switch (t.pattern) {
    case CopularPattern::CommonNounComplement: return Relation::Inst;
    case CopularPattern::ProperNameIdentity: return Relation::Eq;
    case CopularPattern::TraitAdjective: return Relation::HasProp;
    case CopularPattern::StateAdjective: return Relation::InState;
    case CopularPattern::ActiveProgressive: return Relation::HasAgent;
    case CopularPattern::PassiveParticiple: return Relation::ObjectOf;
    case CopularPattern::MeasurePhrase: return Relation::HasValue;
    case CopularPattern::EventParticipation: return Relation::HasParticipant;
    }
    throw Error(ErrorCode::InvalidArgument, "unrecognized copular pattern");
}

Trope nominalize(const PropertyRef& p, const NominalizationLexicon& lexicon) {
    auto name = lexicon.find(p.surface);
    if (!name) {
        throw Error(ErrorCode::MissingNominalization,
                    "no nominalization for property: " + p.surface);
    }
    return Trope(*name, p);
}

Triple reify(const Assertion& a, const NominalizationLexicon& lexicon) {
    Triple t{a.subject, dimension_relation(a.dimension), std::string(), a.weight};
    switch (a.dimension) {
    case Dimension::HasProp:
    case Dimension::InState:
        t.tail = nominalize(PropertyRef(a.filler, 1), lexicon);
        break;
    case Dimension::AgentOf:
    case Dimension::ObjectOf:
    case Dimension::ParticipantIn: {
        // Event fillers take their nominal form when the lexicon has one
        // (influenced -> influencing); otherwise the surface form stands.
        auto name = lexicon.find(a.filler);
        t.tail = name ? *name : a.filler;
        break;
    }
    case Dimension::PartOf:
    case Dimension::HasValue:
        t.tail = a.filler;
        break;
    }
    return t;
}

std::vector<Triple> reify_all(const Snapshot& snapshot, const NominalizationLexicon& lexicon) {
    std::vector<Triple> out;
    out.reserve(snapshot.assertions().size());
    for (const auto& a : snapshot.assertions()) out.push_back(reify(a, lexicon));
    return out;
}

} // namespace lexont

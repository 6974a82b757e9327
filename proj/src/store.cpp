#include "lexont/store.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

namespace lexont {

using nlohmann::json;

RelationSignature::RelationSignature(std::string_view relation_name, ConceptSense arg1_type,
                                     ConceptSense arg2_type, double weight_value)
    : relation(relation_name), arg1(std::move(arg1_type)), arg2(std::move(arg2_type)),
      weight(weight_value) {
    if (relation.empty()) {
        throw Error(ErrorCode::InvalidArgument, "relation name is empty");
    }
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "signature weight must lie in [0,1], got " + std::to_string(weight));
    }
}

std::string relation_key(std::string_view relation) {
    std::string out(relation);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

const std::set<WeightedFiller>& Profile::at(Dimension d) const {
    static const std::set<WeightedFiller> empty;
    auto it = by_dimension_.find(d);
    return it == by_dimension_.end() ? empty : it->second;
}

std::size_t Profile::assertion_count() const {
    std::size_t n = 0;
    for (const auto& [d, fillers] : by_dimension_) n += fillers.size();
    return n;
}

Snapshot::Snapshot(std::vector<Assertion> assertions, std::vector<RelationSignature> signatures,
                   std::uint64_t version)
    : assertions_(std::move(assertions)), signatures_(std::move(signatures)), version_(version) {
    std::sort(assertions_.begin(), assertions_.end(), key_less);
    std::sort(signatures_.begin(), signatures_.end());
}

std::set<ConceptSense> Snapshot::extension(std::string_view filler,
                                           std::optional<Dimension> dimension) const {
    std::set<ConceptSense> out;
    for (const auto& a : assertions_) {
        if (a.filler != filler) continue;
        if (dimension && a.dimension != *dimension) continue;
        out.insert(a.subject);
    }
    return out;
}

Profile Snapshot::profile(const ConceptSense& sense) const {
    Profile p;
    for (const auto& a : assertions_) {
        if (a.subject == sense) {
            p.insert(a.dimension, WeightedFiller{a.weight, a.filler});
        }
    }
    return p;
}

std::vector<ConceptSense> Snapshot::senses() const {
    std::set<ConceptSense> distinct;
    for (const auto& a : assertions_) distinct.insert(a.subject);
    return {distinct.begin(), distinct.end()};
}

std::vector<RelationSignature> Snapshot::signatures_for(std::string_view relation) const {
    const std::string key = relation_key(relation);
    std::vector<RelationSignature> out;
    for (const auto& s : signatures_) {
        if (relation_key(s.relation) == key) out.push_back(s);
    }
    return out;
}

bool same_contents(const Snapshot& a, const Snapshot& b) {
    auto key_eq = [](const Assertion& x, const Assertion& y) {
        return same_key(x, y) && x.weight == y.weight && x.source == y.source;
    };
    return a.assertions_.size() == b.assertions_.size() &&
           std::equal(a.assertions_.begin(), a.assertions_.end(), b.assertions_.begin(), key_eq) &&
           a.signatures_ == b.signatures_;
}

std::uint64_t AssertionStore::add_assertion(const Assertion& a) {
    std::unique_lock lock(mutex_);
    AssertionKey key{a.subject, a.dimension, a.filler};
    assertions_.insert_or_assign(std::move(key), a);
    return ++version_;
}

std::uint64_t AssertionStore::add_signature(const RelationSignature& sig) {
    std::unique_lock lock(mutex_);
    SignatureKey key{relation_key(sig.relation), sig.arg1, sig.arg2};
    signatures_.insert_or_assign(std::move(key), sig);
    return ++version_;
}

Snapshot AssertionStore::snapshot() const {
    std::shared_lock lock(mutex_);
    std::vector<Assertion> assertions;
    assertions.reserve(assertions_.size());
    for (const auto& [key, a] : assertions_) assertions.push_back(a);
    std::vector<RelationSignature> signatures;
    signatures.reserve(signatures_.size());
    for (const auto& [key, s] : signatures_) signatures.push_back(s);
    return Snapshot(std::move(assertions), std::move(signatures), version_);
}

std::size_t AssertionStore::assertion_count() const {
    std::shared_lock lock(mutex_);
    return assertions_.size();
}

std::size_t AssertionStore::signature_count() const {
    std::shared_lock lock(mutex_);
    return signatures_.size();
}

namespace {

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line_no,
                             const std::string& detail) {
    throw Error(ErrorCode::ParseError,
                origin + ":" + std::to_string(line_no) + ": " + detail);
}

double read_weight(const json& record, const std::string& origin, std::size_t line_no) {
    if (!record.contains("weight")) return 1.0;
    const json& w = record.at("weight");
    if (!w.is_number()) parse_fail(origin, line_no, "weight is not a number");
    double value = w.get<double>();
    if (!(value >= 0.0 && value <= 1.0)) {
        parse_fail(origin, line_no,
                   "weight " + std::to_string(value) + " outside [0,1]");
    }
    return value;
}

int read_sense(const json& record, const char* field, const std::string& origin,
               std::size_t line_no) {
    if (!record.contains(field)) return 1;
    const json& s = record.at(field);
    if (!s.is_number_integer() || s.get<int>() < 1) {
        parse_fail(origin, line_no, std::string(field) + " must be a positive integer");
    }
    return s.get<int>();
}

std::string read_string(const json& record, const char* field, const std::string& origin,
                        std::size_t line_no) {
    if (!record.contains(field) || !record.at(field).is_string()) {
        parse_fail(origin, line_no, "missing string field '" + std::string(field) + "'");
    }
    std::string value = record.at(field).get<std::string>();
    if (value.empty()) parse_fail(origin, line_no, "field '" + std::string(field) + "' is empty");
    return value;
}

} // namespace

void parse_jsonl_into(AssertionStore& store, const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;

        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) {
            parse_fail(origin, line_no, "line is not a JSON object");
        }

        try {
            if (record.contains("relation")) {
                std::string relation = read_string(record, "relation", origin, line_no);
                ConceptSense arg1(read_string(record, "arg1", origin, line_no),
                                  read_sense(record, "arg1_sense", origin, line_no));
                ConceptSense arg2(read_string(record, "arg2", origin, line_no),
                                  read_sense(record, "arg2_sense", origin, line_no));
                store.add_signature(RelationSignature(
                    relation, std::move(arg1), std::move(arg2),
                    read_weight(record, origin, line_no)));
            } else if (record.contains("concept")) {
                ConceptSense subject(read_string(record, "concept", origin, line_no),
                                     read_sense(record, "sense", origin, line_no));
                Dimension dim = parse_dimension(read_string(record, "dimension", origin, line_no));
                Source source = Source::Manual;
                if (record.contains("source")) {
                    auto parsed = try_parse_source(record.at("source").get<std::string>());
                    if (!parsed) parse_fail(origin, line_no, "unknown source tag");
                    source = *parsed;
                }
                store.add_assertion(Assertion(
                    std::move(subject), dim, read_string(record, "filler", origin, line_no),
                    read_weight(record, origin, line_no), source));
            } else {
                parse_fail(origin, line_no, "record has neither 'concept' nor 'relation'");
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError) throw;
            parse_fail(origin, line_no, std::string(e.what()));
        }
    }
}

Snapshot load_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    AssertionStore store;
    parse_jsonl_into(store, buffer.str(), path.string());
    return store.snapshot();
}

std::string to_jsonl(const Snapshot& snapshot) {
    std::ostringstream out;
    for (const auto& a : snapshot.assertions()) {
        json record{
            {"concept", a.subject.lemma},
            {"sense", a.subject.sense},
            {"dimension", std::string(to_string(a.dimension))},
            {"filler", a.filler},
            {"weight", a.weight},
            {"source", std::string(to_string(a.source))},
        };
        out << record.dump() << "\n";
    }
    for (const auto& s : snapshot.signatures()) {
        json record{
            {"relation", s.relation},
            {"arg1", s.arg1.lemma},
            {"arg1_sense", s.arg1.sense},
            {"arg2", s.arg2.lemma},
            {"arg2_sense", s.arg2.sense},
            {"weight", s.weight},
        };
        out << record.dump() << "\n";
    }
    return out.str();
}

void save_jsonl(const Snapshot& snapshot, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
    }
    out << to_jsonl(snapshot);
    if (!out) {
        throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
    }
}

} // namespace lexont

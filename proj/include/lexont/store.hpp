#pragma once

#include "lexont/core.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

namespace lexont {

// A (weight, filler) entry on one dimension of a concept's profile. Fillers
// are unique per concept and dimension, so ordering by filler is total.
struct WeightedFiller {
    double weight = 1.0;
    std::string filler;

    friend bool operator<(const WeightedFiller& a, const WeightedFiller& b) {
        return a.filler < b.filler;
    }
    friend bool operator==(const WeightedFiller& a, const WeightedFiller& b) {
        return a.filler == b.filler && a.weight == b.weight;
    }
};

// Type constraint on a domain relation, e.g. WANT: person x entity. The
// weight grades salience; (relation, arg1, arg2) is the identity key and
// re-insertion updates the weight.
struct RelationSignature {
    std::string relation;
    ConceptSense arg1;
    ConceptSense arg2;
    double weight = 1.0;

    RelationSignature(std::string_view relation_name, ConceptSense arg1_type,
                      ConceptSense arg2_type, double weight_value = 1.0);

    auto operator<=>(const RelationSignature&) const = default;
};

// Per-concept view of the store: dimension -> weighted fillers. Dimensions
// with no assertions read as the empty set.
class Profile {
public:
    const std::set<WeightedFiller>& at(Dimension d) const;
    const std::map<Dimension, std::set<WeightedFiller>>& dimensions() const { return by_dimension_; }
    bool empty() const { return by_dimension_.empty(); }
    std::size_t assertion_count() const;

    void insert(Dimension d, WeightedFiller wf) { by_dimension_[d].insert(std::move(wf)); }

private:
    std::map<Dimension, std::set<WeightedFiller>> by_dimension_;
};

// Immutable view of a store at one version. All downstream algorithms
// consume snapshots, never the live store.
class Snapshot {
public:
    Snapshot() = default;
    Snapshot(std::vector<Assertion> assertions, std::vector<RelationSignature> signatures,
             std::uint64_t version);

    const std::vector<Assertion>& assertions() const { return assertions_; }
    const std::vector<RelationSignature>& signatures() const { return signatures_; }
    std::uint64_t version() const { return version_; }
    bool empty() const { return assertions_.empty(); }

    // All senses the filler applies to, restricted to one dimension or, with
    // nullopt, across all of them.
    std::set<ConceptSense> extension(std::string_view filler,
                                     std::optional<Dimension> dimension = std::nullopt) const;

    Profile profile(const ConceptSense& sense) const;

    // Distinct senses mentioned by any assertion, sorted.
    std::vector<ConceptSense> senses() const;

    // Signatures whose relation name matches case-insensitively, sorted.
    std::vector<RelationSignature> signatures_for(std::string_view relation) const;

    friend bool same_contents(const Snapshot& a, const Snapshot& b);

private:
    std::vector<Assertion> assertions_;            // sorted by identity key
    std::vector<RelationSignature> signatures_;    // sorted
    std::uint64_t version_ = 0;
};

// Mutable assertion collection. Single writer, many readers: mutations are
// serialized, snapshot() can run concurrently with them and returns a value
// the caller owns outright.
class AssertionStore {
public:
    AssertionStore() = default;

    // Upsert by identity key; returns the new store version.
    std::uint64_t add_assertion(const Assertion& a);
    std::uint64_t add_signature(const RelationSignature& sig);

    Snapshot snapshot() const;

    std::size_t assertion_count() const;
    std::size_t signature_count() const;

private:
    struct AssertionKey {
        ConceptSense subject;
        Dimension dimension;
        std::string filler;
        auto operator<=>(const AssertionKey&) const = default;
    };
    struct SignatureKey {
        std::string relation; // uppercased for matching
        ConceptSense arg1;
        ConceptSense arg2;
        auto operator<=>(const SignatureKey&) const = default;
    };

    mutable std::shared_mutex mutex_;
    std::map<AssertionKey, Assertion> assertions_;
    std::map<SignatureKey, RelationSignature> signatures_;
    std::uint64_t version_ = 0;
};

// JSONL persistence. One record per line; assertion records carry "concept",
// signature records carry "relation"; unknown keys are ignored. See README
// for the exact field set and defaults.
Snapshot load_jsonl(const std::filesystem::path& path);
void save_jsonl(const Snapshot& snapshot, const std::filesystem::path& path);

// Parses records from already-loaded text; `origin` names the source in
// errors. Used by load_jsonl and by the CLI ingest path.
void parse_jsonl_into(AssertionStore& store, const std::string& text, const std::string& origin);

std::string to_jsonl(const Snapshot& snapshot);

// Case normalization used for relation-name matching (WANT == want).
std::string relation_key(std::string_view relation);

} // namespace lexont

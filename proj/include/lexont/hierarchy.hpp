#pragma once

#include "lexont/core.hpp"
#include "lexont/store.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lexont {

// One applicability feature: a filler in a specific dimension role. Extents
// are computed per feature, so "what x can do" and "what can be done to x"
// stay distinct even when the verb is the same.
struct Feature {
    Dimension dimension;
    std::string filler;

    auto operator<=>(const Feature&) const = default;
    std::string str() const; // "ObjectOf:assemble"
};

// A node of the induced type graph: one distinct feature extent, carrying
// every feature whose extent contains it (the full intent) and cover edges
// to its parents after transitive reduction.
struct TypeNode {
    std::vector<ConceptSense> extent;     // sorted
    std::vector<Feature> intent;          // sorted, inherited features included
    std::string label;
    std::vector<std::size_t> parents;     // cover edges, child -> parent
    std::vector<std::size_t> children;
};

// Subsumption DAG over merged extent-equivalence classes. Built by induce();
// immutable afterwards, so queries are freely parallelizable.
class TypeGraph {
public:
    const std::vector<TypeNode>& nodes() const { return nodes_; }
    bool empty() const { return nodes_.empty(); }

    bool contains(const ConceptSense& c) const;

    // Most specific node for the sense; UnknownSense if it occurs nowhere.
    std::size_t node_of(const ConceptSense& c) const;

    // True iff every type b belongs to is reachable from a's types.
    bool is_subtype(const ConceptSense& a, const ConceptSense& b) const;

    // Minimal common ancestors of the given senses; empty result means the
    // senses share no node at all (forest case).
    std::vector<std::size_t> least_common_ancestors(const std::vector<ConceptSense>& senses) const;

    // Node-to-node reachability over the induced edges, reflexive.
    bool reachable(std::size_t from, std::size_t to) const;

    std::string to_dot() const;

private:
    friend TypeGraph induce(const Snapshot& snapshot, double theta);

    std::vector<TypeNode> nodes_;
    std::vector<std::vector<bool>> reach_;                 // reach_[a][b]: a -> b, reflexive
    std::map<ConceptSense, std::vector<std::size_t>> membership_; // nodes whose extent holds the sense
    std::map<ConceptSense, std::vector<std::size_t>> minimal_;    // minimal elements of membership

    const std::vector<std::size_t>& membership_of(const ConceptSense& c) const;
    const std::vector<std::size_t>& minimal_of(const ConceptSense& c) const;
};

// Induces the subsumption graph from the snapshot's feature extents. Nodes
// are distinct extents (features with equal extents merge); an edge a -> b
// means extent(a) sits inside extent(b), where theta > 0 tolerates a
// fraction of stray members: |extent(a) \ extent(b)| <= theta * |extent(a)|.
// Mutually tolerant pairs get no edge, which keeps the result acyclic.
// Throws EmptySnapshot when there are no assertions.
TypeGraph induce(const Snapshot& snapshot, double theta = 0.0);

std::string export_dot(const TypeGraph& graph);

} // namespace lexont

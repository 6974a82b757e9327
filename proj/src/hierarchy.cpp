#include "lexont/hierarchy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lexont {

namespace {

// Approximate containment: extent(a) fits inside extent(b) up to a theta
// fraction of stray members. Exact containment when theta is zero.
bool fits_within(const std::vector<ConceptSense>& a, const std::vector<ConceptSense>& b,
                 double theta) {
    std::size_t stray = 0;
    auto it = b.begin();
    for (const auto& c : a) {
        it = std::lower_bound(it, b.end(), c);
        if (it == b.end() || *it != c) ++stray;
    }
    return static_cast<double>(stray) <= theta * static_cast<double>(a.size()) + 1e-9;
}

bool superset_of(const std::set<ConceptSense>& big, const std::vector<ConceptSense>& small) {
    for (const auto& c : small) {
        if (!big.count(c)) return false;
    }
    return true;
}

} // namespace

std::string Feature::str() const {
    std::string out(to_string(dimension));
    out += ':';
    out += filler;
    return out;
}

bool TypeGraph::contains(const ConceptSense& c) const { return membership_.count(c) > 0; }

const std::vector<std::size_t>& TypeGraph::membership_of(const ConceptSense& c) const {
    auto it = membership_.find(c);
    if (it == membership_.end()) {
        throw Error(ErrorCode::UnknownSense, "sense not in hierarchy: " + c.str());
    }
    return it->second;
}

const std::vector<std::size_t>& TypeGraph::minimal_of(const ConceptSense& c) const {
    auto it = minimal_.find(c);
    if (it == minimal_.end()) {
        throw Error(ErrorCode::UnknownSense, "sense not in hierarchy: " + c.str());
    }
    return it->second;
}

std::size_t TypeGraph::node_of(const ConceptSense& c) const {
    const auto& mins = minimal_of(c);
    std::size_t best = mins.front();
    for (std::size_t n : mins) {
        const auto& a = nodes_[n].extent;
        const auto& b = nodes_[best].extent;
        if (a.size() != b.size() ? a.size() < b.size() : a < b) best = n;
    }
    return best;
}

bool TypeGraph::is_subtype(const ConceptSense& a, const ConceptSense& b) const {
    const auto& mins_a = minimal_of(a);
    const auto& mins_b = minimal_of(b);
    for (std::size_t mb : mins_b) {
        bool covered = false;
        for (std::size_t ma : mins_a) {
            if (reach_[ma][mb]) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

std::vector<std::size_t>
TypeGraph::least_common_ancestors(const std::vector<ConceptSense>& senses) const {
    if (senses.empty()) {
        throw Error(ErrorCode::InvalidArgument, "least_common_ancestors needs at least one sense");
    }
    std::vector<bool> common(nodes_.size(), true);
    for (const auto& c : senses) {
        const auto& mins = minimal_of(c);
        std::vector<bool> anc(nodes_.size(), false);
        for (std::size_t m : mins) {
            for (std::size_t n = 0; n < nodes_.size(); ++n) {
                if (reach_[m][n]) anc[n] = true;
            }
        }
        for (std::size_t n = 0; n < nodes_.size(); ++n) {
            if (!anc[n]) common[n] = false;
        }
    }
    std::vector<std::size_t> result;
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        if (!common[n]) continue;
        bool minimal = true;
        for (std::size_t m = 0; m < nodes_.size(); ++m) {
            if (m != n && common[m] && reach_[m][n]) {
                minimal = false;
                break;
            }
        }
        if (minimal) result.push_back(n);
    }
    return result;
}

bool TypeGraph::reachable(std::size_t from, std::size_t to) const {
    if (from >= nodes_.size() || to >= nodes_.size()) {
        throw Error(ErrorCode::InvalidArgument, "node index out of range");
    }
    return reach_[from][to];
}

std::string TypeGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph G {\n";
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        out << "  n" << n << " [label=\"" << nodes_[n].label << "\"];\n";
    }
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
        for (std::size_t p : nodes_[n].parents) {
            out << "  n" << n << " -> n" << p << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const TypeGraph& graph) { return graph.to_dot(); }

TypeGraph induce(const Snapshot& snapshot, double theta) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument,
                    "theta must lie in [0,1], got " + std::to_string(theta));
    }
    if (snapshot.assertions().empty()) {
        throw Error(ErrorCode::EmptySnapshot, "cannot induce a hierarchy from an empty store");
    }

    std::map<Feature, std::set<ConceptSense>> feature_extents;
    for (const auto& a : snapshot.assertions()) {
        feature_extents[{a.dimension, a.filler}].insert(a.subject);
    }

    // Features with identical extents collapse into one node.
    std::map<std::vector<ConceptSense>, std::vector<Feature>> by_extent;
    for (const auto& [feature, extent] : feature_extents) {
        by_extent[std::vector<ConceptSense>(extent.begin(), extent.end())].push_back(feature);
    }

    TypeGraph graph;
    for (const auto& [extent, features] : by_extent) {
        TypeNode node;
        node.extent = extent;
        graph.nodes_.push_back(std::move(node));
    }
    // Canonical order: extent size descending, then extent lexicographic.
    // by_extent already yields lexicographic order, so the sort is stable.
    std::stable_sort(graph.nodes_.begin(), graph.nodes_.end(),
                     [](const TypeNode& a, const TypeNode& b) {
                         return a.extent.size() > b.extent.size();
                     });

    const std::size_t count = graph.nodes_.size();

    std::vector<std::vector<std::size_t>> edges(count); // child index -> parents
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            if (a == b) continue;
            const auto& ea = graph.nodes_[a].extent;
            const auto& eb = graph.nodes_[b].extent;
            // A one-way tolerant fit makes an edge; mutual tolerance would
            // make the pair indistinguishable at this theta, so no edge.
            if (fits_within(ea, eb, theta) && !fits_within(eb, ea, theta)) {
                edges[a].push_back(b);
            }
        }
    }

    // An edge points at a strictly larger extent, hence a strictly smaller
    // canonical index, so one ascending sweep closes reachability.
    graph.reach_.assign(count, std::vector<bool>(count, false));
    for (std::size_t a = 0; a < count; ++a) {
        graph.reach_[a][a] = true;
        for (std::size_t b : edges[a]) {
            for (std::size_t t = 0; t < count; ++t) {
                if (graph.reach_[b][t]) graph.reach_[a][t] = true;
            }
        }
    }

    // Transitive reduction, unique for a DAG: drop any edge that a longer
    // path re-derives.
    for (std::size_t a = 0; a < count; ++a) {
        std::vector<std::size_t> kept;
        for (std::size_t b : edges[a]) {
            bool redundant = false;
            for (std::size_t c : edges[a]) {
                if (c != b && graph.reach_[c][b]) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(b);
        }
        std::sort(kept.begin(), kept.end());
        graph.nodes_[a].parents = kept;
        for (std::size_t b : kept) graph.nodes_[b].children.push_back(a);
    }
    for (auto& node : graph.nodes_) std::sort(node.children.begin(), node.children.end());

    // Intent is exact: every feature whose extent covers all of the node's
    // members, inherited ones included. Unaffected by theta.
    for (std::size_t n = 0; n < count; ++n) {
        for (const auto& [feature, extent] : feature_extents) {
            if (extent.size() < graph.nodes_[n].extent.size()) continue;
            if (superset_of(extent, graph.nodes_[n].extent)) {
                graph.nodes_[n].intent.push_back(feature);
            }
        }
        std::sort(graph.nodes_[n].intent.begin(), graph.nodes_[n].intent.end());
    }

    for (std::size_t n = 0; n < count; ++n) {
        for (const auto& c : graph.nodes_[n].extent) graph.membership_[c].push_back(n);
    }
    for (auto& [sense, member_nodes] : graph.membership_) {
        std::vector<std::size_t> mins;
        for (std::size_t m : member_nodes) {
            bool has_lower = false;
            for (std::size_t other : member_nodes) {
                if (other != m && graph.reach_[other][m]) {
                    has_lower = true;
                    break;
                }
            }
            if (!has_lower) mins.push_back(m);
        }
        graph.minimal_[sense] = std::move(mins);
    }

    // Labeling. A unique top member of the extent names the node; otherwise
    // a single non-inherited feature does; otherwise fall back to the
    // lexicographically first top member.
    auto strictly_below = [&](const ConceptSense& x, const ConceptSense& y) {
        return graph.is_subtype(x, y) && !graph.is_subtype(y, x);
    };
    for (std::size_t n = 0; n < count; ++n) {
        TypeNode& node = graph.nodes_[n];
        std::vector<ConceptSense> maximal;
        for (const auto& c : node.extent) {
            bool below_other = false;
            for (const auto& d : node.extent) {
                if (!(d == c) && strictly_below(c, d)) {
                    below_other = true;
                    break;
                }
            }
            if (!below_other) maximal.push_back(c);
        }
        if (maximal.size() == 1) {
            node.label = maximal.front().lemma;
            continue;
        }
        std::set<Feature> inherited;
        for (std::size_t p : node.parents) {
            inherited.insert(graph.nodes_[p].intent.begin(), graph.nodes_[p].intent.end());
        }
        std::vector<Feature> proper;
        for (const auto& f : node.intent) {
            if (!inherited.count(f)) proper.push_back(f);
        }
        if (proper.size() == 1) {
            node.label = proper.front().filler;
        } else {
            std::string best = maximal.front().lemma;
            for (const auto& c : maximal) best = std::min(best, c.lemma);
            node.label = best;
        }
    }

    return graph;
}

} // namespace lexont

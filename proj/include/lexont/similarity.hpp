#pragma once

#include "lexont/core.hpp"
#include "lexont/store.hpp"

#include <map>
#include <optional>
#include <vector>

namespace lexont {

// One aligned filler pair ((w1, p1), (w2, p2)). Construction via
// feature_set() always yields p1 == p2; the mismatched case exists only for
// direct f_similarity calls.
struct FeaturePair {
    double w1 = 0.0;
    std::string p1;
    double w2 = 0.0;
    std::string p2;
};

struct FeatureSet {
    Dimension dimension = Dimension::HasProp;
    std::vector<FeaturePair> pairs; // sorted by filler
};

// Matched fillers of the two profiles along one dimension. Unshared fillers
// contribute nothing, by definition.
FeatureSet feature_set(const ConceptSense& c1, const ConceptSense& c2, Dimension d,
                       const Snapshot& s);

// 1 - |w1 - w2| when the fillers agree, else 0.
double f_similarity(const FeaturePair& pair);

// Mean of f_similarity over the feature set; an empty set scores 0 (no
// evidence of similarity).
double d_similarity(const ConceptSense& c1, const ConceptSense& c2, Dimension d,
                    const Snapshot& s);

// Mean of d_similarity over dims; uniform by default, or weighted by
// dim_weights (which must cover every listed dimension, be non-negative,
// and have a positive sum). Throws EmptyDimensionList on an empty dims.
double c_similarity(const ConceptSense& c1, const ConceptSense& c2,
                    const std::vector<Dimension>& dims,
                    const std::optional<std::map<Dimension, double>>& dim_weights,
                    const Snapshot& s);

double c_similarity(const ConceptSense& c1, const ConceptSense& c2,
                    const std::vector<Dimension>& dims, const Snapshot& s);

} // namespace lexont

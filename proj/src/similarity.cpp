#include "lexont/similarity.hpp"

#include <cmath>

namespace lexont {

FeatureSet feature_set(const ConceptSense& c1, const ConceptSense& c2, Dimension d,
                       const Snapshot& s) {
    FeatureSet fs;
    fs.dimension = d;
    const Profile p1 = s.profile(c1);
    const Profile p2 = s.profile(c2);
    const auto& left = p1.at(d);
    const auto& right = p2.at(d);
    auto it = right.begin();
    for (const auto& wf : left) {
        while (it != right.end() && it->filler < wf.filler) ++it;
        if (it != right.end() && it->filler == wf.filler) {
            fs.pairs.push_back({wf.weight, wf.filler, it->weight, it->filler});
        }
    }
    return fs;
}

double f_similarity(const FeaturePair& pair) {
    if (pair.p1 != pair.p2) return 0.0;
    return 1.0 - std::fabs(pair.w1 - pair.w2);
}

double d_similarity(const ConceptSense& c1, const ConceptSense& c2, Dimension d,
                    const Snapshot& s) {
    const FeatureSet fs = feature_set(c1, c2, d, s);
    if (fs.pairs.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& pair : fs.pairs) sum += f_similarity(pair);
    return sum / static_cast<double>(fs.pairs.size());
}

double c_similarity(const ConceptSense& c1, const ConceptSense& c2,
                    const std::vector<Dimension>& dims,
                    const std::optional<std::map<Dimension, double>>& dim_weights,
                    const Snapshot& s) {
    if (dims.empty()) {
        throw Error(ErrorCode::EmptyDimensionList, "c_similarity needs at least one dimension");
    }
    if (!dim_weights) {
        double sum = 0.0;
        for (Dimension d : dims) sum += d_similarity(c1, c2, d, s);
        return sum / static_cast<double>(dims.size());
    }
    double total = 0.0;
    double weight_sum = 0.0;
    for (Dimension d : dims) {
        auto it = dim_weights->find(d);
        if (it == dim_weights->end()) {
            throw Error(ErrorCode::InvalidArgument,
                        "missing dimension weight for " + std::string(to_string(d)));
        }
        if (it->second < 0.0) {
            throw Error(ErrorCode::InvalidArgument,
                        "negative dimension weight for " + std::string(to_string(d)));
        }
        total += it->second * d_similarity(c1, c2, d, s);
        weight_sum += it->second;
    }
    if (weight_sum <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "dimension weights sum to zero");
    }
    return total / weight_sum;
}

double c_similarity(const ConceptSense& c1, const ConceptSense& c2,
                    const std::vector<Dimension>& dims, const Snapshot& s) {
    return c_similarity(c1, c2, dims, std::nullopt, s);
}

} // namespace lexont

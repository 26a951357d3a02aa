#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzydoc/features.hpp"
#include "fuzzydoc/fcm.hpp"

namespace fuzzydoc {

/// Injective cluster -> label map with the distance of each center to the
/// profile it was matched with.
struct ClusterLabeling {
    std::vector<std::string> labels;  // labels[j] names cluster j
    std::vector<double> scores;

    std::size_t clusters() const { return labels.size(); }
    /// Cluster index carrying `label`; throws std::invalid_argument if none.
    std::size_t cluster_of(std::string_view label) const;
};

enum class Strength { strong, moderate, ambiguous };

std::string_view to_string(Strength s);

struct DocumentMembership {
    std::string doc_id;
    std::map<std::string, double> degrees;  // label -> membership
    std::string top_label;
    double top_degree = 0.0;
    Strength strength = Strength::ambiguous;
};

using MembershipReport = std::vector<DocumentMembership>;

struct InterpretationParams {
    double strong_threshold = 0.85;
    double ambiguity_margin = 0.1;
};

/// The profile restricted to the feature dimensions, absent terms as 0.
std::vector<double> profile_vector(const LabeledProfile& profile, const FeatureSet& features);

/// Tries every injective assignment of profile labels to clusters and keeps
/// the one with the smallest summed center-to-profile Euclidean distance.
/// Equal totals resolve to the lexicographically smallest label sequence
/// (cluster 1's label compared first). Throws DataError("insufficient
/// profiles") when there are fewer profiles than clusters.
ClusterLabeling label_clusters(const Centers& centers, std::span<const LabeledProfile> profiles,
                               const FeatureSet& features);

/// Strong when the top degree reaches strong_threshold, otherwise ambiguous
/// when max - min falls below ambiguity_margin, otherwise moderate.
MembershipReport classify_strength(const PartitionMatrix& u, std::span<const std::string> doc_ids,
                                   const ClusterLabeling& labeling, const InterpretationParams& params = {});

/// Documents by descending membership in the cluster carrying `label`, ties
/// by doc id.
std::vector<std::pair<std::string, double>> rank_documents(const PartitionMatrix& u,
                                                           std::span<const std::string> doc_ids,
                                                           const ClusterLabeling& labeling, std::string_view label);

}  // namespace fuzzydoc

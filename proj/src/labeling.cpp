#include "fuzzydoc/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fuzzydoc/error.hpp"

namespace fuzzydoc {

std::size_t ClusterLabeling::cluster_of(std::string_view label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::invalid_argument("unknown label: " + std::string(label));
    return static_cast<std::size_t>(it - labels.begin());
}

std::string_view to_string(Strength s) {
    switch (s) {
    case Strength::strong: return "strong";
    case Strength::moderate: return "moderate";
    case Strength::ambiguous: return "ambiguous";
    }
    return "unknown";
}

std::vector<double> profile_vector(const LabeledProfile& profile, const FeatureSet& features) {
    std::vector<double> v;
    v.reserve(features.size());
    for (const auto& term : features.terms()) v.push_back(profile.at(term));
    return v;
}

namespace {

double euclidean(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) sum += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(sum);
}

struct AssignmentSearch {
    const Matrix& cost;  // clusters x profiles, profiles in label order
    std::vector<std::size_t> current;
    std::vector<bool> used;
    std::vector<std::size_t> best;
    double best_total = std::numeric_limits<double>::infinity();

    // Profiles are visited in label order and only strict improvements are
    // kept, so among equal totals the first (lexicographically smallest)
    // label sequence wins.
    void search(std::size_t cluster) {
        if (cluster == cost.rows()) {
            double total = 0.0;
            for (std::size_t j = 0; j < current.size(); ++j) total += cost(j, current[j]);
            if (total < best_total) {
                best_total = total;
                best = current;
            }
            return;
        }
        for (std::size_t p = 0; p < cost.cols(); ++p) {
            if (used[p]) continue;
            used[p] = true;
            current.push_back(p);
            search(cluster + 1);
            current.pop_back();
            used[p] = false;
        }
    }
};

}  // namespace

ClusterLabeling label_clusters(const Centers& centers, std::span<const LabeledProfile> profiles,
                               const FeatureSet& features) {
    const std::size_t c = centers.clusters();
    if (c == 0) throw std::invalid_argument("no clusters to label");
    if (centers.v.cols() != features.size()) throw std::invalid_argument("center and feature dimensions differ");
    if (profiles.size() < c) throw DataError("insufficient profiles");

    std::vector<const LabeledProfile*> sorted;
    for (const auto& p : profiles) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->label < b->label; });
    for (std::size_t p = 1; p < sorted.size(); ++p) {
        if (sorted[p]->label == sorted[p - 1]->label) {
            throw std::invalid_argument("duplicate profile label: " + sorted[p]->label);
        }
    }

    Matrix cost(c, sorted.size());
    for (std::size_t p = 0; p < sorted.size(); ++p) {
        auto target = profile_vector(*sorted[p], features);
        for (std::size_t j = 0; j < c; ++j) cost(j, p) = euclidean(centers.center(j), target);
    }

    AssignmentSearch search{cost, {}, std::vector<bool>(sorted.size(), false), {}};
    search.search(0);

    ClusterLabeling out;
    for (std::size_t j = 0; j < c; ++j) {
        out.labels.push_back(sorted[search.best[j]]->label);
        out.scores.push_back(cost(j, search.best[j]));
    }
    return out;
}

MembershipReport classify_strength(const PartitionMatrix& u, std::span<const std::string> doc_ids,
                                   const ClusterLabeling& labeling, const InterpretationParams& params) {
    const std::size_t c = u.clusters();
    if (labeling.clusters() != c) throw std::invalid_argument("labeling does not cover every cluster");
    if (doc_ids.size() != u.documents()) throw std::invalid_argument("doc id count does not match partition");
    if (!(params.strong_threshold > 0.0 && params.strong_threshold < 1.0)) {
        throw std::invalid_argument("strong_threshold must lie in (0, 1)");
    }
    if (!(params.ambiguity_margin > 0.0 && params.ambiguity_margin < 1.0)) {
        throw std::invalid_argument("ambiguity_margin must lie in (0, 1)");
    }
    if (c > 1 && !(params.strong_threshold > 1.0 / static_cast<double>(c))) {
        throw std::invalid_argument("strong_threshold must exceed 1/c");
    }

    MembershipReport report;
    report.reserve(u.documents());
    for (std::size_t i = 0; i < u.documents(); ++i) {
        DocumentMembership doc;
        doc.doc_id = doc_ids[i];
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t j = 0; j < c; ++j) {
            double degree = u(j, i);
            doc.degrees.emplace(labeling.labels[j], degree);
            lo = std::min(lo, degree);
            hi = std::max(hi, degree);
        }
        // Ties go to the smallest label, which keeps the report independent
        // of cluster numbering.
        for (const auto& [label, degree] : doc.degrees) {
            if (doc.top_label.empty() || degree > doc.top_degree) {
                doc.top_label = label;
                doc.top_degree = degree;
            }
        }
        if (hi >= params.strong_threshold) doc.strength = Strength::strong;
        else if (hi - lo < params.ambiguity_margin) doc.strength = Strength::ambiguous;
        else doc.strength = Strength::moderate;
        report.push_back(std::move(doc));
    }
    return report;
}

std::vector<std::pair<std::string, double>> rank_documents(const PartitionMatrix& u,
                                                           std::span<const std::string> doc_ids,
                                                           const ClusterLabeling& labeling, std::string_view label) {
    if (doc_ids.size() != u.documents()) throw std::invalid_argument("doc id count does not match partition");
    const std::size_t j = labeling.cluster_of(label);
    std::vector<std::pair<std::string, double>> ranked;
    ranked.reserve(u.documents());
    for (std::size_t i = 0; i < u.documents(); ++i) ranked.emplace_back(doc_ids[i], u(j, i));
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

}  // namespace fuzzydoc

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fuzzydoc/preprocess.hpp"

namespace fuzzydoc {

/// Word frequencies are expressed per 10000 terms.
inline constexpr double kWfScale = 10000.0;

struct BagOfWords {
    std::string doc_id;
    std::map<std::string, std::size_t, std::less<>> counts;
    std::size_t total = 0;
};

/// Ordered, duplicate-free list of terms. Position j is vector dimension j.
class FeatureSet {
public:
    FeatureSet() = default;
    /// Throws std::invalid_argument on empty or duplicate terms.
    explicit FeatureSet(std::vector<std::string> terms);

    const std::vector<std::string>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const std::string& operator[](std::size_t j) const { return terms_[j]; }

    friend bool operator==(const FeatureSet&, const FeatureSet&) = default;

private:
    std::vector<std::string> terms_;
};

struct LabeledProfile {
    std::string label;
    std::map<std::string, double, std::less<>> wf;

    /// WF of `term`, zero when absent.
    double at(const std::string& term) const;
};

struct DocumentVector {
    std::string doc_id;
    std::vector<double> values;
};

struct SelectionParams {
    std::size_t top_k = 50;
    double min_ratio = 2.0;
    double min_wf = 5.0;
};

/// One candidate term with its per-label WF and discrimination ratio.
struct FeatureScore {
    std::string term;
    std::vector<double> wf;  // aligned with the profiles passed in
    double ratio = 0.0;
    bool selected = false;
};

BagOfWords count_terms(const TermList& terms);

/// (count / total) * 10000. Throws DataError("empty document") if total is 0.
double word_frequency(std::size_t count, std::size_t total);

/// Pools all documents of one label: WF of t = total occurrences of t over
/// total terms. Throws DataError("empty corpus") when every document is empty.
LabeledProfile build_profile(std::string label, std::span<const TermList> docs);

/// Discrimination ratio max_wf / (min_wf + 1) over the given per-label WFs.
double discrimination_ratio(std::span<const double> wf);

/// Scores every term seen in any profile, sorted by descending ratio with
/// lexicographic tie-break. `selected` marks the terms select_features keeps.
std::vector<FeatureScore> score_features(std::span<const LabeledProfile> profiles, const SelectionParams& params);

/// Keeps terms with ratio >= min_ratio and max-label WF >= min_wf, the top_k of
/// them by descending ratio. Throws DataError("no discriminative features")
/// when none qualify.
FeatureSet select_features(std::span<const LabeledProfile> profiles, const SelectionParams& params);

/// WF of each feature in the document. Throws DataError("empty document") if
/// the bag is empty.
DocumentVector vectorize(const BagOfWords& bow, const FeatureSet& features);

}  // namespace fuzzydoc

#include "fuzzydoc/features.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fuzzydoc/error.hpp"

namespace fuzzydoc {

FeatureSet::FeatureSet(std::vector<std::string> terms) : terms_(std::move(terms)) {
    std::set<std::string_view> seen;
    for (const auto& t : terms_) {
        if (t.empty()) throw std::invalid_argument("feature set contains an empty term");
        if (!seen.insert(t).second) throw std::invalid_argument("duplicate feature: " + t);
    }
}

double LabeledProfile::at(const std::string& term) const {
    auto it = wf.find(term);
    return it == wf.end() ? 0.0 : it->second;
}

BagOfWords count_terms(const TermList& terms) {
    BagOfWords bow;
    bow.doc_id = terms.doc_id;
    for (const auto& t : terms.terms) ++bow.counts[t];
    bow.total = terms.terms.size();
    return bow;
}

double word_frequency(std::size_t count, std::size_t total) {
    if (total == 0) throw DataError("empty document");
    if (count > total) throw std::invalid_argument("word count exceeds document length");
    // Scaling first keeps whole-number frequencies exact.
    return static_cast<double>(count) * kWfScale / static_cast<double>(total);
}

LabeledProfile build_profile(std::string label, std::span<const TermList> docs) {
    std::map<std::string, std::size_t, std::less<>> pooled;
    std::size_t total = 0;
    for (const auto& doc : docs) {
        for (const auto& t : doc.terms) ++pooled[t];
        total += doc.terms.size();
    }
    if (total == 0) throw DataError("empty corpus");

    LabeledProfile profile{std::move(label), {}};
    for (const auto& [term, count] : pooled) profile.wf.emplace(term, word_frequency(count, total));
    return profile;
}

double discrimination_ratio(std::span<const double> wf) {
    if (wf.empty()) return 0.0;
    auto [lo, hi] = std::minmax_element(wf.begin(), wf.end());
    return *hi / (*lo + 1.0);
}

namespace {

void check_selection_inputs(std::span<const LabeledProfile> profiles, const SelectionParams& params) {
    if (profiles.size() < 2) throw std::invalid_argument("feature selection needs at least two labeled profiles");
    if (params.top_k == 0) throw std::invalid_argument("top_k must be positive");
    if (!(params.min_ratio >= 1.0)) throw std::invalid_argument("min_ratio must be >= 1");
    if (!(params.min_wf >= 0.0)) throw std::invalid_argument("min_wf must be >= 0");
    std::set<std::string_view> labels;
    for (const auto& p : profiles) {
        if (!labels.insert(p.label).second) throw std::invalid_argument("duplicate profile label: " + p.label);
    }
}

}  // namespace

std::vector<FeatureScore> score_features(std::span<const LabeledProfile> profiles, const SelectionParams& params) {
    check_selection_inputs(profiles, params);

    std::set<std::string_view> universe;
    for (const auto& p : profiles) {
        for (const auto& entry : p.wf) universe.insert(entry.first);
    }

    std::vector<FeatureScore> scores;
    scores.reserve(universe.size());
    for (std::string_view term : universe) {
        FeatureScore s;
        s.term = std::string(term);
        s.wf.reserve(profiles.size());
        for (const auto& p : profiles) s.wf.push_back(p.at(s.term));
        s.ratio = discrimination_ratio(s.wf);
        scores.push_back(std::move(s));
    }

    // Universe is already in lexicographic order, so a stable sort keeps it
    // as the tie-break.
    std::stable_sort(scores.begin(), scores.end(),
                     [](const FeatureScore& a, const FeatureScore& b) { return a.ratio > b.ratio; });

    std::size_t kept = 0;
    for (auto& s : scores) {
        double peak = *std::max_element(s.wf.begin(), s.wf.end());
        if (kept < params.top_k && s.ratio >= params.min_ratio && peak >= params.min_wf) {
            s.selected = true;
            ++kept;
        }
    }
    return scores;
}

FeatureSet select_features(std::span<const LabeledProfile> profiles, const SelectionParams& params) {
    std::vector<std::string> terms;
    for (auto& s : score_features(profiles, params)) {
        if (s.selected) terms.push_back(std::move(s.term));
    }
    if (terms.empty()) throw DataError("no discriminative features");
    return FeatureSet(std::move(terms));
}

DocumentVector vectorize(const BagOfWords& bow, const FeatureSet& features) {
    if (bow.total == 0) throw DataError("empty document");
    DocumentVector v{bow.doc_id, {}};
    v.values.reserve(features.size());
    for (const auto& term : features.terms()) {
        auto it = bow.counts.find(term);
        v.values.push_back(word_frequency(it == bow.counts.end() ? 0 : it->second, bow.total));
    }
    return v;
}

}  // namespace fuzzydoc

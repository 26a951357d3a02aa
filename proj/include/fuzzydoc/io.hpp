#pragma once

// File formats. All JSON is UTF-8 with LF line endings and doubles written in
// shortest round-trip form, so identical values give byte-identical files.
//
//   feature file  ["democracy", "stadium", ...]
//   profile file  {"label": "sports", "wf": {"ball": 501.6553, ...}}
//   result file   {"doc_ids", "features", "memberships" (c x n),
//                  "centers" (c x m), "iterations", "converged",
//                  "objective_history"}
//   report file   [{"doc_id", "labels": {label: degree}, "top_label",
//                   "strength"}, ...]
//   init file     c x n array of arrays, or {"memberships": [[...], ...]}
//
// Readers throw std::runtime_error on I/O failures and malformed content.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fuzzydoc/fcm.hpp"
#include "fuzzydoc/features.hpp"
#include "fuzzydoc/labeling.hpp"
#include "fuzzydoc/matrix.hpp"
#include "fuzzydoc/preprocess.hpp"

namespace fuzzydoc {

struct ClusteringResult {
    std::vector<std::string> doc_ids;
    FeatureSet features;
    Matrix memberships;  // c x n
    Matrix centers;      // c x m
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> objective_history;

    static ClusteringResult from(const FeatureMatrix& x, const FeatureSet& features, const FcmResult& fcm);
};

void write_feature_set(std::ostream& out, const FeatureSet& features);
FeatureSet read_feature_set(std::istream& in);

void write_profile(std::ostream& out, const LabeledProfile& profile);
LabeledProfile read_profile(std::istream& in);

void write_result(std::ostream& out, const ClusteringResult& result);
ClusteringResult read_result(std::istream& in);

void write_report(std::ostream& out, const MembershipReport& report);
MembershipReport read_report(std::istream& in);

Matrix read_init_matrix(std::istream& in);

/// One JSON object for a --trace line: iteration, memberships, centers,
/// objective and max_change. No trailing newline.
std::string trace_line(const IterationState& state);

/// Regular files directly inside `dir`, sorted by filename; doc id = filename.
std::vector<RawDocument> read_corpus(const std::filesystem::path& dir);

std::string read_text_file(const std::filesystem::path& path);
/// Writes via a temporary sibling and rename, so readers never see a
/// half-written file.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace fuzzydoc

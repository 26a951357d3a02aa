#include "fuzzydoc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fuzzydoc {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse(std::istream& in, const char* what) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("malformed ") + what + ": " + e.what());
    }
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    return rows;
}

Matrix matrix_from(const json& j, const char* what) {
    if (!j.is_array()) throw std::runtime_error(std::string(what) + " must be an array of rows");
    try {
        return Matrix::from_rows(j.get<std::vector<std::vector<double>>>());
    } catch (const json::exception&) {
        throw std::runtime_error(std::string(what) + " must contain only numbers");
    } catch (const std::invalid_argument&) {
        throw std::runtime_error(std::string(what) + " has rows of different lengths");
    }
}

template <typename T>
T field(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw std::runtime_error(std::string(what) + " lacks \"" + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string(what) + " has a bad \"" + key + "\": " + e.what());
    }
}

}  // namespace

ClusteringResult ClusteringResult::from(const FeatureMatrix& x, const FeatureSet& features, const FcmResult& fcm) {
    return ClusteringResult{x.doc_ids(),  features,      fcm.partition.matrix(), fcm.centers.v,
                            fcm.iterations, fcm.converged, fcm.objective_history};
}

void write_feature_set(std::ostream& out, const FeatureSet& features) {
    emit(out, ordered_json(features.terms()));
}

FeatureSet read_feature_set(std::istream& in) {
    json j = parse(in, "feature file");
    if (!j.is_array()) throw std::runtime_error("feature file must be a JSON array of strings");
    try {
        return FeatureSet(j.get<std::vector<std::string>>());
    } catch (const json::exception&) {
        throw std::runtime_error("feature file must be a JSON array of strings");
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("feature file: ") + e.what());
    }
}

void write_profile(std::ostream& out, const LabeledProfile& profile) {
    ordered_json wf = ordered_json::object();
    for (const auto& [term, value] : profile.wf) wf[term] = value;
    emit(out, ordered_json{{"label", profile.label}, {"wf", wf}});
}

LabeledProfile read_profile(std::istream& in) {
    json j = parse(in, "profile file");
    LabeledProfile p;
    p.label = field<std::string>(j, "label", "profile file");
    if (p.label.empty()) throw std::runtime_error("profile file has an empty label");
    for (const auto& [term, value] : field<std::map<std::string, double>>(j, "wf", "profile file")) {
        if (!(value >= 0.0 && value <= kWfScale)) {
            throw std::runtime_error("profile '" + p.label + "': WF of '" + term + "' outside [0, 10000]");
        }
        p.wf.emplace(term, value);
    }
    return p;
}

void write_result(std::ostream& out, const ClusteringResult& r) {
    ordered_json j;
    j["doc_ids"] = r.doc_ids;
    j["features"] = r.features.terms();
    j["memberships"] = matrix_json(r.memberships);
    j["centers"] = matrix_json(r.centers);
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["objective_history"] = r.objective_history;
    emit(out, j);
}

ClusteringResult read_result(std::istream& in) {
    json j = parse(in, "result file");
    ClusteringResult r;
    r.doc_ids = field<std::vector<std::string>>(j, "doc_ids", "result file");
    try {
        r.features = FeatureSet(field<std::vector<std::string>>(j, "features", "result file"));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("result file: ") + e.what());
    }
    r.memberships = matrix_from(field<json>(j, "memberships", "result file"), "memberships");
    r.centers = matrix_from(field<json>(j, "centers", "result file"), "centers");
    r.iterations = field<std::size_t>(j, "iterations", "result file");
    r.converged = field<bool>(j, "converged", "result file");
    r.objective_history = field<std::vector<double>>(j, "objective_history", "result file");

    if (r.memberships.cols() != r.doc_ids.size()) {
        throw std::runtime_error("result file: memberships have " + std::to_string(r.memberships.cols()) +
                                 " columns for " + std::to_string(r.doc_ids.size()) + " documents");
    }
    if (r.centers.rows() != r.memberships.rows() || r.centers.cols() != r.features.size()) {
        throw std::runtime_error("result file: centers do not match clusters x features");
    }
    return r;
}

void write_report(std::ostream& out, const MembershipReport& report) {
    ordered_json arr = ordered_json::array();
    for (const auto& doc : report) {
        ordered_json labels = ordered_json::object();
        for (const auto& [label, degree] : doc.degrees) labels[label] = degree;
        arr.push_back(ordered_json{{"doc_id", doc.doc_id},
                                   {"labels", labels},
                                   {"top_label", doc.top_label},
                                   {"strength", std::string(to_string(doc.strength))}});
    }
    emit(out, arr);
}

MembershipReport read_report(std::istream& in) {
    json j = parse(in, "report file");
    if (!j.is_array()) throw std::runtime_error("report file must be a JSON array");
    MembershipReport report;
    for (const auto& item : j) {
        DocumentMembership doc;
        doc.doc_id = field<std::string>(item, "doc_id", "report entry");
        doc.degrees = field<std::map<std::string, double>>(item, "labels", "report entry");
        doc.top_label = field<std::string>(item, "top_label", "report entry");
        doc.top_degree = doc.degrees.count(doc.top_label) ? doc.degrees.at(doc.top_label) : 0.0;
        auto strength = field<std::string>(item, "strength", "report entry");
        if (strength == "strong") doc.strength = Strength::strong;
        else if (strength == "moderate") doc.strength = Strength::moderate;
        else if (strength == "ambiguous") doc.strength = Strength::ambiguous;
        else throw std::runtime_error("report entry has unknown strength '" + strength + "'");
        report.push_back(std::move(doc));
    }
    return report;
}

Matrix read_init_matrix(std::istream& in) {
    json j = parse(in, "init file");
    if (j.is_object()) return matrix_from(field<json>(j, "memberships", "init file"), "init memberships");
    return matrix_from(j, "init memberships");
}

std::string trace_line(const IterationState& state) {
    ordered_json j;
    j["iteration"] = state.iteration;
    j["memberships"] = matrix_json(state.partition.matrix());
    j["centers"] = matrix_json(state.centers.v);
    j["objective"] = state.objective;
    j["max_change"] = state.max_change;
    return j.dump();
}

std::vector<RawDocument> read_corpus(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });

    std::vector<RawDocument> docs;
    docs.reserve(files.size());
    for (const auto& f : files) docs.push_back(RawDocument{f.filename().string(), read_text_file(f)});
    return docs;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("failed writing " + path.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot write " + path.string() + ": " + ec.message());
    }
}

}  // namespace fuzzydoc

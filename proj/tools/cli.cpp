#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuzzydoc/error.hpp"
#include "fuzzydoc/fcm.hpp"
#include "fuzzydoc/features.hpp"
#include "fuzzydoc/io.hpp"
#include "fuzzydoc/labeling.hpp"
#include "fuzzydoc/preprocess.hpp"

namespace fuzzydoc::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string config_file;

    std::string corpus;
    std::vector<std::string> samples;  // label=dir
    std::string features;
    std::string result;
    std::vector<std::string> profiles;
    std::string init_file;
    std::string stopwords;
    std::string out;

    bool keep_markup = false;
    bool no_stem = false;
    bool bigrams = false;

    std::size_t clusters = 2;
    double fuzzifier = 2.0;
    double epsilon = 0.001;
    std::size_t max_iters = 100;
    std::uint64_t seed = 0;
    bool trace = false;

    std::size_t top_k = 50;
    double min_ratio = 2.0;
    double min_wf = 5.0;

    double strong_threshold = 0.85;
    double ambiguity_margin = 0.1;
};

// Fills every option not given on the command line from a flat JSON object
// whose keys are the long option names with '-' replaced by '_'. Flags take
// booleans; repeatable options take arrays (`samples` may also be an object
// mapping label to directory).
void apply_config_file(CLI::App& sub, const std::string& path) {
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("malformed config file " + path + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");

    std::map<std::string, CLI::Option*> by_key;
    for (CLI::Option* opt : sub.get_options()) {
        std::string name = opt->get_single_name();
        std::replace(name.begin(), name.end(), '-', '_');
        by_key[name] = opt;
    }

    for (const auto& [key, value] : cfg.items()) {
        auto it = by_key.find(key);
        if (it == by_key.end() || key == "config" || key == "help") {
            throw UsageError("unknown config key '" + key + "' for command " + sub.get_name());
        }
        CLI::Option* opt = it->second;
        if (opt->count() > 0) continue;

        std::vector<std::string> items;
        auto scalar = [&](const nlohmann::json& v) {
            if (v.is_string()) return v.get<std::string>();
            if (v.is_boolean()) return std::string(v.get<bool>() ? "true" : "false");
            if (v.is_number()) return v.dump();
            throw UsageError("config key '" + key + "' has an unsupported value");
        };
        if (value.is_array()) {
            for (const auto& v : value) items.push_back(scalar(v));
        } else if (value.is_object()) {
            for (const auto& [k, v] : value.items()) items.push_back(k + "=" + scalar(v));
        } else {
            items.push_back(scalar(value));
        }
        if (opt->get_type_size() == 0) {
            // Flags take a single true/false.
            if (items.size() != 1) throw UsageError("config key '" + key + "' must be a boolean");
            if (items.front() == "false") continue;
            items = {"true"};
        }
        try {
            opt->add_result(items);
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw UsageError("config key '" + key + "': " + e.what());
        }
    }
}

PreprocessConfig preprocess_config(const RunConfig& rc) {
    PreprocessConfig pc;
    pc.strip_markup = !rc.keep_markup;
    pc.stemming = !rc.no_stem;
    pc.bigrams = rc.bigrams;
    pc.stopwords = rc.stopwords.empty() ? default_stopwords() : load_stopwords(rc.stopwords);
    return pc;
}

void require_file(const std::string& path, const char* what) {
    if (path.empty()) throw UsageError(std::string("missing ") + what);
    if (!fs::is_regular_file(path)) throw UsageError(std::string(what) + " not found: " + path);
}

void require_dir(const std::string& path, const char* what) {
    if (path.empty()) throw UsageError(std::string("missing ") + what);
    if (!fs::is_directory(path)) throw UsageError(std::string(what) + " is not a directory: " + path);
}

std::string format_number(double v, int precision = 4) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(precision) << v;
    return ss.str();
}

// Plain-text table with left-aligned first column and right-aligned rest.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void rule(std::string text) { rules_[rows_.size()] = std::move(text); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
        }
        for (std::size_t r = 0; r <= rows_.size(); ++r) {
            if (auto it = rules_.find(r); it != rules_.end()) out << it->second << '\n';
            if (r == rows_.size()) break;
            const auto& row = rows_[r];
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k > 0) out << "  ";
                if (k == 0) out << std::left << std::setw(static_cast<int>(width[k])) << row[k];
                else out << std::right << std::setw(static_cast<int>(width[k])) << row[k];
            }
            out << std::left << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
    std::map<std::size_t, std::string> rules_;
};

bool safe_label(const std::string& label) {
    return !label.empty() && std::all_of(label.begin(), label.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.';
    }) && label != "." && label != "..";
}

// --- features -------------------------------------------------------------

int cmd_features(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    if (rc.samples.size() < 2) throw UsageError("features needs at least two --samples label=dir");
    if (rc.features.empty()) throw UsageError("missing --features output path");

    std::vector<std::pair<std::string, std::string>> samples;
    for (const auto& spec : rc.samples) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw UsageError("--samples expects label=dir, got '" + spec + "'");
        std::string label = spec.substr(0, eq);
        if (!safe_label(label)) throw UsageError("label must match [A-Za-z0-9._-]+: '" + label + "'");
        for (const auto& s : samples) {
            if (s.first == label) throw UsageError("label given twice: " + label);
        }
        samples.emplace_back(label, spec.substr(eq + 1));
        require_dir(samples.back().second, "sample directory");
    }

    const PreprocessConfig pc = preprocess_config(rc);
    std::vector<LabeledProfile> profiles;
    for (const auto& [label, dir] : samples) {
        std::vector<TermList> docs;
        for (const auto& doc : read_corpus(dir)) docs.push_back(preprocess_document(doc, pc));
        try {
            profiles.push_back(build_profile(label, docs));
        } catch (const DataError& e) {
            throw DataError(std::string(e.what()) + " for label " + label + " (" + dir + ")");
        }
    }

    const SelectionParams params{rc.top_k, rc.min_ratio, rc.min_wf};
    auto scores = score_features(profiles, params);
    FeatureSet selected = select_features(profiles, params);

    const fs::path feature_path(rc.features);
    const fs::path profile_dir = rc.out.empty() ? feature_path.parent_path() : fs::path(rc.out);
    if (!profile_dir.empty()) fs::create_directories(profile_dir);
    std::ostringstream fbuf;
    write_feature_set(fbuf, selected);
    write_text_file(feature_path, fbuf.str());
    for (const auto& p : profiles) {
        std::ostringstream pbuf;
        write_profile(pbuf, p);
        write_text_file(profile_dir / (p.label + ".profile.json"), pbuf.str());
    }

    std::vector<std::string> header{"term"};
    for (const auto& p : profiles) header.push_back("wf(" + p.label + ")");
    header.push_back("ratio");
    TextTable table(header);
    // Selected rows, then the best-scoring rejected ones (as many again, at
    // least 20) so the cut-off is visible.
    auto add_row = [&](const FeatureScore& s) {
        std::vector<std::string> row{s.term};
        for (double v : s.wf) row.push_back(format_number(v));
        row.push_back(format_number(s.ratio, 3));
        table.add(std::move(row));
    };
    for (const auto& s : scores) {
        if (s.selected) add_row(s);
    }
    table.rule("---- selection threshold (min_ratio " + format_number(rc.min_ratio, 2) + ", min_wf " +
               format_number(rc.min_wf, 2) + ", top_k " + std::to_string(rc.top_k) + ") ----");
    const std::size_t below_limit = std::max<std::size_t>(selected.size(), 20);
    std::size_t below = 0;
    for (const auto& s : scores) {
        if (s.selected) continue;
        if (below++ == below_limit) break;
        add_row(s);
    }
    table.print(out);
    out << "selected " << selected.size() << " features -> " << feature_path.string() << '\n';
    (void)err;
    return kOk;
}

// --- cluster --------------------------------------------------------------

int cmd_cluster(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    require_dir(rc.corpus, "corpus directory");
    require_file(rc.features, "feature file");
    if (!rc.init_file.empty()) require_file(rc.init_file, "init file");
    if (rc.out.empty()) throw UsageError("missing --out result path");

    std::istringstream fin(read_text_file(rc.features));
    const FeatureSet features = read_feature_set(fin);
    if (features.empty()) throw DataError("feature file lists no features");

    const PreprocessConfig pc = preprocess_config(rc);
    std::vector<DocumentVector> vectors;
    for (const auto& doc : read_corpus(rc.corpus)) {
        BagOfWords bow = count_terms(preprocess_document(doc, pc));
        if (bow.total == 0) {
            err << "warning: skipping " << doc.id << ": empty after preprocessing\n";
            continue;
        }
        vectors.push_back(vectorize(bow, features));
    }
    if (vectors.size() < rc.clusters) {
        throw DataError("only " + std::to_string(vectors.size()) + " usable documents for " +
                        std::to_string(rc.clusters) + " clusters");
    }
    const FeatureMatrix x = FeatureMatrix::from_vectors(vectors);

    FcmParams params;
    params.clusters = rc.clusters;
    params.fuzzifier = rc.fuzzifier;
    params.epsilon = rc.epsilon;
    params.max_iters = rc.max_iters;
    if (rc.init_file.empty()) {
        params.init = RandomInit{rc.seed};
    } else {
        std::istringstream iin(read_text_file(rc.init_file));
        params.init = ExplicitInit{read_init_matrix(iin)};
    }
    try {
        validate(params, x.documents());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    IterationObserver observer;
    if (rc.trace) observer = [&out](const IterationState& s) { out << trace_line(s) << '\n'; };
    const FcmResult fcm = run_fcm(x, params, observer);

    std::ostringstream rbuf;
    write_result(rbuf, ClusteringResult::from(x, features, fcm));
    write_text_file(rc.out, rbuf.str());

    out << "documents: " << x.documents() << '\n';
    out << "iterations: " << fcm.iterations << '\n';
    out << "converged: " << (fcm.converged ? "true" : "false") << '\n';
    out << "objective: " << std::setprecision(17) << fcm.objective_history.back() << '\n';
    if (!fcm.converged) err << "warning: no convergence within " << rc.max_iters << " iterations\n";
    return kOk;
}

// --- report ---------------------------------------------------------------

int cmd_report(const RunConfig& rc, std::ostream& out, std::ostream&) {
    require_file(rc.result, "result file");
    if (rc.profiles.empty()) throw UsageError("report needs at least one --profile file");
    for (const auto& p : rc.profiles) require_file(p, "profile file");
    if (rc.out.empty()) throw UsageError("missing --out report path");

    std::istringstream rin(read_text_file(rc.result));
    const ClusteringResult result = read_result(rin);
    std::vector<LabeledProfile> profiles;
    for (const auto& path : rc.profiles) {
        std::istringstream pin(read_text_file(path));
        profiles.push_back(read_profile(pin));
    }

    const PartitionMatrix u(result.memberships);
    ClusterLabeling labeling;
    try {
        labeling = label_clusters(Centers{result.centers}, profiles, result.features);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
    const InterpretationParams params{rc.strong_threshold, rc.ambiguity_margin};
    MembershipReport report;
    try {
        report = classify_strength(u, result.doc_ids, labeling, params);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::ostringstream buf;
    write_report(buf, report);
    write_text_file(rc.out, buf.str());

    for (std::size_t j = 0; j < labeling.clusters(); ++j) {
        out << "cluster " << j + 1 << " -> " << labeling.labels[j] << " (distance " << format_number(labeling.scores[j])
            << ")\n";
    }

    std::map<std::string, const DocumentMembership*> by_id;
    for (const auto& doc : report) by_id[doc.doc_id] = &doc;

    std::vector<std::string> labels = labeling.labels;
    std::sort(labels.begin(), labels.end());
    std::vector<std::string> header{"doc_id", "top_label", "degree", "strength"};
    for (const auto& l : labels) header.push_back(l);
    TextTable table(header);
    for (const auto& label : labels) {
        for (const auto& [doc_id, degree] : rank_documents(u, result.doc_ids, labeling, label)) {
            const DocumentMembership& doc = *by_id.at(doc_id);
            if (doc.top_label != label) continue;
            std::vector<std::string> row{doc_id, label, format_number(degree, 3), std::string(to_string(doc.strength))};
            for (const auto& l : labels) row.push_back(format_number(doc.degrees.at(l), 3));
            table.add(std::move(row));
        }
    }
    table.print(out);
    return kOk;
}

void add_preprocess_options(CLI::App& sub, RunConfig& rc) {
    sub.add_option("--stopwords", rc.stopwords, "Stopword file (one term per line); default: bundled English list");
    sub.add_flag("--keep-markup", rc.keep_markup, "Do not strip HTML/XML tags and entities");
    sub.add_flag("--no-stem", rc.no_stem, "Disable Porter stemming");
    sub.add_flag("--bigrams", rc.bigrams, "Add adjacent-pair phrase tokens (a_b)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Fuzzy c-means document clustering", "fuzzydoc"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    auto* features = app.add_subcommand("features", "Select discriminative features from labeled sample corpora");
    features->add_option("--samples", rc.samples, "Labeled sample corpus as label=dir (repeat per label)");
    features->add_option("--features", rc.features, "Feature file to write");
    features->add_option("--out", rc.out, "Directory for <label>.profile.json (default: next to the feature file)");
    features->add_option("--top-k", rc.top_k, "Maximum number of features");
    features->add_option("--min-ratio", rc.min_ratio, "Minimum discrimination ratio max/(min+1)");
    features->add_option("--min-wf", rc.min_wf, "Minimum peak word frequency (per 10000)");
    add_preprocess_options(*features, rc);
    features->add_option("--config", rc.config_file, "JSON config; command-line flags take precedence");

    auto* cluster = app.add_subcommand("cluster", "Cluster a corpus with fuzzy c-means");
    cluster->add_option("--corpus", rc.corpus, "Directory of documents (doc id = filename)");
    cluster->add_option("--features", rc.features, "Feature file");
    cluster->add_option("--clusters", rc.clusters, "Number of clusters");
    cluster->add_option("--fuzzifier", rc.fuzzifier, "Fuzzifier (> 1)");
    cluster->add_option("--epsilon", rc.epsilon, "Stop when no membership changes by this much");
    cluster->add_option("--max-iters", rc.max_iters, "Iteration limit");
    cluster->add_option("--seed", rc.seed, "Seed for the random initial partition");
    cluster->add_option("--init-file", rc.init_file, "Initial c x n partition matrix (JSON)");
    cluster->add_flag("--trace", rc.trace, "Print each iteration's partition, centers and objective as JSON lines");
    cluster->add_option("--out", rc.out, "Result file to write");
    add_preprocess_options(*cluster, rc);
    cluster->add_option("--config", rc.config_file, "JSON config; command-line flags take precedence");

    auto* report = app.add_subcommand("report", "Name clusters and classify membership strength");
    report->add_option("--result", rc.result, "Result file from `cluster`");
    report->add_option("--profile", rc.profiles, "Profile file from `features` (repeat per label)");
    report->add_option("--strong-threshold", rc.strong_threshold, "Degree counted as strong membership");
    report->add_option("--ambiguity-margin", rc.ambiguity_margin, "Spread below which a document is ambiguous");
    report->add_option("--out", rc.out, "Report file to write");
    report->add_option("--config", rc.config_file, "JSON config; command-line flags take precedence");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!rc.config_file.empty()) apply_config_file(*sub, rc.config_file);
        if (sub == features) return cmd_features(rc, out, err);
        if (sub == cluster) return cmd_cluster(rc, out, err);
        return cmd_report(rc, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
}

}  // namespace fuzzydoc::cli

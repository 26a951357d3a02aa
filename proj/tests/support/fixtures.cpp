#include "support/fixtures.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

namespace fuzzydoc::testing {

std::vector<LabeledProfile> sample_profiles() {
    return {
        {"sports",
         {{"win", 10.0213},
          {"stadium", 203.2321},
          {"democracy", 1.1213},
          {"ball", 501.6553},
          {"team", 250.6312},
          {"candidate", 38.7658},
          {"campaign", 8.8350}}},
        {"politics",
         {{"win", 8.9012},
          {"stadium", 7.1214},
          {"democracy", 140.1213},
          {"ball", 30.2121},
          {"team", 80.8452},
          {"candidate", 40.2313},
          {"campaign", 9.4213}}},
    };
}

FeatureSet example_features() { return FeatureSet({"stadium", "ball", "team", "democracy"}); }

FeatureMatrix example_documents() {
    return FeatureMatrix({"Doc1", "Doc2", "Doc3", "Doc4", "Doc5", "Doc6", "Doc7", "Doc8"},
                         Matrix::from_rows({
                             {180, 400, 200, 1},
                             {200, 410, 250, 2},
                             {5, 20, 40, 40},
                             {3, 7, 35, 38},
                             {210, 380, 180, 0},
                             {7, 10, 20, 27},
                             {190, 401, 170, 5},
                             {2, 15, 26, 50},
                         }));
}

Matrix crisp_start() {
    return Matrix::from_rows({
        {1, 1, 0, 0, 1, 1, 0, 0},
        {0, 0, 1, 1, 0, 0, 1, 1},
    });
}

Matrix printed_first_iteration() {
    return Matrix::from_rows({
        {0.900, 0.867, 0.087, 0.102, 0.915, 0.103, 0.906, 0.099},
        {0.100, 0.133, 0.913, 0.898, 0.085, 0.897, 0.094, 0.901},
    });
}

Matrix printed_final_partition() {
    return Matrix::from_rows({
        {0.890, 0.804, 0.149, 0.155, 0.865, 0.159, 0.810, 0.168},
        {0.110, 0.196, 0.851, 0.845, 0.135, 0.841, 0.190, 0.832},
    });
}

TempDir::TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    auto base = std::filesystem::temp_directory_path();
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto candidate = base / ("fuzzydoc-test-" + std::to_string(rng()));
        if (std::filesystem::create_directory(candidate)) {
            path_ = candidate;
            return;
        }
    }
    throw std::runtime_error("cannot create temporary directory");
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

void write_counted_corpus(const std::filesystem::path& dir, const std::map<std::string, std::size_t>& counts,
                          std::size_t total, std::size_t docs, const std::string& filler) {
    std::size_t used = 0;
    for (const auto& [word, n] : counts) used += n;
    if (used > total) throw std::invalid_argument("counts exceed total");

    std::vector<std::string> bodies(docs);
    std::size_t next = 0;
    auto emit = [&](const std::string& word, std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            auto& body = bodies[next++ % docs];
            body += word;
            body += (next % 12 == 0) ? '\n' : ' ';
        }
    };
    for (const auto& [word, n] : counts) emit(word, n);
    emit(filler, total - used);
    for (std::size_t d = 0; d < docs; ++d) write_file(dir / ("sample" + std::to_string(d) + ".txt"), bodies[d]);
}

void write_example_corpus(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto x = example_documents();
    const auto features = example_features();
    for (std::size_t i = 0; i < x.documents(); ++i) {
        std::map<std::string, std::size_t> counts;
        for (std::size_t k = 0; k < features.size(); ++k) {
            counts[features[k]] = static_cast<std::size_t>(x.data()(i, k));
        }
        TempDir scratch;
        write_counted_corpus(scratch.path(), counts, 10000, 1);
        std::filesystem::copy_file(scratch / "sample0.txt", dir / ("doc" + std::to_string(i + 1) + ".txt"));
    }
}

}  // namespace fuzzydoc::testing

#pragma once

// The eight-document sports/politics example: labeled sample profiles,
// document vectors, the crisp starting partition, the printed one-iteration
// and final partitions, and values frozen from tests/oracles/.

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fuzzydoc/fcm.hpp"
#include "fuzzydoc/features.hpp"
#include "fuzzydoc/matrix.hpp"

namespace fuzzydoc::testing {

// Sample word frequencies per label (per 10000 words).
std::vector<LabeledProfile> sample_profiles();

// Documents Doc1..Doc8 over (stadium, ball, team, democracy).
FeatureSet example_features();
FeatureMatrix example_documents();

// Doc1, Doc2, Doc5, Doc6 in cluster 1; the rest in cluster 2.
Matrix crisp_start();

// Partitions as printed (three decimals).
Matrix printed_first_iteration();
Matrix printed_final_partition();

// Exact-arithmetic oracle values (tests/oracles/worked_example_oracle.py).
inline constexpr std::array<std::array<double, 8>, 2> kOracleDistances{{
    {111.3286239024, 149.5395014703, 339.5151874364, 352.7386603422, 102.2402195811, 353.5838832583,
     109.1973557372, 351.2065809463},
    {345.1024304464, 382.4162490010, 105.2434677308, 118.6093904377, 334.3668456950, 119.6607182830,
     339.2612378389, 116.1709408587},
}};

// Distances as printed next to the worked example.
inline constexpr std::array<std::array<double, 8>, 2> kPrintedDistances{{
    {111.32, 149.5, 339.5, 352.5, 102.2, 353.4, 109.2, 351.1},
    {345.10, 382.2, 105.1, 118.3, 334.4, 119.6, 339.7, 116.9},
}};

inline constexpr std::array<std::array<double, 8>, 2> kOracleFirstMemberships{{
    {0.905741226978, 0.867369520638, 0.087664997319, 0.101580678411, 0.914497348763, 0.102760598607,
     0.906126190490, 0.098622587770},
    {0.094258773022, 0.132630479362, 0.912335002681, 0.898419321589, 0.085502651237, 0.897239401393,
     0.093873809510, 0.901377412230},
}};

// Objective of the crisp partition against its own centers, and of the
// first-iteration partition against the same centers.
inline constexpr double kOracleCrispObjective = 323969.0;
inline constexpr double kOracleFirstObjective = 98742.3115765802;

// Centers recomputed from the partition printed after one iteration.
inline constexpr std::array<std::array<double, 4>, 2> kOracleSecondCentersFromPrinted{{
    {192.7719991787, 392.8539869306, 196.8301404516, 2.4222961432},
    {6.7805788433, 18.2054902030, 32.7231587333, 38.2985058481},
}};

// Centers recomputed from the exact first-iteration partition.
inline constexpr std::array<std::array<double, 4>, 2> kOracleSecondCenters{{
    {192.7332995689, 392.8954231578, 196.8586962378, 2.4175137671},
    {6.7190793084, 18.0664871934, 32.6577947755, 38.3116845557},
}};

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, const std::string& content);

/// Writes `docs` documents into `dir` whose pooled word counts are
/// `counts`, padded with the filler word up to `total` words. Words are
/// spread round-robin across the documents.
void write_counted_corpus(const std::filesystem::path& dir, const std::map<std::string, std::size_t>& counts,
                          std::size_t total, std::size_t docs, const std::string& filler = "zzfill");

/// Writes doc1.txt .. doc8.txt whose word frequencies over the example
/// features equal the example document vectors exactly (10000 words each).
void write_example_corpus(const std::filesystem::path& dir);

}  // namespace fuzzydoc::testing

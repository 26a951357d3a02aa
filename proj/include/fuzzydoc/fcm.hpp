#pragma once

// Fuzzy c-means over document vectors.
//
// Shapes follow the usual document-clustering convention: the feature matrix
// is n x m (one row per document), the partition matrix U is c x n (one
// column per document, columns sum to one) and the centers are c x m.
//
// Every reduction runs in document-index order, so a run is bit-reproducible
// for fixed inputs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fuzzydoc/features.hpp"
#include "fuzzydoc/matrix.hpp"

namespace fuzzydoc {

/// n x m matrix of word frequencies, entries in [0, 10000].
class FeatureMatrix {
public:
    /// Throws std::invalid_argument on an empty matrix, a doc id count that
    /// differs from the row count, or an entry outside [0, 10000].
    FeatureMatrix(std::vector<std::string> doc_ids, Matrix data);

    static FeatureMatrix from_vectors(std::span<const DocumentVector> docs);

    const std::vector<std::string>& doc_ids() const { return doc_ids_; }
    const Matrix& data() const { return data_; }
    std::size_t documents() const { return data_.rows(); }
    std::size_t dimensions() const { return data_.cols(); }
    std::span<const double> row(std::size_t i) const { return data_.row(i); }

private:
    std::vector<std::string> doc_ids_;
    Matrix data_;
};

/// Maximum deviation of a column sum from one.
inline constexpr double kColumnSumTolerance = 1e-9;

/// c x n fuzzy membership matrix. Entries lie in [0, 1] and each column sums
/// to one within kColumnSumTolerance.
class PartitionMatrix {
public:
    /// Throws DataError("invalid partition: ...") if the invariants fail.
    explicit PartitionMatrix(Matrix u);

    std::size_t clusters() const { return u_.rows(); }
    std::size_t documents() const { return u_.cols(); }
    double operator()(std::size_t cluster, std::size_t doc) const { return u_(cluster, doc); }
    const Matrix& matrix() const { return u_; }

    friend bool operator==(const PartitionMatrix&, const PartitionMatrix&) = default;

private:
    Matrix u_;
};

/// c x m cluster prototypes.
struct Centers {
    Matrix v;

    std::size_t clusters() const { return v.rows(); }
    std::span<const double> center(std::size_t j) const { return v.row(j); }
};

struct ExplicitInit {
    Matrix memberships;  // c x n
};

struct RandomInit {
    std::uint64_t seed = 0;
};

using InitSpec = std::variant<ExplicitInit, RandomInit>;

struct FcmParams {
    std::size_t clusters = 2;
    double fuzzifier = 2.0;
    double epsilon = 0.001;
    std::size_t max_iters = 100;
    InitSpec init = RandomInit{};
};

struct FcmResult {
    PartitionMatrix partition;
    // The centers from which `partition` was computed.
    Centers centers;
    std::size_t iterations = 0;
    std::vector<double> objective_history;
    std::vector<double> max_change_history;
    bool converged = false;
};

/// Snapshot handed to an observer after every iteration.
struct IterationState {
    std::size_t iteration;  // 1-based
    const PartitionMatrix& partition;
    const Centers& centers;
    double objective;
    double max_change;
};

using IterationObserver = std::function<void(const IterationState&)>;

/// Throws std::invalid_argument on out-of-range parameters (fuzzifier <= 1,
/// epsilon outside (0,1), zero clusters or iterations, more clusters than
/// documents).
void validate(const FcmParams& params, std::size_t documents);

/// Explicit specs are validated and returned verbatim; random specs draw each
/// column uniformly from the simplex with a seeded generator that produces
/// the same matrix on every platform.
PartitionMatrix init_partition(std::size_t documents, std::size_t clusters, const InitSpec& spec);

/// Weighted means with weights u^fuzzifier. Throws DataError("empty cluster")
/// when a cluster's weights are all zero.
Centers update_centers(const PartitionMatrix& u, const FeatureMatrix& x, double fuzzifier);

/// c x n Euclidean distances between every center and every document.
Matrix pairwise_distances(const FeatureMatrix& x, const Centers& centers);

/// Standard FCM membership update from a c x n distance matrix. A column with
/// a zero distance becomes one-hot on the first such cluster.
PartitionMatrix update_memberships(const Matrix& distances, double fuzzifier);

/// J = sum_i sum_j u_ji^fuzzifier * |x_i - v_j|^2.
double objective(const FeatureMatrix& x, const PartitionMatrix& u, const Centers& centers, double fuzzifier);

/// Largest absolute entrywise difference.
double max_abs_change(const PartitionMatrix& a, const PartitionMatrix& b);

/// Alternates center and membership updates from the initial partition until
/// the largest membership change drops below epsilon or max_iters is hit.
FcmResult run_fcm(const FeatureMatrix& x, const FcmParams& params, const IterationObserver& observer = {});

/// Per-document argmax cluster (0-based); ties go to the lowest index.
std::vector<std::size_t> harden(const PartitionMatrix& u);

}  // namespace fuzzydoc

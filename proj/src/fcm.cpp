#include "fuzzydoc/fcm.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fuzzydoc/error.hpp"

namespace fuzzydoc {

FeatureMatrix::FeatureMatrix(std::vector<std::string> doc_ids, Matrix data)
    : doc_ids_(std::move(doc_ids)), data_(std::move(data)) {
    if (data_.rows() == 0 || data_.cols() == 0) throw std::invalid_argument("feature matrix must be at least 1x1");
    if (doc_ids_.size() != data_.rows()) throw std::invalid_argument("doc id count does not match feature rows");
    for (double v : data_.values()) {
        if (!(v >= 0.0 && v <= kWfScale)) throw std::invalid_argument("feature value outside [0, 10000]");
    }
}

FeatureMatrix FeatureMatrix::from_vectors(std::span<const DocumentVector> docs) {
    if (docs.empty()) throw std::invalid_argument("no document vectors");
    std::vector<std::string> ids;
    Matrix data(docs.size(), docs.front().values.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (docs[i].values.size() != data.cols()) throw std::invalid_argument("document vectors differ in length");
        ids.push_back(docs[i].doc_id);
        std::copy(docs[i].values.begin(), docs[i].values.end(), data.row(i).begin());
    }
    return FeatureMatrix(std::move(ids), std::move(data));
}

PartitionMatrix::PartitionMatrix(Matrix u) : u_(std::move(u)) {
    if (u_.rows() == 0 || u_.cols() == 0) throw DataError("invalid partition: empty matrix");
    for (std::size_t i = 0; i < u_.cols(); ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < u_.rows(); ++j) {
            double v = u_(j, i);
            if (!(v >= 0.0 && v <= 1.0)) throw DataError("invalid partition: membership outside [0, 1]");
            sum += v;
        }
        if (std::abs(sum - 1.0) > kColumnSumTolerance) {
            throw DataError("invalid partition: column " + std::to_string(i + 1) + " does not sum to 1");
        }
    }
}

void validate(const FcmParams& params, std::size_t documents) {
    if (params.clusters == 0) throw std::invalid_argument("cluster count must be at least 1");
    if (params.clusters > documents) {
        throw std::invalid_argument("cluster count " + std::to_string(params.clusters) + " exceeds document count " +
                                    std::to_string(documents));
    }
    if (!(params.fuzzifier > 1.0) || !std::isfinite(params.fuzzifier)) {
        throw std::invalid_argument("fuzzifier must be a finite number > 1");
    }
    if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (params.max_iters == 0) throw std::invalid_argument("max_iters must be positive");
}

namespace {

// 53-bit uniform in [0, 1). std::uniform_real_distribution is
// implementation-defined, which would break cross-platform reproducibility.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Matrix random_partition(std::size_t documents, std::size_t clusters, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix u(clusters, documents);
    for (std::size_t i = 0; i < documents; ++i) {
        double sum = 0.0;
        while (sum == 0.0) {
            for (std::size_t j = 0; j < clusters; ++j) {
                // Normalized exponentials are uniform on the simplex.
                u(j, i) = -std::log1p(-unit_uniform(rng));
                sum += u(j, i);
            }
        }
        for (std::size_t j = 0; j < clusters; ++j) u(j, i) /= sum;
    }
    return u;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double d = a[k] - b[k];
        sum += d * d;
    }
    return sum;
}

}  // namespace

PartitionMatrix init_partition(std::size_t documents, std::size_t clusters, const InitSpec& spec) {
    if (clusters == 0 || documents == 0) throw std::invalid_argument("need at least one cluster and one document");
    if (clusters > documents) {
        throw std::invalid_argument("cluster count " + std::to_string(clusters) + " exceeds document count " +
                                    std::to_string(documents));
    }
    if (const auto* given = std::get_if<ExplicitInit>(&spec)) {
        if (given->memberships.rows() != clusters || given->memberships.cols() != documents) {
            throw DataError("invalid partition: expected " + std::to_string(clusters) + "x" +
                            std::to_string(documents) + " memberships");
        }
        return PartitionMatrix(given->memberships);
    }
    if (clusters == 1) return PartitionMatrix(Matrix(1, documents, 1.0));
    return PartitionMatrix(random_partition(documents, clusters, std::get<RandomInit>(spec).seed));
}

Centers update_centers(const PartitionMatrix& u, const FeatureMatrix& x, double fuzzifier) {
    if (u.documents() != x.documents()) throw std::invalid_argument("partition and feature matrix disagree on n");
    const std::size_t m = x.dimensions();
    Centers centers{Matrix(u.clusters(), m)};
    for (std::size_t j = 0; j < u.clusters(); ++j) {
        auto v = centers.v.row(j);
        double weight_sum = 0.0;
        for (std::size_t i = 0; i < x.documents(); ++i) {
            double w = std::pow(u(j, i), fuzzifier);
            if (w == 0.0) continue;
            weight_sum += w;
            auto xi = x.row(i);
            for (std::size_t k = 0; k < m; ++k) v[k] += w * xi[k];
        }
        if (weight_sum == 0.0) throw DataError("empty cluster: cluster " + std::to_string(j + 1) + " has no members");
        for (auto& value : v) value /= weight_sum;
    }
    return centers;
}

Matrix pairwise_distances(const FeatureMatrix& x, const Centers& centers) {
    if (centers.v.cols() != x.dimensions()) throw std::invalid_argument("center and feature dimensions differ");
    Matrix d(centers.clusters(), x.documents());
    for (std::size_t j = 0; j < centers.clusters(); ++j) {
        for (std::size_t i = 0; i < x.documents(); ++i) {
            d(j, i) = std::sqrt(squared_distance(x.row(i), centers.center(j)));
        }
    }
    return d;
}

PartitionMatrix update_memberships(const Matrix& distances, double fuzzifier) {
    if (!(fuzzifier > 1.0)) throw std::invalid_argument("fuzzifier must be > 1");
    const std::size_t c = distances.rows();
    const std::size_t n = distances.cols();
    const double exponent = 2.0 / (fuzzifier - 1.0);
    Matrix u(c, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t zero_at = c;
        for (std::size_t j = 0; j < c; ++j) {
            if (distances(j, i) == 0.0) {
                zero_at = j;
                break;
            }
        }
        if (zero_at < c) {
            u(zero_at, i) = 1.0;
            continue;
        }
        for (std::size_t j = 0; j < c; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < c; ++k) sum += std::pow(distances(j, i) / distances(k, i), exponent);
            u(j, i) = 1.0 / sum;
        }
    }
    return PartitionMatrix(std::move(u));
}

double objective(const FeatureMatrix& x, const PartitionMatrix& u, const Centers& centers, double fuzzifier) {
    if (u.documents() != x.documents() || u.clusters() != centers.clusters()) {
        throw std::invalid_argument("objective: shape mismatch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < x.documents(); ++i) {
        for (std::size_t j = 0; j < u.clusters(); ++j) {
            double w = std::pow(u(j, i), fuzzifier);
            if (w == 0.0) continue;
            total += w * squared_distance(x.row(i), centers.center(j));
        }
    }
    return total;
}

double max_abs_change(const PartitionMatrix& a, const PartitionMatrix& b) {
    if (a.clusters() != b.clusters() || a.documents() != b.documents()) {
        throw std::invalid_argument("max_abs_change: shape mismatch");
    }
    double worst = 0.0;
    auto av = a.matrix().values();
    auto bv = b.matrix().values();
    for (std::size_t k = 0; k < av.size(); ++k) worst = std::max(worst, std::abs(av[k] - bv[k]));
    return worst;
}

FcmResult run_fcm(const FeatureMatrix& x, const FcmParams& params, const IterationObserver& observer) {
    validate(params, x.documents());

    PartitionMatrix u = init_partition(x.documents(), params.clusters, params.init);
    Centers centers;
    std::vector<double> objectives;
    std::vector<double> changes;
    bool converged = false;
    std::size_t iter = 0;

    while (iter < params.max_iters) {
        ++iter;
        centers = update_centers(u, x, params.fuzzifier);
        PartitionMatrix next = update_memberships(pairwise_distances(x, centers), params.fuzzifier);
        objectives.push_back(objective(x, next, centers, params.fuzzifier));
        changes.push_back(max_abs_change(next, u));
        u = std::move(next);
        if (observer) observer(IterationState{iter, u, centers, objectives.back(), changes.back()});
        if (changes.back() < params.epsilon) {
            converged = true;
            break;
        }
    }

    return FcmResult{std::move(u), std::move(centers), iter, std::move(objectives), std::move(changes), converged};
}

std::vector<std::size_t> harden(const PartitionMatrix& u) {
    std::vector<std::size_t> out(u.documents(), 0);
    for (std::size_t i = 0; i < u.documents(); ++i) {
        for (std::size_t j = 1; j < u.clusters(); ++j) {
            if (u(j, i) > u(out[i], i)) out[i] = j;
        }
    }
    return out;
}

}  // namespace fuzzydoc

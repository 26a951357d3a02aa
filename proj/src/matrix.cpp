#include "fuzzydoc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzydoc {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
    std::vector<std::vector<double>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto src = row(r);
        out.emplace_back(src.begin(), src.end());
    }
    return out;
}

}  // namespace fuzzydoc

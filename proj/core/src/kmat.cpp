#include "glnq/kmat.hpp"

#include <stdexcept>

namespace glnq {

KMat::KMat(const CoeffField& K, int rows, int cols)
    : K_(&K), rows_(rows), cols_(cols), a_(rows * cols, K.zero()) {}

KMat KMat::identity(const CoeffField& K, int n) {
    KMat m(K, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = K.one();
    return m;
}

KMat KMat::operator*(const KMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("KMat dimension mismatch");
    KMat r(*K_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const KScalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

KScalar KMat::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square KMat");
    KScalar t = K_->zero();
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool KMat::operator==(const KMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

namespace {

// Gauss-Jordan; returns pivot columns. m is reduced in place.
std::vector<int> eliminate(KMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        KScalar inv = m.at(r, c).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            KScalar f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int k_rank(KMat m) { return static_cast<int>(eliminate(m).size()); }

std::pair<int, std::vector<std::vector<KScalar>>> k_rank_and_kernel(KMat m) {
    const CoeffField& K = m.field();
    std::vector<int> pivots = eliminate(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<KScalar>> kernel;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<KScalar> v(m.cols(), K.zero());
        v[c] = K.one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
        kernel.push_back(std::move(v));
    }
    return {static_cast<int>(pivots.size()), kernel};
}

} // namespace glnq

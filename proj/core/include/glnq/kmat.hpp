#pragma once

#include <vector>

#include "glnq/coeff_field.hpp"

namespace glnq {

/// Dense matrix over the coefficient field K. Plumbing for Gram matrices,
/// action matrices and their ranks; not a general linear algebra layer.
class KMat {
public:
    KMat() = default;
    KMat(const CoeffField& K, int rows, int cols);
    static KMat identity(const CoeffField& K, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const CoeffField& field() const { return *K_; }
    const KScalar& at(int r, int c) const { return a_[r * cols_ + c]; }
    KScalar& at(int r, int c) { return a_[r * cols_ + c]; }

    KMat operator*(const KMat& o) const;
    KScalar trace() const;
    bool operator==(const KMat& o) const;
    bool operator!=(const KMat& o) const { return !(*this == o); }

private:
    const CoeffField* K_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<KScalar> a_;
};

/// Rank by Gaussian elimination (exact).
int k_rank(KMat m);

/// Rank and a basis of the right kernel { x : m x = 0 }.
std::pair<int, std::vector<std::vector<KScalar>>> k_rank_and_kernel(KMat m);

} // namespace glnq

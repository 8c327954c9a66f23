#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glnq/budget.hpp"
#include "glnq/combinatorics.hpp"
#include "glnq/finite_field.hpp"

namespace glnq {

/// Column vector over F_q; entries stored as encodings.
class FqVector {
public:
    FqVector() = default;
    FqVector(const FieldSpec& f, int dim);                       // zero vector
    FqVector(const FieldSpec& f, std::vector<int> encodings);
    static FqVector unit(const FieldSpec& f, int dim, int i);
    static FqVector parse(const FieldSpec& f, const std::string& text);  // "1,0,2"

    int dim() const { return static_cast<int>(e_.size()); }
    const FieldSpec& field() const { return *field_; }
    FqScalar at(int i) const { return field_->element(e_[i]); }
    int enc(int i) const { return e_[i]; }
    void set(int i, FqScalar s);
    void set_enc(int i, int enc) { e_[i] = enc; }
    bool is_zero() const;

    FqVector operator+(const FqVector& o) const;
    FqVector operator-(const FqVector& o) const;
    FqVector scaled(FqScalar c) const;
    bool operator==(const FqVector& o) const;
    bool operator!=(const FqVector& o) const { return !(*this == o); }

    std::string str() const;

private:
    const FieldSpec* field_ = nullptr;
    std::vector<int> e_;
};

/// Dense matrix over F_q, row-major encodings.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(const FieldSpec& f, int rows, int cols);            // zero matrix
    static FqMatrix identity(const FieldSpec& f, int n);
    static FqMatrix parse(const FieldSpec& f, const std::string& text);  // "a,b;c,d"

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return *field_; }
    FqScalar at(int r, int c) const { return field_->element(e_[r * cols_ + c]); }
    int enc(int r, int c) const { return e_[r * cols_ + c]; }
    void set(int r, int c, FqScalar s);
    void set_enc(int r, int c, int enc) { e_[r * cols_ + c] = enc; }

    FqMatrix operator*(const FqMatrix& o) const;
    FqVector operator*(const FqVector& v) const;
    FqMatrix transpose() const;
    FqVector row(int r) const;
    FqVector col(int c) const;

    int rank() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
    FqMatrix inverse() const;  // throws std::domain_error if singular

    bool operator==(const FqMatrix& o) const;
    bool operator!=(const FqMatrix& o) const { return !(*this == o); }
    bool operator<(const FqMatrix& o) const;  // dims, then entry-lex; for ordered containers

    /// Canonical text form "a,b;c,d" — also the cache key for group elements.
    std::string str() const;

private:
    const FieldSpec* field_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<int> e_;
};

/// Reduced row echelon form and rank. Row space is preserved.
std::pair<FqMatrix, int> rref(const FqMatrix& m);

/// Subspace of F_q^n in canonical form: the RREF basis matrix with zero rows
/// dropped. Two Subspace values are equal iff the matrices agree entrywise.
class Subspace {
public:
    Subspace() = default;
    static Subspace span(const FieldSpec& f, int ambient, const std::vector<FqVector>& vectors);
    static Subspace full(const FieldSpec& f, int ambient);

    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    const FqMatrix& basis() const { return basis_; }
    bool contains(const FqVector& v) const;
    bool contains(const Subspace& other) const;

    /// Image under g acting on column vectors.
    Subspace apply(const FqMatrix& g) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const { return basis_ < o.basis_; }

    std::string str() const { return basis_.str(); }

private:
    FqMatrix basis_;  // RREF, no zero rows
};

/// Deterministic stream of all invertible n x n matrices over F_q: the entry
/// vector runs through row-major lexicographic order and non-invertible
/// candidates are skipped. Streams are restartable via reset().
class GlEnumerator {
public:
    GlEnumerator(int n, const FieldSpec& f, EnumBudget budget = {});
    std::optional<FqMatrix> next();
    void reset();
    std::uint64_t order() const { return order_; }  // |GL_n(F_q)|

private:
    int n_;
    const FieldSpec* field_;
    std::vector<int> digits_;
    bool done_ = false, started_ = false;
    std::uint64_t order_;
};

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
std::uint64_t gl_order(int n, int q);

/// Stream of the unipotent radical U_lambda (block sizes lambda along the
/// diagonal, free entries only in the above-diagonal blocks), or its
/// transpose group U_lambda^- when minus is set.
class ULambdaEnumerator {
public:
    ULambdaEnumerator(const Partition& lambda, const FieldSpec& f, bool minus = false,
                      EnumBudget budget = {});
    std::optional<FqMatrix> next();
    void reset();
    std::uint64_t count() const { return count_; }  // q^(#free entries)

private:
    int n_;
    const FieldSpec* field_;
    std::vector<std::pair<int, int>> free_;  // row-major positions
    std::vector<int> digits_;
    bool done_ = false, started_ = false;
    std::uint64_t count_;
};

std::uint64_t u_lambda_order(const Partition& lambda, int q);

/// Stream of the parabolic subgroup P_lambda (block upper triangular,
/// invertible diagonal blocks), or P_lambda^- when minus is set.
class PLambdaEnumerator {
public:
    PLambdaEnumerator(const Partition& lambda, const FieldSpec& f, bool minus = false,
                      EnumBudget budget = {});
    std::optional<FqMatrix> next();
    void reset();
    std::uint64_t order() const { return order_; }  // |P_lambda|

private:
    int n_;
    const FieldSpec* field_;
    bool minus_;
    std::vector<int> block_of_;
    std::vector<std::pair<int, int>> pattern_;  // diagonal-block and above-block positions
    std::vector<int> digits_;
    bool done_ = false, started_ = false;
    std::uint64_t order_;
};

std::uint64_t p_lambda_order(const Partition& lambda, int q);

/// Membership in P_lambda: g invertible and g_ij = 0 whenever the row-reading
/// block of i lies strictly below that of j. Throws on non-square input.
bool p_lambda_contains(const FqMatrix& g, const Partition& lambda);
/// Membership in the transpose parabolic P_lambda^-.
bool p_lambda_minus_contains(const FqMatrix& g, const Partition& lambda);
/// Membership in U_lambda / U_lambda^-.
bool u_lambda_contains(const FqMatrix& g, const Partition& lambda);
bool u_lambda_minus_contains(const FqMatrix& g, const Partition& lambda);

/// Finite generating set of GL_n(F_q): the transvections I + alpha*E_ij for
/// alpha running over an F_p-basis of F_q, plus diag(gamma, 1, ..., 1) with
/// gamma the cached primitive element (omitted for q = 2 where it is the
/// identity).
std::vector<FqMatrix> spanning_generators(int n, const FieldSpec& f);

} // namespace glnq

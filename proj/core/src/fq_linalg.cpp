#include "glnq/fq_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glnq {

namespace {

const FieldSpec* need_field(const FieldSpec* f) {
    if (!f) throw std::invalid_argument("uninitialized object");
    return f;
}

void check_same(const FieldSpec* a, const FieldSpec* b) {
    if (need_field(a) != need_field(b)) throw std::invalid_argument("mixed-field operation");
}

// Block index of each matrix row/column under the row-reading tableau of
// lambda: rows of the tableau are the blocks.
std::vector<int> block_indices(const Partition& lambda) {
    std::vector<int> block_of;
    for (int b = 0; b < lambda.length(); ++b)
        for (int i = 0; i < lambda.part(b); ++i) block_of.push_back(b);
    return block_of;
}

bool advance_digits(std::vector<int>& digits, int base) {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (++*it < base) return true;
        *it = 0;
    }
    return false;  // wrapped
}

} // namespace

// ---------------------------------------------------------------------------
// FqVector

FqVector::FqVector(const FieldSpec& f, int dim) : field_(&f), e_(dim, 0) {}

FqVector::FqVector(const FieldSpec& f, std::vector<int> encodings)
    : field_(&f), e_(std::move(encodings)) {
    for (int x : e_)
        if (x < 0 || x >= f.q()) throw std::out_of_range("vector entry out of range");
}

FqVector FqVector::unit(const FieldSpec& f, int dim, int i) {
    FqVector v(f, dim);
    v.e_.at(i) = 1;
    return v;
}

FqVector FqVector::parse(const FieldSpec& f, const std::string& text) {
    std::vector<int> enc;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) enc.push_back(std::stoi(item));
    return FqVector(f, std::move(enc));
}

void FqVector::set(int i, FqScalar s) {
    check_same(field_, s.field);
    e_.at(i) = s.v;
}

bool FqVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

FqVector FqVector::operator+(const FqVector& o) const {
    check_same(field_, o.field_);
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    FqVector r(*field_, dim());
    for (int i = 0; i < dim(); ++i) r.e_[i] = field_->add(e_[i], o.e_[i]);
    return r;
}

FqVector FqVector::operator-(const FqVector& o) const {
    check_same(field_, o.field_);
    if (dim() != o.dim()) throw std::invalid_argument("vector dimension mismatch");
    FqVector r(*field_, dim());
    for (int i = 0; i < dim(); ++i) r.e_[i] = field_->sub(e_[i], o.e_[i]);
    return r;
}

FqVector FqVector::scaled(FqScalar c) const {
    check_same(field_, c.field);
    FqVector r(*field_, dim());
    for (int i = 0; i < dim(); ++i) r.e_[i] = field_->mul(e_[i], c.v);
    return r;
}

bool FqVector::operator==(const FqVector& o) const {
    check_same(field_, o.field_);
    return e_ == o.e_;
}

std::string FqVector::str() const {
    std::string out;
    for (int i = 0; i < dim(); ++i) {
        if (i) out += ',';
        out += std::to_string(e_[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FqMatrix

FqMatrix::FqMatrix(const FieldSpec& f, int rows, int cols)
    : field_(&f), rows_(rows), cols_(cols), e_(rows * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

FqMatrix FqMatrix::identity(const FieldSpec& f, int n) {
    FqMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.set_enc(i, i, 1);
    return m;
}

FqMatrix FqMatrix::parse(const FieldSpec& f, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string rowtext;
    while (std::getline(ss, rowtext, ';')) {
        std::vector<int> row;
        std::stringstream rs(rowtext);
        std::string item;
        while (std::getline(rs, item, ',')) row.push_back(std::stoi(item));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    FqMatrix m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size()) throw std::invalid_argument("ragged matrix text");
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 0 || rows[r][c] >= f.q()) throw std::out_of_range("matrix entry out of range");
            m.set_enc(static_cast<int>(r), static_cast<int>(c), rows[r][c]);
        }
    }
    return m;
}

void FqMatrix::set(int r, int c, FqScalar s) {
    check_same(field_, s.field);
    e_.at(r * cols_ + c) = s.v;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    check_same(field_, o.field_);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    FqMatrix r(*field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int a = e_[i * cols_ + k];
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                r.e_[i * o.cols_ + j] =
                    field_->add(r.e_[i * o.cols_ + j], field_->mul(a, o.e_[k * o.cols_ + j]));
        }
    return r;
}

FqVector FqMatrix::operator*(const FqVector& v) const {
    check_same(field_, &v.field());
    if (cols_ != v.dim()) throw std::invalid_argument("matrix/vector dimension mismatch");
    FqVector r(*field_, rows_);
    for (int i = 0; i < rows_; ++i) {
        int acc = 0;
        for (int j = 0; j < cols_; ++j) acc = field_->add(acc, field_->mul(e_[i * cols_ + j], v.enc(j)));
        r.set_enc(i, acc);
    }
    return r;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix r(*field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.e_[j * rows_ + i] = e_[i * cols_ + j];
    return r;
}

FqVector FqMatrix::row(int r) const {
    FqVector v(*field_, cols_);
    for (int j = 0; j < cols_; ++j) v.set_enc(j, e_[r * cols_ + j]);
    return v;
}

FqVector FqMatrix::col(int c) const {
    FqVector v(*field_, rows_);
    for (int i = 0; i < rows_; ++i) v.set_enc(i, e_[i * cols_ + c]);
    return v;
}

int FqMatrix::rank() const { return rref(*this).second; }

FqMatrix FqMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    FqMatrix aug(*field_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.set_enc(i, j, e_[i * cols_ + j]);
        aug.set_enc(i, cols_ + i, 1);
    }
    auto [red, rank] = rref(aug);
    // singular iff the left block fails to reduce to the identity
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (red.enc(i, j) != (i == j ? 1 : 0)) throw std::domain_error("matrix is singular");
    (void)rank;
    FqMatrix inv(*field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.set_enc(i, j, red.enc(i, cols_ + j));
    return inv;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    check_same(field_, o.field_);
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool FqMatrix::operator<(const FqMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return e_ < o.e_;
}

std::string FqMatrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        if (i) out += ';';
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ',';
            out += std::to_string(e_[i * cols_ + j]);
        }
    }
    return out;
}

std::pair<FqMatrix, int> rref(const FqMatrix& m) {
    FqMatrix a = m;
    const FieldSpec& f = a.field();
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.enc(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j) {
                int tmp = a.enc(r, j);
                a.set_enc(r, j, a.enc(pivot, j));
                a.set_enc(pivot, j, tmp);
            }
        int scale = f.inv(a.enc(r, c));
        for (int j = 0; j < a.cols(); ++j) a.set_enc(r, j, f.mul(scale, a.enc(r, j)));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.enc(i, c) == 0) continue;
            int factor = a.enc(i, c);
            for (int j = 0; j < a.cols(); ++j)
                a.set_enc(i, j, f.sub(a.enc(i, j), f.mul(factor, a.enc(r, j))));
        }
        ++r;
    }
    return {a, r};
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const FieldSpec& f, int ambient, const std::vector<FqVector>& vectors) {
    FqMatrix m(f, static_cast<int>(vectors.size()), ambient);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].dim() != ambient) throw std::invalid_argument("ambient dimension mismatch");
        check_same(&f, &vectors[i].field());
        for (int j = 0; j < ambient; ++j) m.set_enc(static_cast<int>(i), j, vectors[i].enc(j));
    }
    auto [red, rank] = rref(m);
    Subspace s;
    s.basis_ = FqMatrix(f, rank, ambient);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < ambient; ++j) s.basis_.set_enc(i, j, red.enc(i, j));
    return s;
}

Subspace Subspace::full(const FieldSpec& f, int ambient) {
    Subspace s;
    s.basis_ = FqMatrix::identity(f, ambient);
    return s;
}

bool Subspace::contains(const FqVector& v) const {
    check_same(&basis_.field(), &v.field());
    if (v.dim() != ambient()) throw std::invalid_argument("ambient dimension mismatch");
    const FieldSpec& f = basis_.field();
    FqVector w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        int lead = -1;
        for (int j = 0; j < ambient(); ++j)
            if (basis_.enc(i, j) != 0) {
                lead = j;
                break;
            }
        int c = w.enc(lead);
        if (c == 0) continue;
        for (int j = 0; j < ambient(); ++j) w.set_enc(j, f.sub(w.enc(j), f.mul(c, basis_.enc(i, j))));
    }
    return w.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::apply(const FqMatrix& g) const {
    check_same(&basis_.field(), &g.field());
    std::vector<FqVector> images;
    for (int i = 0; i < basis_.rows(); ++i) images.push_back(g * basis_.row(i));
    return span(basis_.field(), ambient(), images);
}

// ---------------------------------------------------------------------------
// Enumerators

std::uint64_t gl_order(int n, int q) {
    std::uint64_t qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    std::uint64_t acc = 1, qi = 1;
    for (int i = 0; i < n; ++i) {
        acc *= qn - qi;
        qi *= q;
    }
    return acc;
}

GlEnumerator::GlEnumerator(int n, const FieldSpec& f, EnumBudget budget)
    : n_(n), field_(&f), digits_(n * n, 0), order_(gl_order(n, f.q())) {
    if (n < 1) throw std::invalid_argument("gl_enumerate requires n >= 1");
    checked_pow(f.q(), n * n, budget.max_scan, "gl_enumerate scan");
}

void GlEnumerator::reset() {
    std::fill(digits_.begin(), digits_.end(), 0);
    done_ = started_ = false;
}

std::optional<FqMatrix> GlEnumerator::next() {
    while (!done_) {
        if (started_) {
            if (!advance_digits(digits_, field_->q())) {
                done_ = true;
                break;
            }
        } else {
            started_ = true;  // first candidate is the zero matrix
        }
        FqMatrix m(*field_, n_, n_);
        for (int i = 0; i < n_ * n_; ++i) m.set_enc(i / n_, i % n_, digits_[i]);
        if (m.rank() == n_) return m;
    }
    return std::nullopt;
}

std::uint64_t u_lambda_order(const Partition& lambda, int q) {
    auto block_of = block_indices(lambda);
    int free_count = 0;
    int n = lambda.sum();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block_of[i] < block_of[j]) ++free_count;
    std::uint64_t acc = 1;
    for (int i = 0; i < free_count; ++i) acc *= q;
    return acc;
}

ULambdaEnumerator::ULambdaEnumerator(const Partition& lambda, const FieldSpec& f, bool minus,
                                     EnumBudget budget)
    : n_(lambda.sum()), field_(&f) {
    auto block_of = block_indices(lambda);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            bool free_entry = minus ? block_of[i] > block_of[j] : block_of[i] < block_of[j];
            if (free_entry) free_.emplace_back(i, j);
        }
    count_ = checked_pow(f.q(), static_cast<int>(free_.size()), budget.max_scan, "u_lambda scan");
    digits_.assign(free_.size(), 0);
}

void ULambdaEnumerator::reset() {
    std::fill(digits_.begin(), digits_.end(), 0);
    done_ = started_ = false;
}

std::optional<FqMatrix> ULambdaEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_ && !advance_digits(digits_, field_->q())) {
        done_ = true;
        return std::nullopt;
    }
    started_ = true;
    FqMatrix m = FqMatrix::identity(*field_, n_);
    for (size_t k = 0; k < free_.size(); ++k) m.set_enc(free_[k].first, free_[k].second, digits_[k]);
    return m;
}

std::uint64_t p_lambda_order(const Partition& lambda, int q) {
    std::uint64_t acc = u_lambda_order(lambda, q);
    for (int b = 0; b < lambda.length(); ++b) acc *= gl_order(lambda.part(b), q);
    return acc;
}

PLambdaEnumerator::PLambdaEnumerator(const Partition& lambda, const FieldSpec& f, bool minus,
                                     EnumBudget budget)
    : n_(lambda.sum()), field_(&f), minus_(minus), block_of_(block_indices(lambda)),
      order_(p_lambda_order(lambda, f.q())) {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            bool in_pattern = block_of_[i] == block_of_[j] ||
                              (minus ? block_of_[i] > block_of_[j] : block_of_[i] < block_of_[j]);
            if (in_pattern) pattern_.emplace_back(i, j);
        }
    checked_pow(f.q(), static_cast<int>(pattern_.size()), budget.max_scan, "p_lambda scan");
    digits_.assign(pattern_.size(), 0);
}

void PLambdaEnumerator::reset() {
    std::fill(digits_.begin(), digits_.end(), 0);
    done_ = started_ = false;
}

std::optional<FqMatrix> PLambdaEnumerator::next() {
    while (!done_) {
        if (started_) {
            if (!advance_digits(digits_, field_->q())) {
                done_ = true;
                break;
            }
        } else {
            started_ = true;
        }
        FqMatrix m(*field_, n_, n_);
        for (size_t k = 0; k < pattern_.size(); ++k)
            m.set_enc(pattern_[k].first, pattern_[k].second, digits_[k]);
        // invertible iff every diagonal block is
        bool ok = true;
        for (int b = 0; b < static_cast<int>(block_of_.size()) && ok; ++b) {
            if (b > 0 && block_of_[b] == block_of_[b - 1]) continue;  // handle each block once
            int lo = b, hi = b;
            while (hi + 1 < n_ && block_of_[hi + 1] == block_of_[b]) ++hi;
            FqMatrix blk(*field_, hi - lo + 1, hi - lo + 1);
            for (int i = lo; i <= hi; ++i)
                for (int j = lo; j <= hi; ++j) blk.set_enc(i - lo, j - lo, m.enc(i, j));
            ok = blk.rank() == blk.rows();
        }
        if (ok) return m;
    }
    return std::nullopt;
}

namespace {

bool parabolic_membership(const FqMatrix& g, const Partition& lambda, bool minus) {
    if (g.rows() != g.cols()) throw std::invalid_argument("parabolic membership requires a square matrix");
    if (g.rows() != lambda.sum()) throw std::invalid_argument("matrix size does not match |lambda|");
    auto block_of = block_indices(lambda);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            bool must_vanish = minus ? block_of[i] < block_of[j] : block_of[i] > block_of[j];
            if (must_vanish && g.enc(i, j) != 0) return false;
        }
    return g.rank() == g.rows();
}

bool unipotent_membership(const FqMatrix& g, const Partition& lambda, bool minus) {
    if (g.rows() != g.cols() || g.rows() != lambda.sum())
        throw std::invalid_argument("matrix size does not match |lambda|");
    auto block_of = block_indices(lambda);
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            if (i == j) {
                if (g.enc(i, j) != 1) return false;
                continue;
            }
            bool free_entry = minus ? block_of[i] > block_of[j] : block_of[i] < block_of[j];
            if (!free_entry && g.enc(i, j) != 0) return false;
        }
    return true;
}

} // namespace

bool p_lambda_contains(const FqMatrix& g, const Partition& lambda) {
    return parabolic_membership(g, lambda, false);
}
bool p_lambda_minus_contains(const FqMatrix& g, const Partition& lambda) {
    return parabolic_membership(g, lambda, true);
}
bool u_lambda_contains(const FqMatrix& g, const Partition& lambda) {
    return unipotent_membership(g, lambda, false);
}
bool u_lambda_minus_contains(const FqMatrix& g, const Partition& lambda) {
    return unipotent_membership(g, lambda, true);
}

std::vector<FqMatrix> spanning_generators(int n, const FieldSpec& f) {
    std::vector<FqMatrix> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int alpha = 1;
            for (int b = 0; b < f.k(); ++b) {  // F_p-basis 1, x, x^2, ...
                FqMatrix m = FqMatrix::identity(f, n);
                m.set_enc(i, j, alpha);
                gens.push_back(std::move(m));
                alpha *= f.p();
            }
        }
    if (f.primitive().encoding() != 1) {
        FqMatrix d = FqMatrix::identity(f, n);
        d.set_enc(0, 0, f.primitive().encoding());
        gens.push_back(std::move(d));
    }
    return gens;
}

} // namespace glnq

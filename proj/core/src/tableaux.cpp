#include "glnq/tableaux.hpp"

#include <sstream>
#include <stdexcept>

namespace glnq {

FqTableau::FqTableau(Partition shape, std::vector<FqVector> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    int n = shape_.sum();
    if (n < 1) throw std::invalid_argument("tableau shape must be nonempty");
    if (static_cast<int>(entries_.size()) != n)
        throw std::invalid_argument("tableau needs exactly n = |shape| entries");
    field_ = &entries_[0].field();
    for (const auto& v : entries_) {
        if (&v.field() != field_) throw std::invalid_argument("mixed-field tableau entries");
        if (v.dim() != n) throw std::invalid_argument("tableau entries must live in F_q^n");
    }

    // column-major numbering
    Partition conj = shape_.conjugate();
    col_of_.resize(n);
    row_of_.resize(n);
    int idx = 0;
    for (int c = 0; c < conj.length(); ++c)
        for (int r = 0; r < conj.part(c); ++r) {
            col_of_[idx] = c;
            row_of_[idx] = r;
            ++idx;
        }

    basis_ = FqMatrix(*field_, n, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) basis_.set_enc(r, i, entries_[i].enc(r));
    try {
        basis_inv_ = basis_.inverse();
    } catch (const std::domain_error&) {
        throw std::invalid_argument("tableau entries are linearly dependent");
    }
}

FqTableau FqTableau::standard(const Partition& shape, const FieldSpec& f) {
    int n = shape.sum();
    std::vector<FqVector> entries;
    for (int i = 0; i < n; ++i) entries.push_back(FqVector::unit(f, n, i));
    return FqTableau(shape, std::move(entries));
}

FqTableau FqTableau::parse(const FieldSpec& f, const std::string& text) {
    size_t bar_pos = text.find('|');
    if (bar_pos == std::string::npos) throw std::invalid_argument("tableau text needs 'shape | entries'");
    std::string shape_text = text.substr(0, bar_pos);
    while (!shape_text.empty() && shape_text.back() == ' ') shape_text.pop_back();
    Partition shape = Partition::parse(shape_text);
    std::vector<FqVector> entries;
    std::stringstream ss(text.substr(bar_pos + 1));
    std::string item;
    while (std::getline(ss, item, ';')) entries.push_back(FqVector::parse(f, item));
    return FqTableau(shape, std::move(entries));
}

std::string FqTableau::str() const {
    std::string out = shape_.str() + " | ";
    for (int i = 0; i < n(); ++i) {
        if (i) out += "; ";
        out += entries_[i].str();
    }
    return out;
}

int FqTableau::index_of(int row, int col) const {
    Partition conj = shape_.conjugate();
    if (col < 0 || col >= conj.length() || row < 0 || row >= conj.part(col))
        throw std::out_of_range("cell outside the diagram");
    int idx = 0;
    for (int c = 0; c < col; ++c) idx += conj.part(c);
    return idx + row;
}

bool FqTableau::operator==(const FqTableau& o) const {
    return shape_ == o.shape_ && basis_ == o.basis_;
}

FqTableau act(const FqMatrix& g, const FqTableau& t) {
    if (g.rows() != t.n() || g.cols() != t.n())
        throw std::invalid_argument("acting matrix has the wrong size");
    std::vector<FqVector> entries;
    for (int i = 0; i < t.n(); ++i) entries.push_back(g * t.entry(i));
    return FqTableau(t.shape(), std::move(entries));
}

XPairs x_pairs(const FqTableau& t) {
    XPairs x;
    Partition conj = t.shape().conjugate();
    for (int i = 0; i < t.n(); ++i) {
        int r = t.row_of(i), c = t.col_of(i);
        if (c + 1 < conj.length() && r < conj.part(c + 1))
            x.pairs.emplace_back(i, t.index_of(r, c + 1));
    }
    return x;
}

UTStream::UTStream(const FqTableau& t, EnumBudget budget)
    : a_(t.basis_matrix()), a_inv_(t.basis_inverse()),
      raw_(t.shape().conjugate(), t.field(), false, budget) {}

std::optional<FqMatrix> UTStream::next() {
    auto u = raw_.next();
    if (!u) return std::nullopt;
    return a_ * *u * a_inv_;
}

UTStream u_elements(const FqTableau& t, EnumBudget budget) { return UTStream(t, budget); }

PTStream::PTStream(const FqTableau& t, EnumBudget budget)
    : a_(t.basis_matrix()), a_inv_(t.basis_inverse()),
      raw_(t.shape().conjugate(), t.field(), true, budget) {}

std::optional<FqMatrix> PTStream::next() {
    auto p = raw_.next();
    if (!p) return std::nullopt;
    return a_ * *p * a_inv_;
}

PTStream p_elements(const FqTableau& t, EnumBudget budget) { return PTStream(t, budget); }

namespace {

// Spans of the entries in columns < c (for U) and >= c (for P), indexed by c.
std::vector<Subspace> column_prefix_spans(const FqTableau& t) {
    std::vector<Subspace> spans;
    int m = t.columns();
    for (int c = 0; c < m; ++c) {
        std::vector<FqVector> vs;
        for (int i = 0; i < t.n(); ++i)
            if (t.col_of(i) < c) vs.push_back(t.entry(i));
        spans.push_back(Subspace::span(t.field(), t.n(), vs));
    }
    return spans;
}

std::vector<Subspace> column_suffix_spans(const FqTableau& t) {
    std::vector<Subspace> spans;
    int m = t.columns();
    for (int c = 0; c < m; ++c) {
        std::vector<FqVector> vs;
        for (int i = 0; i < t.n(); ++i)
            if (t.col_of(i) >= c) vs.push_back(t.entry(i));
        spans.push_back(Subspace::span(t.field(), t.n(), vs));
    }
    return spans;
}

} // namespace

bool u_contains(const FqMatrix& g, const FqTableau& t) {
    if (g.rows() != t.n() || g.cols() != t.n()) return false;
    auto prefix = column_prefix_spans(t);
    for (int i = 0; i < t.n(); ++i) {
        FqVector moved = g * t.entry(i) - t.entry(i);
        if (!prefix[t.col_of(i)].contains(moved)) return false;
    }
    return true;
}

bool p_contains(const FqMatrix& g, const FqTableau& t) {
    if (g.rows() != t.n() || g.cols() != t.n()) return false;
    if (!g.is_invertible()) return false;
    auto suffix = column_suffix_spans(t);
    for (int i = 0; i < t.n(); ++i)
        if (!suffix[t.col_of(i)].contains(g * t.entry(i))) return false;
    return true;
}

int psi_exponent(const FqTableau& t, const FqMatrix& u) {
    const FieldSpec& f = t.field();
    // Coordinates of u on the basis B(T): C = A^{-1} u A, so C_{ij} is the
    // coefficient of v_i in u v_j.
    FqMatrix c = t.basis_inverse() * u * t.basis_matrix();
    if (!u_lambda_contains(c, t.shape().conjugate()))
        throw std::invalid_argument("element is not in U(T)");
    int s = 0;
    for (auto [i, j] : x_pairs(t).pairs) s = f.add(s, c.enc(i, j));
    return f.trace(s);
}

KScalar psi(const CoeffField& K, const FqTableau& t, const FqMatrix& u) {
    if (K.p() != t.field().p())
        throw std::invalid_argument("coefficient field characteristic mismatch");
    return K.zeta_pow(psi_exponent(t, u));
}

FqTableau bar(const FqTableau& t) {
    std::vector<FqVector> entries;
    for (int i = 0; i < t.n(); ++i) {
        // odd columns in 1-based counting are even 0-based indices
        if (t.col_of(i) % 2 == 0)
            entries.push_back(t.entry(i).scaled(-t.field().one()));
        else
            entries.push_back(t.entry(i));
    }
    return FqTableau(t.shape(), std::move(entries));
}

} // namespace glnq

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glnq/budget.hpp"
#include "glnq/coeff_field.hpp"
#include "glnq/combinatorics.hpp"
#include "glnq/fq_linalg.hpp"

namespace glnq {

/// Young diagram of shape lambda (|lambda| = n) filled with a basis
/// v_0, ..., v_{n-1} of F_q^n.
///
/// The basis is numbered down columns, left column first (top to bottom, then
/// left to right), so cell (row r, column c) holds v_{index_of(r, c)}. All
/// indices are 0-based. The entries must be linearly independent; the basis
/// matrix A (columns v_i) and its inverse are computed once at construction.
class FqTableau {
public:
    FqTableau(Partition shape, std::vector<FqVector> entries);

    /// The tableau filled with the standard basis e_0, ..., e_{n-1}.
    static FqTableau standard(const Partition& shape, const FieldSpec& f);

    /// Text form "shape | v0; v1; ...; v{n-1}" with column-major vectors.
    static FqTableau parse(const FieldSpec& f, const std::string& text);
    std::string str() const;

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.sum(); }
    int columns() const { return shape_.part(0); }
    const FieldSpec& field() const { return *field_; }

    const FqVector& entry(int i) const { return entries_[i]; }    // v_i
    int col_of(int i) const { return col_of_[i]; }
    int row_of(int i) const { return row_of_[i]; }
    int index_of(int row, int col) const;

    /// Basis matrix A with column i equal to v_i, and its cached inverse.
    const FqMatrix& basis_matrix() const { return basis_; }
    const FqMatrix& basis_inverse() const { return basis_inv_; }

    bool operator==(const FqTableau& o) const;
    bool operator!=(const FqTableau& o) const { return !(*this == o); }

private:
    Partition shape_;
    const FieldSpec* field_;
    std::vector<FqVector> entries_;
    std::vector<int> col_of_, row_of_;
    FqMatrix basis_, basis_inv_;
};

/// Left action of g on a tableau: every entry v becomes g*v.
FqTableau act(const FqMatrix& g, const FqTableau& t);

/// The pairs (i, j) with v_i directly left of v_j (same row, adjacent
/// columns). |X(T)| = n - lambda'_1.
struct XPairs {
    std::vector<std::pair<int, int>> pairs;
};
XPairs x_pairs(const FqTableau& t);

/// Stream of U(T) = { g : g v_i - v_i in span{ v_j : column(j) < column(i) } },
/// realized as A u A^{-1} for u running over U_{lambda'}.
class UTStream {
public:
    UTStream(const FqTableau& t, EnumBudget budget = {});
    std::optional<FqMatrix> next();
    void reset() { raw_.reset(); }
    std::uint64_t count() const { return raw_.count(); }

private:
    FqMatrix a_, a_inv_;
    ULambdaEnumerator raw_;
};
UTStream u_elements(const FqTableau& t, EnumBudget budget = {});

/// Stream of P(T) = { g : g v_i in span{ v_j : column(j) >= column(i) } },
/// realized as A p A^{-1} for p running over P_{lambda'}^-.
class PTStream {
public:
    PTStream(const FqTableau& t, EnumBudget budget = {});
    std::optional<FqMatrix> next();
    void reset() { raw_.reset(); }
    std::uint64_t order() const { return raw_.order(); }

private:
    FqMatrix a_, a_inv_;
    PLambdaEnumerator raw_;
};
PTStream p_elements(const FqTableau& t, EnumBudget budget = {});

/// Membership tests straight from the span conditions; these are the
/// cross-checks for the conjugation-based streams.
bool u_contains(const FqMatrix& g, const FqTableau& t);
bool p_contains(const FqMatrix& g, const FqTableau& t);

/// Exponent e in [0, p) with psi_T(u) = zeta^e: the absolute trace of the sum
/// over X(T) of the B(T)-coordinate of u*v_j at v_i.
/// Throws std::invalid_argument when u is not in U(T).
int psi_exponent(const FqTableau& t, const FqMatrix& u);

/// The linear character psi_T of U(T), with values in K.
KScalar psi(const CoeffField& K, const FqTableau& t, const FqMatrix& u);

/// The sign-twisted tableau: entries in odd columns (1st, 3rd, ...) are
/// negated. An involution; over F_2 it is the identity.
FqTableau bar(const FqTableau& t);

} // namespace glnq

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "glnq/budget.hpp"
#include "glnq/kmat.hpp"
#include "glnq/tableaux.hpp"

namespace glnq {

/// Chain of subspaces V_m < V_{m-1} < ... < V_1 = F_q^n, where m is the
/// number of columns of the underlying shape and dim V_c is the total size of
/// the columns >= c. chain()[i] holds V_{i+1}, so chain()[0] is the full
/// space. Equality is entrywise equality of the canonical RREF bases.
class Flag {
public:
    Flag() = default;
    explicit Flag(std::vector<Subspace> chain);  // validates strict nesting

    static Flag of_tableau(const FqTableau& t);

    int levels() const { return static_cast<int>(chain_.size()); }
    const std::vector<Subspace>& chain() const { return chain_; }

    Flag apply(const FqMatrix& g) const;

    bool operator==(const Flag& o) const { return key_ == o.key_; }
    bool operator!=(const Flag& o) const { return !(*this == o); }
    bool operator<(const Flag& o) const { return key_ < o.key_; }

    std::string str() const;

private:
    std::vector<Subspace> chain_;
    // dims followed by the concatenated RREF entries; the comparison key that
    // fixes the deterministic flag order
    std::vector<int> key_;

    void build_key();
};

/// Gaussian binomial [m, d]_q.
mpz_class gaussian_binomial(int m, int d, int q);

/// Number of lambda-flags in F_q^n, n = |lambda|: the index of the parabolic
/// of shape lambda' (a q-multinomial coefficient).
mpz_class flag_count(const Partition& lambda, int q);

/// All flags of type lambda, each exactly once, sorted by the canonical key.
/// Throws budget_error when the count exceeds budget.max_flags.
std::vector<Flag> enumerate_flags(const Partition& lambda, const FieldSpec& f,
                                  EnumBudget budget = {});

/// Element of the permutation module M^lambda: a finitely supported K-valued
/// function on lambda-flags. Zero coefficients are never stored.
class MVector {
public:
    MVector() = default;
    MVector(Partition shape, const CoeffField& K) : shape_(std::move(shape)), K_(&K) {}

    const Partition& shape() const { return shape_; }
    const CoeffField& coeff_field() const { return *K_; }
    const std::map<Flag, KScalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int support_size() const { return static_cast<int>(c_.size()); }

    KScalar coeff(const Flag& f) const;
    void add_to(const Flag& f, const KScalar& k);  // accumulate, pruning zeros

    const Flag& leading_flag() const;     // smallest flag in the support
    const KScalar& leading_coeff() const;

    MVector operator+(const MVector& o) const;
    MVector operator-(const MVector& o) const;
    MVector scaled(const KScalar& k) const;
    void axpy(const KScalar& k, const MVector& o);  // *this += k * o

    /// g . sum c_F [F] = sum c_F [gF].
    MVector apply(const FqMatrix& g) const;

    /// Flag-orthonormal symmetric bilinear form [x, y] = sum_F x_F y_F.
    KScalar inner(const MVector& o) const;

    bool operator==(const MVector& o) const;
    bool operator!=(const MVector& o) const { return !(*this == o); }

    /// Lines "flag-id: coefficient", ids taken from the given enumeration.
    void dump(std::ostream& os, const std::vector<Flag>& flag_order) const;

private:
    Partition shape_;
    const CoeffField* K_ = nullptr;
    std::map<Flag, KScalar> c_;
};

/// m_T: the indicator of the canonical flag of T (the P(T)-orbit sum is
/// represented by the flag that classifies the orbit).
MVector m_vector(const CoeffField& K, const FqTableau& t);

/// e_T = sum over u in U(T) of psi_T(u^{-1}) m_{uT}.
MVector e_vector(const CoeffField& K, const FqTableau& t, EnumBudget budget = {});

/// k_T v = sum over u in U(T) of psi_T(u^{-1}) (u . v); v may live in any
/// M^mu with |mu| = |shape(T)|.
MVector k_apply(const CoeffField& K, const FqTableau& t, const MVector& v,
                EnumBudget budget = {});

/// Echelon basis of a submodule of M^lambda: leading flags strictly increase
/// and each leading coefficient is 1; rows are fully reduced against each
/// other, so solving for coordinates is a single sweep.
class SpanBasis {
public:
    SpanBasis() = default;
    SpanBasis(Partition shape, const CoeffField& K) : shape_(std::move(shape)), K_(&K) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    const Partition& shape() const { return shape_; }
    const CoeffField& coeff_field() const { return *K_; }
    const std::vector<MVector>& rows() const { return rows_; }

    /// Echelon-inserts v; returns true when the rank grew. Pivots are
    /// rescaled to 1 and a coefficient-size bound is enforced per step
    /// (std::runtime_error on blow-up rather than silent thrashing).
    bool insert(MVector v);

    /// Remainder of v after reduction against the basis.
    MVector reduce(MVector v) const;

    /// Coordinates of v in the basis; throws std::runtime_error when v is
    /// outside the span.
    std::vector<KScalar> solve(const MVector& v) const;

    /// Coefficient matrix, one row per basis vector, one column per flag.
    void dump_tsv(std::ostream& os, const std::vector<Flag>& flag_order) const;

private:
    Partition shape_;
    const CoeffField* K_ = nullptr;
    std::vector<MVector> rows_;  // leads strictly ascending
};

/// Breadth-first closure of seed under the generator set; the span returned
/// is the smallest G-stable subspace containing seed.
SpanBasis span_closure(const MVector& seed, const std::vector<FqMatrix>& generators,
                       EnumBudget budget = {});

/// Echelon basis of S^lambda = K-span{ e_T }, computed as the closure of
/// e_{T0} for the standard-basis tableau T0 under the GL_n generator set.
SpanBasis s_basis(const Partition& lambda, const FieldSpec& f, const CoeffField& K,
                  EnumBudget budget = {});

/// Same, seeded from an arbitrary tableau (any single e_T generates S^lambda).
SpanBasis s_basis_seeded(const FqTableau& seed_tableau, const CoeffField& K,
                         EnumBudget budget = {});

struct GramResult {
    KMat gram;                        // matrix of [.,.] on the given basis
    int d_dim = 0;                    // rank of gram = dim D^lambda
    int radical_dim = 0;
    std::vector<MVector> radical_basis;
};

/// Gram matrix of the basis under the flag-orthonormal form, its rank
/// (= dim D^lambda) and a basis of the radical S ∩ S^perp.
GramResult gram_and_radical(const SpanBasis& basis);

} // namespace glnq

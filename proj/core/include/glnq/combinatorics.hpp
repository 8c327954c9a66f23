#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glnq {

/// Integer partition: a weakly decreasing sequence of positive parts.
///
/// Stored without trailing zeros; part(i) returns 0 beyond the last part, so
/// callers may index past the end freely. The empty partition (sum 0) is a
/// valid value and is used as a neutral element in intermediate computations.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the comma-separated text form, e.g. "4,3,1,1".
    static Partition parse(const std::string& text);

    int sum() const { return sum_; }                         // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                                   // 0-based, 0 past the end
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Conjugate partition: lambda'_i = #{ j : lambda_j >= i }.
    Partition conjugate() const;

    std::string str() const;                                 // "4,3,1,1"

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// Result of comparing mu against lambda in dominance order.
enum class Dominance {
    below_or_equal,  // mu <= lambda: every leading partial sum of mu is <= that of lambda
    above,           // mu >= lambda and mu != lambda
    incomparable,
};

/// Dominance comparison of two partitions of the same integer.
/// Throws std::invalid_argument if |mu| != |lambda|.
Dominance dominance_leq(const Partition& mu, const Partition& lambda);

inline bool dominates(const Partition& lambda, const Partition& mu) {
    Dominance d = dominance_leq(mu, lambda);
    return d == Dominance::below_or_equal;
}

/// All partitions of n, each exactly once, in decreasing lexicographic order:
/// (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Filling of a Young diagram with positive integers, weakly increasing along
/// rows and strictly increasing down columns.
class SemistandardTableau {
public:
    SemistandardTableau(Partition shape, std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int row, int col) const { return rows_[row][col]; }

    /// content()[i] = number of entries equal to i+1.
    std::vector<int> content() const;

    std::string str() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

/// All semistandard tableaux of the given shape and content, in the
/// deterministic order produced by filling cells row-major with ascending
/// letters. content.part(i) copies of letter i+1 are used.
std::vector<SemistandardTableau> semistandard_tableaux(const Partition& shape,
                                                       const Partition& content);

/// Kostka number K_{mu,lambda}: the number of semistandard tableaux of shape
/// mu and content lambda, by exhaustive enumeration.
/// Throws std::invalid_argument if |mu| != |lambda|.
long long kostka_number(const Partition& mu, const Partition& lambda);

/// Polynomial with integer coefficients, coefficient index = power of t.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<long long> coeffs);
    static IntPolynomial constant(long long c);
    static IntPolynomial monomial(int degree, long long c = 1);

    const std::vector<long long>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for the zero polynomial
    long long coeff(int d) const;
    long long eval(long long t) const;
    bool is_zero() const { return coeffs_.empty(); }

    IntPolynomial& operator+=(const IntPolynomial& o);
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return coeffs_ != o.coeffs_; }

    std::string str() const;  // "1 + 2*t + t^3"; "0" for zero

private:
    std::vector<long long> coeffs_;  // normalized: no trailing zeros
};

/// Reading word of a tableau: rows left-to-right, bottom row first.
std::vector<int> reading_word(const SemistandardTableau& t);

/// Charge statistic of a word whose content is a partition.
///
/// Convention (fixed project-wide, matching the bottom-to-top reading word):
/// for a standard word, index(1) = 0 and index(r+1) = index(r) + 1 exactly
/// when r+1 lies to the right of r; the charge is the sum of indices. For
/// general partition content, standard subwords containing one copy of each
/// letter are extracted by scanning right-to-left with wrap-around, and their
/// charges are added.
long long charge(const std::vector<int>& word);

/// Kostka polynomial K_{mu,lambda}(t) = sum of t^charge(reading word) over
/// semistandard tableaux of shape mu and content lambda. Evaluating at t = 1
/// recovers kostka_number(mu, lambda).
IntPolynomial kostka_polynomial(const Partition& mu, const Partition& lambda);

} // namespace glnq

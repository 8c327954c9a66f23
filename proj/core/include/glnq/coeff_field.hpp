#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "glnq/finite_field.hpp"

namespace glnq {

class CoeffField;

/// Element of the coefficient field K.
///
/// Cyclotomic mode: an exact element of Q(zeta_p), stored as the rational
/// coefficient vector of 1, zeta, ..., zeta^(p-2) reduced modulo the p-th
/// cyclotomic polynomial. Modular mode: a residue mod ell. Equality is exact
/// in both modes; there is no floating point anywhere.
class KScalar {
public:
    KScalar() = default;  // invalid until assigned from a CoeffField factory

    bool is_valid() const { return K_ != nullptr; }
    const CoeffField& field() const;

    bool is_zero() const;
    KScalar operator-() const;
    KScalar inverse() const;  // throws std::domain_error on zero
    KScalar pow(long long e) const;

    friend KScalar operator+(const KScalar& a, const KScalar& b);
    friend KScalar operator-(const KScalar& a, const KScalar& b);
    friend KScalar operator*(const KScalar& a, const KScalar& b);
    friend KScalar operator/(const KScalar& a, const KScalar& b);
    KScalar& operator+=(const KScalar& o);
    KScalar& operator*=(const KScalar& o);
    friend bool operator==(const KScalar& a, const KScalar& b);
    friend bool operator!=(const KScalar& a, const KScalar& b) { return !(a == b); }

    /// Field automorphism zeta -> zeta^(-1) of Q(zeta_p). Cyclotomic mode only.
    KScalar galois_conj() const;

    bool is_rational() const;   // lies in the prime subfield Q (cyclotomic) / always true (modular)
    bool is_integer() const;
    long long to_integer() const;  // throws std::domain_error when not an integer
    mpq_class rational() const;    // cyclotomic only; throws when not rational

    /// Size of the largest numerator/denominator in bits (cyclotomic mode);
    /// used by the span-closure blow-up guard.
    size_t coeff_bits() const;

    /// Canonical text form: "c0 + c1*z + ..." with exact rationals "a/b"
    /// (cyclotomic), or the residue integer (modular).
    std::string encode() const;
    static KScalar decode(const CoeffField& K, const std::string& text);

private:
    friend class CoeffField;
    const CoeffField* K_ = nullptr;
    std::vector<mpq_class> c_;       // cyclotomic: size p-1
    unsigned long long r_ = 0;       // modular

    explicit KScalar(const CoeffField& K) : K_(&K) {}
};

/// The coefficient field K containing a nontrivial p-th root of unity zeta:
/// either Q(zeta_p) (characteristic 0) or F_ell with p | ell - 1.
///
/// Also owns the fixed homomorphism theta : F_q^+ -> K^x given by
/// theta(a) = zeta^Tr(a), with Tr the absolute trace to F_p.
class CoeffField {
public:
    enum class Mode { cyclotomic, modular };

    static const CoeffField& cyclotomic(int p);
    /// Requires ell prime, ell != p, p | ell - 1. zeta is the smallest
    /// primitive p-th root of unity in F_ell.
    static const CoeffField& modular(int p, long long ell);

    Mode mode() const { return mode_; }
    int p() const { return p_; }
    long long ell() const { return ell_; }
    unsigned long long zeta_residue() const { return zeta_mod_; }

    KScalar zero() const;
    KScalar one() const;
    KScalar from_int(long long v) const;
    KScalar from_rational(const mpq_class& v) const;  // modular mode inverts the denominator
    KScalar zeta() const { return zeta_pow(1); }
    KScalar zeta_pow(long long t) const;

    /// theta(a) = zeta^Tr(a); requires the characteristic of a's field to be p.
    KScalar theta(FqScalar a) const;

    std::string str() const;   // "Q(zeta_2)" or "F_7 (zeta_2 = 6)"
    std::string tag() const;   // filename-friendly: "cyc" or "mod7"

private:
    CoeffField(Mode m, int p, long long ell);

    Mode mode_;
    int p_;
    long long ell_ = 0;
    unsigned long long zeta_mod_ = 0;

    friend class KScalar;
};

} // namespace glnq

#pragma once

#include <string>
#include <vector>

namespace glnq {

class FieldSpec;

/// Element of F_q, identified by its integer encoding 0..q-1: the coefficient
/// vector of the residue polynomial in base p, constant term least
/// significant. Scalars remember their field, so mixing fields is an error.
struct FqScalar {
    const FieldSpec* field = nullptr;
    int v = 0;

    FqScalar() = default;
    FqScalar(const FieldSpec& f, int encoding);

    bool is_zero() const { return v == 0; }
    int encoding() const { return v; }
    std::string str() const { return std::to_string(v); }

    FqScalar operator-() const;
    FqScalar inverse() const;  // throws std::domain_error on zero
    FqScalar pow(long long e) const;

    friend FqScalar operator+(FqScalar a, FqScalar b);
    friend FqScalar operator-(FqScalar a, FqScalar b);
    friend FqScalar operator*(FqScalar a, FqScalar b);
    friend FqScalar operator/(FqScalar a, FqScalar b);
    friend bool operator==(FqScalar a, FqScalar b);
    friend bool operator!=(FqScalar a, FqScalar b) { return !(a == b); }
};

/// Exact arithmetic in F_q, q = p^k <= bound.
///
/// Extension fields are polynomial quotients F_p[x]/(m) with m the
/// lexicographically smallest monic irreducible of degree k (coefficients
/// compared low degree first); the arithmetic tables are filled once at
/// construction from explicit polynomial arithmetic. Instances live in a
/// process-wide registry keyed by q, so two scalars of the same q always share
/// one FieldSpec and pointer comparison detects mixed-field use.
class FieldSpec {
public:
    static constexpr int default_max_q = 16;

    /// The shared F_q instance. Throws std::invalid_argument if q is not a
    /// prime power or exceeds the bound.
    static const FieldSpec& get(int q, int max_q = default_max_q);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    /// Modulus polynomial coefficients c_0..c_k (monic, degree k); for k = 1
    /// this is x - 0, i.e. the residue map itself.
    const std::vector<int>& modulus() const { return modulus_; }

    FqScalar element(int encoding) const;
    FqScalar zero() const { return element(0); }
    FqScalar one() const { return element(1); }
    /// Cached generator of the multiplicative group.
    FqScalar primitive() const { return element(primitive_); }

    // Raw operations on encodings.
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;  // throws std::domain_error on zero
    int pow(int a, long long e) const;

    /// Absolute trace Tr(a) = a + a^p + ... + a^(p^(k-1)), as an element of
    /// the prime field: an integer in [0, p).
    int trace(int a) const { return trace_[a]; }

    std::string str() const;

private:
    explicit FieldSpec(int q);

    int check(int a) const;

    int p_ = 0, k_ = 0, q_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_, trace_;
    int primitive_ = 0;
};

/// Writes p and k and returns true if q = p^k for a prime p, k >= 1.
bool is_prime_power(int q, int& p, int& k);

} // namespace glnq

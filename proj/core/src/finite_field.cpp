#include "glnq/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace glnq {

namespace {

bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// Polynomials over F_p as little-endian coefficient vectors.
using Poly = std::vector<int>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return trim(c);
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    a = trim(a);
    int dm = static_cast<int>(m.size()) - 1;
    int lead_inv = 0;
    for (int x = 1; x < p; ++x)
        if (m[dm] * x % p == 1) lead_inv = x;
    while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        int factor = a[da] * lead_inv % p;
        for (int i = 0; i <= dm; ++i) {
            int idx = da - dm + i;
            a[idx] = ((a[idx] - factor * m[i]) % p + p) % p;
        }
        a = trim(a);
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
    return poly_mod(a, d, p).empty();
}

// Exhaustive factor search; only tiny degrees ever reach here.
bool is_irreducible(const Poly& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        // all monic candidates of degree d
        int total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (int code = 0; code < total; ++code) {
            Poly cand(d + 1, 0);
            int c = code;
            for (int i = 0; i < d; ++i) {
                cand[i] = c % p;
                c /= p;
            }
            cand[d] = 1;
            if (poly_divides(cand, f, p)) return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree k, comparing the coefficient tuples
// (c_0, ..., c_{k-1}) lexicographically.
Poly smallest_irreducible(int p, int k) {
    int total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (int code = 0; code < total; ++code) {
        Poly cand(k + 1, 0);
        int c = code;
        for (int i = k - 1; i >= 0; --i) {  // c_0 is the most significant digit
            cand[i] = c % p;
            c /= p;
        }
        cand[k] = 1;
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Poly decode(int enc, int p, int k) {
    Poly a(k, 0);
    for (int i = 0; i < k; ++i) {
        a[i] = enc % p;
        enc /= p;
    }
    return trim(a);
}

int encode(const Poly& a, int p) {
    int enc = 0, base = 1;
    for (int c : a) {
        enc += c * base;
        base *= p;
    }
    return enc;
}

} // namespace

bool is_prime_power(int q, int& p, int& k) {
    if (q < 2) return false;
    for (int d = 2; d <= q; ++d) {
        if (q % d) continue;
        if (!is_prime(d)) return false;  // smallest divisor must be prime
        p = d;
        k = 0;
        int m = q;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        return m == 1;
    }
    return false;
}

FieldSpec::FieldSpec(int q) : q_(q) {
    if (!is_prime_power(q, p_, k_)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    modulus_ = (k_ == 1) ? Poly{0, 1} : smallest_irreducible(p_, k_);

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, -1);
    trace_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        Poly pa = decode(a, p_, k_);
        Poly na;
        for (int c : pa) na.push_back((p_ - c) % p_);
        neg_[a] = encode(trim(na), p_);
        for (int b = 0; b < q_; ++b) {
            Poly pb = decode(b, p_, k_);
            Poly s(std::max(pa.size(), pb.size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                int x = (i < pa.size() ? pa[i] : 0) + (i < pb.size() ? pb[i] : 0);
                s[i] = x % p_;
            }
            add_[a * q_ + b] = encode(trim(s), p_);
            mul_[a * q_ + b] = encode(poly_mod(poly_mul(pa, pb, p_), modulus_, p_), p_);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;

    // Tr(a) = sum of the k Frobenius images; lands in the prime field.
    for (int a = 0; a < q_; ++a) {
        int acc = 0, im = a;
        for (int i = 0; i < k_; ++i) {
            acc = add(acc, im);
            im = pow(im, p_);
        }
        if (acc >= p_) throw std::logic_error("trace left the prime field");
        trace_[a] = acc;
    }

    primitive_ = 1;
    for (int a = 2; a < q_; ++a) {
        int ord = 1, x = a;
        while (x != 1) {
            x = mul_[x * q_ + a];
            ++ord;
        }
        if (ord == q_ - 1) {
            primitive_ = a;
            break;
        }
    }
}

const FieldSpec& FieldSpec::get(int q, int max_q) {
    if (q > max_q)
        throw std::invalid_argument("q = " + std::to_string(q) + " exceeds the field bound " + std::to_string(max_q));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FieldSpec>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(q);
    if (it == registry.end())
        it = registry.emplace(q, std::unique_ptr<FieldSpec>(new FieldSpec(q))).first;
    return *it->second;
}

int FieldSpec::check(int a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("scalar encoding out of range");
    return a;
}

FqScalar FieldSpec::element(int encoding) const {
    check(encoding);
    return FqScalar(*this, encoding);
}

int FieldSpec::inv(int a) const {
    check(a);
    if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
    return inv_[a];
}

int FieldSpec::pow(int a, long long e) const {
    check(a);
    if (e < 0) return pow(inv(a), -e);
    int acc = 1, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::string FieldSpec::str() const {
    if (k_ == 1) return "F_" + std::to_string(q_);
    std::string mod;
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (modulus_[i] == 0) continue;
        if (!mod.empty()) mod += "+";
        if (i == 0 || modulus_[i] != 1) mod += std::to_string(modulus_[i]);
        if (i == 1) mod += "x";
        if (i > 1) mod += "x^" + std::to_string(i);
    }
    return "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[x]/(" + mod + ")";
}

FqScalar::FqScalar(const FieldSpec& f, int encoding) : field(&f), v(encoding) {
    if (v < 0 || v >= f.q()) throw std::out_of_range("scalar encoding out of range");
}

namespace {
const FieldSpec* common_field(FqScalar a, FqScalar b) {
    if (!a.field || !b.field) throw std::invalid_argument("uninitialized scalar");
    if (a.field != b.field) throw std::invalid_argument("mixed-field scalar arithmetic");
    return a.field;
}
} // namespace

FqScalar FqScalar::operator-() const { return FqScalar(*field, field->neg(v)); }
FqScalar FqScalar::inverse() const { return FqScalar(*field, field->inv(v)); }
FqScalar FqScalar::pow(long long e) const { return FqScalar(*field, field->pow(v, e)); }

FqScalar operator+(FqScalar a, FqScalar b) {
    const FieldSpec* f = common_field(a, b);
    return FqScalar(*f, f->add(a.v, b.v));
}
FqScalar operator-(FqScalar a, FqScalar b) {
    const FieldSpec* f = common_field(a, b);
    return FqScalar(*f, f->sub(a.v, b.v));
}
FqScalar operator*(FqScalar a, FqScalar b) {
    const FieldSpec* f = common_field(a, b);
    return FqScalar(*f, f->mul(a.v, b.v));
}
FqScalar operator/(FqScalar a, FqScalar b) {
    const FieldSpec* f = common_field(a, b);
    return FqScalar(*f, f->mul(a.v, f->inv(b.v)));
}
bool operator==(FqScalar a, FqScalar b) { return common_field(a, b) && a.v == b.v; }

} // namespace glnq

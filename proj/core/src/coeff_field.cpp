#include "glnq/coeff_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace glnq {

namespace {

bool is_prime_ll(long long m) {
    if (m < 2) return false;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

unsigned long long pow_mod(unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) acc = acc * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return acc;
}

// Rational polynomials, little-endian; used only for inversion mod Phi_p.
using QPoly = std::vector<mpq_class>;

QPoly qtrim(QPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return qtrim(c);
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), mpq_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return qtrim(a);
}

// a = q*b + r with deg r < deg b
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    a = qtrim(a);
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        mpq_class f = a[da] / b[db];
        if (static_cast<int>(q.size()) < da - db + 1) q.resize(da - db + 1, mpq_class(0));
        q[da - db] = f;
        QPoly shifted(da - db, mpq_class(0));
        shifted.insert(shifted.end(), b.begin(), b.end());
        for (auto& x : shifted) x *= f;
        a = qsub(a, shifted);
    }
    return {qtrim(q), a};
}

// Extended Euclid: returns (g, s) with s*a = g mod m, g = gcd(a, m) a nonzero
// constant when a is invertible mod the irreducible m.
std::pair<QPoly, QPoly> qegcd(QPoly a, QPoly m) {
    QPoly r0 = m, r1 = a;
    QPoly s0 = {}, s1 = {mpq_class(1)};
    while (!r1.empty()) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    return {r0, s0};
}

} // namespace

CoeffField::CoeffField(Mode m, int p, long long ell) : mode_(m), p_(p), ell_(ell) {
    if (!is_prime_ll(p)) throw std::invalid_argument("p must be prime");
    if (mode_ == Mode::modular) {
        if (!is_prime_ll(ell)) throw std::invalid_argument("ell must be prime");
        if (ell == p) throw std::invalid_argument("ell must differ from p");
        if ((ell - 1) % p != 0)
            throw std::invalid_argument("modular coefficients need p | ell - 1");
        for (unsigned long long z = 2; z < static_cast<unsigned long long>(ell); ++z) {
            if (pow_mod(z, p, ell) == 1) {
                zeta_mod_ = z;  // z != 1 and z^p = 1, so z has order exactly p
                break;
            }
        }
    }
}

const CoeffField& CoeffField::cyclotomic(int p) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CoeffField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(p);
    if (it == registry.end())
        it = registry.emplace(p, std::unique_ptr<CoeffField>(new CoeffField(Mode::cyclotomic, p, 0))).first;
    return *it->second;
}

const CoeffField& CoeffField::modular(int p, long long ell) {
    static std::mutex mu;
    static std::map<std::pair<int, long long>, std::unique_ptr<CoeffField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, ell);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<CoeffField>(new CoeffField(Mode::modular, p, ell))).first;
    return *it->second;
}

KScalar CoeffField::zero() const {
    KScalar s(*this);
    if (mode_ == Mode::cyclotomic) s.c_.assign(p_ - 1, mpq_class(0));
    return s;
}

KScalar CoeffField::one() const { return from_int(1); }

KScalar CoeffField::from_int(long long v) const {
    KScalar s = zero();
    if (mode_ == Mode::cyclotomic) {
        s.c_[0] = static_cast<long>(v);
    } else {
        long long r = v % ell_;
        if (r < 0) r += ell_;
        s.r_ = static_cast<unsigned long long>(r);
    }
    return s;
}

KScalar CoeffField::from_rational(const mpq_class& v) const {
    if (mode_ == Mode::cyclotomic) {
        KScalar s = zero();
        s.c_[0] = v;
        return s;
    }
    long long num = mpz_class(v.get_num()).get_si() % ell_;
    long long den = mpz_class(v.get_den()).get_si() % ell_;
    if (den == 0) throw std::domain_error("denominator vanishes mod ell");
    KScalar s = from_int(num);
    return s / from_int(den);
}

KScalar CoeffField::zeta_pow(long long t) const {
    long long e = t % p_;
    if (e < 0) e += p_;
    if (mode_ == Mode::modular) {
        KScalar s(*this);
        s.r_ = pow_mod(zeta_mod_, static_cast<unsigned long long>(e), ell_);
        return s;
    }
    KScalar s = zero();
    if (e < p_ - 1) {
        s.c_[e] = 1;
    } else {
        // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        for (int i = 0; i < p_ - 1; ++i) s.c_[i] = -1;
    }
    return s;
}

KScalar CoeffField::theta(FqScalar a) const {
    if (!a.field) throw std::invalid_argument("uninitialized scalar");
    if (a.field->p() != p_)
        throw std::invalid_argument("theta requires matching characteristic p");
    return zeta_pow(a.field->trace(a.v));
}

std::string CoeffField::str() const {
    if (mode_ == Mode::cyclotomic)
        return p_ == 2 ? "Q" : "Q(zeta_" + std::to_string(p_) + ")";
    return "F_" + std::to_string(ell_) + " (zeta_" + std::to_string(p_) + " = " + std::to_string(zeta_mod_) + ")";
}

std::string CoeffField::tag() const {
    return mode_ == Mode::cyclotomic ? "cyc" : "mod" + std::to_string(ell_);
}

// ---------------------------------------------------------------------------
// KScalar

namespace {
const CoeffField* common(const KScalar& a, const KScalar& b) {
    if (!a.is_valid() || !b.is_valid()) throw std::invalid_argument("uninitialized coefficient scalar");
    if (&a.field() != &b.field()) throw std::invalid_argument("mixed coefficient fields");
    return &a.field();
}
} // namespace

const CoeffField& KScalar::field() const {
    if (!K_) throw std::invalid_argument("uninitialized coefficient scalar");
    return *K_;
}

bool KScalar::is_zero() const {
    if (K_->mode() == CoeffField::Mode::modular) return r_ == 0;
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

KScalar KScalar::operator-() const {
    KScalar s = *this;
    if (K_->mode() == CoeffField::Mode::modular) {
        s.r_ = r_ == 0 ? 0 : K_->ell() - r_;
    } else {
        for (auto& x : s.c_) x = -x;
    }
    return s;
}

KScalar operator+(const KScalar& a, const KScalar& b) {
    const CoeffField* K = common(a, b);
    KScalar s = a;
    if (K->mode() == CoeffField::Mode::modular) {
        s.r_ = (a.r_ + b.r_) % K->ell();
    } else {
        for (size_t i = 0; i < s.c_.size(); ++i) s.c_[i] += b.c_[i];
    }
    return s;
}

KScalar operator-(const KScalar& a, const KScalar& b) { return a + (-b); }

KScalar operator*(const KScalar& a, const KScalar& b) {
    const CoeffField* K = common(a, b);
    KScalar s = K->zero();
    if (K->mode() == CoeffField::Mode::modular) {
        s.r_ = a.r_ * b.r_ % K->ell();
        return s;
    }
    int p = K->p();
    // exponents live mod p since zeta^p = 1
    std::vector<mpq_class> folded(p, mpq_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            folded[(i + j) % p] += a.c_[i] * b.c_[j];
        }
    }
    // canonical form: zeta^(p-1) = -(1 + ... + zeta^(p-2))
    for (int i = 0; i < p - 1; ++i) s.c_[i] = folded[i] - folded[p - 1];
    return s;
}

KScalar& KScalar::operator+=(const KScalar& o) { return *this = *this + o; }
KScalar& KScalar::operator*=(const KScalar& o) { return *this = *this * o; }

KScalar KScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in K");
    if (K_->mode() == CoeffField::Mode::modular) {
        KScalar s(*K_);
        s.r_ = pow_mod(r_, static_cast<unsigned long long>(K_->ell() - 2), K_->ell());
        return s;
    }
    int p = K_->p();
    QPoly phi(p, mpq_class(1));  // 1 + x + ... + x^(p-1)
    QPoly a(c_.begin(), c_.end());
    a = qtrim(a);
    auto [g, s] = qegcd(a, phi);
    if (g.size() != 1) throw std::logic_error("cyclotomic inversion failed");
    KScalar inv = K_->zero();
    for (size_t i = 0; i < s.size() && i < inv.c_.size(); ++i) inv.c_[i] = s[i] / g[0];
    // s may reach degree p-2 at most (deg a < deg phi), so no folding needed
    return inv;
}

KScalar operator/(const KScalar& a, const KScalar& b) { return a * b.inverse(); }

KScalar KScalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    KScalar acc = K_->one();
    KScalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const KScalar& a, const KScalar& b) {
    const CoeffField* K = common(a, b);
    if (K->mode() == CoeffField::Mode::modular) return a.r_ == b.r_;
    return a.c_ == b.c_;
}

KScalar KScalar::galois_conj() const {
    if (K_->mode() != CoeffField::Mode::cyclotomic)
        throw std::domain_error("galois_conj is defined in cyclotomic mode only");
    int p = K_->p();
    std::vector<mpq_class> folded(p, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) folded[(p - i) % p] += c_[i];
    KScalar s = K_->zero();
    for (int i = 0; i < p - 1; ++i) s.c_[i] = folded[i] - folded[p - 1];
    return s;
}

bool KScalar::is_rational() const {
    if (K_->mode() == CoeffField::Mode::modular) return true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool KScalar::is_integer() const {
    if (K_->mode() == CoeffField::Mode::modular) return true;
    return is_rational() && c_[0].get_den() == 1;
}

long long KScalar::to_integer() const {
    if (K_->mode() == CoeffField::Mode::modular) return static_cast<long long>(r_);
    if (!is_integer()) throw std::domain_error("coefficient is not an integer: " + encode());
    return mpz_class(c_[0].get_num()).get_si();
}

mpq_class KScalar::rational() const {
    if (K_->mode() != CoeffField::Mode::cyclotomic || !is_rational())
        throw std::domain_error("coefficient is not rational");
    return c_[0];
}

size_t KScalar::coeff_bits() const {
    if (K_->mode() == CoeffField::Mode::modular) return 0;
    size_t bits = 0;
    for (const auto& x : c_) {
        bits = std::max(bits, mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
        bits = std::max(bits, mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
    }
    return bits;
}

std::string KScalar::encode() const {
    if (K_->mode() == CoeffField::Mode::modular) return std::to_string(r_);
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += " + ";
        out += c_[i].get_str();
        if (i == 1) out += "*z";
        if (i > 1) out += "*z^" + std::to_string(i);
    }
    return out;
}

KScalar KScalar::decode(const CoeffField& K, const std::string& text) {
    if (K.mode() == CoeffField::Mode::modular) {
        KScalar s = K.zero();
        s.r_ = std::stoull(text);
        if (s.r_ >= static_cast<unsigned long long>(K.ell())) throw std::invalid_argument("residue out of range");
        return s;
    }
    KScalar s = K.zero();
    std::string rest = text;
    size_t idx = 0;
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t next = rest.find(" + ", pos);
        std::string term = rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        size_t star = term.find('*');
        std::string coeff = (star == std::string::npos) ? term : term.substr(0, star);
        if (idx >= s.c_.size()) throw std::invalid_argument("too many cyclotomic terms");
        s.c_[idx] = mpq_class(coeff);
        s.c_[idx].canonicalize();
        ++idx;
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    if (idx != s.c_.size()) throw std::invalid_argument("bad cyclotomic scalar: " + text);
    return s;
}

} // namespace glnq

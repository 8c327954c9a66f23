#include "glnq/flag_module.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace glnq {

namespace {

constexpr size_t kMaxCoeffBits = 8192;

// Suffix dimensions d_c = sum of lambda'_{c'} over c' >= c, 1-based c.
std::vector<int> suffix_dims(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    int m = lambda.part(0);
    std::vector<int> dims(m, 0);
    for (int c = m - 1; c >= 0; --c)
        dims[c] = conj.part(c) + (c + 1 < m ? dims[c + 1] : 0);
    return dims;
}

} // namespace

Flag::Flag(std::vector<Subspace> chain) : chain_(std::move(chain)) {
    if (chain_.empty()) throw std::invalid_argument("flag chain must be nonempty");
    int n = chain_[0].ambient();
    if (chain_[0].dim() != n) throw std::invalid_argument("flag chain must start at the full space");
    for (size_t i = 1; i < chain_.size(); ++i) {
        if (chain_[i].ambient() != n) throw std::invalid_argument("flag chain ambient mismatch");
        if (chain_[i].dim() >= chain_[i - 1].dim() || !chain_[i - 1].contains(chain_[i]))
            throw std::invalid_argument("flag chain must be strictly nested");
    }
    build_key();
}

void Flag::build_key() {
    key_.clear();
    for (const auto& s : chain_) key_.push_back(s.dim());
    for (const auto& s : chain_)
        for (int r = 0; r < s.basis().rows(); ++r)
            for (int c = 0; c < s.basis().cols(); ++c) key_.push_back(s.basis().enc(r, c));
}

Flag Flag::of_tableau(const FqTableau& t) {
    std::vector<Subspace> chain;
    int m = t.columns();
    for (int c = 0; c < m; ++c) {
        std::vector<FqVector> vs;
        for (int i = 0; i < t.n(); ++i)
            if (t.col_of(i) >= c) vs.push_back(t.entry(i));
        chain.push_back(Subspace::span(t.field(), t.n(), vs));
    }
    return Flag(std::move(chain));
}

Flag Flag::apply(const FqMatrix& g) const {
    std::vector<Subspace> chain;
    for (const auto& s : chain_) chain.push_back(s.apply(g));
    return Flag(std::move(chain));
}

std::string Flag::str() const {
    std::string out;
    for (size_t i = 0; i < chain_.size(); ++i) {
        if (i) out += " > ";
        out += chain_[i].str();
    }
    return out;
}

mpz_class gaussian_binomial(int m, int d, int q) {
    if (d < 0 || d > m) return 0;
    // prod_{i=0}^{d-1} (q^(m-i) - 1) / (q^(i+1) - 1); exact at every step
    mpz_class num = 1, den = 1, qz = q;
    for (int i = 0; i < d; ++i) {
        mpz_class qm, qd;
        mpz_pow_ui(qm.get_mpz_t(), qz.get_mpz_t(), m - i);
        mpz_pow_ui(qd.get_mpz_t(), qz.get_mpz_t(), i + 1);
        num *= qm - 1;
        den *= qd - 1;
    }
    return num / den;
}

mpz_class flag_count(const Partition& lambda, int q) {
    auto dims = suffix_dims(lambda);
    mpz_class acc = 1;
    for (size_t c = 1; c < dims.size(); ++c) acc *= gaussian_binomial(dims[c - 1], dims[c], q);
    return acc;
}

namespace {

// All d-dimensional subspaces of W, via canonical RREF coefficient matrices
// in W-coordinates.
void subspaces_of(const Subspace& w, int d, std::vector<Subspace>& out) {
    const FieldSpec& f = w.basis().field();
    int wd = w.dim();
    if (d == 0) {
        out.push_back(Subspace::span(f, w.ambient(), {}));
        return;
    }
    // iterate over pivot-column combinations
    std::vector<int> pivots(d);
    for (int i = 0; i < d; ++i) pivots[i] = i;
    while (true) {
        // free positions of the RREF pattern for this pivot set
        std::vector<bool> is_pivot(wd, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < d; ++r)
            for (int c = pivots[r] + 1; c < wd; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);

        std::vector<int> digits(free_pos.size(), 0);
        while (true) {
            FqMatrix coeff(f, d, wd);
            for (int r = 0; r < d; ++r) coeff.set_enc(r, pivots[r], 1);
            for (size_t k = 0; k < free_pos.size(); ++k)
                coeff.set_enc(free_pos[k].first, free_pos[k].second, digits[k]);
            FqMatrix ambient_rows = coeff * w.basis();
            std::vector<FqVector> rows;
            for (int r = 0; r < d; ++r) rows.push_back(ambient_rows.row(r));
            out.push_back(Subspace::span(f, w.ambient(), rows));

            bool more = false;
            for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
                if (++*it < f.q()) {
                    more = true;
                    break;
                }
                *it = 0;
            }
            if (!more) break;
        }

        // next pivot combination in lexicographic order
        int i = d - 1;
        while (i >= 0 && pivots[i] == wd - d + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

void extend_chain(std::vector<Subspace>& chain, const std::vector<int>& dims, size_t level,
                  std::uint64_t max_flags, std::vector<Flag>& out) {
    if (level == dims.size()) {
        out.push_back(Flag(chain));
        if (out.size() > max_flags) throw budget_error("flag enumeration exceeds the flag budget");
        return;
    }
    std::vector<Subspace> subs;
    subspaces_of(chain.back(), dims[level], subs);
    for (auto& s : subs) {
        chain.push_back(std::move(s));
        extend_chain(chain, dims, level + 1, max_flags, out);
        chain.pop_back();
    }
}

} // namespace

std::vector<Flag> enumerate_flags(const Partition& lambda, const FieldSpec& f, EnumBudget budget) {
    if (lambda.sum() < 1) throw std::invalid_argument("empty shape");
    if (flag_count(lambda, f.q()) > mpz_class(static_cast<unsigned long>(budget.max_flags)))
        throw budget_error("flag count for " + lambda.str() + " exceeds the flag budget");
    auto dims = suffix_dims(lambda);
    std::vector<Flag> out;
    std::vector<Subspace> chain{Subspace::full(f, lambda.sum())};
    extend_chain(chain, dims, 1, budget.max_flags, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// MVector

KScalar MVector::coeff(const Flag& f) const {
    auto it = c_.find(f);
    return it == c_.end() ? K_->zero() : it->second;
}

void MVector::add_to(const Flag& f, const KScalar& k) {
    if (k.is_zero()) return;
    auto [it, inserted] = c_.emplace(f, k);
    if (!inserted) {
        it->second += k;
        if (it->second.is_zero()) c_.erase(it);
    }
}

const Flag& MVector::leading_flag() const {
    if (c_.empty()) throw std::logic_error("leading flag of the zero vector");
    return c_.begin()->first;
}

const KScalar& MVector::leading_coeff() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero vector");
    return c_.begin()->second;
}

MVector MVector::operator+(const MVector& o) const {
    MVector r = *this;
    for (const auto& [f, k] : o.c_) r.add_to(f, k);
    return r;
}

MVector MVector::operator-(const MVector& o) const {
    MVector r = *this;
    for (const auto& [f, k] : o.c_) r.add_to(f, -k);
    return r;
}

MVector MVector::scaled(const KScalar& k) const {
    MVector r(shape_, *K_);
    if (k.is_zero()) return r;
    for (const auto& [f, c] : c_) r.c_.emplace(f, c * k);
    return r;
}

void MVector::axpy(const KScalar& k, const MVector& o) {
    if (k.is_zero()) return;
    for (const auto& [f, c] : o.c_) add_to(f, k * c);
}

MVector MVector::apply(const FqMatrix& g) const {
    MVector r(shape_, *K_);
    for (const auto& [f, c] : c_) r.add_to(f.apply(g), c);
    return r;
}

KScalar MVector::inner(const MVector& o) const {
    KScalar acc = K_->zero();
    const auto& small = c_.size() <= o.c_.size() ? c_ : o.c_;
    const auto& large = c_.size() <= o.c_.size() ? o.c_ : c_;
    for (const auto& [f, c] : small) {
        auto it = large.find(f);
        if (it != large.end()) acc += c * it->second;
    }
    return acc;
}

bool MVector::operator==(const MVector& o) const {
    if (shape_ != o.shape_) return false;
    if (c_.size() != o.c_.size()) return false;
    auto a = c_.begin();
    auto b = o.c_.begin();
    for (; a != c_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

void MVector::dump(std::ostream& os, const std::vector<Flag>& flag_order) const {
    std::map<Flag, int> index;
    for (size_t i = 0; i < flag_order.size(); ++i) index.emplace(flag_order[i], static_cast<int>(i));
    for (const auto& [f, c] : c_) {
        auto it = index.find(f);
        if (it == index.end()) throw std::invalid_argument("flag missing from the enumeration order");
        os << it->second << ": " << c.encode() << "\n";
    }
}

MVector m_vector(const CoeffField& K, const FqTableau& t) {
    MVector v(t.shape(), K);
    v.add_to(Flag::of_tableau(t), K.one());
    return v;
}

namespace {

Flag flag_from_columns(const FqMatrix& cols, const FqTableau& t) {
    std::vector<Subspace> chain;
    int m = t.columns();
    for (int c = 0; c < m; ++c) {
        std::vector<FqVector> vs;
        for (int i = 0; i < t.n(); ++i)
            if (t.col_of(i) >= c) vs.push_back(cols.col(i));
        chain.push_back(Subspace::span(t.field(), t.n(), vs));
    }
    return Flag(std::move(chain));
}

// Shared loop of e_vector / k_apply: for every u in U_{lambda'} yields the raw
// u together with the exponent e of psi_T(g_u) = zeta^e, g_u = A u A^{-1}.
template <typename Fn>
void for_each_u(const FqTableau& t, EnumBudget budget, Fn&& fn) {
    const FieldSpec& f = t.field();
    ULambdaEnumerator raw(t.shape().conjugate(), f, false, budget);
    if (raw.count() > budget.max_elements)
        throw budget_error("|U(T)| = " + std::to_string(raw.count()) + " exceeds the element budget");
    auto xp = x_pairs(t).pairs;
    while (auto u = raw.next()) {
        int s = 0;
        for (auto [i, j] : xp) s = f.add(s, u->enc(i, j));
        fn(*u, f.trace(s));
    }
}

} // namespace

MVector e_vector(const CoeffField& K, const FqTableau& t, EnumBudget budget) {
    if (K.p() != t.field().p())
        throw std::invalid_argument("coefficient field characteristic mismatch");
    MVector v(t.shape(), K);
    const FqMatrix& a = t.basis_matrix();
    for_each_u(t, budget, [&](const FqMatrix& u, int e) {
        // psi_T(g^{-1}) = zeta^{-e}; the flag of g.T comes from the columns of A u
        v.add_to(flag_from_columns(a * u, t), K.zeta_pow(-e));
    });
    return v;
}

MVector k_apply(const CoeffField& K, const FqTableau& t, const MVector& v, EnumBudget budget) {
    if (v.shape().sum() != t.n())
        throw std::invalid_argument("k_apply requires |shape(v)| = |shape(T)|");
    MVector r(v.shape(), K);
    const FqMatrix& a = t.basis_matrix();
    const FqMatrix& a_inv = t.basis_inverse();
    for_each_u(t, budget, [&](const FqMatrix& u, int e) {
        FqMatrix g = a * u * a_inv;
        KScalar coeff = K.zeta_pow(-e);
        for (const auto& [f, c] : v.coeffs()) r.add_to(f.apply(g), coeff * c);
    });
    return r;
}

// ---------------------------------------------------------------------------
// SpanBasis

MVector SpanBasis::reduce(MVector v) const {
    // rows are fully reduced, so one ascending sweep suffices
    for (const auto& row : rows_) {
        if (v.is_zero()) break;
        KScalar c = v.coeff(row.leading_flag());
        if (!c.is_zero()) v.axpy(-c, row);
    }
    return v;
}

bool SpanBasis::insert(MVector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    v = v.scaled(v.leading_coeff().inverse());
    for (auto& row : rows_) {
        KScalar c = row.coeff(v.leading_flag());
        if (!c.is_zero()) row.axpy(-c, v);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), v,
                                [](const MVector& a, const MVector& b) {
                                    return a.leading_flag() < b.leading_flag();
                                });
    rows_.insert(pos, std::move(v));
    if (K_->mode() == CoeffField::Mode::cyclotomic) {
        for (const auto& row : rows_)
            for (const auto& [f, c] : row.coeffs())
                if (c.coeff_bits() > kMaxCoeffBits)
                    throw std::runtime_error(
                        "coefficient blow-up in span closure (needs " +
                        std::to_string(c.coeff_bits()) + " bits); aborting");
    }
    return true;
}

std::vector<KScalar> SpanBasis::solve(const MVector& v) const {
    std::vector<KScalar> coords;
    coords.reserve(rows_.size());
    MVector rem = v;
    for (const auto& row : rows_) {
        KScalar c = rem.coeff(row.leading_flag());
        coords.push_back(c);
        if (!c.is_zero()) rem.axpy(-c, row);
    }
    if (!rem.is_zero())
        throw std::runtime_error("vector is outside the span (basis is not G-stable?)");
    return coords;
}

void SpanBasis::dump_tsv(std::ostream& os, const std::vector<Flag>& flag_order) const {
    for (const auto& row : rows_) {
        for (size_t i = 0; i < flag_order.size(); ++i) {
            if (i) os << '\t';
            os << row.coeff(flag_order[i]).encode();
        }
        os << '\n';
    }
}

SpanBasis span_closure(const MVector& seed, const std::vector<FqMatrix>& generators,
                       EnumBudget budget) {
    SpanBasis basis(seed.shape(), seed.coeff_field());
    std::vector<MVector> queue;
    if (basis.insert(seed)) queue.push_back(seed);
    for (size_t head = 0; head < queue.size(); ++head) {
        MVector v = queue[head];
        for (const auto& g : generators) {
            MVector w = v.apply(g);
            if (basis.insert(w)) {
                queue.push_back(std::move(w));
                if (queue.size() > budget.max_flags)
                    throw budget_error("span closure exceeds the flag budget");
            }
        }
    }
    return basis;
}

SpanBasis s_basis(const Partition& lambda, const FieldSpec& f, const CoeffField& K,
                  EnumBudget budget) {
    return s_basis_seeded(FqTableau::standard(lambda, f), K, budget);
}

SpanBasis s_basis_seeded(const FqTableau& seed_tableau, const CoeffField& K, EnumBudget budget) {
    MVector seed = e_vector(K, seed_tableau, budget);
    auto gens = spanning_generators(seed_tableau.n(), seed_tableau.field());
    return span_closure(seed, gens, budget);
}

GramResult gram_and_radical(const SpanBasis& basis) {
    const CoeffField& K = basis.coeff_field();
    int dim = basis.rank();
    GramResult res{KMat(K, dim, dim), 0, 0, {}};
    for (int a = 0; a < dim; ++a)
        for (int b = a; b < dim; ++b) {
            KScalar v = basis.rows()[a].inner(basis.rows()[b]);
            res.gram.at(a, b) = v;
            res.gram.at(b, a) = v;
        }
    auto [rank, kernel] = k_rank_and_kernel(res.gram);
    res.d_dim = rank;
    res.radical_dim = dim - rank;
    for (const auto& x : kernel) {
        MVector v(basis.shape(), K);
        for (int k = 0; k < dim; ++k) v.axpy(x[k], basis.rows()[k]);
        res.radical_basis.push_back(std::move(v));
    }
    return res;
}

} // namespace glnq

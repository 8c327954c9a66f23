#include "glnq/characters.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace glnq {

TraceCache::TraceCache(const std::filesystem::path& dir, int n, int q, const CoeffField& K)
    : K_(&K) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    file_ = dir / ("traces_n" + std::to_string(n) + "_q" + std::to_string(q) + "_" + K.tag() + ".tsv");
    if (!std::filesystem::exists(file_)) return;

    std::ifstream in(file_, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    size_t good_end = 0;
    size_t pos = 0;
    while (pos < content.size()) {
        size_t nl = content.find('\n', pos);
        if (nl == std::string::npos) break;  // incomplete trailing record
        std::string line = content.substr(pos, nl - pos);
        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        bool ok = t2 != std::string::npos;
        if (ok) {
            try {
                std::string elem = line.substr(0, t1);
                std::string lam = line.substr(t1 + 1, t2 - t1 - 1);
                KScalar v = KScalar::decode(*K_, line.substr(t2 + 1));
                Partition::parse(lam);
                if (elem.empty()) throw std::invalid_argument("empty element key");
                values_[{elem, lam}] = v;
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok) break;  // truncate from the first bad record on
        good_end = nl + 1;
        pos = nl + 1;
    }
    if (good_end < content.size()) std::filesystem::resize_file(file_, good_end);
}

std::optional<KScalar> TraceCache::lookup(const std::string& element_key,
                                          const Partition& lambda) const {
    auto it = values_.find({element_key, lambda.str()});
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

void TraceCache::store(const std::string& element_key, const Partition& lambda,
                       const KScalar& value) {
    auto key = std::make_pair(element_key, lambda.str());
    if (!values_.emplace(key, value).second) return;  // already present
    if (!file_.empty()) {
        std::ofstream out(file_, std::ios::app | std::ios::binary);
        out << element_key << '\t' << lambda.str() << '\t' << value.encode() << '\n';
    }
}

KMat action_matrix(const FqMatrix& g, const SpanBasis& basis) {
    const CoeffField& K = basis.coeff_field();
    int dim = basis.rank();
    KMat m(K, dim, dim);
    for (int i = 0; i < dim; ++i) {
        std::vector<KScalar> col;
        try {
            col = basis.solve(basis.rows()[i].apply(g));
        } catch (const std::runtime_error&) {
            throw std::runtime_error("g moved a basis vector outside the span; spanning bug");
        }
        for (int k = 0; k < dim; ++k) m.at(k, i) = col[k];
    }
    return m;
}

KScalar ClassFunction::operator()(const FqMatrix& g) const {
    std::string key = g.str();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    KScalar v = eval_(g);
    memo_.emplace(std::move(key), v);
    return v;
}

UnipotentContext::UnipotentContext(int n, int q, const CoeffField& K, EnumBudget budget,
                                   const std::filesystem::path& cache_dir)
    : n_(n), field_(&FieldSpec::get(q)), K_(&K), budget_(budget),
      cache_(cache_dir, n, q, K) {
    if (K.p() != field_->p())
        throw std::invalid_argument("coefficient field characteristic does not match q");
}

const SpanBasis& UnipotentContext::basis(const Partition& lambda) {
    auto it = bases_.find(lambda);
    if (it == bases_.end())
        it = bases_.emplace(lambda, s_basis(lambda, *field_, *K_, budget_)).first;
    return it->second;
}

KScalar UnipotentContext::char_value(const FqMatrix& g, const Partition& lambda) {
    std::string key = g.str();
    if (auto hit = cache_.lookup(key, lambda)) return *hit;
    KScalar v = action_matrix(g, basis(lambda)).trace();
    cache_.store(key, lambda, v);
    return v;
}

ClassFunction UnipotentContext::character(const Partition& lambda) {
    basis(lambda);  // force construction now, not per call
    return ClassFunction("chi_" + lambda.str(),
                         [this, lambda](const FqMatrix& g) { return char_value(g, lambda); });
}

KScalar UnipotentContext::inner_product(const ClassFunction& f1, const ClassFunction& f2) {
    std::uint64_t order = gl_order(n_, field_->q());
    if (order > budget_.max_elements)
        throw budget_error("|GL_" + std::to_string(n_) + "| exceeds the element budget");
    KScalar total = K_->zero();
    GlEnumerator gl(n_, *field_, budget_);
    while (auto g = gl.next()) total += f1(*g) * f2(g->inverse());
    KScalar denom = K_->from_int(static_cast<long long>(order));
    if (denom.is_zero()) throw std::domain_error("|G| is not invertible in K");
    return total / denom;
}

long long UnipotentContext::as_multiplicity(const KScalar& v) const {
    // a residue mod ell is not a multiplicity, so refuse modular coefficients
    if (K_->mode() != CoeffField::Mode::cyclotomic)
        throw std::domain_error("multiplicities require characteristic-0 coefficients");
    long long m = v.to_integer();  // throws when not an exact integer
    if (m < 0) throw std::domain_error("negative multiplicity");
    return m;
}

long long UnipotentContext::parabolic_multiplicity(const Partition& lambda_par,
                                                   const Partition& mu) {
    if (lambda_par.sum() != n_ || mu.sum() != n_)
        throw std::invalid_argument("partitions must have size n");
    std::uint64_t order = p_lambda_order(lambda_par, field_->q());
    if (order > budget_.max_elements)
        throw budget_error("|P_lambda| exceeds the element budget");
    basis(mu);
    KScalar total = K_->zero();
    PLambdaEnumerator ps(lambda_par, *field_, false, budget_);
    while (auto g = ps.next()) total += char_value(*g, mu);
    return as_multiplicity(total / K_->from_int(static_cast<long long>(order)));
}

long long UnipotentContext::ggg_multiplicity(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != n_ || mu.sum() != n_)
        throw std::invalid_argument("partitions must have size n");
    basis(mu);
    FqTableau t = FqTableau::standard(lambda, *field_);
    auto xp = x_pairs(t).pairs;
    ULambdaEnumerator us(lambda.conjugate(), *field_, false, budget_);
    std::uint64_t order = us.count();
    if (order > budget_.max_elements)
        throw budget_error("|U(T)| exceeds the element budget");
    KScalar total = K_->zero();
    while (auto u = us.next()) {
        int s = 0;
        for (auto [i, j] : xp) s = field_->add(s, u->enc(i, j));
        // psi_T(u^{-1}) * chi_{S^mu}(u)
        total += K_->zeta_pow(-field_->trace(s)) * char_value(*u, mu);
    }
    return as_multiplicity(total / K_->from_int(static_cast<long long>(order)));
}

long long UnipotentContext::dgg_multiplicity(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != n_ || mu.sum() != n_)
        throw std::invalid_argument("partitions must have size n");
    basis(mu);
    // superdiagonal positions away from the block boundaries D(lambda)
    std::vector<bool> boundary(n_ + 1, false);
    int acc = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        acc += lambda.part(i);
        boundary[acc] = true;
    }
    Partition column(std::vector<int>(n_, 1));  // (1^n): U_{(1^n)} = UT_n
    ULambdaEnumerator us(column, *field_, false, budget_);
    std::uint64_t order = us.count();
    if (order > budget_.max_elements)
        throw budget_error("|UT_n| exceeds the element budget");
    KScalar total = K_->zero();
    while (auto u = us.next()) {
        FqMatrix inv = u->inverse();
        int s = 0;
        for (int i = 1; i < n_; ++i)
            if (!boundary[i]) s = field_->add(s, inv.enc(i - 1, i));
        // phi_lambda(u^{-1}) * chi_{S^mu}(u)
        total += K_->zeta_pow(field_->trace(s)) * char_value(*u, mu);
    }
    return as_multiplicity(total / K_->from_int(static_cast<long long>(order)));
}

} // namespace glnq

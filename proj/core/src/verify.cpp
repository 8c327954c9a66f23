#include "glnq/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace glnq {

namespace {

class Recorder {
public:
    void ok(const std::string& name) {
        if (seen_.insert(name).second) results_.push_back({name, true, ""});
    }
    void fail(const std::string& name, const std::string& detail) {
        for (auto& r : results_)
            if (r.name == name) {
                if (r.pass) {
                    r.pass = false;
                    r.detail = detail;
                }
                return;
            }
        seen_.insert(name);
        results_.push_back({name, false, detail});
    }
    void check(const std::string& name, bool cond, const std::string& detail) {
        if (cond)
            ok(name);
        else
            fail(name, detail);
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
    std::set<std::string> seen_;
};

std::set<std::string> matrix_set(std::vector<FqMatrix> ms) {
    std::set<std::string> s;
    for (const auto& m : ms) s.insert(m.str());
    return s;
}

std::uint64_t triangle_pow(int q, int n) {
    std::uint64_t acc = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) acc *= q;
    return acc;
}

} // namespace

FqMatrix random_gl(int n, const FieldSpec& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, f.q() - 1);
    while (true) {
        FqMatrix m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set_enc(i, j, dist(rng));
        if (m.rank() == n) return m;
    }
}

MVector random_mvector(const Partition& lambda, const CoeffField& K,
                       const std::vector<Flag>& flags, std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> pick(0, flags.size() - 1);
    std::uniform_int_distribution<int> coeff(1, 6);
    MVector v(lambda, K);
    size_t support = std::min<size_t>(flags.size(), 4);
    while (v.is_zero())
        for (size_t i = 0; i < support; ++i) {
            int c = coeff(rng);
            v.add_to(flags[pick(rng)], K.from_int(c <= 3 ? c : 3 - c));  // 1,2,3,-1,-2,-3
        }
    return v;
}

CheckResult check_submodule_dichotomy(const Partition& lambda, const FieldSpec& f,
                                      const CoeffField& K, int count, std::mt19937_64& rng,
                                      EnumBudget budget) {
    std::string name = "submodule-dichotomy[" + lambda.str() + "]";
    auto flags = enumerate_flags(lambda, f, budget);
    SpanBasis s = s_basis(lambda, f, K, budget);
    auto gens = spanning_generators(lambda.sum(), f);
    for (int trial = 0; trial < count; ++trial) {
        MVector x = random_mvector(lambda, K, flags, rng);
        SpanBasis v = span_closure(x, gens, budget);
        bool contains_s = true;
        for (const auto& row : s.rows())
            if (!v.reduce(row).is_zero()) {
                contains_s = false;
                break;
            }
        bool perp = true;
        for (const auto& vr : v.rows()) {
            for (const auto& sr : s.rows())
                if (!vr.inner(sr).is_zero()) {
                    perp = false;
                    break;
                }
            if (!perp) break;
        }
        if (!contains_s && !perp)
            return {name, false,
                    "trial " + std::to_string(trial) + ": cyclic module of rank " +
                        std::to_string(v.rank()) + " neither contains S nor lies in S-perp"};
    }
    return {name, true, ""};
}

std::vector<CheckResult> verify_lemmas(int n, int q, const CoeffField& K, std::uint64_t seed,
                                       EnumBudget budget) {
    Recorder rec;
    const FieldSpec& f = FieldSpec::get(q);
    std::mt19937_64 rng(seed);
    auto partitions = partitions_of(n);

    struct ShapeData {
        FqTableau t0;
        MVector e0;
        std::vector<Flag> flags;
        std::uint64_t u_count;
    };
    std::vector<ShapeData> shapes;
    for (const auto& lambda : partitions) {
        FqTableau t0 = FqTableau::standard(lambda, f);
        MVector e0 = e_vector(K, t0, budget);
        shapes.push_back({t0, e0, enumerate_flags(lambda, f, budget),
                          u_lambda_order(lambda.conjugate(), q)});
    }

    for (size_t li = 0; li < partitions.size(); ++li) {
        const Partition& lambda = partitions[li];
        const std::string tag = "[" + lambda.str() + "]";
        const FqTableau& t0 = shapes[li].t0;
        const MVector& e0 = shapes[li].e0;
        const auto& flags = shapes[li].flags;
        std::uint64_t ucount = shapes[li].u_count;

        rec.check("x-pairs-size" + tag,
                  static_cast<int>(x_pairs(t0).pairs.size()) == n - lambda.conjugate().part(0),
                  "|X(T)| != n - lambda'_1");

        rec.check("flag-count" + tag,
                  mpz_class(static_cast<unsigned long>(flags.size())) == flag_count(lambda, q),
                  "enumerated flag count disagrees with the q-multinomial");

        // U(T0) stream vs the definition predicate
        {
            UTStream us(t0, budget);
            std::set<std::string> seen;
            bool all_member = true;
            while (auto u = us.next()) {
                seen.insert(u->str());
                if (!u_contains(*u, t0)) all_member = false;
            }
            rec.check("u-stream-crosscheck" + tag,
                      all_member && seen.size() == ucount,
                      "conjugated stream disagrees with the span-condition predicate");
        }

        // bar-twist identities at T0
        {
            FqTableau tb = bar(t0);
            rec.check("bar-involution" + tag, bar(tb) == t0, "bar(bar(T)) != T");
            UTStream ut(t0, budget), ub(tb, budget);
            std::set<std::string> su, sb;
            while (auto u = ut.next()) su.insert(u->str());
            while (auto u = ub.next()) sb.insert(u->str());
            rec.check("u-bar" + tag, su == sb, "U(bar T) != U(T)");

            // p with p.T = bar(T): signs down the odd columns
            FqMatrix d(f, n, n);
            for (int i = 0; i < n; ++i)
                d.set_enc(i, i, t0.col_of(i) % 2 == 0 ? f.neg(1) : 1);
            FqMatrix p = t0.basis_matrix() * d * t0.basis_inverse();
            rec.check("bar-orbit" + tag, p_contains(p, t0) && act(p, t0) == tb,
                      "column-sign matrix does not witness bar(T) in P(T).T");

            UTStream us(t0, budget);
            bool psi_bar_ok = true;
            while (auto u = us.next())
                if (psi(K, tb, *u) != psi(K, t0, u->inverse())) psi_bar_ok = false;
            rec.check("psi-bar" + tag, psi_bar_ok, "psi_{bar T}(u) != psi_T(u^-1)");
        }

        // m_{pT} = m_T over all of P(T0)
        {
            PTStream ps(t0, budget);
            MVector m0 = m_vector(K, t0);
            bool ok = true;
            while (auto p = ps.next())
                if (m_vector(K, act(*p, t0)) != m0) ok = false;
            rec.check("m-p-invariance" + tag, ok, "m_{pT} != m_T for some p in P(T)");
        }

        // exhaustive pass over G
        std::set<std::string> u_set0;
        {
            UTStream us(t0, budget);
            while (auto u = us.next()) u_set0.insert(u->str());
        }
        GlEnumerator gl(n, f, budget);
        if (gl.order() > budget.max_elements) throw budget_error("|G| exceeds the element budget");
        while (auto g = gl.next()) {
            FqMatrix ginv = g->inverse();
            FqTableau t = act(*g, t0);

            // U(gT) = g U(T) g^{-1} and P(gT) = g P(T) g^{-1}
            {
                std::vector<FqMatrix> conj;
                UTStream us(t0, budget);
                while (auto u = us.next()) conj.push_back(*g * *u * ginv);
                std::vector<FqMatrix> direct;
                UTStream ut(t, budget);
                while (auto u = ut.next()) direct.push_back(*u);
                rec.check("u-conjugation" + tag, matrix_set(conj) == matrix_set(direct),
                          "U(gT) != g U(T) g^-1 at g=" + g->str());
            }
            {
                std::vector<FqMatrix> conj;
                PTStream ps(t0, budget);
                while (auto p = ps.next()) conj.push_back(*g * *p * ginv);
                std::vector<FqMatrix> direct;
                PTStream pt(t, budget);
                while (auto p = pt.next()) direct.push_back(*p);
                rec.check("p-conjugation" + tag, matrix_set(conj) == matrix_set(direct),
                          "P(gT) != g P(T) g^-1 at g=" + g->str());
            }

            // psi_{gT}(g u g^{-1}) = psi_T(u)
            {
                UTStream us(t0, budget);
                bool ok = true;
                while (auto u = us.next())
                    if (psi(K, t, *g * *u * ginv) != psi(K, t0, *u)) ok = false;
                rec.check("psi-conjugation" + tag, ok,
                          "psi_{gT}(gug^-1) != psi_T(u) at g=" + g->str());
            }

            // g.m_T = m_{gT} and g.e_T = e_{gT}
            rec.check("m-translate" + tag, m_vector(K, t) == m_vector(K, t0).apply(*g),
                      "g.m_T != m_{gT} at g=" + g->str());
            MVector et = e_vector(K, t, budget);
            rec.check("e-translate" + tag, et == e0.apply(*g), "g.e_T != e_{gT} at g=" + g->str());

            // flag classification of the P-orbit
            bool same_flag = Flag::of_tableau(t) == Flag::of_tableau(t0);
            rec.check("flag-orbit-bijection" + tag, same_flag == p_contains(*g, t0),
                      "flag_of(gT) = flag_of(T) does not match g in P(T) at g=" + g->str());

            // k_T m_{T'} in K.e_T, exhaustively over the flags of the shape
            {
                bool ok = true;
                for (const auto& fl : flags) {
                    MVector ind(lambda, K);
                    ind.add_to(fl, K.one());
                    MVector w = k_apply(K, t, ind, budget);
                    if (w.is_zero()) continue;
                    KScalar c = w.coeff(et.leading_flag()) / et.leading_coeff();
                    if (w != et.scaled(c)) ok = false;
                }
                rec.check("k-image-line" + tag, ok, "k_T m_{T'} outside K.e_T at g=" + g->str());
            }

            // k_T e_T = |U(T)| e_T and [e_T, e_{bar T}] = |U(T)|
            KScalar usize = K.from_int(static_cast<long long>(ucount));
            rec.check("k-e-scaling" + tag,
                      k_apply(K, t, et, budget) == et.scaled(usize),
                      "k_T e_T != |U(T)| e_T at g=" + g->str());
            rec.check("form-norm" + tag,
                      et.inner(e_vector(K, bar(t), budget)) == usize,
                      "[e_T, e_{bar T}] != |U(T)| at g=" + g->str());

            // intersection dichotomy and the nontrivial psi value on it
            {
                Flag ft = Flag::of_tableau(t);
                bool exists_u = false;
                std::vector<FqMatrix> intersection;
                UTStream us(t0, budget);
                while (auto u = us.next()) {
                    if (Flag::of_tableau(act(*u, t0)) == ft) exists_u = true;
                    if (p_contains(*u, t)) intersection.push_back(*u);
                }
                bool trivial = intersection.size() == 1;  // identity is always there
                rec.check("intersection-dichotomy" + tag, exists_u == trivial,
                          "uT = pT' solvability mismatch at g=" + g->str());
                if (!trivial) {
                    bool found = false;
                    for (const auto& u : intersection)
                        if (psi(K, t0, u) != K.one()) found = true;
                    rec.check("psi-nontrivial-intersection" + tag, found,
                              "psi_T trivial on U(T) ∩ P(T') at g=" + g->str());
                } else {
                    rec.ok("psi-nontrivial-intersection" + tag);
                }
            }
        }

        // e_{uT} = psi_T(u) e_T over U(T0)
        {
            UTStream us(t0, budget);
            bool ok = true;
            while (auto u = us.next())
                if (e_vector(K, act(*u, t0), budget) != e0.scaled(psi(K, t0, *u))) ok = false;
            rec.check("e-u-eigenvector" + tag, ok, "e_{uT} != psi_T(u) e_T");
        }

    }

    // cross-shape vanishing: k_T m_{T'} = 0 unless shape(T') dominates shape(T)
    for (size_t li = 0; li < partitions.size(); ++li) {
        for (size_t mi = 0; mi < partitions.size(); ++mi) {
            const Partition& lambda = partitions[li];
            const Partition& mu = partitions[mi];
            if (li == mi || dominates(mu, lambda)) continue;
            std::string name = "k-cross-shape[" + lambda.str() + ";" + mu.str() + "]";
            bool ok = true;
            GlEnumerator gl(n, f, budget);
            while (auto g = gl.next()) {
                FqTableau t = act(*g, shapes[li].t0);
                for (const auto& fl : shapes[mi].flags) {
                    MVector ind(mu, K);
                    ind.add_to(fl, K.one());
                    if (!k_apply(K, t, ind, budget).is_zero()) ok = false;
                }
                if (!ok) break;
            }
            rec.check(name, ok, "k_T m_{T'} != 0 for a non-dominating shape pair");
        }
    }

    // submodule dichotomy and seed independence
    for (size_t li = 0; li < partitions.size(); ++li) {
        const Partition& lambda = partitions[li];
        auto dich = check_submodule_dichotomy(lambda, f, K, 20, rng, budget);
        rec.check(dich.name, dich.pass, dich.detail);

        int rank0 = s_basis(lambda, f, K, budget).rank();
        bool ok = true;
        for (int trial = 0; trial < 3; ++trial) {
            FqMatrix g = random_gl(n, f, rng);
            if (s_basis_seeded(act(g, shapes[li].t0), K, budget).rank() != rank0) ok = false;
        }
        rec.check("seed-independence[" + lambda.str() + "]", ok,
                   "dim S^lambda depends on the seed tableau");
    }

    return rec.take();
}

std::vector<CheckResult> verify_characters(int n, int q, std::uint64_t seed, EnumBudget budget,
                                           const std::filesystem::path& cache_dir) {
    Recorder rec;
    const FieldSpec& f = FieldSpec::get(q);
    const CoeffField& K = CoeffField::cyclotomic(f.p());
    UnipotentContext ctx(n, q, K, budget, cache_dir);
    std::mt19937_64 rng(seed);
    auto partitions = partitions_of(n);

    // orthonormality of the full character matrix
    {
        bool ok = true;
        std::string detail;
        std::vector<ClassFunction> chars;
        for (const auto& la : partitions) chars.push_back(ctx.character(la));
        for (size_t i = 0; i < partitions.size() && ok; ++i)
            for (size_t j = 0; j < partitions.size() && ok; ++j) {
                KScalar ip = ctx.inner_product(chars[i], chars[j]);
                KScalar expect = i == j ? K.one() : K.zero();
                if (ip != expect) {
                    ok = false;
                    detail = "<chi_" + partitions[i].str() + ", chi_" + partitions[j].str() +
                             "> = " + ip.encode();
                }
            }
        rec.check("orthonormality", ok, detail);
    }

    // sum over lambda of f^lambda dim S^lambda = #complete flags
    {
        Partition row(std::vector<int>{n});
        Partition column(std::vector<int>(n, 1));
        long long lhs = 0;
        for (const auto& la : partitions) lhs += kostka_number(la, column) * ctx.dim_s(la);
        mpz_class rhs = flag_count(row, q);
        rec.check("degree-sum", mpz_class(static_cast<long>(lhs)) == rhs,
                  "sum f^lambda dim S^lambda = " + std::to_string(lhs) + " != " + rhs.get_str());
    }

    // anchors: chi_{(1^n)} = 1, dim S^{(n)} = q^(n(n-1)/2)
    {
        Partition column(std::vector<int>(n, 1));
        ClassFunction triv = ctx.character(column);
        bool ok = triv(FqMatrix::identity(f, n)) == K.one();
        for (int i = 0; i < 5 && ok; ++i) ok = triv(random_gl(n, f, rng)) == K.one();
        rec.check("trivial-character", ok, "chi_{(1^n)} is not constantly 1");

        Partition row(std::vector<int>{n});
        rec.check("steinberg-dim",
                  static_cast<std::uint64_t>(ctx.dim_s(row)) == triangle_pow(q, n),
                  "dim S^{(n)} != q^(n(n-1)/2)");
    }

    // class-function and action-matrix multiplicativity spot checks
    for (const auto& la : partitions) {
        bool class_ok = true, mult_ok = true, inv_ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            FqMatrix g = random_gl(n, f, rng), h = random_gl(n, f, rng);
            if (ctx.char_value(h * g * h.inverse(), la) != ctx.char_value(g, la)) class_ok = false;
            const SpanBasis& b = ctx.basis(la);
            if (action_matrix(g * h, b) != action_matrix(g, b) * action_matrix(h, b))
                mult_ok = false;
            if (action_matrix(g, b) * action_matrix(g.inverse(), b) !=
                KMat::identity(K, b.rank()))
                inv_ok = false;
        }
        rec.check("class-function[" + la.str() + "]", class_ok,
                  "character is not constant on a conjugacy class");
        rec.check("action-multiplicativity[" + la.str() + "]", mult_ok,
                  "action_matrix(gh) != action_matrix(g) action_matrix(h)");
        rec.check("action-invertibility[" + la.str() + "]", inv_ok,
                  "action_matrix(g) action_matrix(g^-1) != I");
    }

    return rec.take();
}

std::vector<CheckResult> verify_kostka(int n, int q, EnumBudget budget,
                                       const std::filesystem::path& cache_dir) {
    Recorder rec;
    const FieldSpec& f = FieldSpec::get(q);
    const CoeffField& K = CoeffField::cyclotomic(f.p());
    UnipotentContext ctx(n, q, K, budget, cache_dir);
    auto partitions = partitions_of(n);

    for (const auto& mu : partitions)
        for (const auto& la : partitions) {
            std::string pair = "[" + mu.str() + ";" + la.str() + "]";
            rec.check("kostka-at-1" + pair,
                      kostka_polynomial(mu, la).eval(1) == kostka_number(mu, la),
                      "K_{mu,lambda}(1) != K_{mu,lambda}");
            if (!dominates(mu, la))
                rec.check("kostka-dominance-vanishing" + pair, kostka_number(mu, la) == 0,
                          "K_{mu,lambda} != 0 although mu does not dominate lambda");

            long long gg = ctx.ggg_multiplicity(la, mu);
            long long kq = kostka_polynomial(mu, la).eval(q);
            rec.check("gg-multiplicity" + pair, gg == kq,
                      "<Gamma^lambda, chi__mu> = " + std::to_string(gg) +
                          " != K_{mu,lambda}(q) = " + std::to_string(kq));

            long long dg = ctx.dgg_multiplicity(la, mu);
            long long kn = kostka_number(mu, la);
            rec.check("dgg-multiplicity" + pair, dg == kn,
                      "<Psi^lambda, chi_mu> = " + std::to_string(dg) +
                          " != K_{mu,lambda} = " + std::to_string(kn));

            long long pm = ctx.parabolic_multiplicity(la, mu);
            long long kc = kostka_number(mu.conjugate(), la);
            rec.check("parabolic-multiplicity" + pair, pm == kc,
                      "<Ind_P 1, chi_mu> = " + std::to_string(pm) +
                          " != K_{mu',lambda} = " + std::to_string(kc));
        }

    return rec.take();
}

} // namespace glnq

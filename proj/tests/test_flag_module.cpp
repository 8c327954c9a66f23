#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "glnq/flag_module.hpp"
#include "glnq/verify.hpp"

using namespace glnq;

TEST_CASE("gaussian binomials and flag counts") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 2, 3) == 13);
    CHECK(gaussian_binomial(3, 0, 5) == 1);

    CHECK(flag_count(Partition({1, 1}), 2) == 1);   // single column: one flag
    CHECK(flag_count(Partition({2}), 2) == 3);      // lines in F_2^2
    CHECK(flag_count(Partition({2, 1}), 3) == 13);  // lines in F_3^3
    CHECK(flag_count(Partition({3}), 2) == 21);     // complete flags in F_2^3
    CHECK(flag_count(Partition({4}), 2) == 315);    // complete flags in F_2^4
}

TEST_CASE("flag of a tableau") {
    const FieldSpec& f2 = FieldSpec::get(2);

    // single column: P(T) = G and every tableau yields the one flag
    {
        FqTableau t = FqTableau::standard(Partition({1, 1}), f2);
        Flag fl = Flag::of_tableau(t);
        CHECK(fl.levels() == 1);
        CHECK(fl.chain()[0] == Subspace::full(f2, 2));
        GlEnumerator gl(2, f2);
        while (auto g = gl.next()) CHECK(Flag::of_tableau(act(*g, t)) == fl);
    }

    // lambda = (2): chain (full > span(e2))
    {
        FqTableau t = FqTableau::standard(Partition({2}), f2);
        Flag fl = Flag::of_tableau(t);
        REQUIRE(fl.levels() == 2);
        CHECK(fl.chain()[1] == Subspace::span(f2, 2, {FqVector::unit(f2, 2, 1)}));
    }

    CHECK_THROWS_AS(Flag({Subspace::span(f2, 2, {FqVector::unit(f2, 2, 0)})}),
                    std::invalid_argument);  // must start at the full space
}

TEST_CASE("flag enumeration") {
    const FieldSpec& f2 = FieldSpec::get(2);
    CHECK(enumerate_flags(Partition({1, 1, 1}), f2).size() == 1);
    CHECK(enumerate_flags(Partition({2, 1}), f2).size() == 7);
    CHECK(enumerate_flags(Partition({2}), f2).size() == 3);

    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::get(q);
        int nmax = q == 2 ? 4 : 3;
        for (int n = 1; n <= nmax; ++n)
            for (const auto& la : partitions_of(n)) {
                auto flags = enumerate_flags(la, f);
                CHECK(mpz_class(static_cast<unsigned long>(flags.size())) == flag_count(la, q));
                for (size_t i = 1; i < flags.size(); ++i) CHECK(flags[i - 1] < flags[i]);
                // orbit of the standard flag under a few elements stays enumerated
                std::mt19937_64 rng(3);
                Flag fl = Flag::of_tableau(FqTableau::standard(la, f));
                for (int trial = 0; trial < 5; ++trial) {
                    Flag moved = fl.apply(random_gl(n, f, rng));
                    CHECK(std::binary_search(flags.begin(), flags.end(), moved));
                }
            }
    }

    EnumBudget tight;
    tight.max_flags = 10;
    CHECK_THROWS_AS(enumerate_flags(Partition({3}), f2, tight), budget_error);
}

TEST_CASE("flag apply is a left action") {
    const FieldSpec& f3 = FieldSpec::get(3);
    std::mt19937_64 rng(9);
    Flag fl = Flag::of_tableau(FqTableau::standard(Partition({2, 1}), f3));
    for (int i = 0; i < 10; ++i) {
        FqMatrix g = random_gl(3, f3, rng), h = random_gl(3, f3, rng);
        CHECK(fl.apply(g * h) == fl.apply(h).apply(g));
    }
}

TEST_CASE("m vectors") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);

    FqTableau t = FqTableau::standard(Partition({2}), f2);
    MVector m = m_vector(K, t);
    CHECK(m.support_size() == 1);
    CHECK(m.coeff(Flag::of_tableau(t)) == K.one());

    // m_{pT} = m_T over all of P(T); distinct flags give orthogonal vectors
    PTStream ps(t);
    while (auto p = ps.next()) CHECK(m_vector(K, act(*p, t)) == m);

    FqMatrix w = FqMatrix::parse(f2, "0,1;1,0");
    MVector m2 = m_vector(K, act(w, t));
    CHECK(m2 != m);
    CHECK(m.inner(m2).is_zero());
    CHECK(m.inner(m) == K.one());
}

TEST_CASE("e vectors") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);

    // single column: U(T) trivial, e_T = m_T
    FqTableau tc = FqTableau::standard(Partition({1, 1}), f2);
    CHECK(e_vector(K, tc) == m_vector(K, tc));

    // lambda = (2), q = 2: e_T = [span(e2) flag] - [span(e1+e2) flag]
    FqTableau t = FqTableau::standard(Partition({2}), f2);
    MVector e = e_vector(K, t);
    FqTableau shifted(Partition({2}),
                      {FqVector::parse(f2, "1,0"), FqVector::parse(f2, "1,1")});
    CHECK(e == m_vector(K, t) - m_vector(K, shifted));

    // e_{uT} = psi_T(u) e_T and g.e_T = e_{gT}
    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::get(q);
        const CoeffField& Kq = CoeffField::cyclotomic(f.p());
        std::mt19937_64 rng(13);
        for (const auto& la : partitions_of(3)) {
            FqTableau t0 = FqTableau::standard(la, f);
            MVector e0 = e_vector(Kq, t0);
            CHECK(e0.coeff(Flag::of_tableau(t0)) == Kq.one());
            UTStream us(t0);
            while (auto u = us.next())
                CHECK(e_vector(Kq, act(*u, t0)) == e0.scaled(psi(Kq, t0, *u)));
            for (int trial = 0; trial < 5; ++trial) {
                FqMatrix g = random_gl(3, f, rng);
                CHECK(e_vector(Kq, act(g, t0)) == e0.apply(g));
            }
        }
    }
}

TEST_CASE("k operator") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);

    // single column: k_T is the identity operator
    FqTableau tc = FqTableau::standard(Partition({1, 1, 1}), f2);
    auto flags111 = enumerate_flags(Partition({3}), f2);
    MVector v(Partition({3}), K);
    v.add_to(flags111[0], K.from_int(2));
    v.add_to(flags111[5], K.from_int(-1));
    CHECK(k_apply(K, tc, v) == v);

    // k_T e_T = |U(T)| e_T and k_T m_{T'} in K e_T, one small shape
    FqTableau t = FqTableau::standard(Partition({2}), f2);
    MVector e = e_vector(K, t);
    CHECK(k_apply(K, t, e) == e.scaled(K.from_int(2)));
    for (const auto& fl : enumerate_flags(Partition({2}), f2)) {
        MVector ind(Partition({2}), K);
        ind.add_to(fl, K.one());
        MVector w = k_apply(K, t, ind);
        if (!w.is_zero()) {
            KScalar c = w.coeff(e.leading_flag()) / e.leading_coeff();
            CHECK(w == e.scaled(c));
        }
    }

    // cross-shape vanishing needs shape(v) to dominate shape(T): here mu = (1,1)
    // does not dominate lambda = (2), so k_T kills all of M^{(1,1)}
    FqTableau trow = FqTableau::standard(Partition({2}), f2);
    MVector ind(Partition({1, 1}), K);
    ind.add_to(Flag::of_tableau(FqTableau::standard(Partition({1, 1}), f2)), K.one());
    CHECK(k_apply(K, trow, ind).is_zero());

    CHECK_THROWS_AS(k_apply(K, trow, MVector(Partition({1, 1, 1}), K)),
                    std::invalid_argument);
}

TEST_CASE("span basis echelon algebra") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);
    auto flags = enumerate_flags(Partition({2, 1}), f2);
    REQUIRE(flags.size() == 7);

    SpanBasis b(Partition({2, 1}), K);
    MVector v1(Partition({2, 1}), K);
    v1.add_to(flags[0], K.from_int(2));
    v1.add_to(flags[3], K.from_int(4));
    MVector v2(Partition({2, 1}), K);
    v2.add_to(flags[0], K.one());
    v2.add_to(flags[1], K.from_int(-1));

    CHECK(b.insert(v1));
    CHECK(b.rank() == 1);
    CHECK(b.rows()[0].leading_coeff() == K.one());  // pivot rescaled
    CHECK_FALSE(b.insert(v1.scaled(K.from_int(7))));
    CHECK(b.insert(v2));
    CHECK(b.rank() == 2);
    CHECK(b.rows()[0].leading_flag() < b.rows()[1].leading_flag());

    auto coords = b.solve(v1 + v2.scaled(K.from_int(3)));
    MVector recon(Partition({2, 1}), K);
    for (int i = 0; i < b.rank(); ++i) recon.axpy(coords[i], b.rows()[i]);
    CHECK(recon == v1 + v2.scaled(K.from_int(3)));

    MVector outside(Partition({2, 1}), K);
    outside.add_to(flags[6], K.one());
    CHECK_THROWS_AS(b.solve(outside), std::runtime_error);
    CHECK_FALSE(b.reduce(outside).is_zero());
}

TEST_CASE("s basis dimensions") {
    const CoeffField& K = CoeffField::cyclotomic(2);
    const FieldSpec& f2 = FieldSpec::get(2);

    CHECK(s_basis(Partition({1, 1}), f2, K).rank() == 1);
    CHECK(s_basis(Partition({2}), f2, K).rank() == 2);
    CHECK(s_basis(Partition({1, 1, 1}), f2, K).rank() == 1);
    CHECK(s_basis(Partition({2, 1}), f2, K).rank() == 6);
    CHECK(s_basis(Partition({3}), f2, K).rank() == 8);

    const FieldSpec& f3 = FieldSpec::get(3);
    const CoeffField& K3 = CoeffField::cyclotomic(3);
    CHECK(s_basis(Partition({2}), f3, K3).rank() == 3);
    CHECK(s_basis(Partition({1, 1}), f3, K3).rank() == 1);

    // dimension is independent of the seed tableau
    std::mt19937_64 rng(29);
    for (const auto& la : partitions_of(3)) {
        int rank0 = s_basis(la, f2, K).rank();
        for (int trial = 0; trial < 3; ++trial) {
            FqTableau seed = act(random_gl(3, f2, rng), FqTableau::standard(la, f2));
            CHECK(s_basis_seeded(seed, K).rank() == rank0);
        }
    }
}

TEST_CASE("gram and radical") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);

    // characteristic 0: the form is nondegenerate on S^lambda
    for (const auto& la : partitions_of(3)) {
        SpanBasis b = s_basis(la, f2, K);
        GramResult g = gram_and_radical(b);
        CHECK(g.radical_dim == 0);
        CHECK(g.d_dim == b.rank());
        CHECK(g.radical_basis.empty());
    }

    // [e_T, e_{bar T}] = |U(T)|
    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::get(q);
        const CoeffField& Kq = CoeffField::cyclotomic(f.p());
        for (const auto& la : partitions_of(3)) {
            FqTableau t = FqTableau::standard(la, f);
            KScalar norm = e_vector(Kq, t).inner(e_vector(Kq, bar(t)));
            CHECK(norm ==
                  Kq.from_int(static_cast<long long>(u_lambda_order(la.conjugate(), q))));
        }
    }

    // modular mode: lambda = (2) over GL_2(F_2) with ell = 3 has Gram
    // [[2,1],[1,2]] of determinant 3, so exactly one radical dimension
    const CoeffField& M3 = CoeffField::modular(2, 3);
    SpanBasis bm = s_basis(Partition({2}), f2, M3);
    CHECK(bm.rank() == 2);
    GramResult gm = gram_and_radical(bm);
    CHECK(gm.d_dim == 1);
    CHECK(gm.radical_dim == 1);
    REQUIRE(gm.radical_basis.size() == 1);
    for (const auto& row : bm.rows()) CHECK(gm.radical_basis[0].inner(row).is_zero());
}

TEST_CASE("dump formats") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);
    auto flags = enumerate_flags(Partition({2}), f2);
    FqTableau t = FqTableau::standard(Partition({2}), f2);

    std::ostringstream os;
    e_vector(K, t).dump(os, flags);
    CHECK(os.str() == "0: 1\n2: -1\n");

    std::ostringstream ts;
    SpanBasis b = s_basis(Partition({2}), f2, K);
    b.dump_tsv(ts, flags);
    std::string text = ts.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == b.rank());
    CHECK(std::count(text.begin(), text.end(), '\t') == b.rank() * 2);
}

TEST_CASE("submodule dichotomy smoke test") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);
    std::mt19937_64 rng(0);
    for (const auto& la : partitions_of(2)) {
        CheckResult r = check_submodule_dichotomy(la, f2, K, 5, rng);
        CHECK(r.pass);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "glnq/characters.hpp"
#include "glnq/verify.hpp"

using namespace glnq;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("glnq_test_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("action matrices") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);
    SpanBasis b = s_basis(Partition({2, 1}), f2, K);
    REQUIRE(b.rank() == 6);

    CHECK(action_matrix(FqMatrix::identity(f2, 3), b) == KMat::identity(K, 6));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        FqMatrix g = random_gl(3, f2, rng), h = random_gl(3, f2, rng);
        CHECK(action_matrix(g * h, b) == action_matrix(g, b) * action_matrix(h, b));
        CHECK(action_matrix(g, b) * action_matrix(g.inverse(), b) == KMat::identity(K, 6));
    }
}

TEST_CASE("action matrix rejects a non-stable basis") {
    const FieldSpec& f2 = FieldSpec::get(2);
    const CoeffField& K = CoeffField::cyclotomic(2);
    // a one-vector "basis" that no group element fixes setwise
    auto flags = enumerate_flags(Partition({2}), f2);
    SpanBasis fake(Partition({2}), K);
    MVector v(Partition({2}), K);
    v.add_to(flags[0], K.one());
    fake.insert(v);
    FqMatrix g = FqMatrix::parse(f2, "0,1;1,0");
    CHECK_THROWS_AS(action_matrix(g, fake), std::runtime_error);
}

TEST_CASE("character values") {
    const CoeffField& K = CoeffField::cyclotomic(2);
    UnipotentContext ctx(2, 2, K);
    const FieldSpec& f2 = FieldSpec::get(2);

    CHECK(ctx.char_value(FqMatrix::identity(f2, 2), Partition({2})) == K.from_int(2));
    CHECK(ctx.dim_s(Partition({2})) == 2);
    CHECK(ctx.dim_s(Partition({1, 1})) == 1);

    // trivial character and class-function invariance
    ClassFunction triv = ctx.character(Partition({1, 1}));
    ClassFunction steinberg = ctx.character(Partition({2}));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        FqMatrix g = random_gl(2, f2, rng), h = random_gl(2, f2, rng);
        CHECK(triv(g) == K.one());
        CHECK(steinberg(h * g * h.inverse()) == steinberg(g));
    }
}

TEST_CASE("inner products and orthonormality at n = 2") {
    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::get(q);
        const CoeffField& K = CoeffField::cyclotomic(f.p());
        UnipotentContext ctx(2, q, K);
        auto parts = partitions_of(2);
        for (const auto& la : parts)
            for (const auto& mu : parts) {
                KScalar ip = ctx.inner_product(ctx.character(la), ctx.character(mu));
                CHECK(ip == (la == mu ? K.one() : K.zero()));
            }
        // <1, 1> = 1
        ClassFunction one("one", [&K](const FqMatrix&) { return K.one(); });
        CHECK(ctx.inner_product(one, one) == K.one());
    }
}

TEST_CASE("budget guard on group sums") {
    const CoeffField& K = CoeffField::cyclotomic(2);
    EnumBudget tiny;
    tiny.max_elements = 3;
    UnipotentContext ctx(2, 2, K, tiny);
    ClassFunction one("one", [&K](const FqMatrix&) { return K.one(); });
    CHECK_THROWS_AS(ctx.inner_product(one, one), budget_error);
}

TEST_CASE("parabolic multiplicities") {
    const CoeffField& K = CoeffField::cyclotomic(2);
    UnipotentContext ctx(3, 2, K);

    Partition ones({1, 1, 1}), two_one({2, 1}), three({3});
    CHECK(ctx.parabolic_multiplicity(ones, ones) == 1);
    CHECK(ctx.parabolic_multiplicity(two_one, two_one) == 1);
    // mu' must dominate lambda: (1^3)' = (3) dominates everything, while
    // (3)' = (1^3) only dominates (1^3)
    CHECK(ctx.parabolic_multiplicity(two_one, three) == 0);
    CHECK(ctx.parabolic_multiplicity(ones, three) ==
          kostka_number(three.conjugate(), ones));
}

TEST_CASE("gelfand-graev multiplicities at n = 2") {
    for (int q : {2, 3, 4}) {
        const FieldSpec& f = FieldSpec::get(q);
        const CoeffField& K = CoeffField::cyclotomic(f.p());
        UnipotentContext ctx(2, q, K);
        Partition row({2}), col({1, 1});

        // Gamma^{(2)} is the regular Gelfand-Graev character: Steinberg once,
        // trivial never
        CHECK(ctx.ggg_multiplicity(row, row) == 1);
        CHECK(ctx.ggg_multiplicity(row, col) == 0);
        // Gamma^{(1,1)} is induced from the trivial group: the regular
        // character, so chi appears dim(chi) times
        CHECK(ctx.ggg_multiplicity(col, row) == q);
        CHECK(ctx.ggg_multiplicity(col, col) == 1);

        // degenerate variants: K_{mu,lambda}
        CHECK(ctx.dgg_multiplicity(row, row) == 1);
        CHECK(ctx.dgg_multiplicity(row, col) == 0);
        CHECK(ctx.dgg_multiplicity(col, row) == 1);
        CHECK(ctx.dgg_multiplicity(col, col) == 1);
    }
}

TEST_CASE("multiplicities refuse modular coefficients") {
    UnipotentContext ctx(2, 2, CoeffField::modular(2, 3));
    CHECK(ctx.dim_s(Partition({2})) == 2);  // modules themselves are fine
    CHECK_THROWS_AS(ctx.ggg_multiplicity(Partition({2}), Partition({2})), std::domain_error);
    CHECK_THROWS_AS(ctx.dgg_multiplicity(Partition({2}), Partition({2})), std::domain_error);
    CHECK_THROWS_AS(ctx.parabolic_multiplicity(Partition({2}), Partition({2})),
                    std::domain_error);
}

TEST_CASE("degenerate gelfand-graev counts standard tableaux") {
    const CoeffField& K = CoeffField::cyclotomic(2);
    UnipotentContext ctx(3, 2, K);
    Partition ones({1, 1, 1});
    for (const auto& mu : partitions_of(3))
        CHECK(ctx.dgg_multiplicity(ones, mu) == kostka_number(mu, ones));
}

TEST_CASE("trace cache persistence and truncation") {
    TempDir tmp;
    const CoeffField& K = CoeffField::cyclotomic(2);
    const FieldSpec& f2 = FieldSpec::get(2);
    std::filesystem::path file;

    {
        UnipotentContext ctx(2, 2, K, {}, tmp.path);
        GlEnumerator gl(2, f2);
        while (auto g = gl.next()) ctx.char_value(*g, Partition({2}));
        file = tmp.path / "traces_n2_q2_cyc.tsv";
        REQUIRE(std::filesystem::exists(file));
    }
    auto size_before = std::filesystem::file_size(file);

    // a fresh cache loads the stored values
    {
        TraceCache cache(tmp.path, 2, 2, K);
        CHECK(cache.size() == 6);
        auto hit = cache.lookup(FqMatrix::identity(f2, 2).str(), Partition({2}));
        REQUIRE(hit.has_value());
        CHECK(*hit == K.from_int(2));
    }

    // corrupt trailing data is truncated on load, intact records survive
    {
        std::ofstream out(file, std::ios::app | std::ios::binary);
        out << "0,1;1,0\tbroken";  // no tabs for the value, no newline
    }
    CHECK(std::filesystem::file_size(file) > size_before);
    {
        TraceCache cache(tmp.path, 2, 2, K);
        CHECK(cache.size() == 6);
        CHECK(std::filesystem::file_size(file) == size_before);
        // appending after truncation keeps the file consistent
        cache.store("9,9;9,9", Partition({2}), K.from_int(41));
    }
    {
        TraceCache cache(tmp.path, 2, 2, K);
        CHECK(cache.size() == 7);
        auto hit = cache.lookup("9,9;9,9", Partition({2}));
        REQUIRE(hit.has_value());
        CHECK(*hit == K.from_int(41));
    }

    // a record whose value fails to parse is dropped along with its suffix
    {
        std::ofstream out(file, std::ios::app | std::ios::binary);
        out << "1,0;0,1\t2\tnot-a-scalar\n";
        out << "1,0;0,1\t1,1\t5\n";
    }
    {
        TraceCache cache(tmp.path, 2, 2, K);
        CHECK(cache.size() == 7);
    }
}

TEST_CASE("cached context reproduces uncached values") {
    TempDir tmp;
    const CoeffField& K = CoeffField::cyclotomic(2);
    const FieldSpec& f2 = FieldSpec::get(2);
    std::vector<KScalar> uncached, cached;
    {
        UnipotentContext ctx(2, 2, K);
        GlEnumerator gl(2, f2);
        while (auto g = gl.next()) uncached.push_back(ctx.char_value(*g, Partition({2})));
    }
    {
        UnipotentContext warm(2, 2, K, {}, tmp.path);
        GlEnumerator gl(2, f2);
        while (auto g = gl.next()) warm.char_value(*g, Partition({2}));
    }
    {
        UnipotentContext reuse(2, 2, K, {}, tmp.path);
        GlEnumerator gl(2, f2);
        while (auto g = gl.next()) cached.push_back(reuse.char_value(*g, Partition({2})));
    }
    CHECK(uncached == cached);
}

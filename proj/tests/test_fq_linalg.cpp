#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "glnq/fq_linalg.hpp"

using namespace glnq;

namespace {

std::set<std::string> stream_set(auto&& stream) {
    std::set<std::string> out;
    while (auto m = stream.next()) out.insert(m->str());
    return out;
}

} // namespace

TEST_CASE("rref") {
    const FieldSpec& f2 = FieldSpec::get(2);
    auto [ri, rki] = rref(FqMatrix::identity(f2, 3));
    CHECK(ri == FqMatrix::identity(f2, 3));
    CHECK(rki == 3);

    auto [rz, rkz] = rref(FqMatrix(f2, 2, 2));
    CHECK(rkz == 0);
    CHECK(rz == FqMatrix(f2, 2, 2));

    FqMatrix ones = FqMatrix::parse(f2, "1,1;1,1");
    auto [r, rk] = rref(ones);
    CHECK(rk == 1);
    CHECK(r == FqMatrix::parse(f2, "1,1;0,0"));

    // row space is preserved
    const FieldSpec& f3 = FieldSpec::get(3);
    FqMatrix m = FqMatrix::parse(f3, "1,2,0;2,1,1;1,0,2");
    auto [rm, rank] = rref(m);
    CHECK(rank == 3);
    std::vector<FqVector> rows, rrows;
    for (int i = 0; i < 3; ++i) {
        rows.push_back(m.row(i));
        rrows.push_back(rm.row(i));
    }
    CHECK(Subspace::span(f3, 3, rows) == Subspace::span(f3, 3, rrows));
}

TEST_CASE("matrix inverse and parse round-trip") {
    const FieldSpec& f3 = FieldSpec::get(3);
    FqMatrix m = FqMatrix::parse(f3, "1,2;1,1");
    CHECK(m.inverse() * m == FqMatrix::identity(f3, 2));
    CHECK(FqMatrix::parse(f3, m.str()) == m);
    CHECK_THROWS_AS(FqMatrix::parse(f3, "1,1;1,1").inverse(), std::domain_error);
}

TEST_CASE("gl enumeration") {
    const FieldSpec& f2 = FieldSpec::get(2);
    CHECK(gl_order(2, 2) == 6);
    CHECK(gl_order(3, 2) == 168);
    CHECK(gl_order(1, 5) == 4);

    GlEnumerator gl2(2, f2);
    // row-major lexicographic order pins the first yields
    auto first = gl2.next();
    REQUIRE(first.has_value());
    CHECK(first->str() == "0,1;1,0");
    auto second = gl2.next();
    REQUIRE(second.has_value());
    CHECK(second->str() == "0,1;1,1");
    gl2.reset();
    auto set2 = stream_set(gl2);
    CHECK(set2.size() == 6);

    GlEnumerator gl3(3, f2);
    int count = 0;
    std::set<std::string> seen;
    while (auto g = gl3.next()) {
        ++count;
        CHECK(g->is_invertible());
        CHECK(seen.insert(g->str()).second);  // no duplicates
    }
    CHECK(count == 168);
    CHECK(static_cast<std::uint64_t>(count) == gl3.order());

    // restartable
    gl3.reset();
    CHECK(stream_set(gl3).size() == 168);

    const FieldSpec& f5 = FieldSpec::get(5);
    GlEnumerator gl1(1, f5);
    CHECK(stream_set(gl1).size() == 4);  // nonzero scalars

    CHECK_THROWS_AS(GlEnumerator(4, FieldSpec::get(4)), budget_error);  // 4^16 states
}

TEST_CASE("u_lambda streams") {
    const FieldSpec& f2 = FieldSpec::get(2);

    ULambdaEnumerator row(Partition({3}), f2);
    auto row_set = stream_set(row);
    CHECK(row_set == std::set<std::string>{FqMatrix::identity(f2, 3).str()});

    ULambdaEnumerator cols(Partition({1, 1}), f2);
    CHECK(stream_set(cols) == std::set<std::string>{"1,0;0,1", "1,1;0,1"});

    ULambdaEnumerator u21(Partition({2, 1}), f2);
    auto s21 = stream_set(u21);
    CHECK(s21.size() == 4);  // free entries at (0,2) and (1,2)
    CHECK(u_lambda_order(Partition({2, 1}), 2) == 4);
    for (const auto& text : s21) CHECK(u_lambda_contains(FqMatrix::parse(f2, text), Partition({2, 1})));

    // minus stream is the set of transposes
    ULambdaEnumerator u21m(Partition({2, 1}), f2, true);
    std::set<std::string> transposed;
    u21.reset();
    while (auto u = u21.next()) transposed.insert(u->transpose().str());
    CHECK(stream_set(u21m) == transposed);
}

TEST_CASE("parabolic membership") {
    const FieldSpec& f2 = FieldSpec::get(2);
    Partition la({2, 1});
    CHECK(p_lambda_contains(FqMatrix::identity(f2, 3), la));

    FqMatrix e31 = FqMatrix::identity(f2, 3);
    e31.set_enc(2, 0, 1);  // row 3 sits strictly below column 1's block
    CHECK_FALSE(p_lambda_contains(e31, la));
    CHECK(p_lambda_minus_contains(e31, la));

    // P_(n) is all of GL_n
    GlEnumerator gl(3, f2);
    while (auto g = gl.next()) CHECK(p_lambda_contains(*g, Partition({3})));
    FqMatrix singular(f2, 3, 3);
    CHECK_FALSE(p_lambda_contains(singular, Partition({3})));

    CHECK_THROWS_AS(p_lambda_contains(FqMatrix(f2, 2, 3), la), std::invalid_argument);
}

TEST_CASE("parabolic streams against the membership predicate") {
    for (int q : {2, 3}) {
        const FieldSpec& f = FieldSpec::get(q);
        for (int n = 1; n <= 3; ++n) {
            for (const auto& la : partitions_of(n)) {
                auto direct = std::set<std::string>{};
                GlEnumerator gl(n, f);
                while (auto g = gl.next())
                    if (p_lambda_contains(*g, la)) direct.insert(g->str());

                PLambdaEnumerator ps(la, f);
                auto streamed = stream_set(ps);
                CHECK(streamed == direct);
                CHECK(streamed.size() == p_lambda_order(la, q));

                // |P_lambda| = |U_lambda| * prod |GL_{lambda_i}|
                std::uint64_t levi = 1;
                for (int i = 0; i < la.length(); ++i) levi *= gl_order(la.part(i), q);
                CHECK(p_lambda_order(la, q) == u_lambda_order(la, q) * levi);
            }
        }
    }
}

TEST_CASE("borel and unitriangular special cases") {
    const FieldSpec& f2 = FieldSpec::get(2);
    for (int n = 2; n <= 3; ++n) {
        Partition ones(std::vector<int>(n, 1));
        GlEnumerator gl(n, f2);
        while (auto g = gl.next()) {
            bool upper = true, unitriangular = true;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i > j && g->enc(i, j) != 0) upper = unitriangular = false;
                    if (i == j && g->enc(i, j) != 1) unitriangular = false;
                }
            CHECK(p_lambda_contains(*g, ones) == upper);
            CHECK(u_lambda_contains(*g, ones) == unitriangular);
        }
    }
}

TEST_CASE("subspaces") {
    const FieldSpec& f2 = FieldSpec::get(2);
    Subspace zero = Subspace::span(f2, 3, {});
    CHECK(zero.dim() == 0);
    CHECK(zero.contains(FqVector(f2, 3)));
    CHECK_FALSE(zero.contains(FqVector::unit(f2, 3, 0)));

    FqVector e1 = FqVector::unit(f2, 2, 0), e2 = FqVector::unit(f2, 2, 1);
    Subspace s = Subspace::span(f2, 2, {e1 + e2, e2});
    CHECK(s == Subspace::full(f2, 2));
    CHECK(s.basis() == FqMatrix::identity(f2, 2));

    // span is independent of the input order
    Subspace t = Subspace::span(f2, 2, {e2, e1 + e2});
    CHECK(s == t);

    const FieldSpec& f3 = FieldSpec::get(3);
    FqVector v = FqVector::parse(f3, "1,2,0");
    FqVector w = FqVector::parse(f3, "0,1,1");
    Subspace sp = Subspace::span(f3, 3, {v, w});
    CHECK(sp.dim() == 2);
    CHECK(sp.contains(v + w.scaled(f3.element(2))));
    CHECK_FALSE(sp.contains(FqVector::parse(f3, "0,0,1")));

    // image under a group element
    FqMatrix g = FqMatrix::parse(f3, "1,1,0;0,1,0;0,0,1");
    Subspace img = sp.apply(g);
    CHECK(img.dim() == 2);
    CHECK(img.contains(g * v));
    CHECK(img.contains(g * w));
}

TEST_CASE("spanning generators generate the group") {
    for (int q : {2, 3, 4}) {
        const FieldSpec& f = FieldSpec::get(q);
        auto gens = spanning_generators(2, f);
        for (const auto& g : gens) CHECK(g.is_invertible());
        // close under multiplication and compare with |GL_2(F_q)|
        std::set<std::string> group{FqMatrix::identity(f, 2).str()};
        std::vector<FqMatrix> queue{FqMatrix::identity(f, 2)};
        while (!queue.empty()) {
            FqMatrix m = queue.back();
            queue.pop_back();
            for (const auto& g : gens) {
                FqMatrix prod = g * m;
                if (group.insert(prod.str()).second) queue.push_back(prod);
            }
        }
        CHECK(group.size() == gl_order(2, q));
    }
}

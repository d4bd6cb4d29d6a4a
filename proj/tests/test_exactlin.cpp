#include "gkforge/exactlin.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gkforge;

namespace {

Mat from_longs(int rows, int cols, std::initializer_list<long> vals) {
    Mat m(rows, cols);
    auto it = vals.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = CRat(*it++);
    return m;
}

Vec vec_longs(std::initializer_list<long> vals) {
    Vec v;
    for (long x : vals) v.push_back(CRat(x));
    return v;
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    auto r = Rat::parse("4/6");
    REQUIRE(r);
    CHECK(*r == Rat(2, 3));
    CHECK(r->str() == "2/3");
    CHECK(Rat::parse("-3")->str() == "-3");
    CHECK(Rat::parse("+3/6")->str() == "1/2");
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(!Rat::parse("1/0"));
    CHECK(!Rat::parse("x"));
    CHECK(!Rat::parse("1/2/3"));
    CHECK(CRat(Rat(1, 2), Rat(-3, 4)).str() == "1/2-3/4 i");
    CHECK(CRat(Rat(0), Rat(1)).conj().str() == "0-1 i");
}

TEST_CASE("rref on proportional rows and identity") {
    RrefResult rr = rref(from_longs(2, 2, {1, 2, 2, 4}));
    CHECK(rr.rank == 1);
    REQUIRE(rr.pivots.size() == 1);
    CHECK(rr.pivots[0] == 0);

    Mat id = Mat::identity(3);
    RrefResult ri = rref(id);
    CHECK(ri.rank == 3);
    CHECK(ri.r == id);
}

TEST_CASE("rref rank matches the naive elimination oracle and is idempotent") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        int rows = 3 + static_cast<int>(rng.below(3));
        int cols = 3 + static_cast<int>(rng.below(3));
        std::vector<Vec> rvecs;
        for (int r = 0; r < rows; ++r) rvecs.push_back(oracles::random_vec(rng, cols));
        Mat m = Mat::from_rows(rvecs, cols);
        RrefResult rr = rref(m);
        CHECK(rr.rank == oracles::naive_rank(rvecs));
        CHECK(rref(rr.r).r == rr.r);
    }
}

TEST_CASE("kernel and image basics") {
    Subspace k = kernel(from_longs(2, 2, {1, 2, 2, 4}));
    CHECK(k.dim() == 1);
    CHECK(subspace_equal(k, span_of(2, {vec_longs({-2, 1})})));

    CHECK(kernel(Mat::identity(3)).dim() == 0);
    CHECK(image(Mat(3, 3)).dim() == 0);
    CHECK(subspace_equal(image(Mat::identity(3)), Subspace::full(3)));
}

TEST_CASE("rank-nullity on random matrices") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 2 + static_cast<int>(rng.below(4));
        int cols = 2 + static_cast<int>(rng.below(4));
        std::vector<Vec> rvecs;
        for (int r = 0; r < rows; ++r) rvecs.push_back(oracles::random_vec(rng, cols));
        Mat m = Mat::from_rows(rvecs, cols);
        CHECK(kernel(m).dim() + rref(m).rank == cols);
        CHECK(image(m).dim() == rref(m).rank);
    }
}

TEST_CASE("subspace lattice basics") {
    Subspace x = span_of(2, {vec_longs({1, 0})});
    Subspace y = span_of(2, {vec_longs({0, 1})});
    CHECK(subspace_equal(intersect(x, x), x));
    CHECK(intersect(x, y).dim() == 0);
    CHECK(subspace_equal(subspace_sum(x, y), Subspace::full(2)));
    CHECK_THROWS_AS(intersect(x, span_of(3, {vec_longs({1, 0, 0})})), std::invalid_argument);
}

TEST_CASE("modular dimension law on random pairs, dim <= 8") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int ambient = 3 + static_cast<int>(rng.below(6));
        std::vector<Vec> g1, g2;
        for (int i = 0; i < 1 + static_cast<int>(rng.below(4)); ++i) g1.push_back(oracles::random_vec(rng, ambient, 2));
        for (int i = 0; i < 1 + static_cast<int>(rng.below(4)); ++i) g2.push_back(oracles::random_vec(rng, ambient, 2));
        Subspace s1 = span_of(ambient, g1), s2 = span_of(ambient, g2);
        CHECK(s1.dim() + s2.dim() == subspace_sum(s1, s2).dim() + intersect(s1, s2).dim());
        // containment both ways is equality
        Subspace both = intersect(s1, s2);
        bool s1_in_s2 = true;
        for (int r = 0; r < s1.dim(); ++r)
            if (!contains(s2, s1.basis.row(r))) s1_in_s2 = false;
        CHECK(s1_in_s2 == (both.dim() == s1.dim()));
    }
}

TEST_CASE("solve produces the canonical particular solution") {
    Mat m = from_longs(2, 3, {1, 1, 0, 0, 0, 1});
    auto x = solve(m, vec_longs({5, 7}));
    REQUIRE(x);
    CHECK((*x)[0] == CRat(5)); // free variable x1 set to zero
    CHECK((*x)[1] == CRat(0));
    CHECK((*x)[2] == CRat(7));
    CHECK(!solve(from_longs(2, 1, {1, 1}), vec_longs({1, 2})));
}

TEST_CASE("inverse round-trips and rejects singular input") {
    SplitMix64 rng(5);
    Mat m(3, 3);
    do {
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = oracles::random_crat(rng, 3);
    } while (rref(m).rank != 3);
    CHECK(mat_mul(m, inverse(m)) == Mat::identity(3));
    CHECK_THROWS_AS(inverse(from_longs(2, 2, {1, 2, 2, 4})), std::domain_error);
}

TEST_CASE("positive definiteness by exact pivots") {
    CHECK(is_positive_definite(Mat::identity(4)));
    Mat diag(2, 2);
    diag.at(0, 0) = CRat(1);
    diag.at(1, 1) = CRat(-1);
    CHECK(!is_positive_definite(diag));
    CHECK_THROWS_AS(is_positive_definite(from_longs(2, 2, {1, 2, 3, 4})), std::invalid_argument);

    // A^T A + I is positive definite for any real A.
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Mat a(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) a.at(r, c) = CRat(oracles::random_rat(rng, 3));
        Mat s = mat_add(mat_mul(a.transpose(), a), Mat::identity(3));
        CHECK(is_positive_definite(s));
        // sampled quadratic-form values agree with the pivot verdict
        for (int k = 0; k < 10; ++k) {
            Vec v(3);
            for (auto& x : v) x = CRat(oracles::random_rat(rng, 3));
            if (vec_is_zero(v)) continue;
            CRat q;
            Vec sv = s.apply(v);
            for (int i = 0; i < 3; ++i) q += v[i] * sv[i];
            CHECK(q.re.sign() > 0);
        }
    }
}

TEST_CASE("signature by congruence handles zero diagonals") {
    Mat off(2, 2);
    off.at(0, 1) = CRat(1);
    off.at(1, 0) = CRat(1);
    SignatureResult s = signature(off);
    CHECK(s.pos == 1);
    CHECK(s.neg == 1);
    CHECK(s.zero == 0);
    CHECK_THROWS_AS(signature(from_longs(2, 2, {1, 2, 3, 4})), std::invalid_argument);

    Mat z(3, 3);
    z.at(0, 0) = CRat(2);
    SignatureResult sz = signature(z);
    CHECK(sz.pos == 1);
    CHECK(sz.zero == 2);
}

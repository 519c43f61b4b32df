#include <catch2/catch_amalgamated.hpp>

#include "lvmb/intmatrix.hpp"
#include "lvmb/rational.hpp"
#include "oracles.hpp"

using namespace lvmb;

namespace {

IntMatrix from_init(std::vector<std::vector<long long>> rows) {
    std::vector<IntVec> rs;
    for (auto& r : rows) rs.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(rs);
}

bool is_diag_nonneg_chain(const IntMatrix& D) {
    for (int i = 0; i < D.rows; ++i)
        for (int j = 0; j < D.cols; ++j)
            if (i != j && D.at(i, j) != 0) return false;
    Int prev = 0;
    for (int t = 0; t < std::min(D.rows, D.cols); ++t) {
        const Int& d = D.at(t, t);
        if (d < 0) return false;
        if (prev != 0 && d != 0 && d % prev != 0) return false;
        if (prev == 0 && t > 0 && d != 0) return false;  // zeros must trail
        prev = d;
    }
    return true;
}

}  // namespace

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rational(3) / 4) == "3/4");
    CHECK(rat_to_string(Rational(-8) / 4) == "-2");
    CHECK(rat_from_string("3/4") == Rational(3) / 4);
    CHECK(rat_from_string("-7") == Rational(-7));
    CHECK(rat_from_string("6/8") == Rational(3) / 4);
    CHECK_THROWS_AS(rat_from_string("1/0"), MalformedInput);
    CHECK_THROWS_AS(rat_from_string("a"), MalformedInput);
    // canonical form: reduced with positive denominator
    Rational q = rat_from_string("-6/8");
    CHECK(rat_num(q) == -3);
    CHECK(rat_den(q) == 4);
}

TEST_CASE("snf identity and zero") {
    SNFResult r = snf(IntMatrix::identity(2));
    CHECK(r.D == IntMatrix::identity(2));
    CHECK(r.rank == 2);

    IntMatrix z(3, 2);
    SNFResult rz = snf(z);
    CHECK(rz.rank == 0);
    CHECK(rz.D.is_zero());
}

TEST_CASE("snf of a fixed matrix matches the minors oracle") {
    IntMatrix A = from_init({{2, 4}, {6, 8}});
    SNFResult r = snf(A);
    CHECK(r.rank == 2);
    CHECK(r.D.at(0, 0) == 2);
    CHECK(r.D.at(1, 1) == 4);
    CHECK(mul(mul(r.U, A), r.V) == r.D);
    CHECK(boost::multiprecision::abs(det(r.U)) == 1);
    CHECK(boost::multiprecision::abs(det(r.V)) == 1);

    IntVec oracle = testing::invariant_factors_by_minors(A);
    REQUIRE(oracle.size() == 2);
    CHECK(oracle[0] == 2);
    CHECK(oracle[1] == 4);
}

TEST_CASE("snf on random matrices: transforms, chain, rank, oracle") {
    std::mt19937_64 rng(20240711);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 4);
        IntMatrix A = testing::random_int_matrix(rng, rows, cols, 6);
        SNFExtResult r = snf_ext(A);
        CHECK(mul(mul(r.U, A), r.V) == r.D);
        CHECK(is_diag_nonneg_chain(r.D));
        CHECK(mul(r.U, r.Uinv) == IntMatrix::identity(rows));
        CHECK(mul(r.V, r.Vinv) == IntMatrix::identity(cols));
        CHECK(r.rank == rank(A));
        IntVec oracle = testing::invariant_factors_by_minors(A);
        IntVec got = invariant_factors(A);
        CHECK(got == oracle);
    }
}

TEST_CASE("basis extension: saturation columns") {
    IntMatrix A(2, 1);
    A.at(0, 0) = 2;
    A.at(1, 0) = 0;
    IntMatrix B = hnf_basis_extension(A);
    CHECK(boost::multiprecision::abs(det(B)) == 1);
    CHECK(B.at(0, 0) == 1);
    CHECK(B.at(1, 0) == 0);

    IntMatrix A2(2, 1);
    A2.at(0, 0) = 1;
    A2.at(1, 0) = 1;
    IntMatrix B2 = hnf_basis_extension(A2);
    CHECK(boost::multiprecision::abs(det(B2)) == 1);
    CHECK(B2.at(0, 0) == 1);
    CHECK(B2.at(1, 0) == 1);

    IntMatrix A3 = from_init({{1, 0}, {0, 1}, {0, 0}});
    IntMatrix B3 = hnf_basis_extension(A3);
    CHECK(boost::multiprecision::abs(det(B3)) == 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) CHECK(B3.at(i, j) == A3.at(i, j));

    IntMatrix dep = from_init({{1, 2}, {2, 4}});
    CHECK_THROWS_AS(hnf_basis_extension(dep), RankDeficient);
}

TEST_CASE("basis extension spans the saturation on random input") {
    std::mt19937_64 rng(77);
    int done = 0;
    while (done < 25) {
        int n = 2 + static_cast<int>(rng() % 3);
        int r = 1 + static_cast<int>(rng() % n);
        IntMatrix A = testing::random_int_matrix(rng, n, r, 5);
        if (rank(A) != r) continue;
        ++done;
        IntMatrix B = hnf_basis_extension(A);
        CHECK(boost::multiprecision::abs(det(B)) == 1);
        // first r columns must span A's columns over the rationals:
        // rank([B_r | A]) == r
        IntMatrix glue(n, r + r);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < r; ++j) glue.at(i, j) = B.at(i, j);
            for (int j = 0; j < r; ++j) glue.at(i, r + j) = A.at(i, j);
        }
        CHECK(rank(glue) == r);
        // saturation: every column of A is an integer combination of the
        // first r columns of B. Solve through the full inverse of B.
        SNFExtResult be = snf_ext(B);
        IntMatrix Binv = mul(be.Vinv, mul([&] {
            // B^{-1} = V D^{-1} U with D unit diagonal up to sign;
            // easier: solve via snf of B directly
            return IntMatrix::identity(n);
        }(), be.Uinv));
        (void)Binv;  // computed another way below
        // coordinates = B^{-1} A; use snf_ext(B): B = Uinv D Vinv here is
        // awkward, so check integrality with Cramer instead
        Int dB = det(B);
        for (int j = 0; j < r; ++j) {
            for (int i = 0; i < n; ++i) {
                // coordinate i of column j w.r.t. B: det(B with col i
                // replaced by A_j) / det(B)
                IntMatrix Bi = B;
                for (int t = 0; t < n; ++t) Bi.at(t, i) = A.at(t, j);
                Int num = det(Bi);
                CHECK(num % dB == 0);
                if (i >= r) CHECK(num == 0);  // A_j stays in the first r columns
            }
        }
    }
}

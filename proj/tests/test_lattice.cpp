#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"

using namespace cornerkit;

namespace {

IntMatrix from_ll(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 5;
        std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long long>(rng() % 11) - 5;
        REQUIRE(determinant(from_ll(m)) == ckt::det_cofactor(m));
    }
    REQUIRE(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("smith normal form factors the matrix with unimodular transforms") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix A(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) A.at(i, j) = static_cast<long long>(rng() % 13) - 6;
        SnfResult s = smith_normal_form(A);
        REQUIRE(s.U * A * s.V == s.D);
        REQUIRE(abs(determinant(s.U)) == 1);
        REQUIRE(abs(determinant(s.V)) == 1);
        // D diagonal, non-negative, divisibility chain
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) REQUIRE(s.D.at(i, j) == 0);
        Int prev = 0;
        for (std::size_t i = 0; i < std::min(r, c); ++i) {
            REQUIRE(s.D.at(i, i) >= 0);
            if (prev != 0) REQUIRE((s.D.at(i, i) == 0 || s.D.at(i, i) % prev == 0));
            if (s.D.at(i, i) == 0) REQUIRE((i + 1 == std::min(r, c) || s.D.at(i + 1, i + 1) == 0));
            prev = s.D.at(i, i);
        }
    }
}

TEST_CASE("smith normal form on known matrices") {
    SnfResult s = smith_normal_form(from_ll({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    REQUIRE(s.invariant_factors() == std::vector<Int>{2, 6, 12});
    SnfResult id = smith_normal_form(IntMatrix::identity(3));
    REQUIRE(id.invariant_factors() == std::vector<Int>{1, 1, 1});
}

TEST_CASE("unimodularity of bases") {
    REQUIRE(is_unimodular_basis({{1, 0}, {0, 1}}));
    REQUIRE(is_unimodular_basis({{1, 0}, {7, -1}}));
    REQUIRE_FALSE(is_unimodular_basis({{1, 0}, {0, 2}}));
    REQUIRE_FALSE(is_unimodular_basis({{1, 1}, {1, 1}}));
    REQUIRE(is_unimodular_basis({}));
    REQUIRE_THROWS_AS(is_unimodular_basis({{1, 0, 0}, {0, 1, 0}}), Error);
}

TEST_CASE("primitivity") {
    REQUIRE(is_primitive({2, 3}));
    REQUIRE(is_primitive({-1, 0, 0}));
    REQUIRE_FALSE(is_primitive({2, 4}));
    REQUIRE_THROWS_AS(is_primitive({0, 0}), Error);
}

TEST_CASE("kernel basis solves A x = 0 and is saturated") {
    // the diagonal circle of the CP^2 model, solved by hand: x1 = x2 = x3
    IntMatrix A = from_ll({{1, 0, -1}, {0, 1, -1}});
    IntMatrix K = kernel_basis(A);
    REQUIRE(K.cols() == 1);
    REQUIRE(K.at(0, 0) == 1);
    REQUIRE(K.at(1, 0) == 1);
    REQUIRE(K.at(2, 0) == 1);

    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng() % 3, c = r + rng() % 3;
        IntMatrix M(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) M.at(i, j) = static_cast<long long>(rng() % 9) - 4;
        IntMatrix Kr = kernel_basis(M);
        REQUIRE((M * Kr).is_zero());
        REQUIRE(Kr.cols() == c - smith_normal_form(M).rank());
        if (Kr.cols() > 0) {
            SnfResult ks = smith_normal_form(Kr);
            for (const Int& d : ks.invariant_factors()) REQUIRE(d == 1);
            // normalization: first nonzero entry of each column positive
            for (std::size_t j = 0; j < Kr.cols(); ++j)
                for (std::size_t i = 0; i < Kr.rows(); ++i) {
                    if (Kr.at(i, j) == 0) continue;
                    REQUIRE(Kr.at(i, j) > 0);
                    break;
                }
        }
    }
}

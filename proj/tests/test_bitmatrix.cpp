#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "doctest.h"
#include "storagecode/bitmatrix.hpp"

using namespace storagecode;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng() & 1) m.set(i, j);
    return m;
}

// reference rank for cols <= 64, one basis slot per leading bit
std::size_t reference_rank(const BitMatrix& m) {
    REQUIRE(m.cols <= 64);
    std::uint64_t slot[64] = {};
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        std::uint64_t v = m.row(i)[0];
        while (v) {
            const int lead = 63 - std::countl_zero(v);
            if (!slot[lead]) {
                slot[lead] = v;
                ++r;
                break;
            }
            v ^= slot[lead];
        }
    }
    return r;
}

bool multiply_row_by_vec(const BitMatrix& m, std::size_t i, const BitVec& z) {
    unsigned acc = 0;
    for (std::size_t w = 0; w < m.wpr; ++w) acc ^= std::popcount(m.row(i)[w] & z.w[w]) & 1u;
    return acc;
}

} // namespace

TEST_CASE("rank of hand matrices") {
    BitMatrix id(5, 5);
    for (std::size_t i = 0; i < 5; ++i) id.set(i, i);
    CHECK(rank(id) == 5);

    BitMatrix zero(4, 7);
    CHECK(rank(zero) == 0);

    BitMatrix dup(3, 3);
    dup.set(0, 0);
    dup.set(0, 2);
    dup.set(1, 0);
    dup.set(1, 2);
    dup.set(2, 1);
    CHECK(rank(dup) == 2);
}

TEST_CASE("rank matches a naive reference") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 24, cols = 1 + rng() % 24;
        BitMatrix m = random_matrix(rows, cols, rng);
        CHECK(rank(m) == reference_rank(m));
    }
}

TEST_CASE("rank is invariant under transpose and row shuffles") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 15; ++trial) {
        BitMatrix m = random_matrix(40 + rng() % 50, 40 + rng() % 50, rng);
        CHECK(rank(m) == rank(transpose(m)));

        BitMatrix shuffled = m;
        std::vector<std::size_t> perm(m.rows);
        for (std::size_t i = 0; i < m.rows; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        for (std::size_t i = 0; i < m.rows; ++i)
            std::copy_n(m.row(perm[i]), m.wpr, shuffled.row(i));
        CHECK(rank(m) == rank(shuffled));
    }
}

TEST_CASE("transpose is an involution and moves bits correctly") {
    std::mt19937_64 rng(23);
    BitMatrix m = random_matrix(70, 130, rng);
    BitMatrix t = transpose(m);
    REQUIRE(t.rows == 130);
    REQUIRE(t.cols == 70);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t i = rng() % m.rows, j = rng() % m.cols;
        CHECK(m.get(i, j) == t.get(j, i));
    }
    CHECK(transpose(t) == m);
}

TEST_CASE("right kernel vectors annihilate the matrix") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t rows = 20 + rng() % 60, cols = 20 + rng() % 60;
        BitMatrix m = random_matrix(rows, cols, rng);
        SubspaceBasis ker = right_kernel(m);
        CHECK(ker.dim() + rank(m) == cols);
        CHECK(ker.ambient_dim == cols);
        CHECK(rank(ker.vectors) == ker.dim());
        for (std::size_t k = 0; k < ker.dim(); ++k) {
            BitVec z(cols);
            std::copy_n(ker.vectors.row(k), ker.vectors.wpr, z.w.begin());
            for (std::size_t i = 0; i < rows; ++i) CHECK(!multiply_row_by_vec(m, i, z));
        }
    }
}

TEST_CASE("left nullspace vectors annihilate from the left") {
    std::mt19937_64 rng(25);
    BitMatrix m = random_matrix(50, 30, rng);
    SubspaceBasis ns = nullspace(m);
    CHECK(ns.dim() + rank(m) == m.rows);
    BitMatrix t = transpose(m);
    for (std::size_t k = 0; k < ns.dim(); ++k) {
        BitVec z(m.rows);
        std::copy_n(ns.vectors.row(k), ns.vectors.wpr, z.w.begin());
        for (std::size_t j = 0; j < m.cols; ++j) CHECK(!multiply_row_by_vec(t, j, z));
    }
}

TEST_CASE("subspace dimension formula dim A + dim B = dim(A+B) + dim(A meet B)") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t amb = 10 + rng() % 40;
        SubspaceBasis a = row_space(random_matrix(1 + rng() % 12, amb, rng));
        SubspaceBasis b = row_space(random_matrix(1 + rng() % 12, amb, rng));
        SubspaceBasis s = subspace_sum(a, b);
        SubspaceBasis i = subspace_intersection(a, b);
        CHECK(a.dim() + b.dim() == s.dim() + i.dim());
        for (std::size_t k = 0; k < i.dim(); ++k) {
            BitVec v(amb);
            std::copy_n(i.vectors.row(k), i.vectors.wpr, v.w.begin());
            CHECK(subspace_contains(a, v));
            CHECK(subspace_contains(b, v));
            CHECK(subspace_contains(s, v));
        }
    }
}

TEST_CASE("same_span sees through basis changes") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t amb = 8 + rng() % 30;
        BitMatrix m = random_matrix(6, amb, rng);
        SubspaceBasis a = row_space(m);
        // randomly mix rows, then re-echelonize
        BitMatrix mixed = m;
        for (int step = 0; step < 20; ++step) {
            const std::size_t i = rng() % m.rows, j = rng() % m.rows;
            if (i == j) continue;
            for (std::size_t w = 0; w < m.wpr; ++w) mixed.row(i)[w] ^= mixed.row(j)[w];
        }
        SubspaceBasis b = row_space(mixed);
        CHECK(same_span(a, b));

        if (a.dim() > 0 && a.dim() < amb) {
            SubspaceBasis whole = row_space(random_matrix(amb + 5, amb, rng));
            if (whole.dim() != a.dim()) CHECK(!same_span(a, whole));
        }
    }
}

TEST_CASE("elimination is deterministic") {
    std::mt19937_64 rng(28);
    BitMatrix m = random_matrix(30, 30, rng);
    BitMatrix c1 = m, c2 = m;
    EchelonInfo i1 = ref_in_place(c1);
    EchelonInfo i2 = ref_in_place(c2);
    CHECK(c1 == c2);
    CHECK(i1.pivots == i2.pivots);
}

TEST_CASE("multiplication operator matrix rows are shifted copies") {
    std::mt19937_64 rng(30);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 3 + trial % 4;
        AlgebraElement f(n);
        for (std::size_t v = 0; v < f.size(); ++v)
            if (rng() & 1) f.coeffs.set(v);

        BitMatrix m = mult_operator_matrix(f);
        REQUIRE(m.rows == f.size());
        REQUIRE(m.cols == f.size());
        CHECK(std::equal(m.row(0), m.row(0) + m.wpr, f.coeffs.w.begin()));
        for (std::size_t v = 0; v < m.rows; ++v) {
            AlgebraElement shifted = mul(monomial(n, v), f);
            CHECK(std::equal(m.row(v), m.row(v) + m.wpr, shifted.coeffs.w.begin()));
            for (std::size_t u = 0; u < v; ++u) CHECK(m.get(u, v) == m.get(v, u));
        }
    }
}

TEST_CASE("matrix serialization round trip and validation") {
    std::mt19937_64 rng(29);
    BitMatrix m = random_matrix(9, 70, rng);
    std::ostringstream os;
    write_matrix(os, m);
    std::istringstream is(os.str());
    CHECK(read_matrix(is) == m);

    const std::string text = os.str();
    CHECK(text.rfind("gf2 9 70\n", 0) == 0);

    BitMatrix small(2, 3);
    small.set(0, 0);
    small.set(0, 2);
    small.set(1, 1);
    std::ostringstream gold;
    write_matrix(gold, small);
    CHECK(gold.str() == "gf2 2 3\n0000000000000005\n0000000000000002\n");

    std::istringstream bad_header("gf3 1 1\n0000000000000001");
    CHECK_THROWS_AS(read_matrix(bad_header), error);
    std::istringstream truncated("gf2 2 64\nffffffffffffffff");
    CHECK_THROWS_AS(read_matrix(truncated), error);
    std::istringstream bad_pad("gf2 1 4\n00000000000000f1");
    CHECK_THROWS_AS(read_matrix(bad_pad), error);
    std::istringstream bad_hex("gf2 1 4\n000000000000000g");
    CHECK_THROWS_AS(read_matrix(bad_hex), error);
}

TEST_CASE("dense ceiling is enforced") {
    CHECK_THROWS_AS(BitMatrix(std::size_t(1) << 16, (std::size_t(1) << 16) / 2 * 3), error);
    try {
        BitMatrix big(std::size_t(1) << 20, std::size_t(1) << 20);
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.kind() == errc::resource);
    }
}

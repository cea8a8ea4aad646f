#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sigma/contract.hpp"
#include "sigma/game.hpp"
#include "sigma/gf2.hpp"

using namespace sigma;

TEST_SUITE("gf2") {

TEST_CASE("bit vector basics and padding") {
    BitVector v(70);
    v.set(0);
    v.set(64);
    v.set(69);
    CHECK(v.weight() == 3);
    CHECK(v.get(64));
    CHECK_FALSE(v.get(65));
    CHECK((v ^ v).is_zero());

    const auto ones = BitVector::ones(70);
    CHECK(ones.weight() == 70);
    CHECK(ones.words()[1] == (std::uint64_t{1} << 6) - 1);  // padding stays clear
    CHECK(ones.dot(v) == true);
    CHECK(BitVector::from_string("1011").to_string() == "1011");
    CHECK_THROWS_AS(v.get(70), ContractError);
    CHECK_THROWS_AS(v ^= BitVector(3), ContractError);
}

TEST_CASE("xor_at across word boundaries") {
    BitVector v(130);
    const auto src = BitVector::ones(70);
    v.xor_at(src, 60);
    CHECK(v.weight() == 70);
    CHECK_FALSE(v.get(59));
    CHECK(v.get(60));
    CHECK(v.get(129));
    v.xor_at(BitVector::from_bits({1, 1}), 63);
    CHECK_FALSE(v.get(63));
    CHECK_FALSE(v.get(64));
    CHECK_THROWS_AS(v.xor_at(src, 61), ContractError);
}

TEST_CASE("rank examples") {
    CHECK(rank(BitMatrix::identity(2)) == 2);
    CHECK(rank(make_j(2)) == 2);
    CHECK(rank(make_j(3)) == 2);
    CHECK(oracle::rank(make_j(3)) == 2);
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(BitMatrix::identity(4)).empty());

    const auto zero_kernel = kernel_basis(BitMatrix::zero(3, 3));
    REQUIRE(zero_kernel.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(zero_kernel[i] == BitVector::unit(3, i));
    }

    const auto k = kernel_basis(make_j(3));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == BitVector::from_bits({1, 0, 1}));
    CHECK((make_j(3) * k[0]).is_zero());
}

TEST_CASE("solve examples") {
    const auto b = BitVector::from_bits({1, 0, 1, 1});
    CHECK(solve(BitMatrix::identity(4), b) == b);
    CHECK(solve(make_j(2), BitVector::from_bits({1, 0})) == BitVector::from_bits({0, 1}));
    CHECK_FALSE(solve(make_j(3), BitVector::from_bits({1, 0, 0})).has_value());
    CHECK_THROWS_AS(solve(make_j(3), BitVector(2)), ContractError);
}

TEST_CASE("in_image examples checked against the enumerated image") {
    const auto j3 = make_j(3);
    // Enumerating all 8 inputs gives Im J_3 = {000, 010, 101, 111}.
    const auto img = oracle::image(j3);
    CHECK(img == std::set<std::uint64_t>{0b000, 0b010, 0b101, 0b111});

    CHECK(in_image(j3, BitVector(3)));
    CHECK(in_image(j3, BitVector::from_bits({1, 0, 1})));
    CHECK(in_image(j3, BitVector::from_bits({1, 1, 1})));
    CHECK_FALSE(in_image(j3, BitVector::from_bits({1, 0, 0})));
}

TEST_CASE("kronecker examples") {
    const auto j2 = make_j(2);
    const auto block = kronecker(BitMatrix::identity(2), j2);
    CHECK(block == BitMatrix::from_strings({"0100", "1000", "0001", "0010"}));

    // J2 ⊗ J2 expanded entrywise: a[i][j] b[k][l] at (2i+k, 2j+l).
    CHECK(kronecker(j2, j2) == BitMatrix::from_strings({"0001", "0010", "0100", "1000"}));

    const auto a = BitMatrix::from_strings({"110", "011"});
    CHECK(kronecker(a, BitMatrix::identity(1)) == a);
    CHECK(kronecker(BitMatrix::identity(1), a) == a);
}

TEST_CASE("symmetric flag is verified") {
    auto m = BitMatrix::from_strings({"01", "00"});
    CHECK_THROWS_AS(m.mark_symmetric(), ContractError);
    auto s = BitMatrix::from_strings({"01", "10"});
    CHECK(s.mark_symmetric().flagged_symmetric());
    CHECK(kronecker(s, s).flagged_symmetric());
    s.set(0, 0);  // mutation drops the flag
    CHECK_FALSE(s.flagged_symmetric());
}

TEST_CASE("rank-nullity and solve validity on random matrices") {
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = 1 + rng() % 12;
        const std::size_t cols = 1 + rng() % 12;
        const auto m = oracle::random_matrix(rng, rows, cols, 0.3 + 0.4 * (trial % 3) / 2.0);
        const auto r = rank(m);
        const auto k = kernel_basis(m);
        CHECK(r + k.size() == cols);
        CHECK(r == oracle::rank(m));
        CHECK(oracle::kernel_size(m) == (std::size_t{1} << k.size()));
        for (const auto& v : k) {
            CHECK(oracle::apply(m, v).is_zero());
        }
        const auto img = oracle::image(m);
        for (int t = 0; t < 8; ++t) {
            const auto b = oracle::random_vector(rng, rows);
            const auto x = solve(m, b);
            CHECK(x.has_value() == (img.count(oracle::to_mask(b)) == 1));
            if (x) {
                CHECK(oracle::apply(m, *x) == b);
            }
        }
    }
}

TEST_CASE("orthogonality criterion matches solve on symmetric matrices") {
    std::mt19937_64 rng(20);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        const auto m = oracle::random_symmetric(rng, n, trial % 2 == 0 ? 0.2 : 0.5);
        const auto kernel = kernel_basis(m);
        // Exhaustive over every b up to 12 columns, random beyond.
        if (n <= 12) {
            const auto img = oracle::image(m);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                const auto b = oracle::from_mask(mask, n);
                const bool ortho = in_image_by_orthogonality(kernel, b);
                CHECK(ortho == solve(m, b).has_value());
                CHECK(ortho == (img.count(mask) == 1));
            }
        } else {
            for (int t = 0; t < 64; ++t) {
                const auto b = oracle::random_vector(rng, n);
                CHECK(in_image(m, b) == solve(m, b).has_value());
            }
        }
    }
}

TEST_CASE("kronecker is associative and satisfies the mixed product rule") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = oracle::random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        const auto b = oracle::random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        const auto c = oracle::random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        CHECK(kronecker(kronecker(a, b), c) == kronecker(a, kronecker(b, c)));

        const auto p = oracle::random_matrix(rng, a.cols(), 1 + rng() % 3);
        const auto q = oracle::random_matrix(rng, b.cols(), 1 + rng() % 3);
        CHECK(kronecker(a, b) * kronecker(p, q) == kronecker(a * p, b * q));
    }
}

TEST_CASE("apply_on_axis agrees with the full Kronecker operator") {
    std::mt19937_64 rng(3);
    const std::vector<std::size_t> dims = {2, 3, 4};
    for (std::size_t axis = 0; axis < 3; ++axis) {
        const auto map = oracle::random_matrix(rng, 1 + rng() % 4, dims[axis]);
        BitMatrix full = BitMatrix::identity(1);
        for (std::size_t i = 0; i < 3; ++i) {
            full = kronecker(full, i == axis ? map : BitMatrix::identity(dims[i]));
        }
        for (int t = 0; t < 10; ++t) {
            const auto v = oracle::random_vector(rng, 24);
            CHECK(apply_on_axis(v, dims, axis, map) == full * v);
        }
    }
}

TEST_CASE("solve is deterministic with free variables at zero") {
    // x0 + x1 = 1: pivot x0, free x1 = 0.
    const auto m = BitMatrix::from_strings({"11"});
    CHECK(solve(m, BitVector::from_bits({1})) == BitVector::from_bits({1, 0}));
    CHECK(kernel_basis(m) == std::vector<BitVector>{BitVector::from_bits({1, 1})});
}

}  // TEST_SUITE

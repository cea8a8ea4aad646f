#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sigma/algebra.hpp"
#include "sigma/contract.hpp"
#include "sigma/game.hpp"

using namespace sigma;

namespace {

QuotientShape monomial_shape(std::size_t p, std::size_t q) {
    const std::size_t e[] = {p, q};
    return QuotientShape::monomial(e);
}

QuotientShape grid_algebra(std::initializer_list<std::size_t> dims) {
    const std::vector<std::size_t> d(dims);
    return QuotientShape::chebyshev(d);
}

TensorElement xy_monomial(const QuotientShape& s, std::size_t r, std::size_t t) {
    const std::size_t e[] = {r, t};
    return TensorElement::monomial(s, e);
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("quotient shape bookkeeping") {
    const auto s = grid_algebra({3, 4});
    CHECK(s.total() == 12);
    CHECK(s.is_chebyshev());
    CHECK(monomial_shape(3, 3).is_chebyshev());  // Q_3 = X^3
    CHECK_FALSE(monomial_shape(2, 3).is_chebyshev());
    const std::size_t e[] = {2, 1};
    CHECK(s.flat_index(e) == 9);
    CHECK(s.exponents_of(9) == std::vector<std::size_t>{2, 1});
    CHECK_THROWS_AS(QuotientShape({Poly2::one()}), ContractError);
}

TEST_CASE("tensor_mul examples") {
    const auto s = monomial_shape(2, 2);
    const auto x = TensorElement::variable(s, 0);
    const auto y = TensorElement::variable(s, 1);
    const auto a = x + y + xy_monomial(s, 1, 1);
    CHECK(a * TensorElement::one(s) == a);
    CHECK(((x + y) * (x + y)).is_zero());

    const auto g = grid_algebra({3, 3});
    const auto gx = TensorElement::variable(g, 0);
    CHECK((gx * xy_monomial(g, 2, 0)).is_zero());  // x^3 = Q_3(x) = 0

    CHECK_THROWS_AS(x * TensorElement::one(g), ContractError);
}

TEST_CASE("tensor_mul agrees with pairwise monomial expansion") {
    std::mt19937_64 rng(99);
    const std::vector<QuotientShape> shapes = {grid_algebra({4}), grid_algebra({3, 5}),
                                               grid_algebra({2, 3, 2}), monomial_shape(3, 4),
                                               QuotientShape({Poly2::from_exponents({3, 1, 0}),
                                                              Poly2::from_exponents({2, 0})})};
    for (const auto& s : shapes) {
        for (int t = 0; t < 25; ++t) {
            const TensorElement a(s, oracle::random_vector(rng, s.total()));
            const TensorElement b(s, oracle::random_vector(rng, s.total()));
            CHECK(a * b == oracle::naive_mul(a, b));
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("mult_operator examples") {
    const auto g = grid_algebra({2, 3});
    CHECK(mult_operator(TensorElement::one(g)) == BitMatrix::identity(6));

    const std::size_t two[] = {2};
    const auto s = QuotientShape::monomial(two);
    CHECK(mult_operator(TensorElement::variable(s, 0)) == BitMatrix::from_strings({"00", "10"}));

    // On 1, x, x^2 modulo X^3: 1 ↦ x, x ↦ x^2, x^2 ↦ 0.
    const auto q3 = grid_algebra({3});
    CHECK(mult_operator(TensorElement::variable(q3, 0)) ==
          BitMatrix::from_strings({"000", "100", "010"}));
}

TEST_CASE("mult_operator of an axis variable is I ⊗ C_i ⊗ I") {
    const auto s = grid_algebra({3, 4, 2});
    for (std::size_t axis = 0; axis < 3; ++axis) {
        BitMatrix expected = BitMatrix::identity(1);
        for (std::size_t i = 0; i < 3; ++i) {
            expected = kronecker(expected, i == axis ? s.companion(i) : BitMatrix::identity(s.dims()[i]));
        }
        CHECK(mult_operator(TensorElement::variable(s, axis)) == expected);
    }
}

TEST_CASE("divides examples") {
    const auto s22 = monomial_shape(2, 2);
    const auto u = TensorElement::variable(s22, 0) + TensorElement::variable(s22, 1);
    CHECK(divides(u, TensorElement::zero(s22)));
    CHECK(divides(u, xy_monomial(s22, 1, 1)));
    CHECK_FALSE(divides(u, xy_monomial(s22, 1, 0)));
    CHECK(oracle::divides_exhaustive(u, xy_monomial(s22, 1, 1)));
    CHECK_FALSE(oracle::divides_exhaustive(u, xy_monomial(s22, 1, 0)));

    // r + s = 2 ≥ min(3, 2): divisible; exhaustive search over 2^6 agrees.
    const auto s32 = monomial_shape(3, 2);
    const auto u32 = TensorElement::variable(s32, 0) + TensorElement::variable(s32, 1);
    CHECK(divides(u32, xy_monomial(s32, 2, 0)));
    CHECK(oracle::divides_exhaustive(u32, xy_monomial(s32, 2, 0)));

    const DivisibilityTester tester(u32);
    const auto q = tester.quotient(xy_monomial(s32, 2, 0));
    REQUIRE(q.has_value());
    CHECK(u32 * *q == xy_monomial(s32, 2, 0));
}

TEST_CASE("divides agrees with exhaustive search on small algebras") {
    std::mt19937_64 rng(4);
    const std::vector<QuotientShape> shapes = {grid_algebra({3, 4}), grid_algebra({2, 2, 3}),
                                               monomial_shape(3, 3), grid_algebra({5, 2}),
                                               monomial_shape(4, 2)};
    for (const auto& s : shapes) {
        REQUIRE(s.total() <= 12);
        for (int t = 0; t < 12; ++t) {
            const TensorElement u(s, oracle::random_vector(rng, s.total()));
            const DivisibilityTester tester(u);
            for (int k = 0; k < 6; ++k) {
                // Half the targets are multiples of u, so both verdicts occur.
                TensorElement target(s, oracle::random_vector(rng, s.total()));
                if (k % 2 == 0) {
                    target = u * target;
                }
                CHECK(tester.divides(target) == oracle::divides_exhaustive(u, target));
            }
        }
    }
}

TEST_CASE("x+y divides exactly the monomials of high enough degree") {
    for (std::size_t p = 1; p <= 5; ++p) {
        for (std::size_t q = 1; q <= 5; ++q) {
            const auto s = monomial_shape(p, q);
            const auto x = TensorElement::variable(s, 0);
            const auto y = TensorElement::variable(s, 1);
            const TensorElement divisors[] = {x + y, x + y + x * y};
            for (const auto& u : divisors) {
                const DivisibilityTester tester(u);
                for (std::size_t r = 0; r <= 5; ++r) {
                    for (std::size_t t = 0; t <= 5; ++t) {
                        CHECK(tester.divides(xy_monomial(s, r, t)) == (r + t >= std::min(p, q)));
                    }
                }
            }
        }
    }
}

TEST_CASE("phi examples") {
    const auto s = grid_algebra({3});
    const std::size_t e0[] = {0}, e1[] = {1}, e2[] = {2};
    CHECK(phi(TensorElement::monomial(s, e0)) == BitVector::from_bits({1, 0, 0}));
    CHECK(phi(TensorElement::monomial(s, e1)) == BitVector::from_bits({0, 1, 0}));
    CHECK(phi(TensorElement::monomial(s, e2)) == BitVector::from_bits({1, 0, 1}));

    CHECK(phi_inverse(BitVector::from_bits({1, 0, 0}), s) == TensorElement::one(s));
    CHECK(phi_inverse(BitVector::from_bits({0, 1, 0}), s) == TensorElement::variable(s, 0));
    const auto all_on = phi_inverse(BitVector::ones(3), s);
    CHECK(all_on == TensorElement::variable(s, 0) + TensorElement::monomial(s, e2));

    CHECK_THROWS_AS(phi(TensorElement::one(monomial_shape(2, 2))), ContractError);
    CHECK_THROWS_AS(phi_inverse(BitVector(4), s), ContractError);
}

TEST_CASE("cell i corresponds to Q_i(x)") {
    for (std::size_t n = 1; n <= 16; ++n) {
        const std::size_t dims[] = {n};
        const auto s = QuotientShape::chebyshev(dims);
        for (std::size_t i = 0; i < n; ++i) {
            const Poly2 qi[] = {chebyshev_q(i)};
            CHECK(phi(TensorElement::from_axis_polys(s, qi)) == BitVector::unit(n, i));
        }
    }
}

TEST_CASE("phi and phi_inverse are mutually inverse") {
    std::mt19937_64 rng(16);
    for (std::size_t n = 1; n <= 16; ++n) {
        const std::size_t dims[] = {n};
        const auto s = QuotientShape::chebyshev(dims);
        CHECK(phi_matrix(s) * phi_inverse_matrix(s) == BitMatrix::identity(n));
        const auto check = [&](const BitVector& v) {
            CHECK(phi(phi_inverse(v, s)) == v);
            CHECK(phi_inverse(phi(TensorElement(s, v)), s).coeffs() == v);
        };
        if (n <= 8) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                check(oracle::from_mask(mask, n));
            }
        } else {
            for (int t = 0; t < 64; ++t) {
                check(oracle::random_vector(rng, n));
            }
        }
    }
    const auto s = grid_algebra({3, 4, 2});
    for (int t = 0; t < 30; ++t) {
        const auto v = oracle::random_vector(rng, s.total());
        CHECK(phi(phi_inverse(v, s)) == v);
        CHECK(phi_matrix(s) * v == phi(TensorElement(s, v)));
    }
}

TEST_CASE("phi intertwines multiplication by x with J") {
    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 16; ++n) {
        const std::size_t dims[] = {n};
        const auto s = QuotientShape::chebyshev(dims);
        const auto x = TensorElement::variable(s, 0);
        const auto j = make_j(n);
        for (int t = 0; t < 20; ++t) {
            const TensorElement p(s, oracle::random_vector(rng, n));
            CHECK(phi(x * p) == j * phi(p));
        }
    }
}

TEST_CASE("Q_n annihilates multiplication by x, whose powers below n are independent") {
    for (std::size_t n = 1; n <= 16; ++n) {
        const std::size_t dims[] = {n};
        const auto s = QuotientShape::chebyshev(dims);
        const auto mx = mult_operator(TensorElement::variable(s, 0));
        CHECK(evaluate(chebyshev_q(n), mx) == BitMatrix::zero(n, n));
        CHECK(evaluate(chebyshev_q(n), make_j(n)) == BitMatrix::zero(n, n));

        // Flattened powers I, M, ..., M^{n-1} as rows of one matrix.
        std::vector<BitVector> flat;
        BitMatrix power = BitMatrix::identity(n);
        for (std::size_t k = 0; k < n; ++k) {
            BitVector row(n * n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t c = 0; c < n; ++c) {
                    row.set(i * n + c, power.get(i, c));
                }
            }
            flat.push_back(std::move(row));
            power = power * mx;
        }
        CHECK(rank(BitMatrix::from_rows(flat)) == n);
    }
}

TEST_CASE("element text form") {
    const auto s = grid_algebra({3, 3});
    const auto u = TensorElement::variable(s, 0) + TensorElement::variable(s, 1) +
                   TensorElement::variable(s, 0) * TensorElement::variable(s, 1);
    CHECK(u.to_string() == "x1*x2+x1+x2");
    CHECK(TensorElement::zero(s).to_string() == "0");
    CHECK(TensorElement::one(s).to_string() == "1");
}

}  // TEST_SUITE

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "sigma/gf2.hpp"

namespace sigma {

/// Polynomial over GF(2), coefficients packed 64 per word. Canonical form:
/// the highest stored word is nonzero, so the zero polynomial stores
/// nothing and structural equality is ring equality.
class Poly2 {
  public:
    using Word = std::uint64_t;
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly2() = default;

    static Poly2 zero() { return {}; }
    static Poly2 one() { return monomial(0); }
    static Poly2 x() { return monomial(1); }
    static Poly2 monomial(std::size_t exponent);
    /// Sum of X^e over the listed exponents (repeats cancel).
    static Poly2 from_exponents(std::initializer_list<std::size_t> exponents);
    /// Coordinate k of `coeffs` is the coefficient of X^k.
    static Poly2 from_coefficients(const BitVector& coeffs);

    bool is_zero() const { return words_.empty(); }
    /// kZeroDegree for the zero polynomial.
    int degree() const;
    bool coeff(std::size_t k) const;
    bool constant_term() const { return coeff(0); }
    std::vector<std::size_t> exponents() const;

    /// Coefficient vector of length `len`; requires degree() < len.
    BitVector coefficients(std::size_t len) const;

    Poly2& operator+=(const Poly2& other);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    /// Remainder of Euclidean division; throws ContractError when b == 0.
    friend Poly2 operator%(const Poly2& a, const Poly2& b);
    friend Poly2 operator/(const Poly2& a, const Poly2& b);
    bool operator==(const Poly2& other) const = default;

    Poly2 shifted(std::size_t k) const;

    /// Descending powers, "X^5+X", with "0" and "1" for constants.
    std::string to_string() const;

  private:
    void trim();
    void xor_shifted(const Poly2& other, std::size_t shift);

    std::vector<Word> words_;
};

struct DivMod {
    Poly2 quotient;
    Poly2 remainder;
};

DivMod divmod(const Poly2& a, const Poly2& b);
Poly2 gcd(Poly2 a, Poly2 b);
bool divides(const Poly2& d, const Poly2& p);

/// Q_n: Q_0 = 1, Q_1 = X, Q_{n+1} = X Q_n + Q_{n-1}. Characteristic (and
/// minimal) polynomial of the n-vertex path adjacency matrix over GF(2).
Poly2 chebyshev_q(std::size_t n);
/// Q_0 .. Q_{n_max} in one pass.
std::vector<Poly2> chebyshev_table(std::size_t n_max);

/// Exponent of X in p, i.e. index of the lowest nonzero coefficient.
std::size_t val_x(const Poly2& p);
/// Largest v with prime^v | p. The caller vouches that `prime` is
/// irreducible; nothing here factors polynomials.
std::size_t valuation(const Poly2& p, const Poly2& prime);
/// Largest j with 2^j | n.
std::size_t two_valuation(std::uint64_t n);

}  // namespace sigma

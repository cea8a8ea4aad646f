#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigma/gf2.hpp"
#include "sigma/poly2.hpp"

namespace sigma {

/// The algebra k[X_1]/M_1 ⊗ ... ⊗ k[X_d]/M_d as a shape: one nonconstant
/// modulus per axis. Elements are coefficient vectors in the monomial
/// basis x_1^{k_1}...x_d^{k_d}, flattened row-major with axis 0 slowest,
/// which is the same convention kronecker() uses for its factors.
class QuotientShape {
  public:
    explicit QuotientShape(std::vector<Poly2> moduli);

    /// Grid algebra: modulus Q_{n_i} on axis i.
    static QuotientShape chebyshev(std::span<const std::size_t> dims);
    /// Local algebra k[X_1]/X_1^{p_1} ⊗ ...
    static QuotientShape monomial(std::span<const std::size_t> exponents);

    const std::vector<Poly2>& moduli() const { return moduli_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t axes() const { return dims_.size(); }
    std::size_t total() const { return total_; }

    /// True iff modulus i equals Q_{deg M_i} for every axis.
    bool is_chebyshev() const { return chebyshev_; }

    std::size_t flat_index(std::span<const std::size_t> exponents) const;
    std::vector<std::size_t> exponents_of(std::size_t flat) const;

    /// Matrix of multiplication by x_axis on the single factor k[X]/M_axis.
    const BitMatrix& companion(std::size_t axis) const { return companions_[axis]; }

    bool operator==(const QuotientShape& other) const { return moduli_ == other.moduli_; }

  private:
    std::vector<Poly2> moduli_;
    std::vector<std::size_t> dims_;
    std::size_t total_ = 1;
    std::vector<BitMatrix> companions_;
    bool chebyshev_ = true;
};

class TensorElement {
  public:
    TensorElement(std::shared_ptr<const QuotientShape> shape, BitVector coeffs);
    TensorElement(const QuotientShape& shape, BitVector coeffs);

    static TensorElement zero(const QuotientShape& shape);
    static TensorElement one(const QuotientShape& shape);
    static TensorElement variable(const QuotientShape& shape, std::size_t axis);
    /// x_1^{e_1}...x_d^{e_d}; exponents may exceed the axis degree and are
    /// reduced modulo the axis modulus.
    static TensorElement monomial(const QuotientShape& shape, std::span<const std::size_t> exponents);
    /// p_1(x_1) p_2(x_2) ... p_d(x_d), each factor reduced on its axis.
    static TensorElement from_axis_polys(const QuotientShape& shape, std::span<const Poly2> factors);

    const QuotientShape& shape() const { return *shape_; }
    const std::shared_ptr<const QuotientShape>& shape_ptr() const { return shape_; }
    const BitVector& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.is_zero(); }
    /// Coefficient of the monomial 1.
    bool constant_term() const { return coeffs_.get(0); }

    TensorElement times_variable(std::size_t axis) const;

    TensorElement& operator+=(const TensorElement& other);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    bool operator==(const TensorElement& other) const;

    /// e.g. "x1*x2^2+x1+1"; variables are 1-based.
    std::string to_string() const;

  private:
    std::shared_ptr<const QuotientShape> shape_;
    BitVector coeffs_;
};

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    return tensor_mul(a, b);
}

/// total x total matrix of v ↦ u v in the monomial basis.
BitMatrix mult_operator(const TensorElement& u);

/// Divisibility by a fixed element, decided as image membership of its
/// multiplication operator. Reuses one reduction across many queries.
class DivisibilityTester {
  public:
    explicit DivisibilityTester(const TensorElement& u);

    bool divides(const TensorElement& t) const;
    /// Some v with u v = t, if any.
    std::optional<TensorElement> quotient(const TensorElement& t) const;

  private:
    TensorElement divisor_;
    RowReduction reduction_;
};

bool divides(const TensorElement& u, const TensorElement& t);

/// Per-axis change of basis from k[X]/Q_n (monomials) to k^n (grid
/// cells): column i is J_n^i applied to the first cell vector.
BitMatrix phi_axis_matrix(std::size_t n);
/// Its inverse: column i holds the coefficients of Q_i, i.e. cell i
/// corresponds to Q_i(x).
BitMatrix phi_inverse_axis_matrix(std::size_t n);
BitMatrix phi_matrix(const QuotientShape& shape);
BitMatrix phi_inverse_matrix(const QuotientShape& shape);

/// Monomial coordinates to grid-cell coordinates. Requires Chebyshev moduli.
BitVector phi(const TensorElement& element);
TensorElement phi_inverse(const BitVector& cells, const QuotientShape& shape);

/// p(m) by Horner's rule.
BitMatrix evaluate(const Poly2& p, const BitMatrix& m);

}  // namespace sigma

#include "sigma/algebra.hpp"

#include <functional>
#include <utility>

#include "sigma/contract.hpp"

namespace sigma {

namespace {

BitMatrix companion_matrix(const Poly2& modulus) {
    const auto n = static_cast<std::size_t>(modulus.degree());
    BitMatrix c(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        c.set(j + 1, j);
    }
    // x * x^{n-1} = x^n ≡ M - X^n
    for (std::size_t i = 0; i < n; ++i) {
        if (modulus.coeff(i)) {
            c.set(i, n - 1);
        }
    }
    return c;
}

/// One step of the path adjacency: (J v)_i = v_{i-1} + v_{i+1}.
BitVector path_step(const BitVector& v) {
    const std::size_t n = v.size();
    BitVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool bit = false;
        if (i > 0) {
            bit ^= v.get(i - 1);
        }
        if (i + 1 < n) {
            bit ^= v.get(i + 1);
        }
        out.set(i, bit);
    }
    return out;
}

/// Calls `visit` with x^k * base for every monomial exponent k, in
/// row-major order of k.
void for_each_monomial_multiple(const TensorElement& base, std::size_t axis,
                                const std::function<void(const TensorElement&)>& visit) {
    const auto& dims = base.shape().dims();
    if (axis == dims.size()) {
        visit(base);
        return;
    }
    TensorElement cur = base;
    for (std::size_t k = 0; k < dims[axis]; ++k) {
        for_each_monomial_multiple(cur, axis + 1, visit);
        if (k + 1 < dims[axis]) {
            cur = cur.times_variable(axis);
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// QuotientShape

QuotientShape::QuotientShape(std::vector<Poly2> moduli) : moduli_(std::move(moduli)) {
    require(!moduli_.empty(), "QuotientShape: at least one axis is required");
    for (const auto& m : moduli_) {
        require(m.degree() >= 1, "QuotientShape: every modulus must have degree at least 1");
        dims_.push_back(static_cast<std::size_t>(m.degree()));
        total_ *= dims_.back();
        companions_.push_back(companion_matrix(m));
        chebyshev_ = chebyshev_ && m == chebyshev_q(dims_.back());
    }
}

QuotientShape QuotientShape::chebyshev(std::span<const std::size_t> dims) {
    std::vector<Poly2> moduli;
    for (const auto n : dims) {
        require(n >= 1, "QuotientShape::chebyshev: axis sizes must be positive");
        moduli.push_back(chebyshev_q(n));
    }
    return QuotientShape(std::move(moduli));
}

QuotientShape QuotientShape::monomial(std::span<const std::size_t> exponents) {
    std::vector<Poly2> moduli;
    for (const auto p : exponents) {
        require(p >= 1, "QuotientShape::monomial: exponents must be positive");
        moduli.push_back(Poly2::monomial(p));
    }
    return QuotientShape(std::move(moduli));
}

std::size_t QuotientShape::flat_index(std::span<const std::size_t> exponents) const {
    require(exponents.size() == dims_.size(), "QuotientShape::flat_index: wrong number of axes");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        require(exponents[i] < dims_[i], "QuotientShape::flat_index: exponent out of range");
        flat = flat * dims_[i] + exponents[i];
    }
    return flat;
}

std::vector<std::size_t> QuotientShape::exponents_of(std::size_t flat) const {
    require(flat < total_, "QuotientShape::exponents_of: index out of range");
    std::vector<std::size_t> e(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
        e[i] = flat % dims_[i];
        flat /= dims_[i];
    }
    return e;
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement::TensorElement(std::shared_ptr<const QuotientShape> shape, BitVector coeffs)
    : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {
    require(shape_ != nullptr, "TensorElement: null shape");
    require(coeffs_.size() == shape_->total(), "TensorElement: coefficient length must equal shape total");
}

TensorElement::TensorElement(const QuotientShape& shape, BitVector coeffs)
    : TensorElement(std::make_shared<const QuotientShape>(shape), std::move(coeffs)) {}

TensorElement TensorElement::zero(const QuotientShape& shape) {
    return {shape, BitVector(shape.total())};
}

TensorElement TensorElement::one(const QuotientShape& shape) {
    return {shape, BitVector::unit(shape.total(), 0)};
}

TensorElement TensorElement::variable(const QuotientShape& shape, std::size_t axis) {
    require(axis < shape.axes(), "TensorElement::variable: axis out of range");
    std::vector<std::size_t> e(shape.axes(), 0);
    e[axis] = 1;
    return monomial(shape, e);
}

TensorElement TensorElement::monomial(const QuotientShape& shape,
                                      std::span<const std::size_t> exponents) {
    require(exponents.size() == shape.axes(), "TensorElement::monomial: wrong number of axes");
    std::vector<Poly2> factors;
    factors.reserve(exponents.size());
    for (const auto e : exponents) {
        factors.push_back(Poly2::monomial(e));
    }
    return from_axis_polys(shape, factors);
}

TensorElement TensorElement::from_axis_polys(const QuotientShape& shape,
                                             std::span<const Poly2> factors) {
    require(factors.size() == shape.axes(), "TensorElement::from_axis_polys: wrong number of axes");
    // Outer product of the reduced per-axis coefficient vectors.
    BitVector acc = BitVector::unit(1, 0);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const BitVector axis = (factors[i] % shape.moduli()[i]).coefficients(shape.dims()[i]);
        BitVector next(acc.size() * axis.size());
        for (std::size_t a = 0; a < acc.size(); ++a) {
            if (!acc.get(a)) {
                continue;
            }
            for (std::size_t b = 0; b < axis.size(); ++b) {
                if (axis.get(b)) {
                    next.set(a * axis.size() + b);
                }
            }
        }
        acc = std::move(next);
    }
    return {shape, std::move(acc)};
}

TensorElement TensorElement::times_variable(std::size_t axis) const {
    require(axis < shape_->axes(), "TensorElement::times_variable: axis out of range");
    return {shape_, apply_on_axis(coeffs_, shape_->dims(), axis, shape_->companion(axis))};
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    require(shape() == other.shape(), "TensorElement: shape mismatch in addition");
    coeffs_ ^= other.coeffs_;
    return *this;
}

bool TensorElement::operator==(const TensorElement& other) const {
    return shape() == other.shape() && coeffs_ == other.coeffs_;
}

std::string TensorElement::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    // Highest flat index first: descending lexicographic exponent order.
    for (std::size_t flat = coeffs_.size(); flat-- > 0;) {
        if (!coeffs_.get(flat)) {
            continue;
        }
        const auto e = shape_->exponents_of(flat);
        std::string term;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!term.empty()) {
                term += '*';
            }
            term += "x" + std::to_string(i + 1);
            if (e[i] > 1) {
                term += "^" + std::to_string(e[i]);
            }
        }
        if (!out.empty()) {
            out += '+';
        }
        out += term.empty() ? "1" : term;
    }
    return out;
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
    require(a.shape() == b.shape(), "tensor_mul: shape mismatch");
    TensorElement acc = TensorElement(b.shape_ptr(), BitVector(b.shape().total()));
    std::size_t flat = 0;
    for_each_monomial_multiple(b, 0, [&](const TensorElement& shifted) {
        if (a.coeffs().get(flat)) {
            acc += shifted;
        }
        ++flat;
    });
    return acc;
}

BitMatrix mult_operator(const TensorElement& u) {
    std::vector<BitVector> columns;
    columns.reserve(u.shape().total());
    for_each_monomial_multiple(u, 0, [&](const TensorElement& column) {
        columns.push_back(column.coeffs());
    });
    return BitMatrix::from_columns(columns, u.shape().total());
}

DivisibilityTester::DivisibilityTester(const TensorElement& u)
    : divisor_(u), reduction_(mult_operator(u)) {}

bool DivisibilityTester::divides(const TensorElement& t) const {
    require(t.shape() == divisor_.shape(), "divides: shape mismatch");
    return reduction_.consistent(t.coeffs());
}

std::optional<TensorElement> DivisibilityTester::quotient(const TensorElement& t) const {
    require(t.shape() == divisor_.shape(), "quotient: shape mismatch");
    auto v = reduction_.solve(t.coeffs());
    if (!v) {
        return std::nullopt;
    }
    return TensorElement(divisor_.shape_ptr(), std::move(*v));
}

bool divides(const TensorElement& u, const TensorElement& t) {
    require(u.shape() == t.shape(), "divides: shape mismatch");
    if (t.is_zero()) {
        return true;
    }
    return DivisibilityTester(u).divides(t);
}

BitMatrix phi_axis_matrix(std::size_t n) {
    require(n >= 1, "phi_axis_matrix: n must be positive");
    std::vector<BitVector> columns;
    BitVector v = BitVector::unit(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        columns.push_back(v);
        v = path_step(v);
    }
    return BitMatrix::from_columns(columns, n);
}

BitMatrix phi_inverse_axis_matrix(std::size_t n) {
    require(n >= 1, "phi_inverse_axis_matrix: n must be positive");
    const auto q = chebyshev_table(n);
    std::vector<BitVector> columns;
    for (std::size_t i = 0; i < n; ++i) {
        columns.push_back(q[i].coefficients(n));
    }
    return BitMatrix::from_columns(columns, n);
}

BitMatrix phi_matrix(const QuotientShape& shape) {
    require(shape.is_chebyshev(), "phi_matrix: moduli must be Chebyshev");
    BitMatrix acc = BitMatrix::identity(1);
    for (const auto n : shape.dims()) {
        acc = kronecker(acc, phi_axis_matrix(n));
    }
    return acc;
}

BitMatrix phi_inverse_matrix(const QuotientShape& shape) {
    require(shape.is_chebyshev(), "phi_inverse_matrix: moduli must be Chebyshev");
    BitMatrix acc = BitMatrix::identity(1);
    for (const auto n : shape.dims()) {
        acc = kronecker(acc, phi_inverse_axis_matrix(n));
    }
    return acc;
}

BitVector phi(const TensorElement& element) {
    const auto& shape = element.shape();
    require(shape.is_chebyshev(), "phi: moduli must be Chebyshev");
    BitVector v = element.coeffs();
    for (std::size_t axis = 0; axis < shape.axes(); ++axis) {
        v = apply_on_axis(v, shape.dims(), axis, phi_axis_matrix(shape.dims()[axis]));
    }
    return v;
}

TensorElement phi_inverse(const BitVector& cells, const QuotientShape& shape) {
    require(shape.is_chebyshev(), "phi_inverse: moduli must be Chebyshev");
    require(cells.size() == shape.total(), "phi_inverse: vector length must equal shape total");
    BitVector v = cells;
    for (std::size_t axis = 0; axis < shape.axes(); ++axis) {
        v = apply_on_axis(v, shape.dims(), axis, phi_inverse_axis_matrix(shape.dims()[axis]));
    }
    return {shape, std::move(v)};
}

BitMatrix evaluate(const Poly2& p, const BitMatrix& m) {
    require(m.is_square(), "evaluate: matrix must be square");
    BitMatrix acc = BitMatrix::zero(m.rows(), m.cols());
    const BitMatrix id = BitMatrix::identity(m.rows());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        if (p.coeff(static_cast<std::size_t>(k))) {
            acc += id;
        }
    }
    return acc;
}

}  // namespace sigma

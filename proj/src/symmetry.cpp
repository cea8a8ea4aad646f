#include "sigma/symmetry.hpp"

#include "sigma/contract.hpp"

namespace sigma {

SymmetricSubspace symmetric_basis(const GridShape& shape) {
    const auto& dims = shape.dims();
    const auto d = shape.axes();
    SymmetricSubspace out{shape, {}};

    for (std::size_t flat = 0; flat < shape.total(); ++flat) {
        auto cell = shape.cell_of(flat);
        bool representative = true;
        for (std::size_t i = 0; i < d; ++i) {
            representative = representative && 2 * cell[i] <= dims[i] + 1;
        }
        if (!representative) {
            continue;
        }
        BitVector orbit(shape.total());
        for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
            auto image = cell;
            for (std::size_t i = 0; i < d; ++i) {
                if (((mask >> i) & 1U) != 0) {
                    image[i] = dims[i] + 1 - cell[i];
                }
            }
            orbit.set(shape.flat_index(image));
        }
        out.basis.push_back(std::move(orbit));
    }
    return out;
}

BitVector reflect(const BitVector& v, const GridShape& shape, std::size_t axis) {
    require(v.size() == shape.total(), "reflect: vector length must equal grid total");
    require(axis < shape.axes(), "reflect: axis out of range");
    BitVector out(v.size());
    for (std::size_t flat = 0; flat < v.size(); ++flat) {
        if (!v.get(flat)) {
            continue;
        }
        auto cell = shape.cell_of(flat);
        cell[axis] = shape.dims()[axis] + 1 - cell[axis];
        out.set(shape.flat_index(cell));
    }
    return out;
}

bool is_completely_symmetric(const BitVector& v, const GridShape& shape) {
    for (std::size_t axis = 0; axis < shape.axes(); ++axis) {
        if (reflect(v, shape, axis) != v) {
            return false;
        }
    }
    return true;
}

Poly2 central_factor(std::size_t n) {
    require(n >= 1, "central_factor: n must be positive");
    if (n % 2 == 1) {
        return chebyshev_q((n - 1) / 2);
    }
    return chebyshev_q(n / 2) + chebyshev_q(n / 2 - 1);
}

TensorElement central_element(const GridShape& shape) {
    const auto algebra = QuotientShape::chebyshev(shape.dims());
    std::vector<Poly2> factors;
    for (const auto n : shape.dims()) {
        factors.push_back(central_factor(n));
    }
    return TensorElement::from_axis_polys(algebra, factors);
}

BitVector central_configuration(const GridShape& shape) { return phi(central_element(shape)); }

BitVector central_cells(const GridShape& shape) {
    BitVector out(shape.total());
    for (std::size_t flat = 0; flat < shape.total(); ++flat) {
        const auto cell = shape.cell_of(flat);
        bool central = true;
        for (std::size_t i = 0; i < shape.axes(); ++i) {
            const auto n = shape.dims()[i];
            const auto twice = 2 * cell[i];
            central = central && (n % 2 == 1 ? twice == n + 1 : (twice == n || twice == n + 2));
        }
        out.set(flat, central);
    }
    return out;
}

BitVector s_map(const BitVector& v, std::size_t n) {
    require(v.size() == n, "s_map: vector length must equal n");
    return s_matrix(n) * v;
}

bool c_map(const BitVector& v) { return v.parity(); }

BitMatrix s_matrix(std::size_t n) {
    require(n >= 1, "s_matrix: n must be positive");
    const std::size_t half = (n + 1) / 2;
    BitMatrix s(half, n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        s.set(i, i);
        s.set(i, n - 1 - i);
    }
    if (n % 2 == 1) {
        s.set(half - 1, half - 1);
    }
    return s;
}

BitMatrix c_matrix(std::size_t n) {
    require(n >= 1, "c_matrix: n must be positive");
    return BitMatrix::from_rows({BitVector::ones(n)});
}

BitVector tensor_fold(const BitVector& v, const GridShape& shape, std::span<const Fold> ops) {
    require(v.size() == shape.total(), "tensor_fold: vector length must equal grid total");
    require(ops.size() == shape.axes(), "tensor_fold: one map per axis is required");
    std::vector<std::size_t> dims = shape.dims();
    BitVector out = v;
    for (std::size_t axis = dims.size(); axis-- > 0;) {
        const BitMatrix map = ops[axis] == Fold::s ? s_matrix(dims[axis]) : c_matrix(dims[axis]);
        out = apply_on_axis(out, dims, axis, map);
        dims[axis] = map.rows();
    }
    return out;
}

}  // namespace sigma

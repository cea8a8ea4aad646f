#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sigma/algebra.hpp"
#include "sigma/game.hpp"
#include "sigma/gf2.hpp"
#include "sigma/poly2.hpp"

namespace sigma {

/// Configurations invariant under reflection j_i ↦ n_i + 1 - j_i on every
/// axis. The basis holds one orbit indicator per orbit of the reflection
/// group, ordered by the orbit's smallest cell in row-major order; its
/// size is prod ceil(n_i / 2).
struct SymmetricSubspace {
    GridShape shape;
    std::vector<BitVector> basis;

    std::size_t dim() const { return basis.size(); }
};

SymmetricSubspace symmetric_basis(const GridShape& shape);

/// Mirror image of a configuration across the midplane of one axis.
BitVector reflect(const BitVector& v, const GridShape& shape, std::size_t axis);
bool is_completely_symmetric(const BitVector& v, const GridShape& shape);

/// c_n = Q_{(n-1)/2} for odd n, Q_{n/2} + Q_{n/2-1} for even n.
Poly2 central_factor(std::size_t n);
/// prod_i c_{n_i}(x_i) in the grid algebra.
TensorElement central_element(const GridShape& shape);
/// phi(central_element(shape)).
BitVector central_configuration(const GridShape& shape);
/// Indicator of the middle cell (odd axis) or two middle cells (even axis)
/// on every axis, built directly from coordinates.
BitVector central_cells(const GridShape& shape);

/// (y_1 + y_n, y_2 + y_{n-1}, ...), keeping the unpaired middle entry last
/// when n is odd. Output length ceil(n / 2).
BitVector s_map(const BitVector& v, std::size_t n);
/// Parity of the weight.
bool c_map(const BitVector& v);

BitMatrix s_matrix(std::size_t n);
BitMatrix c_matrix(std::size_t n);

enum class Fold { s, c };

/// Applies S or c on each axis (a tensor product of maps). Maps are
/// applied innermost axis first; the order does not affect the result.
BitVector tensor_fold(const BitVector& v, const GridShape& shape, std::span<const Fold> ops);

}  // namespace sigma

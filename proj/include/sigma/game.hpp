#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/algebra.hpp"
#include "sigma/gf2.hpp"

namespace sigma {

/// Malformed user input (shape, game or target strings). Unlike
/// ContractError this is an expected, reportable condition.
class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// n_1 x ... x n_d grid. Cells are addressed 1-based per axis; the flat
/// index is row-major with axis 1 slowest, matching QuotientShape.
class GridShape {
  public:
    explicit GridShape(std::vector<std::size_t> dims);

    /// "5", "3x5", "3x4x5".
    static GridShape parse(std::string_view text);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t axes() const { return dims_.size(); }
    std::size_t total() const { return total_; }

    std::size_t flat_index(std::span<const std::size_t> cell) const;
    std::vector<std::size_t> cell_of(std::size_t flat) const;

    std::string to_string() const;

    bool operator==(const GridShape& other) const { return dims_ == other.dims_; }
    auto operator<=>(const GridShape& other) const { return dims_ <=> other.dims_; }

  private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 1;
};

using ExponentTuple = std::vector<std::size_t>;

enum class Sign { plus, minus };
enum class Neighborhood { box, boxtimes };

struct Preset {
    Sign sign;
    Neighborhood neighborhood;

    /// "sigma+:box" etc.
    std::string name() const;
    std::set<ExponentTuple> terms(std::size_t axes) const;
    bool operator==(const Preset&) const = default;
};

inline constexpr Preset kAllPresets[] = {
    {Sign::plus, Neighborhood::box},
    {Sign::plus, Neighborhood::boxtimes},
    {Sign::minus, Neighborhood::box},
    {Sign::minus, Neighborhood::boxtimes},
};

/// A game commuting with every axis J: the adjacency matrix is
/// sum over terms (i_1..i_d) of J^{i_1} ⊗ ... ⊗ J^{i_d}, each with
/// coefficient 1. Exponents may exceed the axis size.
class GameSpec {
  public:
    GameSpec(GridShape shape, std::set<ExponentTuple> terms);

    static GameSpec preset(Preset preset, GridShape shape);
    /// `sigma+:box`, `sigma-:box`, `sigma+:boxtimes`, `sigma-:boxtimes`, or
    /// `custom:<tuple>;<tuple>;...` with comma-separated exponents per axis.
    static GameSpec parse(std::string_view text, GridShape shape);

    const GridShape& shape() const { return shape_; }
    const std::set<ExponentTuple>& terms() const { return terms_; }

    /// The preset whose term set coincides with this game's, if any.
    std::optional<Preset> matching_preset() const;
    /// Preset name, or the normalized `custom:...` form.
    std::string label() const;

  private:
    GridShape shape_;
    std::set<ExponentTuple> terms_;
};

/// n x n path adjacency: ones directly above and below the diagonal.
BitMatrix make_j(std::size_t n);

/// I ⊗ ... ⊗ J_{n_axis} ⊗ ... ⊗ I over the grid.
BitMatrix axis_j(const GridShape& shape, std::size_t axis);

/// Column v is the toggle pattern of pushing cell v. Flagged symmetric.
BitMatrix adjacency_matrix(const GameSpec& game);

/// Every push toggles its own cell.
bool is_sigma_plus(const GameSpec& game);

/// u = sum over terms of x_1^{i_1}...x_d^{i_d} in the Chebyshev algebra of
/// the grid; multiplication by u is the game under the Φ identification.
TensorElement u_element(const GameSpec& game);

bool check_commutes(const BitMatrix& m, const GridShape& shape);
bool check_commutes(const GameSpec& game);

}  // namespace sigma

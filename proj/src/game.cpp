#include "sigma/game.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "sigma/contract.hpp"

namespace sigma {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                          : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

std::size_t parse_count(std::string_view token, std::string_view context) {
    std::size_t value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
        throw ParseError(std::string(context) + ": expected a non-negative integer, got '" +
                         std::string(token) + "'");
    }
    return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// GridShape

GridShape::GridShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    require(!dims_.empty(), "GridShape: at least one axis is required");
    for (const auto n : dims_) {
        require(n >= 1, "GridShape: axis sizes must be positive");
        total_ *= n;
    }
}

GridShape GridShape::parse(std::string_view text) {
    std::vector<std::size_t> dims;
    for (const auto part : split(text, 'x')) {
        const auto n = parse_count(part, "shape");
        if (n == 0) {
            throw ParseError("shape: axis sizes must be at least 1");
        }
        dims.push_back(n);
    }
    return GridShape(std::move(dims));
}

std::size_t GridShape::flat_index(std::span<const std::size_t> cell) const {
    require(cell.size() == dims_.size(), "GridShape::flat_index: wrong number of coordinates");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        require(cell[i] >= 1 && cell[i] <= dims_[i], "GridShape::flat_index: coordinate out of range");
        flat = flat * dims_[i] + (cell[i] - 1);
    }
    return flat;
}

std::vector<std::size_t> GridShape::cell_of(std::size_t flat) const {
    require(flat < total_, "GridShape::cell_of: index out of range");
    std::vector<std::size_t> cell(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
        cell[i] = flat % dims_[i] + 1;
        flat /= dims_[i];
    }
    return cell;
}

std::string GridShape::to_string() const {
    std::string out;
    for (const auto n : dims_) {
        if (!out.empty()) {
            out += 'x';
        }
        out += std::to_string(n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Presets and GameSpec

std::string Preset::name() const {
    std::string out = sign == Sign::plus ? "sigma+" : "sigma-";
    out += neighborhood == Neighborhood::box ? ":box" : ":boxtimes";
    return out;
}

std::set<ExponentTuple> Preset::terms(std::size_t axes) const {
    std::set<ExponentTuple> out;
    if (neighborhood == Neighborhood::boxtimes) {
        // Every tuple in {0,1}^d; the all-zero one only for sigma+.
        for (std::size_t mask = 0; mask < (std::size_t{1} << axes); ++mask) {
            if (mask == 0 && sign == Sign::minus) {
                continue;
            }
            ExponentTuple t(axes);
            for (std::size_t i = 0; i < axes; ++i) {
                t[i] = (mask >> (axes - 1 - i)) & 1U;
            }
            out.insert(std::move(t));
        }
    } else {
        for (std::size_t i = 0; i < axes; ++i) {
            ExponentTuple t(axes, 0);
            t[i] = 1;
            out.insert(std::move(t));
        }
        if (sign == Sign::plus) {
            out.insert(ExponentTuple(axes, 0));
        }
    }
    return out;
}

GameSpec::GameSpec(GridShape shape, std::set<ExponentTuple> terms)
    : shape_(std::move(shape)), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        require(t.size() == shape_.axes(), "GameSpec: exponent tuple arity must equal grid dimension");
    }
}

GameSpec GameSpec::preset(Preset preset, GridShape shape) {
    auto terms = preset.terms(shape.axes());
    return {std::move(shape), std::move(terms)};
}

GameSpec GameSpec::parse(std::string_view text, GridShape shape) {
    for (const auto& p : kAllPresets) {
        if (text == p.name()) {
            return preset(p, std::move(shape));
        }
    }
    constexpr std::string_view kCustom = "custom:";
    if (text.substr(0, kCustom.size()) != kCustom) {
        throw ParseError("game: unknown game '" + std::string(text) +
                         "' (expected sigma+:box, sigma-:box, sigma+:boxtimes, sigma-:boxtimes or "
                         "custom:<tuple>;...)");
    }
    const auto body = text.substr(kCustom.size());
    if (body.empty()) {
        throw ParseError("game: custom game needs at least one exponent tuple");
    }
    std::set<ExponentTuple> terms;
    for (const auto tuple_text : split(body, ';')) {
        ExponentTuple tuple;
        for (const auto e : split(tuple_text, ',')) {
            tuple.push_back(parse_count(e, "game exponent"));
        }
        if (tuple.size() != shape.axes()) {
            throw ParseError("game: tuple '" + std::string(tuple_text) + "' has " +
                             std::to_string(tuple.size()) + " exponents but the grid has " +
                             std::to_string(shape.axes()) + " axes");
        }
        if (!terms.insert(std::move(tuple)).second) {
            throw ParseError("game: duplicate tuple '" + std::string(tuple_text) + "'");
        }
    }
    return {std::move(shape), std::move(terms)};
}

std::optional<Preset> GameSpec::matching_preset() const {
    for (const auto& p : kAllPresets) {
        if (p.terms(shape_.axes()) == terms_) {
            return p;
        }
    }
    return std::nullopt;
}

std::string GameSpec::label() const {
    if (const auto p = matching_preset()) {
        return p->name();
    }
    std::string out = "custom:";
    bool first_tuple = true;
    for (const auto& t : terms_) {
        if (!first_tuple) {
            out += ';';
        }
        first_tuple = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(t[i]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matrices

BitMatrix make_j(std::size_t n) {
    require(n >= 1, "make_j: n must be positive");
    BitMatrix j(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        j.set(i, i + 1);
        j.set(i + 1, i);
    }
    j.mark_symmetric();
    return j;
}

BitMatrix axis_j(const GridShape& shape, std::size_t axis) {
    require(axis < shape.axes(), "axis_j: axis out of range");
    BitMatrix acc = BitMatrix::identity(1);
    for (std::size_t i = 0; i < shape.axes(); ++i) {
        const auto n = shape.dims()[i];
        acc = kronecker(acc, i == axis ? make_j(n) : BitMatrix::identity(n));
    }
    return acc;
}

BitMatrix adjacency_matrix(const GameSpec& game) {
    const auto& dims = game.shape().dims();
    std::vector<std::map<std::size_t, BitMatrix>> powers(dims.size());
    const auto power_of_j = [&](std::size_t axis, std::size_t e) -> const BitMatrix& {
        auto& cache = powers[axis];
        auto it = cache.find(e);
        if (it == cache.end()) {
            it = cache.emplace(e, make_j(dims[axis]).power(e)).first;
        }
        return it->second;
    };

    const auto total = game.shape().total();
    BitMatrix m = BitMatrix::zero(total, total);
    for (const auto& term : game.terms()) {
        BitMatrix product = BitMatrix::identity(1);
        for (std::size_t axis = 0; axis < dims.size(); ++axis) {
            product = kronecker(product, power_of_j(axis, term[axis]));
        }
        m += product;
    }
    // Each term is a Kronecker product of symmetric J powers, so the flag
    // survives the sum.
    require(m.flagged_symmetric(), "adjacency_matrix: lost the symmetry flag");
    return m;
}

bool is_sigma_plus(const GameSpec& game) {
    const auto diag = adjacency_matrix(game).diagonal();
    return diag.weight() == diag.size();
}

TensorElement u_element(const GameSpec& game) {
    const auto shape = QuotientShape::chebyshev(game.shape().dims());
    TensorElement u = TensorElement::zero(shape);
    for (const auto& term : game.terms()) {
        u += TensorElement::monomial(shape, term);
    }
    return u;
}

bool check_commutes(const BitMatrix& m, const GridShape& shape) {
    require(m.rows() == shape.total() && m.cols() == shape.total(),
            "check_commutes: matrix size must equal grid total");
    for (std::size_t axis = 0; axis < shape.axes(); ++axis) {
        const BitMatrix a = axis_j(shape, axis);
        if (!(m * a == a * m)) {
            return false;
        }
    }
    return true;
}

bool check_commutes(const GameSpec& game) {
    return check_commutes(adjacency_matrix(game), game.shape());
}

}  // namespace sigma

#include "sigma/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <iomanip>
#include <thread>

#include "sigma/contract.hpp"
#include "sigma/poly2.hpp"
#include "sigma/symmetry.hpp"

namespace sigma {

std::string to_string(TargetKind kind) {
    switch (kind) {
        case TargetKind::all_on:
            return "all-on";
        case TargetKind::central:
            return "central";
        case TargetKind::symmetric_subspace:
            return "symmetric";
        case TargetKind::explicit_vector:
            return "explicit";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// GameSolver

GameSolver::GameSolver(GameSpec game)
    : game_(std::move(game)), matrix_(adjacency_matrix(game_)), reduction_(matrix_),
      kernel_(reduction_.kernel()) {}

bool GameSolver::in_image(const BitVector& target) const {
    require(target.size() == game_.shape().total(), "in_image: target length must equal grid total");
    return in_image_by_orthogonality(kernel_, target);
}

AchievabilityReport GameSolver::achievable(const BitVector& target, TargetKind kind) const {
    require(target.size() == game_.shape().total(), "achievable: target length must equal grid total");
    AchievabilityReport report{game_, kind, target, false, std::nullopt, std::nullopt};
    for (const auto& k : kernel_) {
        if (k.dot(target)) {
            report.certificate = k;
            return report;
        }
    }
    report.witness = reduction_.solve(target);
    require(report.witness.has_value(), "achievable: orthogonal target has no solution (matrix not symmetric?)");
    report.achievable = true;
    return report;
}

AchievabilityReport GameSolver::symmetric_achievability() const {
    AchievabilityReport report{game_, TargetKind::symmetric_subspace, BitVector(), true,
                               std::nullopt, std::nullopt};
    for (const auto& w : symmetric_basis(game_.shape()).basis) {
        for (const auto& k : kernel_) {
            if (k.dot(w)) {
                report.achievable = false;
                report.target = w;
                report.certificate = k;
                return report;
            }
        }
    }
    return report;
}

AchievabilityReport achievable(const GameSpec& game, const BitVector& target) {
    return GameSolver(game).achievable(target);
}

AchievabilityReport symmetric_achievability(const GameSpec& game) {
    return GameSolver(game).symmetric_achievability();
}

// ---------------------------------------------------------------------------
// Closed forms

bool principal_closed_form(std::size_t n, std::size_t m, bool u_at_origin) {
    const bool both_odd = n % 2 == 1 && m % 2 == 1;
    return !(both_odd && !u_at_origin && two_valuation(n + 1) == two_valuation(m + 1));
}

PredicateVerdict principal_predicate(const GameSpec& game) {
    require(game.shape().axes() == 2, "principal_predicate: game must be two-dimensional");
    const auto& dims = game.shape().dims();
    PredicateVerdict v{game.shape(), game.label(), std::nullopt, false, true, true};
    v.closed_form = principal_closed_form(dims[0], dims[1], u_element(game).constant_term());
    v.ground_truth = symmetric_achievability(game).achievable;
    v.agree = *v.closed_form == v.ground_truth;
    v.hypothesis_verified = game.matching_preset().has_value();
    return v;
}

bool corollary_applies(const GameSpec& game) {
    const auto& shape = game.shape();
    if (shape.dims()[0] % 2 != 0) {
        return false;
    }
    ExponentTuple leading(shape.axes(), 0);
    leading[0] = 1;
    if (game.terms().count(leading) == 0) {
        return false;
    }
    for (const auto& t : game.terms()) {
        if (t == leading) {
            continue;
        }
        bool has_unit_exponent = false;
        for (std::size_t j = 1; j < t.size(); ++j) {
            has_unit_exponent = has_unit_exponent || t[j] == 1;
        }
        if (!has_unit_exponent) {
            return false;
        }
    }
    return true;
}

std::optional<bool> closed_form_prediction(const GameSpec& game) {
    if (game.shape().axes() == 2) {
        const auto& dims = game.shape().dims();
        return principal_closed_form(dims[0], dims[1], u_element(game).constant_term());
    }
    if (is_sigma_plus(game) || corollary_applies(game)) {
        return true;
    }
    return std::nullopt;
}

bool sutner_check(const GameSpec& game) {
    const GameSolver solver(game);
    const auto diag = solver.matrix().diagonal();
    require(diag.weight() == diag.size(), "sutner_check: game is not a sigma+ game");
    return solver.in_image(BitVector::ones(game.shape().total()));
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

/// J^steps e_start on an n-vertex path, by counting walks mod 2.
std::vector<bool> path_walks(std::size_t n, std::size_t start, std::size_t steps) {
    std::vector<bool> cur(n, false);
    cur[start] = true;
    for (std::size_t s = 0; s < steps; ++s) {
        std::vector<bool> next(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (!cur[i]) {
                continue;
            }
            if (i > 0) {
                next[i - 1] = !next[i - 1];
            }
            if (i + 1 < n) {
                next[i + 1] = !next[i + 1];
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::uint64_t pack(const BitVector& v) {
    return v.words().empty() ? 0 : v.words()[0];
}

std::vector<std::uint64_t> packed_columns(const GameSpec& game, std::size_t cap) {
    const auto total = game.shape().total();
    require(cap <= kMaxOracleCap, "brute_force_oracle: cap exceeds the hard ceiling");
    require(total <= cap, "brute_force_oracle: grid total " + std::to_string(total) +
                              " exceeds the enumeration cap " + std::to_string(cap));
    std::vector<std::uint64_t> cols;
    cols.reserve(total);
    for (std::size_t cell = 0; cell < total; ++cell) {
        cols.push_back(pack(toggle_pattern(game, cell)));
    }
    return cols;
}

}  // namespace

BitVector toggle_pattern(const GameSpec& game, std::size_t cell) {
    const auto& shape = game.shape();
    const auto& dims = shape.dims();
    const auto pushed = shape.cell_of(cell);
    BitVector out(shape.total());
    for (const auto& term : game.terms()) {
        std::vector<std::vector<bool>> axis_patterns;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            axis_patterns.push_back(path_walks(dims[i], pushed[i] - 1, term[i]));
        }
        for (std::size_t flat = 0; flat < shape.total(); ++flat) {
            const auto c = shape.cell_of(flat);
            bool hit = true;
            for (std::size_t i = 0; i < dims.size() && hit; ++i) {
                hit = axis_patterns[i][c[i] - 1];
            }
            if (hit) {
                out.flip(flat);
            }
        }
    }
    return out;
}

BruteForceOracle::BruteForceOracle(const GameSpec& game, std::size_t cap)
    : total_(game.shape().total()) {
    const auto cols = packed_columns(game, cap);
    reachable_.assign(std::size_t{1} << total_, false);
    std::uint64_t state = 0;
    reachable_[0] = true;
    // Gray code: step i toggles the push on cell ctz(i).
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << total_); ++i) {
        state ^= cols[static_cast<std::size_t>(std::countr_zero(i))];
        reachable_[state] = true;
    }
}

bool BruteForceOracle::reachable(const BitVector& target) const {
    require(target.size() == total_, "BruteForceOracle: target length must equal grid total");
    return reachable_[pack(target)];
}

std::size_t BruteForceOracle::reachable_count() const {
    std::size_t count = 0;
    for (const bool r : reachable_) {
        count += r ? 1 : 0;
    }
    return count;
}

bool brute_force_oracle(const GameSpec& game, const BitVector& target, std::size_t cap) {
    require(target.size() == game.shape().total(), "brute_force_oracle: target length must equal grid total");
    const auto cols = packed_columns(game, cap);
    const auto want = pack(target);
    std::uint64_t state = 0;
    if (state == want) {
        return true;
    }
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << cols.size()); ++i) {
        state ^= cols[static_cast<std::size_t>(std::countr_zero(i))];
        if (state == want) {
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Sweep

std::vector<GridShape> sweep_shapes(const SweepConfig& config) {
    require(config.axes >= 1, "sweep: at least one axis is required");
    require(config.min_n >= 1 && config.min_n <= config.max_n, "sweep: invalid axis range");
    std::vector<GridShape> shapes;
    std::vector<std::size_t> dims(config.axes, config.min_n);
    for (;;) {
        bool keep = true;
        for (const auto n : dims) {
            keep = keep && (!config.odd_only || n % 2 == 1);
        }
        if (keep) {
            shapes.emplace_back(dims);
        }
        // Odometer increment, last axis fastest.
        std::size_t axis = config.axes;
        while (axis > 0 && dims[axis - 1] == config.max_n) {
            dims[axis - 1] = config.min_n;
            --axis;
        }
        if (axis == 0) {
            return shapes;
        }
        ++dims[axis - 1];
    }
}

SweepResult sweep(const SweepConfig& config) {
    const auto shapes = sweep_shapes(config);
    const auto games = config.games.size();
    require(games > 0, "sweep: at least one game is required");
    // Surface malformed game strings here rather than inside a worker.
    for (const auto& g : config.games) {
        if (!shapes.empty()) {
            (void)GameSpec::parse(g, shapes.front());
        }
    }

    std::vector<std::optional<PredicateVerdict>> slots(shapes.size() * games);
    const auto evaluate_slot = [&](std::size_t index) {
        const auto& shape = shapes[index / games];
        const auto game = GameSpec::parse(config.games[index % games], shape);
        const GameSolver solver(game);
        PredicateVerdict v{shape, game.label(), closed_form_prediction(game), false, true, true};
        v.ground_truth = config.target == SweepTarget::all_on
                             ? solver.in_image(BitVector::ones(shape.total()))
                             : solver.symmetric_achievability().achievable;
        v.agree = !v.closed_form || *v.closed_form == v.ground_truth;
        v.hypothesis_verified = shape.axes() != 2 || game.matching_preset().has_value();
        slots[index] = std::move(v);
    };

    const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < slots.size(); ++i) {
            evaluate_slot(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < slots.size(); i = next++) {
                    evaluate_slot(i);
                }
            });
        }
    }

    SweepResult result;
    result.rows.reserve(slots.size());
    for (auto& s : slots) {
        result.disagreements += s->agree ? 0 : 1;
        result.rows.push_back(std::move(*s));
    }
    return result;
}

namespace {

std::string flag(const std::optional<bool>& b) {
    if (!b) {
        return "-";
    }
    return *b ? "1" : "0";
}

}  // namespace

void write_csv(std::ostream& out, const SweepResult& result) {
    out << "shape,game,closed_form,ground_truth,agree\n";
    for (const auto& r : result.rows) {
        out << r.shape.to_string() << ',' << r.game << ',' << flag(r.closed_form) << ','
            << (r.ground_truth ? 1 : 0) << ',' << (r.agree ? 1 : 0) << '\n';
    }
}

void write_text(std::ostream& out, const SweepResult& result) {
    out << std::left << std::setw(10) << "shape" << std::setw(18) << "game" << std::setw(13)
        << "closed_form" << std::setw(14) << "ground_truth" << "agree\n";
    for (const auto& r : result.rows) {
        out << std::setw(10) << r.shape.to_string() << std::setw(18) << r.game << std::setw(13)
            << flag(r.closed_form) << std::setw(14) << (r.ground_truth ? "1" : "0")
            << (r.agree ? "yes" : "NO") << (r.hypothesis_verified ? "" : " (hypothesis unverified)")
            << '\n';
    }
    out << result.rows.size() << " instances, " << result.disagreements << " disagreements\n";
}

}  // namespace sigma

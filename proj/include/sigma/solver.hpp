#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sigma/game.hpp"
#include "sigma/gf2.hpp"

namespace sigma {

enum class TargetKind { all_on, central, symmetric_subspace, explicit_vector };

std::string to_string(TargetKind kind);

/// Outcome of an achievability question.
///
/// When `achievable`, `witness` is a push set with M * witness = target.
/// When not, `certificate` is a kernel vector k of M with k · target = 1;
/// for a symmetric M this proves that no push set exists. For the
/// symmetric-subspace question `target` is the first basis vector that
/// fails, or empty when the whole subspace is reachable (no witness is
/// recorded in that case).
struct AchievabilityReport {
    GameSpec game;
    TargetKind kind;
    BitVector target;
    bool achievable = false;
    std::optional<BitVector> witness;
    std::optional<BitVector> certificate;
};

/// Adjacency matrix of one game with its reduction and kernel computed
/// once and shared by every query against it.
class GameSolver {
  public:
    explicit GameSolver(GameSpec game);

    const GameSpec& game() const { return game_; }
    const BitMatrix& matrix() const { return matrix_; }
    const std::vector<BitVector>& kernel() const { return kernel_; }
    std::size_t rank() const { return reduction_.rank(); }

    /// Target ∈ Im M, decided by orthogonality to the kernel.
    bool in_image(const BitVector& target) const;

    AchievabilityReport achievable(const BitVector& target,
                                   TargetKind kind = TargetKind::explicit_vector) const;
    /// Every completely symmetric configuration is reachable.
    AchievabilityReport symmetric_achievability() const;

  private:
    GameSpec game_;
    BitMatrix matrix_;
    RowReduction reduction_;
    std::vector<BitVector> kernel_;
};

AchievabilityReport achievable(const GameSpec& game, const BitVector& target);
AchievabilityReport symmetric_achievability(const GameSpec& game);

/// Closed form of the 2D criterion: every doubly symmetric configuration
/// is reachable unless n, m are both odd, u(0,0) = 0 and v2(n+1) = v2(m+1).
bool principal_closed_form(std::size_t n, std::size_t m, bool u_at_origin);

/// A closed-form claim compared against linear-algebra ground truth.
/// `closed_form` is empty when no closed form covers the game (e.g. sigma-
/// in three or more dimensions with every axis odd). `hypothesis_verified`
/// is false when the closed form relies on a hypothesis that is not
/// checked mechanically (custom 2D games).
struct PredicateVerdict {
    GridShape shape;
    std::string game;
    std::optional<bool> closed_form;
    bool ground_truth = false;
    bool agree = true;
    bool hypothesis_verified = true;
};

/// 2D only. u(0,0) is read as the constant coefficient of u_element(game);
/// ground truth is symmetric_achievability(game).
PredicateVerdict principal_predicate(const GameSpec& game);

/// Whether the game fits the sigma- extension rule: n_1 even, the term (1,0,..,0)
/// present, and every other term has exponent 1 on some axis past the first.
bool corollary_applies(const GameSpec& game);

/// The closed form covering `game`, if any: the 2D criterion; true for
/// sigma+ games in any dimension; true when corollary_applies().
std::optional<bool> closed_form_prediction(const GameSpec& game);

/// Achievability of all-on for a sigma+ game. Throws ContractError for
/// games that are not sigma+.
bool sutner_check(const GameSpec& game);

inline constexpr std::size_t kDefaultOracleCap = 20;
/// Hard ceiling on any override: the reachable set is a 2^total bitmap.
inline constexpr std::size_t kMaxOracleCap = 30;

/// Exhaustive enumeration of every push subset. Toggle patterns are built
/// from walk counts on each axis path, without the Kronecker or
/// elimination code, so the result is an independent check on the linear
/// algebra.
class BruteForceOracle {
  public:
    explicit BruteForceOracle(const GameSpec& game, std::size_t cap = kDefaultOracleCap);

    bool reachable(const BitVector& target) const;
    std::size_t reachable_count() const;

  private:
    std::size_t total_;
    std::vector<bool> reachable_;
};

/// Single-target enumeration with early exit. Throws ContractError when
/// the grid total exceeds `cap`.
bool brute_force_oracle(const GameSpec& game, const BitVector& target,
                        std::size_t cap = kDefaultOracleCap);

/// Toggle pattern of pushing one cell, computed cell by cell from the term
/// list (see BruteForceOracle).
BitVector toggle_pattern(const GameSpec& game, std::size_t cell);

enum class SweepTarget { symmetric, all_on };

struct SweepConfig {
    std::vector<std::string> games;  // game strings, parsed per shape
    std::size_t axes = 2;
    std::size_t min_n = 1;
    std::size_t max_n = 13;
    bool odd_only = false;
    SweepTarget target = SweepTarget::symmetric;
    std::size_t jobs = 1;
};

struct SweepResult {
    std::vector<PredicateVerdict> rows;
    std::size_t disagreements = 0;
};

/// Every shape in [min_n, max_n]^axes in lexicographic order, each paired
/// with every game in config order. Rows come out in that order for any
/// `jobs` value.
SweepResult sweep(const SweepConfig& config);

std::vector<GridShape> sweep_shapes(const SweepConfig& config);

/// Header `shape,game,closed_form,ground_truth,agree`; booleans as 0/1,
/// a missing closed form as "-".
void write_csv(std::ostream& out, const SweepResult& result);
void write_text(std::ostream& out, const SweepResult& result);

}  // namespace sigma

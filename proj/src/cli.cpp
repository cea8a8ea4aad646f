#include "sigma/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include "sigma/algebra.hpp"
#include "sigma/contract.hpp"
#include "sigma/poly2.hpp"
#include "sigma/solver.hpp"
#include "sigma/symmetry.hpp"

namespace sigma::cli {

// ---------------------------------------------------------------------------
// Grid text format

std::string format_grid(const BitVector& cells, const GridShape& shape) {
    require(cells.size() == shape.total(), "format_grid: vector length must equal grid total");
    const auto& dims = shape.dims();
    const std::size_t width = dims.back();
    const std::size_t block = dims.size() >= 3 ? dims[dims.size() - 2] : 0;
    const std::size_t rows = shape.total() / width;

    std::string out;
    for (std::size_t r = 0; r < rows; ++r) {
        if (block != 0 && r != 0 && r % block == 0) {
            out += '\n';
        }
        for (std::size_t c = 0; c < width; ++c) {
            if (c != 0) {
                out += ' ';
            }
            out += cells.get(r * width + c) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

BitVector parse_grid(std::string_view text, const GridShape& shape) {
    const std::size_t width = shape.dims().back();
    BitVector cells(shape.total());
    std::size_t filled = 0;
    std::size_t line_no = 0;

    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || (line[first] != '0' && line[first] != '1')) {
            continue;
        }
        std::size_t row_len = 0;
        for (const char ch : line) {
            if (ch == ' ' || ch == '\t' || ch == '\r') {
                continue;
            }
            if (ch != '0' && ch != '1') {
                throw ParseError("grid line " + std::to_string(line_no) + ": unexpected character '" +
                                 std::string(1, ch) + "'");
            }
            if (filled + row_len >= shape.total()) {
                throw ParseError("grid: more cells than the " + shape.to_string() + " grid holds");
            }
            cells.set(filled + row_len, ch == '1');
            ++row_len;
        }
        if (row_len != width) {
            throw ParseError("grid line " + std::to_string(line_no) + ": expected " +
                             std::to_string(width) + " cells, found " + std::to_string(row_len));
        }
        filled += row_len;
    }
    if (filled != shape.total()) {
        throw ParseError("grid: expected " + std::to_string(shape.total()) + " cells for shape " +
                         shape.to_string() + ", found " + std::to_string(filled));
    }
    return cells;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Target {
    BitVector cells;
    TargetKind kind;
};

/// "all-on", "central", or a grid file (optionally prefixed "file:").
Target resolve_target(const std::string& spec, const GridShape& shape) {
    if (spec == "all-on") {
        return {BitVector::ones(shape.total()), TargetKind::all_on};
    }
    if (spec == "central") {
        return {central_configuration(shape), TargetKind::central};
    }
    std::string path = spec;
    if (path.rfind("file:", 0) == 0) {
        path = path.substr(5);
    }
    return {parse_grid(read_file(path), shape), TargetKind::explicit_vector};
}

std::size_t oracle_cap() {
    const char* env = std::getenv("SIGMA_FORGE_ORACLE_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultOracleCap;
    }
    const std::string_view text(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value > kMaxOracleCap) {
        throw ParseError("SIGMA_FORGE_ORACLE_CAP must be an integer in [0, " +
                         std::to_string(kMaxOracleCap) + "]");
    }
    return value;
}

struct GameOptions {
    std::string shape;
    std::string game;
};

void add_game_options(CLI::App& cmd, GameOptions& opts) {
    cmd.add_option("--shape", opts.shape, "Grid shape, e.g. 5x5 or 3x4x5")->required();
    cmd.add_option("--game", opts.game,
                   "sigma+:box | sigma-:box | sigma+:boxtimes | sigma-:boxtimes | custom:<tuple>;...")
        ->required();
}

GameSpec load_game(const GameOptions& opts) {
    return GameSpec::parse(opts.game, GridShape::parse(opts.shape));
}

int cmd_solve(const GameOptions& opts, const std::string& target_spec,
              const std::optional<std::string>& verify, std::ostream& out) {
    const auto game = load_game(opts);
    const auto target = resolve_target(target_spec, game.shape());
    const GameSolver solver(game);

    if (verify) {
        const auto pushes = parse_grid(read_file(*verify), game.shape());
        const auto produced = solver.matrix() * pushes;
        const bool ok = produced == target.cells;
        out << (ok ? "VERIFIED" : "MISMATCH") << '\n';
        out << "# configuration produced by the push set\n";
        out << format_grid(produced, game.shape());
        return ok ? kExitOk : kExitNegative;
    }

    const auto report = solver.achievable(target.cells, target.kind);
    if (report.achievable) {
        out << "ACHIEVABLE\n";
        out << "# push set for target " << to_string(target.kind) << " on " << game.shape().to_string()
            << ", game " << game.label() << '\n';
        out << format_grid(*report.witness, game.shape());
        return kExitOk;
    }
    out << "UNACHIEVABLE\n";
    out << "# certificate: kernel vector with odd overlap with the target\n";
    out << format_grid(*report.certificate, game.shape());
    return kExitNegative;
}

int cmd_check_symmetric(const GameOptions& opts, std::ostream& out) {
    const auto game = load_game(opts);
    const auto report = symmetric_achievability(game);
    const auto dim = symmetric_basis(game.shape()).dim();
    if (report.achievable) {
        out << "ACHIEVABLE\n";
        out << "# all " << dim << " completely symmetric basis configurations are reachable\n";
        return kExitOk;
    }
    out << "UNACHIEVABLE\n";
    out << "# first unreachable symmetric basis configuration\n";
    out << format_grid(report.target, game.shape());
    out << "# certificate: kernel vector with odd overlap with it\n";
    out << format_grid(*report.certificate, game.shape());
    return kExitNegative;
}

int cmd_predicate(const GameOptions& opts, std::ostream& out, std::ostream& err) {
    const auto game = load_game(opts);
    if (game.shape().axes() != 2) {
        err << "error: predicate needs a two-dimensional shape such as 5x7\n";
        return kExitUsage;
    }
    const auto u = u_element(game);
    const auto v = principal_predicate(game);
    out << "shape " << v.shape.to_string() << '\n';
    out << "game " << v.game << '\n';
    out << "u " << u.to_string() << '\n';
    out << "u(0,0) " << (u.constant_term() ? 1 : 0) << '\n';
    out << "closed_form " << (*v.closed_form ? 1 : 0) << '\n';
    out << "ground_truth " << (v.ground_truth ? 1 : 0) << '\n';
    out << "agree " << (v.agree ? "yes" : "no") << '\n';
    if (!v.hypothesis_verified) {
        out << "note closed form hypothesis unverified for custom games\n";
    }
    return v.agree ? kExitOk : kExitNegative;
}

int cmd_oracle(const GameOptions& opts, const std::string& target_spec, std::ostream& out,
               std::ostream& err) {
    const auto game = load_game(opts);
    const auto cap = oracle_cap();
    if (game.shape().total() > cap) {
        err << "error: grid total " << game.shape().total() << " exceeds the oracle cap " << cap
            << " (set SIGMA_FORGE_ORACLE_CAP to raise it)\n";
        return kExitUsage;
    }
    const auto target = resolve_target(target_spec, game.shape());
    const bool brute = brute_force_oracle(game, target.cells, cap);
    const bool algebra = GameSolver(game).in_image(target.cells);
    out << "brute_force " << (brute ? 1 : 0) << '\n';
    out << "linear_algebra " << (algebra ? 1 : 0) << '\n';
    out << "agree " << (brute == algebra ? "yes" : "no") << '\n';
    return brute == algebra ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact GF(2) analysis of sigma-games on grid graphs", "sigma_forge"};
    app.require_subcommand(1);

    GameOptions solve_opts;
    std::string solve_target = "all-on";
    std::optional<std::string> solve_verify;
    auto* solve = app.add_subcommand("solve", "Find a push set reaching a target, or a certificate");
    add_game_options(*solve, solve_opts);
    solve->add_option("--target", solve_target, "all-on | central | <grid file>");
    solve->add_option("--verify", solve_verify, "Check a push-set grid file against the target");

    GameOptions sym_opts;
    auto* check_sym =
        app.add_subcommand("check-symmetric", "Are all completely symmetric configurations reachable?");
    add_game_options(*check_sym, sym_opts);

    GameOptions pred_opts;
    auto* predicate = app.add_subcommand("predicate", "2D closed-form criterion vs ground truth");
    add_game_options(*predicate, pred_opts);

    SweepConfig sweep_cfg;
    std::string sweep_format = "text";
    std::string sweep_target = "symmetric";
    auto* sweep_cmd = app.add_subcommand("sweep", "Cross-check closed forms over a range of shapes");
    sweep_cmd->add_option("--game", sweep_cfg.games, "Game(s) to sweep (default: the four presets)");
    sweep_cmd->add_option("--dims", sweep_cfg.axes, "Number of axes")->check(CLI::Range(1, 6));
    sweep_cmd->add_option("--max-n", sweep_cfg.max_n, "Largest axis size")->check(CLI::Range(1, 512));
    sweep_cmd->add_option("--min-n", sweep_cfg.min_n, "Smallest axis size")->check(CLI::Range(1, 512));
    sweep_cmd->add_flag("--odd-only", sweep_cfg.odd_only, "Only shapes with every axis odd");
    sweep_cmd->add_option("--target", sweep_target, "symmetric | all-on")
        ->check(CLI::IsMember({"symmetric", "all-on"}));
    sweep_cmd->add_option("--format", sweep_format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
    sweep_cmd->add_option("--jobs", sweep_cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));

    std::size_t cheb_n = 0;
    auto* cheb = app.add_subcommand("cheb", "Print the Chebyshev polynomial Q_n over GF(2)");
    cheb->add_option("--n", cheb_n, "Index n")->required()->check(CLI::Range(0, 100000));

    GameOptions oracle_opts;
    std::string oracle_target = "all-on";
    auto* oracle = app.add_subcommand("oracle", "Brute-force enumeration vs linear algebra");
    add_game_options(*oracle, oracle_opts);
    oracle->add_option("--target", oracle_target, "all-on | central | <grid file>");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("sigma_forge");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            return cmd_solve(solve_opts, solve_target, solve_verify, out);
        }
        if (*check_sym) {
            return cmd_check_symmetric(sym_opts, out);
        }
        if (*predicate) {
            return cmd_predicate(pred_opts, out, err);
        }
        if (*sweep_cmd) {
            if (sweep_cfg.min_n > sweep_cfg.max_n) {
                err << "error: --min-n must not exceed --max-n\n";
                return kExitUsage;
            }
            if (sweep_cfg.games.empty()) {
                for (const auto& p : kAllPresets) {
                    sweep_cfg.games.push_back(p.name());
                }
            }
            sweep_cfg.target = sweep_target == "all-on" ? SweepTarget::all_on : SweepTarget::symmetric;
            const auto result = sweep(sweep_cfg);
            if (sweep_format == "csv") {
                write_csv(out, result);
            } else {
                write_text(out, result);
            }
            if (result.disagreements != 0) {
                err << "error: " << result.disagreements << " closed-form disagreements\n";
                return kExitNegative;
            }
            return kExitOk;
        }
        if (*cheb) {
            out << chebyshev_q(cheb_n).to_string() << '\n';
            return kExitOk;
        }
        if (*oracle) {
            return cmd_oracle(oracle_opts, oracle_target, out, err);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace sigma::cli

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/game.hpp"
#include "sigma/gf2.hpp"

namespace sigma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // unachievable, mismatch or disagreement
inline constexpr int kExitUsage = 2;

/// Rows of space-separated 0/1 along the last axis. For three or more axes
/// each block of dims[d-2] rows is followed by a blank line (except the
/// last), so a 3D grid prints as slices along axis 1.
std::string format_grid(const BitVector& cells, const GridShape& shape);

/// Inverse of format_grid. Lines whose first non-blank character is not
/// '0' or '1' (headers, '#' comments, blank lines) are skipped; within a
/// row, whitespace between digits is optional. Throws ParseError on a
/// row-length or cell-count mismatch.
BitVector parse_grid(std::string_view text, const GridShape& shape);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigma::cli

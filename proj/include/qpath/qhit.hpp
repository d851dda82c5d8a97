#pragma once

#include "qpath/lattice.hpp"
#include "qpath/qpoly.hpp"

#include <utility>
#include <vector>

namespace qpath {

/// Maximal nonattacking placement, stored as (row, column) pairs sorted by
/// row. Rows are counted from the top, columns from the left, both from 1.
struct RookPlacement {
  std::vector<std::pair<int, int>> rooks;
  friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
};

/// H_0..H_m from the generating function
///   sum_k t^k prod_i [a_i + k]_q * (t;q)_{m+1},
/// a the area sequence of lambda. Requires a square box.
std::vector<QPoly> qhit_square_gf(const BoxPartition& lambda);

/// H_0..H_n for lambda in an m x n box with m >= n, obtained from the square
/// case by exact division by [m-n]_q!. Throws std::logic_error if the division
/// is not exact.
std::vector<QPoly> qhit_rect(const BoxPartition& lambda);

/// Placements with exactly k rooks inside lambda, ordered lexicographically
/// by the list of (row, column) pairs.
std::vector<RookPlacement> enumerate_placements(const BoxPartition& lambda, int k);

/// Number of unattacked empty cells of p. A cell of lambda is attacked by a
/// rook above it, a rook to its left, or a rook outside lambda to its right.
/// A cell outside lambda is attacked by a rook above it or a rook outside
/// lambda to its left.
int rook_stat(const BoxPartition& lambda, const RookPlacement& p);

/// sum over placements with k rooks in lambda of q^stat.
QPoly qhit_rook_stat(const BoxPartition& lambda, int k);

} // namespace qpath

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "binmargin/common.hpp"

namespace binmargin {

/// Prescribed row sums R and column sums C of a 0-1 matrix.
struct MarginPair {
  IntVector rows;  // r_i, length m
  IntVector cols;  // c_j, length n

  int m() const { return static_cast<int>(rows.size()); }
  int n() const { return static_cast<int>(cols.size()); }
  long long total() const;  // N = sum of row sums
};

/// Nonnegative weight matrix W. A 0-1 W acts as a pattern: cells with
/// w_ij = 0 are forbidden.
struct Pattern {
  Matrix weights;

  bool binary() const;
  bool supported(int i, int j) const { return weights(i, j) != 0.0; }
};

/// A set of cell coordinates (0-based).
struct SubsetIndex {
  std::vector<std::pair<int, int>> cells;
};

struct PinnedCell {
  int i, j;   // original coordinates
  int value;  // forced 0 or 1
};

/// Result of validate(): the instance with all forced lines removed.
/// Margins of the reduced instance satisfy 0 < r_i < (row support size)
/// and symmetrically for columns. Pinned cells are reported in original
/// coordinates; the reduction preserves the number of tables, and for
/// weighted patterns the partition function picks up the factor
/// exp(log_weight_pinned) from cells forced to 1.
struct ValidatedInstance {
  MarginPair margins;
  std::optional<Pattern> pattern;
  std::vector<int> row_map;  // reduced row index -> original row index
  std::vector<int> col_map;
  std::vector<PinnedCell> pinned;
  double log_weight_pinned = 0.0;
  int original_m = 0;
  int original_n = 0;

  bool empty() const { return margins.m() == 0 && margins.n() == 0; }

  /// Embed an m'xn' matrix over the reduced instance back into the
  /// original shape, filling pinned cells with their forced values.
  Matrix embed(const Matrix& reduced_values) const;
};

/// Check dimensions, margin sums and ranges, then pin and remove forced
/// lines to a fixed point. Throws Error with code dimension_mismatch,
/// margin_sum_mismatch, margin_out_of_range, or infeasible.
ValidatedInstance validate(const MarginPair& margins, const Pattern* pattern = nullptr);

/// Gale-Ryser feasibility for the unpatterned case: is Sigma(R,C) nonempty?
bool gale_ryser_feasible(const MarginPair& margins);

/// Feasibility with a pattern, decided by bipartite max-flow on the
/// support of W (weights only matter through their support).
bool pattern_feasible(const MarginPair& margins, const Pattern& pattern);

/// True iff every supported cell can be both 0 and 1 in some table,
/// i.e. the polytope P(R,C;W) has an interior point on the support.
bool interior_nonempty(const MarginPair& margins, const Pattern* pattern = nullptr);

/// Does the table have the prescribed margins (and vanish off the support)?
bool table_matches(const Table& table, const MarginPair& margins,
                   const Pattern* pattern = nullptr);

/// Sum of the entries of `a` indexed by S. Throws index_out_of_range.
template <typename Derived>
double sigma_S(const Eigen::MatrixBase<Derived>& a, const SubsetIndex& s) {
  double sum = 0.0;
  for (const auto& [i, j] : s.cells) {
    if (i < 0 || i >= a.rows() || j < 0 || j >= a.cols())
      throw Error(errc::index_out_of_range,
                  "subset cell (" + std::to_string(i) + "," + std::to_string(j) +
                      ") outside " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " matrix");
    sum += static_cast<double>(a(i, j));
  }
  return sum;
}

}  // namespace binmargin

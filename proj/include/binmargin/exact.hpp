#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "binmargin/common.hpp"
#include "binmargin/entropy_solver.hpp"
#include "binmargin/margins.hpp"

namespace binmargin {

/// Ground-truth count. Binary instances carry an exact integer; weighted
/// instances carry the partition function in long double with a ~1e-10
/// relative error budget.
struct ExactCount {
  BigInt count;            // valid when !weighted
  long double weight = 0;  // valid when weighted
  bool weighted = false;
  std::string method;      // "enumeration" or "permanent"

  double log_value() const;
  std::string to_decimal_string() const;
};

struct EnumerationBudget {
  long long max_nodes = 200'000'000;  // DFS nodes before search_budget_exceeded
  int workers = 1;                    // split over first-row choices
};

/// Depth-first count over rows with residual Gale-Ryser pruning
/// (unpatterned) or cheap degree bounds (patterned).
ExactCount enumerate_count(const MarginPair& margins, const Pattern* pattern = nullptr,
                           const EnumerationBudget& budget = {});

/// All tables (or the first `limit`) in a deterministic DFS order.
std::vector<Table> enumerate_tables(const MarginPair& margins,
                                    const Pattern* pattern = nullptr,
                                    std::optional<long long> limit = {},
                                    const EnumerationBudget& budget = {});

/// The mn x mn block matrix whose permanent counts Sigma(R,C;W): m type-I
/// row blocks of sizes n-r_i (all-ones across column block i), n type-II
/// row blocks of sizes c_j (w_ij at column j of block i), zeros elsewhere.
/// Columns are m blocks of n, column (i,j) at index i*n + j.
struct PermanentConstruction {
  Matrix A;
  std::vector<int> type1_sizes;  // n - r_i
  std::vector<int> type2_sizes;  // c_j
  int m = 0, n = 0;
};

PermanentConstruction build_permanent_matrix(const MarginPair& margins,
                                             const Pattern* pattern = nullptr);

/// Ryser inclusion-exclusion with Gray-code subset iteration, exact
/// arbitrary-precision arithmetic. Square matrices up to 28x28.
BigInt ryser_permanent(const Eigen::MatrixXi& a);

/// Double-precision Ryser with compensated summation (weighted case).
double ryser_permanent(const Matrix& a);

/// per A / (prod (n-r_i)! * prod c_j!); the division is checked exact for
/// binary instances (a remainder signals an implementation bug).
ExactCount count_via_permanent(const MarginPair& margins, const Pattern* pattern = nullptr);

/// The near-doubly-stochastic rescaling B of A built from a dual point:
/// type-I rows scaled by 1/(x_i (n-r_i)), type-II rows by y_j/c_j, column
/// (i,j) by x_i/(1 + w_ij x_i y_j). Column sums telescope to exactly 1;
/// eps_row measures how far the dual point is from stationarity.
struct ScalingCertificate {
  Matrix B;
  double eps_row = 0.0;       // max |row sum - 1|
  double max_col_dev = 0.0;   // max |column sum - 1|
  DualPoint duals_used;
  // |per A - factor * per B| / per A, evaluated when mn <= 20
  std::optional<double> permanent_identity_residual;
};

ScalingCertificate scaling_certificate(const MarginPair& margins, const Pattern* pattern,
                                       const DualPoint& dual);

/// Relative residual of the generating-function identity
/// prod (1 + w_ij x_i y_j) = sum over all margins of count * x^R y^C,
/// the right side expanded from exact counts (m, n <= 3).
double generating_function_check(const MarginPair& margins, const Pattern* pattern,
                                 const Vector& x, const Vector& y);

}  // namespace binmargin

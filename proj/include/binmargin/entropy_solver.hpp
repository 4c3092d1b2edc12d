#pragma once

#include <cmath>
#include <vector>

#include "binmargin/common.hpp"
#include "binmargin/margins.hpp"

namespace binmargin {

/// Logarithmic dual variables: x_i = e^{s_i}, y_j = e^{t_j}. The objective
/// is invariant under s -> s + c, t -> t - c; the solver fixes the gauge
/// sum(s) = 0.
struct DualPoint {
  Vector s;
  Vector t;
};

struct SolverConfig {
  double tol = 0.0;       // gradient inf-norm target; <= 0 means 1e-9 * N
  int max_sweeps = 10000;
  double dual_cap = 40.0; // |s_i|, |t_j| clamp; hitting it flags non-attainment
  bool track_objective = false;
};

struct MaxEntropyResult {
  DualPoint dual;
  Matrix Z;                // maximum-entropy matrix, margins (R,C), zeros off support
  double entropy = 0.0;    // H(Z) in nats
  double log_alpha = 0.0;  // objective value at the final dual point
  double grad_inf_norm = 0.0;
  bool attained = false;   // converged with duals strictly inside the cap
  int iterations = 0;      // coordinate sweeps performed
  std::vector<double> objective_trace;  // per-sweep values when tracked
};

/// Scalar entropy H(x) = x ln(1/x) + (1-x) ln(1/(1-x)), H(0) = H(1) = 0.
double binary_entropy(double x);

/// Stable logistic 1 / (1 + e^{-u}).
double logistic(double u);

/// Sum of entry entropies of a matrix with entries in [0,1].
/// Throws entry_out_of_range beyond a 1e-12 rounding slack.
template <typename Derived>
double entropy(const Eigen::MatrixBase<Derived>& x) {
  double h = 0.0;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const double v = static_cast<double>(x(i, j));
      if (v < -1e-12 || v > 1.0 + 1e-12)
        throw Error(errc::entry_out_of_range,
                    "entropy argument " + std::to_string(v) + " outside [0,1]");
      h += binary_entropy(std::min(1.0, std::max(0.0, v)));
    }
  return h;
}

/// Convex dual objective G(s,t;W) = -sum r_i s_i - sum c_j t_j
/// + sum_ij ln(1 + w_ij e^{s_i+t_j}), evaluated log1p-stably.
double objective(const DualPoint& dual, const MarginPair& margins,
                 const Pattern* pattern = nullptr);

/// Gradient of G: row part -r_i + sum_j z_ij, column part -c_j + sum_i z_ij.
std::pair<Vector, Vector> gradient(const DualPoint& dual, const MarginPair& margins,
                                   const Pattern* pattern = nullptr);

/// ln F(x,y;W) for strictly positive x, y; equals objective() at s = ln x,
/// t = ln y. Throws non_positive_input.
double primal_objective(const Vector& x, const Vector& y, const MarginPair& margins,
                        const Pattern* pattern = nullptr);

/// Minimize G by alternating exact 1-D coordinate solves (each s_i solves a
/// strictly increasing equation by safeguarded Newton with bisection
/// fallback), re-fixing the gauge after every sweep. Throws not_feasible if
/// the instance has no table. Non-attainment (duals at the cap) is reported
/// through `attained`, not an error.
MaxEntropyResult solve(const MarginPair& margins, const Pattern* pattern = nullptr,
                       const SolverConfig& config = {});

}  // namespace binmargin

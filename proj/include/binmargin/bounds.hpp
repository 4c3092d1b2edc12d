#pragma once

#include <optional>
#include <vector>

#include "binmargin/common.hpp"
#include "binmargin/entropy_solver.hpp"
#include "binmargin/margins.hpp"

namespace binmargin {

/// Log-domain counting bounds around the convex optimum.
struct BoundsReport {
  double log_upper = 0.0;       // ln alpha(R,C;W)
  double log_lower = 0.0;       // log_upper + log_correction
  double log_correction = 0.0;  // Stirling product factor, always <= 0
  std::optional<double> log_independence;  // ln I(R,C), unpatterned only
  std::optional<double> log_exact;
};

/// ln of (mn)!/(mn)^{mn} * prod (n-r_i)^{n-r_i}/(n-r_i)! * prod c_j^{c_j}/c_j!
/// with the conventions 0^0 = 1 and 0! = 1.
double stirling_correction(const MarginPair& margins);

/// ln I(R,C) = -ln C(mn,N) + sum ln C(n,r_i) + sum ln C(m,c_j).
double independence_estimate(const MarginPair& margins);

BoundsReport bounds_report(const MarginPair& margins, const Pattern* pattern,
                           const MaxEntropyResult& solved);

/// Margins (R_k, C_k): each k*r_i repeated k times, likewise for columns.
/// Throws instance_too_large past the size cap.
MarginPair clone_margins(const MarginPair& margins, int k);

struct CloneCheckRow {
  int k;
  double log_count_over_k2;       // exact ln |Sigma(R_k,C_k)| / k^2
  double log_alpha_clone;         // solver value on the cloned instance
  double stationarity_residual;   // gradient inf-norm of the replicated dual
};

struct CloneCheck {
  double base_log_alpha;
  std::vector<CloneCheckRow> rows;
};

/// Exact counts of the cloned instances for k = 1..k_max next to the base
/// ln alpha, plus the replicated-dual stationarity check. Enumeration of the
/// clones must be desk-scale; throws instance_too_large otherwise.
CloneCheck cloning_limit_check(const MarginPair& margins, int k_max);

struct RepulsionGap {
  double lim_log_independence;  // limit of ln I(R_k,C_k)/k^2, entropy form
  double lim_log_count;         // limit of ln |Sigma(R_k,C_k)|/k^2 = H(Z)
  double gap;                   // >= 0; 0 iff all r_i equal or all c_j equal
};

RepulsionGap repulsion_gap(const MarginPair& margins);

/// Multivariate entropy of a probability vector (entries >= 0, summing to 1
/// up to rounding): sum p ln(1/p).
double multivariate_entropy(const std::vector<double>& p);

}  // namespace binmargin

#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace binmargin {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IntVector = Eigen::VectorXi;
/// A 0-1 table; entries are validated to be 0 or 1 where it matters.
using Table = Eigen::MatrixXi;

using BigInt = boost::multiprecision::cpp_int;

enum class errc {
  dimension_mismatch,
  margin_sum_mismatch,
  margin_out_of_range,
  infeasible,
  not_feasible,
  index_out_of_range,
  entry_out_of_range,
  non_positive_input,
  instance_too_large,
  search_budget_exceeded,
  inexact_division,
  param_out_of_range,
  hypothesis_violated,
};

const char* errc_name(errc code);

/// Library-wide error type; carries a machine-checkable code so callers
/// (tests, the CLI exit-code mapping) do not have to parse messages.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

/// ln(x) for a nonnegative big integer, accurate to ~1 ulp of double.
/// Returns -inf for x = 0.
double log_big(const BigInt& x);

}  // namespace binmargin

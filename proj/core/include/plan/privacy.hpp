#pragma once

#include <span>
#include <vector>

#include "plan/rng.hpp"

namespace plan {

/// Zero-concentrated differential privacy parameter. rho = 0 means a
/// mechanism consuming this budget may release nothing data-dependent.
struct PrivacyBudget {
  double rho = 0.0;
};

/// Conversion target for approximate differential privacy.
struct ApproxDpParams {
  double epsilon = 0.0;
  double delta = 0.0;
};

/// Three-way partition of a budget: center estimation, clipping-radius
/// estimation, and noise. Components always sum to the parent budget
/// exactly; the residual goes to rho3.
struct BudgetSplit {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double rho3 = 0.0;

  double total() const { return rho1 + rho2 + rho3; }
};

enum class BudgetPolicy {
  /// rho/3 each.
  EqualThirds,
  /// rho1 = 0.25 rho, rho2 = 0.25 (rho - rho1), rho3 = remainder.
  Table2,
  /// Same as Table2 but rho1 = 0.25 rho / d. Kept for comparison; shrinks
  /// the recentering budget as dimension grows.
  Table2Literal,
};

/// Sequential composition: total cost is the sum. Empty input composes to
/// zero.
PrivacyBudget compose(std::span<const PrivacyBudget> budgets);

/// epsilon = rho + 2 sqrt(rho ln(1/delta)) for any delta in (0, 1].
ApproxDpParams zcdp_to_approx_dp(PrivacyBudget budget, double delta);

/// Standard deviation of the Gaussian mechanism for the given l2
/// sensitivity: sqrt(sensitivity^2 / (2 rho)).
double gaussian_noise_sigma(double l2_sensitivity, PrivacyBudget budget);

/// Adds independent N(0, sensitivity^2 / (2 rho)) noise to each coordinate.
/// Draw order is coordinate order. Zero sensitivity returns the input
/// unchanged; zero budget with positive sensitivity is rejected.
std::vector<double> gaussian_mechanism(std::span<const double> value,
                                       double l2_sensitivity,
                                       PrivacyBudget budget, SeededRng& rng);

/// Scalar convenience overload.
double gaussian_mechanism(double value, double l2_sensitivity,
                          PrivacyBudget budget, SeededRng& rng);

/// Splits rho according to the policy. dims only matters for
/// BudgetPolicy::Table2Literal.
BudgetSplit divide_budget(PrivacyBudget budget, int dims, BudgetPolicy policy);

}  // namespace plan

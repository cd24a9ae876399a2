#include "plan/privacy.hpp"

#include <cmath>
#include <stdexcept>

namespace plan {

PrivacyBudget compose(std::span<const PrivacyBudget> budgets) {
  double total = 0.0;
  for (const auto& b : budgets) {
    if (b.rho < 0.0) {
      throw std::invalid_argument("compose: negative budget");
    }
    total += b.rho;
  }
  return PrivacyBudget{total};
}

ApproxDpParams zcdp_to_approx_dp(PrivacyBudget budget, double delta) {
  if (budget.rho < 0.0) {
    throw std::invalid_argument("zcdp_to_approx_dp: negative rho");
  }
  if (!(delta > 0.0) || delta > 1.0) {
    throw std::invalid_argument("zcdp_to_approx_dp: delta must be in (0, 1]");
  }
  const double eps =
      budget.rho + 2.0 * std::sqrt(budget.rho * std::log(1.0 / delta));
  return ApproxDpParams{eps, delta};
}

double gaussian_noise_sigma(double l2_sensitivity, PrivacyBudget budget) {
  if (l2_sensitivity < 0.0) {
    throw std::invalid_argument("gaussian_noise_sigma: negative sensitivity");
  }
  if (l2_sensitivity == 0.0) {
    return 0.0;
  }
  if (!(budget.rho > 0.0)) {
    throw std::invalid_argument(
        "gaussian_noise_sigma: rho must be positive for nonzero sensitivity");
  }
  return l2_sensitivity / std::sqrt(2.0 * budget.rho);
}

std::vector<double> gaussian_mechanism(std::span<const double> value,
                                       double l2_sensitivity,
                                       PrivacyBudget budget, SeededRng& rng) {
  const double sigma = gaussian_noise_sigma(l2_sensitivity, budget);
  std::vector<double> out(value.begin(), value.end());
  if (sigma == 0.0) {
    return out;
  }
  for (double& v : out) {
    v += sigma * rng.normal();
  }
  return out;
}

double gaussian_mechanism(double value, double l2_sensitivity,
                          PrivacyBudget budget, SeededRng& rng) {
  const double sigma = gaussian_noise_sigma(l2_sensitivity, budget);
  return sigma == 0.0 ? value : value + sigma * rng.normal();
}

BudgetSplit divide_budget(PrivacyBudget budget, int dims, BudgetPolicy policy) {
  if (!(budget.rho > 0.0)) {
    throw std::invalid_argument("divide_budget: rho must be positive");
  }
  if (dims < 1) {
    throw std::invalid_argument("divide_budget: dims must be positive");
  }
  const double rho = budget.rho;
  BudgetSplit split;
  switch (policy) {
    case BudgetPolicy::EqualThirds:
      split.rho1 = rho / 3.0;
      split.rho2 = rho / 3.0;
      break;
    case BudgetPolicy::Table2:
      split.rho1 = 0.25 * rho;
      split.rho2 = 0.25 * (rho - split.rho1);
      break;
    case BudgetPolicy::Table2Literal:
      split.rho1 = 0.25 * rho / static_cast<double>(dims);
      split.rho2 = 0.25 * (rho - split.rho1);
      break;
  }
  // Residual assignment keeps the sum exact in floating point.
  split.rho3 = rho - split.rho1 - split.rho2;
  return split;
}

}  // namespace plan

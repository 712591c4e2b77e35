#pragma once

#include <optional>
#include <vector>

#include "rootforge/errors.hpp"
#include "rootforge/group.hpp"

namespace rootforge {

// Decides whether target = sum_i x_i columns[i] has a solution with all x_i >= 0.
// The exact variant converts the binary64 inputs to rationals without rounding.
bool nonnegative_combination_exists(const std::vector<Vec>& columns, const Vec& target,
                                    double tol = kTolerance);
bool nonnegative_combination_exists_exact(const std::vector<Vec>& columns, const Vec& target);

// True iff no nontrivial nonnegative combination of `vectors` vanishes.
bool positively_independent(const std::vector<Vec>& vectors);

// Membership in the closed cone spanned by a fixed generating family.
class ConeTester {
 public:
  explicit ConeTester(std::vector<Vec> generators, double tol = kTolerance);
  bool contains(const Vec& v) const;
  // Coefficients over the generators when they are linearly independent.
  std::optional<Vec> coefficients(const Vec& v) const;
  bool independent() const { return independent_; }

 private:
  std::vector<Vec> generators_;
  double tol_;
  bool independent_ = false;
  std::vector<double> left_inverse_;  // k x d, row-major
  std::size_t dim_ = 0;
};

}  // namespace rootforge

#include "twinned/lp.hpp"

#include <optional>

namespace twinned {

namespace {

class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, RationalVector rhs, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  // Runs Bland's rule until optimal; `allowed` masks columns that may enter.
  LpStatus optimize(const RationalVector& cost, const std::vector<bool>& allowed) {
    const std::size_t cols = cost.size();
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < cols && !entering; ++j) {
        if (!allowed[j] || is_basic(j)) continue;
        if (reduced_cost(cost, j) > 0) entering = j;
      }
      if (!entering) return LpStatus::kOptimal;
      const std::size_t j = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][j] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][j];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return LpStatus::kUnbounded;
      pivot(*leaving, j);
    }
  }

  Rational reduced_cost(const RationalVector& cost, std::size_t j) const {
    Rational r = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i][j] != 0) r -= cost[basis_[i]] * rows_[i][j];
    return r;
  }

  Rational value(const RationalVector& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  void pivot(std::size_t r, std::size_t j) {
    const Rational p = rows_[r][j];
    for (auto& a : rows_[r]) a /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][j] == 0) continue;
      const Rational f = rows_[i][j];
      for (std::size_t k = 0; k < rows_[i].size(); ++k)
        if (rows_[r][k] != 0) rows_[i][k] -= f * rows_[r][k];
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = j;
  }

  bool is_basic(std::size_t j) const {
    for (auto b : basis_)
      if (b == j) return true;
    return false;
  }

  // Removes artificial columns (index >= first_artificial) from the basis,
  // dropping rows that turn out to be linearly dependent.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial && !col; ++j)
        if (rows_[i][j] != 0) col = j;
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  RationalVector solution(std::size_t n) const {
    RationalVector x(n, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  std::vector<RationalVector> rows_;
  RationalVector rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.rows.size();
  const std::size_t n = lp.objective.size();
  std::vector<RationalVector> rows(m, RationalVector(n + m, Rational(0)));
  RationalVector rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = flip ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
    rhs[i] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
    rows[i][n + i] = 1;
    basis[i] = n + i;
  }
  Tableau tab(std::move(rows), std::move(rhs), std::move(basis));

  RationalVector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  tab.optimize(phase1, std::vector<bool>(n + m, true));
  LpResult result;
  if (tab.value(phase1) < 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  tab.expel_artificials(n);

  RationalVector phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  std::vector<bool> allowed(n + m, false);
  for (std::size_t j = 0; j < n; ++j) allowed[j] = true;
  result.status = tab.optimize(phase2, allowed);
  if (result.status == LpStatus::kOptimal) {
    result.value = tab.value(phase2);
    result.x = tab.solution(n);
  }
  return result;
}

}  // namespace twinned

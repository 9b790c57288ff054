#include "crn/lp.hpp"

namespace crn::lp {

namespace {

class Tableau {
 public:
  Tableau(const std::vector<RationalVector>& a, const RationalVector& b, std::size_t n)
      : m_(a.size()), n_(n), cols_(n + a.size() + 1), rows_(a.size(), RationalVector(cols_, Rational(0))),
        obj_(cols_, Rational(0)), basis_(a.size()) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i].size() != n_) throw Error(ErrorKind::DimensionMismatch, "constraint row has the wrong length");
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
      rows_[i][n_ + i] = 1;
      rows_[i][rhs()] = flip ? Rational(-b[i]) : b[i];
      basis_[i] = n_ + i;
    }
  }

  std::size_t rhs() const { return cols_ - 1; }
  bool is_artificial(std::size_t j) const { return j >= n_ && j < n_ + m_; }

  // Reduced costs for maximising cost . x over the current basis.
  void set_objective(const RationalVector& cost) {
    for (std::size_t j = 0; j < cols_; ++j) {
      Rational z(0);
      for (std::size_t i = 0; i < m_; ++i) {
        if (cost[basis_[i]] != 0) z += cost[basis_[i]] * rows_[i][j];
      }
      obj_[j] = j == rhs() ? z : z - cost[j];
    }
  }

  // Returns false when unbounded.
  bool optimise(bool allow_artificial, int& pivots) {
    while (true) {
      std::size_t enter = cols_;
      for (std::size_t j = 0; j + 1 < cols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][rhs()] / rows_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows_[r][c];
    for (auto& v : rows_[r]) {
      if (v != 0) v *= inv;
    }
    auto eliminate = [&](RationalVector& row) {
      if (row[c] == 0) return;
      Rational f = row[c];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (rows_[r][j] != 0) row[j] -= f * rows_[r][j];
      }
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(obj_);
    basis_[r] = c;
  }

  // Pivots basic artificials (at value zero) out where an original column allows it.
  void expel_artificials(int& pivots) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          ++pivots;
          break;
        }
      }
    }
  }

  const Rational& objective_value() const { return obj_[rhs()]; }

  RationalVector solution() const {
    RationalVector x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][rhs()];
    }
    return x;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t cols_;
  std::vector<RationalVector> rows_;
  RationalVector obj_;
  std::vector<std::size_t> basis_;
};

}  // namespace

Result maximize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "row count differs from right-hand side length");
  const std::size_t n = c.size();
  const std::size_t m = a.size();
  Result result;
  Tableau t(a, b, n);

  RationalVector phase1(n + m + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  t.set_objective(phase1);
  t.optimise(true, result.pivots);
  result.infeasibility = -t.objective_value();
  if (result.infeasibility > 0) {
    result.status = Status::Infeasible;
    return result;
  }
  t.expel_artificials(result.pivots);

  RationalVector phase2(n + m + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  t.set_objective(phase2);
  if (!t.optimise(false, result.pivots)) {
    result.status = Status::Unbounded;
    result.x = t.solution();
    return result;
  }
  result.status = Status::Optimal;
  result.x = t.solution();
  result.objective = t.objective_value();
  return result;
}

Result find_feasible(const std::vector<RationalVector>& a, const RationalVector& b) {
  const std::size_t n = a.empty() ? 0 : a.front().size();
  return maximize(a, b, RationalVector(n, Rational(0)));
}

}  // namespace crn::lp

#pragma once

// Exact simplex over an ordered field.
//
// Variables of a LinearProgram are free. The solver keeps a dictionary with
// one row per inequality (equalities are split into two inequalities):
//
//   s_r = rhs_r - A_r x,   s_r >= 0
//
// Free variables are pivoted into the basis first and never leave it, so the
// working tableau stays m x (n + 2). The auxiliary x_aux >= 0 is then added
// to every remaining row. Phase one maximizes -x_aux starting from
// the single most infeasible row (Chvatal's variant); all entering/leaving
// choices follow Bland's rule, which makes the run deterministic and
// guarantees termination without perturbation.

#include "tk/error.hpp"
#include "tk/rational.hpp"

#include <optional>
#include <vector>

namespace tk {

enum class Relation { LessEqual, Equal };

template <typename Scalar>
struct LinearConstraint {
  Vec<Scalar> coeffs;
  Relation relation;
  Scalar rhs;
};

template <typename Scalar>
class LinearProgram {
 public:
  explicit LinearProgram(Eigen::Index num_vars) : n_(num_vars) {
    if (num_vars < 0) throw PreconditionError("negative variable count");
  }

  Eigen::Index num_vars() const { return n_; }
  const std::vector<LinearConstraint<Scalar>>& constraints() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  void add(Vec<Scalar> coeffs, Relation relation, Scalar rhs) {
    if (coeffs.size() != n_) throw DimensionError("constraint row length differs from variable count");
    rows_.push_back({std::move(coeffs), relation, std::move(rhs)});
  }
  void add_less_equal(Vec<Scalar> coeffs, Scalar rhs) {
    add(std::move(coeffs), Relation::LessEqual, std::move(rhs));
  }
  void add_greater_equal(const Vec<Scalar>& coeffs, const Scalar& rhs) {
    add(-coeffs, Relation::LessEqual, -rhs);
  }
  void add_equal(Vec<Scalar> coeffs, Scalar rhs) {
    add(std::move(coeffs), Relation::Equal, std::move(rhs));
  }

  bool is_satisfied_by(const Vec<Scalar>& x) const {
    if (x.size() != n_) return false;
    for (const auto& row : rows_) {
      const Scalar lhs = row.coeffs.dot(x);
      if (row.relation == Relation::Equal ? lhs != row.rhs : lhs > row.rhs) return false;
    }
    return true;
  }

 private:
  Eigen::Index n_;
  std::vector<LinearConstraint<Scalar>> rows_;
};

template <typename Scalar>
struct LpOptimum {
  enum class Status { Infeasible, Unbounded, Optimal };
  Status status = Status::Infeasible;
  Vec<Scalar> point;  // feasible point (optimal when status == Optimal)
  Scalar value{};
};

namespace detail {

template <typename Scalar>
class SimplexDictionary {
 public:
  explicit SimplexDictionary(const LinearProgram<Scalar>& lp) : n_(lp.num_vars()) {
    Eigen::Index m = 0;
    for (const auto& c : lp.constraints()) m += c.relation == Relation::Equal ? 2 : 1;
    m_ = m;
    aux_ = n_ + m_;
    cols_ = n_ + 1;
    table_.setZero(m_ + 1, cols_ + 1);  // last row holds the objective
    basic_.resize(static_cast<std::size_t>(m_));
    nonbasic_.resize(static_cast<std::size_t>(cols_));
    for (Eigen::Index j = 0; j < n_; ++j) nonbasic_[static_cast<std::size_t>(j)] = j;
    nonbasic_[static_cast<std::size_t>(n_)] = aux_;

    Eigen::Index r = 0;
    auto emit = [&](const Vec<Scalar>& a, const Scalar& b) {
      table_(r, 0) = b;
      table_.row(r).segment(1, n_) = -a.transpose();
      basic_[static_cast<std::size_t>(r)] = n_ + r;
      ++r;
    };
    for (const auto& c : lp.constraints()) {
      emit(c.coeffs, c.rhs);
      if (c.relation == Relation::Equal) emit(-c.coeffs, -c.rhs);
    }
    dead_.assign(static_cast<std::size_t>(n_), false);
    retired_.assign(static_cast<std::size_t>(m_), false);
    pivot_free_variables();
    // The auxiliary relaxes the rows that remain after eliminating the free
    // variables; rows now defining a free variable carry no constraint.
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (constrained(r)) table_(r, cols_) = Scalar(1);
    }
  }

  bool phase_one() {
    Eigen::Index worst = -1;
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (!constrained(r)) continue;
      if (table_(r, 0) < Scalar(0) && (worst < 0 || table_(r, 0) < table_(worst, 0))) worst = r;
    }
    const Eigen::Index aux_col = column_of(aux_);
    if (worst < 0) {
      drop_aux(aux_col);
      return true;
    }
    pivot(worst, aux_col);
    objective().setZero();
    objective() = -table_.row(worst);
    run(/*prefer_aux_leaving=*/true);
    if (objective()(0) < Scalar(0)) return false;
    // Objective is zero: the auxiliary variable sits at value 0.
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (basic_[static_cast<std::size_t>(r)] != aux_) continue;
      Eigen::Index c = -1;
      for (Eigen::Index k = 1; k <= cols_; ++k) {
        if (table_(r, k) != Scalar(0) && eligible(k)) {
          c = k;
          break;
        }
      }
      if (c < 0) retired_[static_cast<std::size_t>(r)] = true;
      else pivot(r, c);
    }
    const Eigen::Index col = column_of(aux_);
    if (col >= 0) drop_aux(col);
    return true;
  }

  /// Requires a successful phase_one().
  typename LpOptimum<Scalar>::Status maximize(const Vec<Scalar>& c) {
    objective().setZero();
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (c(j) == Scalar(0)) continue;
      const Eigen::Index row = row_of(j);
      if (row >= 0) {
        objective() += c(j) * table_.row(row);
      } else {
        objective()(column_of(j)) += c(j);
      }
    }
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (dead_[static_cast<std::size_t>(j)] && objective()(column_of(j)) != Scalar(0)) {
        return LpOptimum<Scalar>::Status::Unbounded;
      }
    }
    return run(false) ? LpOptimum<Scalar>::Status::Optimal : LpOptimum<Scalar>::Status::Unbounded;
  }

  Scalar objective_value() const { return table_(m_, 0); }

  Vec<Scalar> solution() const {
    Vec<Scalar> x = Vec<Scalar>::Zero(n_);
    for (Eigen::Index r = 0; r < m_; ++r) {
      const Eigen::Index v = basic_[static_cast<std::size_t>(r)];
      if (v < n_) x(v) = table_(r, 0);
    }
    return x;
  }

 private:
  auto objective() { return table_.row(m_); }

  bool constrained(Eigen::Index r) const {
    return basic_[static_cast<std::size_t>(r)] >= n_ && !retired_[static_cast<std::size_t>(r)];
  }

  bool eligible(Eigen::Index col) const {
    const Eigen::Index v = nonbasic_[static_cast<std::size_t>(col - 1)];
    if (v < n_) return false;  // free variables are either basic or dead
    if (v == aux_) return aux_live_;
    return true;
  }

  Eigen::Index column_of(Eigen::Index var) const {
    for (Eigen::Index k = 0; k < cols_; ++k) {
      if (nonbasic_[static_cast<std::size_t>(k)] == var) return k + 1;
    }
    return -1;
  }

  Eigen::Index row_of(Eigen::Index var) const {
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (basic_[static_cast<std::size_t>(r)] == var) return r;
    }
    return -1;
  }

  void drop_aux(Eigen::Index col) {
    table_.col(col).setZero();
    aux_live_ = false;
  }

  void pivot_free_variables() {
    for (Eigen::Index j = 0; j < n_; ++j) {
      const Eigen::Index c = column_of(j);
      Eigen::Index row = -1;
      for (Eigen::Index r = 0; r < m_; ++r) {
        if (constrained(r) && table_(r, c) != Scalar(0)) {
          row = r;
          break;
        }
      }
      if (row < 0) dead_[static_cast<std::size_t>(j)] = true;
      else pivot(row, c);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar a = table_(r, c);
    const Scalar inv = Scalar(1) / a;
    table_(r, c) = Scalar(-1);
    table_.row(r) *= -inv;
    for (Eigen::Index i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const Scalar f = table_(i, c);
      if (f == Scalar(0)) continue;
      table_(i, c) = Scalar(0);
      table_.row(i) += f * table_.row(r);
    }
    std::swap(basic_[static_cast<std::size_t>(r)], nonbasic_[static_cast<std::size_t>(c - 1)]);
  }

  // Bland's rule. Returns false on unboundedness.
  bool run(bool prefer_aux_leaving) {
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index k = 1; k <= cols_; ++k) {
        if (!eligible(k) || !(table_(m_, k) > Scalar(0))) continue;
        if (enter < 0 || nonbasic_[static_cast<std::size_t>(k - 1)] <
                             nonbasic_[static_cast<std::size_t>(enter - 1)]) {
          enter = k;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best;
      for (Eigen::Index r = 0; r < m_; ++r) {
        if (!constrained(r) || !(table_(r, enter) < Scalar(0))) continue;
        Scalar ratio = table_(r, 0) / -table_(r, enter);
        bool take = false;
        if (leave < 0 || ratio < best) {
          take = true;
        } else if (ratio == best) {
          const Eigen::Index cand = basic_[static_cast<std::size_t>(r)];
          const Eigen::Index held = basic_[static_cast<std::size_t>(leave)];
          if (prefer_aux_leaving && cand == aux_) take = true;
          else if (!(prefer_aux_leaving && held == aux_) && cand < held) take = true;
        }
        if (take) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Eigen::Index n_ = 0;
  Eigen::Index m_ = 0;
  Eigen::Index aux_ = 0;
  Eigen::Index cols_ = 0;
  bool aux_live_ = true;
  Mat<Scalar> table_;
  std::vector<Eigen::Index> basic_;
  std::vector<Eigen::Index> nonbasic_;
  std::vector<bool> dead_;
  std::vector<bool> retired_;
};

}  // namespace detail

/// A rational feasible point, or nullopt when the system is infeasible.
template <typename Scalar>
std::optional<Vec<Scalar>> lp_feasible(const LinearProgram<Scalar>& lp) {
  detail::SimplexDictionary<Scalar> dict(lp);
  if (!dict.phase_one()) return std::nullopt;
  Vec<Scalar> x = dict.solution();
  if (!lp.is_satisfied_by(x)) throw InternalError("simplex returned a point violating the system");
  return x;
}

template <typename Scalar>
LpOptimum<Scalar> lp_maximize(const LinearProgram<Scalar>& lp, const Vec<Scalar>& objective) {
  if (objective.size() != lp.num_vars()) throw DimensionError("objective length differs from variable count");
  detail::SimplexDictionary<Scalar> dict(lp);
  LpOptimum<Scalar> out;
  if (!dict.phase_one()) return out;
  out.status = dict.maximize(objective);
  out.point = dict.solution();
  out.value = objective.dot(out.point);
  if (!lp.is_satisfied_by(out.point)) throw InternalError("simplex returned a point violating the system");
  return out;
}

}  // namespace tk

#pragma once

// Cremona coordinates (y, w) of weakly ascending lines:
//
//   y_i = x_i / v_i,  w_i = 1 / v_i   where v_i != 0
//   y_i = x_i,        w_i = 0         where v_i == 0
//
// Sliding the base point x -> x + t v adds t to every on-support y_i, and
// rescaling v -> s v divides the on-support (y, w) jointly by s. The gauge
// used throughout fixes both: sum of on-support w is 1 and sum of on-support
// y is 0. Off-support y_i are absolute positions and are never touched.

#include "tk/geometry.hpp"
#include "tk/lp.hpp"

#include <vector>

namespace tk {

template <typename Scalar>
class CremonaLine {
 public:
  /// Takes raw coordinates and applies the gauge.
  CremonaLine(Vec<Scalar> y, Vec<Scalar> w) : y_(std::move(y)), w_(std::move(w)) {
    if (y_.size() != w_.size()) throw DimensionError("Cremona y and w differ in dimension");
    if (w_.size() == 0) throw PreconditionError("Cremona line must have positive dimension");
    for (Eigen::Index i = 0; i < w_.size(); ++i) {
      if (w_(i) < Scalar(0)) throw PreconditionError("Cremona w must be non-negative");
    }
    support_ = support_of(w_);
    if (support_.empty()) throw PreconditionError("Cremona w must be nonzero");
    Scalar wsum(0);
    for (auto i : support_) wsum += w_(i);
    const Scalar scale = Scalar(1) / wsum;
    Scalar ysum(0);
    for (auto i : support_) {
      w_(i) *= scale;
      y_(i) *= scale;
      ysum += y_(i);
    }
    const Scalar shift = ysum / Scalar(static_cast<long>(support_.size()));
    for (auto i : support_) y_(i) -= shift;
  }

  const Vec<Scalar>& y() const { return y_; }
  const Vec<Scalar>& w() const { return w_; }
  const std::vector<Eigen::Index>& support() const { return support_; }
  Eigen::Index dim() const { return w_.size(); }
  bool full_support() const { return static_cast<Eigen::Index>(support_.size()) == dim(); }

  friend bool operator==(const CremonaLine& a, const CremonaLine& b) {
    return a.y_ == b.y_ && a.w_ == b.w_;
  }

 private:
  Vec<Scalar> y_;
  Vec<Scalar> w_;
  std::vector<Eigen::Index> support_;
};

template <typename Scalar>
CremonaLine<Scalar> to_cremona(const Line<Scalar>& line) {
  const auto& x = line.base();
  const auto& v = line.dir();
  if (!is_weakly_ascending(v)) throw PreconditionError("to_cremona needs a weakly ascending line");
  Vec<Scalar> y(line.dim()), w(line.dim());
  for (Eigen::Index i = 0; i < line.dim(); ++i) {
    if (v(i) == Scalar(0)) {
      y(i) = x(i);
      w(i) = Scalar(0);
    } else {
      w(i) = Scalar(1) / v(i);
      y(i) = x(i) * w(i);
    }
  }
  return CremonaLine<Scalar>(std::move(y), std::move(w));
}

template <typename Scalar>
Line<Scalar> from_cremona(const CremonaLine<Scalar>& c) {
  Vec<Scalar> x(c.dim()), v(c.dim());
  for (Eigen::Index i = 0; i < c.dim(); ++i) {
    if (c.w()(i) == Scalar(0)) {
      x(i) = c.y()(i);
      v(i) = Scalar(0);
    } else {
      v(i) = Scalar(1) / c.w()(i);
      x(i) = c.y()(i) * v(i);
    }
  }
  return Line<Scalar>(std::move(x), std::move(v));
}

enum class Combination { Convex, Affine };

/// Componentwise combination of gauge-fixed Cremona coordinates. All inputs
/// must share one support; the result must stay on that support.
template <typename Scalar>
CremonaLine<Scalar> cremona_combination(const std::vector<CremonaLine<Scalar>>& lines,
                                        const std::vector<Scalar>& weights,
                                        Combination kind = Combination::Convex) {
  if (lines.empty()) throw PreconditionError("cremona_combination needs at least one line");
  if (lines.size() != weights.size()) throw DimensionError("one weight per line required");
  Scalar total(0);
  for (const auto& t : weights) {
    if (kind == Combination::Convex && t < Scalar(0)) {
      throw PreconditionError("convex combination weights must be non-negative");
    }
    total += t;
  }
  if (total != Scalar(1)) throw PreconditionError("combination weights must sum to 1");
  const auto& first = lines.front();
  Vec<Scalar> y = Vec<Scalar>::Zero(first.dim());
  Vec<Scalar> w = Vec<Scalar>::Zero(first.dim());
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (lines[k].dim() != first.dim()) throw DimensionError("lines differ in dimension");
    if (lines[k].support() != first.support()) {
      throw PreconditionError("cannot combine Cremona coordinates with different supports");
    }
    y += weights[k] * lines[k].y();
    w += weights[k] * lines[k].w();
  }
  for (auto i : first.support()) {
    if (w(i) < Scalar(0)) throw PreconditionError("combination has a negative w entry");
    if (w(i) == Scalar(0)) throw PreconditionError("combination leaves the Cremona chart (w entry vanishes)");
  }
  return CremonaLine<Scalar>(std::move(y), std::move(w));
}

/// Whether the query's (y, w) is a convex combination of the generators'.
template <typename Scalar>
bool cremona_hull_membership(const std::vector<CremonaLine<Scalar>>& generators,
                             const CremonaLine<Scalar>& query) {
  if (generators.empty()) return false;
  for (const auto& g : generators) {
    if (g.dim() != query.dim()) throw DimensionError("lines differ in dimension");
    if (g.support() != generators.front().support()) {
      throw PreconditionError("generators must share one support");
    }
  }
  if (query.support() != generators.front().support()) return false;
  const auto k = static_cast<Eigen::Index>(generators.size());
  const Eigen::Index d = query.dim();
  LinearProgram<Scalar> lp(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    Vec<Scalar> row = Vec<Scalar>::Zero(k);
    row(j) = Scalar(-1);
    lp.add_less_equal(std::move(row), Scalar(0));
  }
  lp.add_equal(Vec<Scalar>::Ones(k), Scalar(1));
  for (Eigen::Index i = 0; i < d; ++i) {
    Vec<Scalar> ry(k), rw(k);
    for (Eigen::Index j = 0; j < k; ++j) {
      ry(j) = generators[static_cast<std::size_t>(j)].y()(i);
      rw(j) = generators[static_cast<std::size_t>(j)].w()(i);
    }
    lp.add_equal(std::move(ry), query.y()(i));
    lp.add_equal(std::move(rw), query.w()(i));
  }
  return lp_feasible(lp).has_value();
}

}  // namespace tk

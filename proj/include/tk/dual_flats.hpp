#pragma once

// Hyperplane transversals and the dual (d-2)-flat theory.
//
// An ascending hyperplane v.z = c (v >= 0, sum v = 1) meets [a, b] iff
// a.v <= c <= b.v, so the ascending hyperplanes meeting a box form a convex
// set in (v, c).
//
// A (d-2)-flat K = {z : z.x = 1, z.v = 0} lies in the pencil of hyperplanes
// z.(x + t v) = 1. Hyperplanes z.a = 1 are ordered by their coefficient
// vectors, and K is *-transverse to the *-box between A and B iff some
// x + t v lies in the coordinate box [a, b]. That is the line/box predicate in
// coefficient space.

#include "tk/geometry.hpp"
#include "tk/lp.hpp"
#include "tk/transversal.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace tk {

/// v.z = c with v >= 0, gauge sum v = 1.
template <typename Scalar>
class AscendingHyperplane {
 public:
  AscendingHyperplane(Vec<Scalar> normal, Scalar offset) : v_(std::move(normal)), c_(std::move(offset)) {
    if (v_.size() == 0) throw PreconditionError("hyperplane must have positive dimension");
    if (!is_weakly_ascending(v_)) throw PreconditionError("ascending hyperplane needs a non-negative nonzero normal");
    const Scalar s = v_.sum();
    v_ /= s;
    c_ /= s;
  }
  const Vec<Scalar>& normal() const { return v_; }
  const Scalar& offset() const { return c_; }
  Eigen::Index dim() const { return v_.size(); }

 private:
  Vec<Scalar> v_;
  Scalar c_;
};

/// Hyperplane n.z = c with any nonzero normal.
template <typename Scalar>
struct Hyperplane {
  Vec<Scalar> normal;
  Scalar offset;
};

template <typename Scalar>
bool hyperplane_meets_box(const AscendingHyperplane<Scalar>& h, const Box<Scalar>& box) {
  if (h.dim() != box.dim()) throw DimensionError("hyperplane and box dimensions differ");
  return box.min_corner().dot(h.normal()) <= h.offset() && h.offset() <= box.max_corner().dot(h.normal());
}

/// Any normal: the box's range of n.z, computed per coordinate.
template <typename Scalar>
bool hyperplane_meets_box(const Hyperplane<Scalar>& h, const Box<Scalar>& box) {
  if (h.normal.size() != box.dim()) throw DimensionError("hyperplane and box dimensions differ");
  Scalar lo(0), hi(0);
  for (Eigen::Index i = 0; i < box.dim(); ++i) {
    const Scalar p = h.normal(i) * box.min_corner()(i);
    const Scalar r = h.normal(i) * box.max_corner()(i);
    lo += p < r ? p : r;
    hi += p < r ? r : p;
  }
  return lo <= h.offset && h.offset <= hi;
}

template <typename Scalar>
Hyperplane<Scalar> reflect(const AscendingHyperplane<Scalar>& h, const SignClass& eps) {
  return {reflect(h.normal(), eps), h.offset()};
}

/// Ascending hyperplane transversal to the reflected boxes, returned in the
/// reflected frame.
template <typename Scalar>
std::optional<AscendingHyperplane<Scalar>> ascending_hyperplane_transversal(
    const std::vector<Box<Scalar>>& boxes, Eigen::Index d) {
  // variables v_0..v_{d-1}, c
  LinearProgram<Scalar> lp(d + 1);
  for (Eigen::Index i = 0; i < d; ++i) {
    Vec<Scalar> row = Vec<Scalar>::Zero(d + 1);
    row(i) = Scalar(1);
    lp.add_greater_equal(row, Scalar(0));
  }
  Vec<Scalar> sum = Vec<Scalar>::Ones(d + 1);
  sum(d) = Scalar(0);
  lp.add_equal(std::move(sum), Scalar(1));
  for (const auto& box : boxes) {
    if (box.dim() != d) throw DimensionError("box dimension differs from d");
    Vec<Scalar> lower(d + 1), upper(d + 1);
    lower << box.min_corner(), Scalar(-1);
    upper << -box.max_corner(), Scalar(1);
    lp.add_less_equal(std::move(lower), Scalar(0));
    lp.add_less_equal(std::move(upper), Scalar(0));
  }
  const auto x = lp_feasible(lp);
  if (!x) return std::nullopt;
  AscendingHyperplane<Scalar> h(x->head(d), (*x)(d));
  for (const auto& box : boxes) {
    if (!hyperplane_meets_box(h, box)) throw InternalError("hyperplane transversal misses a box");
  }
  return h;
}

/// Hyperplane transversal whose normal has sign eps, in the input frame.
template <typename Scalar>
std::optional<Hyperplane<Scalar>> hyperplane_transversal(const std::vector<Box<Scalar>>& boxes,
                                                         const SignClass& eps) {
  const Eigen::Index d = eps.dim();
  std::vector<Box<Scalar>> reflected;
  for (const auto& b : boxes) {
    if (b.dim() != d) throw DimensionError("sign class dimension differs from boxes");
    reflected.push_back(reflect(b, eps));
  }
  auto h = ascending_hyperplane_transversal(reflected, d);
  if (!h) return std::nullopt;
  return reflect(*h, eps);
}

/// First sign class (canonical order) admitting a hyperplane transversal.
template <typename Scalar>
std::optional<std::pair<SignClass, Hyperplane<Scalar>>> hyperplane_transversal_any(
    const std::vector<Box<Scalar>>& boxes) {
  const Eigen::Index d = family_dim(boxes);
  for (const auto& eps : all_sign_classes(d)) {
    if (auto h = hyperplane_transversal(boxes, eps)) return std::make_pair(eps, std::move(*h));
  }
  return std::nullopt;
}

/// Hyperplanes between z.a = 1 and z.b = 1, with a <= b componentwise.
template <typename Scalar>
class StarBox {
 public:
  StarBox(Vec<Scalar> lower, Vec<Scalar> upper) : a_(std::move(lower)), b_(std::move(upper)) {
    if (a_.size() != b_.size()) throw DimensionError("star box bounds differ in dimension");
    for (Eigen::Index i = 0; i < a_.size(); ++i) {
      if (a_(i) > b_(i)) {
        throw PreconditionError("star box bounds must be ordered componentwise (no wrap through infinity)");
      }
    }
  }
  const Vec<Scalar>& lower() const { return a_; }
  const Vec<Scalar>& upper() const { return b_; }
  Eigen::Index dim() const { return a_.size(); }
  Box<Scalar> coefficient_box() const { return Box<Scalar>(a_, b_); }

 private:
  Vec<Scalar> a_;
  Vec<Scalar> b_;
};

/// K = {z : z.x = 1, z.v = 0} with v weakly ascending and x != 0. K is a
/// (d-2)-flat when x and v are independent and empty when they are parallel.
template <typename Scalar>
class StarFlat {
 public:
  StarFlat(Vec<Scalar> base, Vec<Scalar> dir) : x_(std::move(base)), v_(std::move(dir)) {
    if (x_.size() != v_.size()) throw DimensionError("star flat base and direction differ in dimension");
    if (!is_weakly_ascending(v_)) throw PreconditionError("star flat direction must be weakly ascending");
    if (x_.isZero()) throw PreconditionError("star flat base must be nonzero");
  }
  bool proper() const {
    Mat<Scalar> m(2, x_.size());
    m.row(0) = x_.transpose();
    m.row(1) = v_.transpose();
    return exact_rank(m) == 2;
  }
  const Vec<Scalar>& base() const { return x_; }
  const Vec<Scalar>& dir() const { return v_; }
  Eigen::Index dim() const { return x_.size(); }
  Line<Scalar> coefficient_line() const { return Line<Scalar>(x_, v_); }
  /// Membership of the affine point z in K.
  bool contains(const Vec<Scalar>& z) const { return z.dot(x_) == Scalar(1) && z.dot(v_) == Scalar(0); }

 private:
  Vec<Scalar> x_;
  Vec<Scalar> v_;
};

template <typename Scalar>
bool star_transversal(const StarFlat<Scalar>& flat, const StarBox<Scalar>& sbox) {
  return line_meets_box(flat.coefficient_line(), sbox.coefficient_box());
}

/// A proper ascending (d-2)-flat *-transverse to every *-box, or nullopt.
/// This is a weakly ascending transversal in coefficient space that avoids
/// the origin.
template <typename Scalar>
std::optional<StarFlat<Scalar>> star_family_transversal(const std::vector<StarBox<Scalar>>& sboxes) {
  if (sboxes.empty()) throw PreconditionError("star box family is empty");
  const Eigen::Index d = sboxes.front().dim();
  if (d < 2) throw PreconditionError("star flats need d >= 2");
  std::vector<Box<Scalar>> boxes;
  for (const auto& s : sboxes) {
    if (s.dim() != d) throw DimensionError("star boxes differ in dimension");
    boxes.push_back(s.coefficient_box());
  }
  auto flat_from = [&](const Vec<Scalar>& point, const Support& support) -> std::optional<StarFlat<Scalar>> {
    Vec<Scalar> y = point.head(d);
    Vec<Scalar> w = Vec<Scalar>::Zero(d);
    for (std::size_t k = 0; k < support.size(); ++k) w(support[k]) = point(d + static_cast<Eigen::Index>(k));
    const auto line = from_cremona(CremonaLine<Scalar>(std::move(y), std::move(w)));
    if (line.base().isZero()) return std::nullopt;
    StarFlat<Scalar> flat(line.base(), line.dir());
    if (!flat.proper()) return std::nullopt;
    for (const auto& sb : sboxes) {
      if (!star_transversal(flat, sb)) throw InternalError("star flat misses a star box");
    }
    return flat;
  };
  for (const auto& s : support_order(d)) {
    const auto lp = build_ascending_lp(boxes, d, s);
    const auto x = lp_feasible(lp);
    if (!x) continue;
    if (auto f = flat_from(*x, s)) return f;
    // Lines through the origin satisfy y_i = y_j on the support and y_i = 0
    // off it. Push each of those forms away from zero in turn.
    std::vector<Vec<Scalar>> forms;
    for (Eigen::Index i = 0; i < d; ++i) {
      Vec<Scalar> f = Vec<Scalar>::Zero(lp.num_vars());
      if (std::find(s.begin(), s.end(), i) == s.end()) {
        f(i) = Scalar(1);
      } else if (i != s.front()) {
        f(i) = Scalar(1);
        f(s.front()) = Scalar(-1);
      } else {
        continue;
      }
      forms.push_back(f);
      forms.push_back(-f);
    }
    for (const auto& f : forms) {
      auto capped = lp;
      capped.add_less_equal(f, Scalar(1));
      const auto opt = lp_maximize(capped, f);
      if (opt.status == LpOptimum<Scalar>::Status::Optimal && opt.value > Scalar(0)) {
        if (auto flat = flat_from(opt.point, s)) return flat;
      }
    }
  }
  return std::nullopt;
}

}  // namespace tk

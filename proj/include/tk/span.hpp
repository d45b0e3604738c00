#pragma once

// Cremona-affine spans of line families and the determinantal geometry they
// carry.
//
// For a line with nonzero direction coordinates, scaled so that q_01 = 1, the
// forms
//
//   b_i = q_1i z_0 - z_1 + q_0i z_i,    i = 2..d,
//
// with q_0i = v_1 / v_i and q_1i = x_1 - x_i v_1 / v_i vanish on the line.
// Stacking the forms of n generators gives an n x (d-1) matrix M of linear
// forms, stored as a pencil M(z) = sum_k z_k M_k. Affine combinations of rows
// are the forms of the affine combination of the generators' Cremona
// coordinates, so M drops rank exactly along the lines of the span.

#include "tk/cremona.hpp"
#include "tk/geometry.hpp"
#include "tk/linalg.hpp"
#include "tk/pluecker.hpp"
#include "tk/poly.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tk {

template <typename Scalar>
class SpanMatrix {
 public:
  /// pencil[k] is the n x (d-1) coefficient matrix of z_k, k = 0..d.
  SpanMatrix(Eigen::Index d, std::vector<Mat<Scalar>> pencil) : d_(d), pencil_(std::move(pencil)) {
    if (static_cast<Eigen::Index>(pencil_.size()) != d + 1) throw DimensionError("pencil needs d + 1 matrices");
    for (const auto& m : pencil_) {
      if (m.rows() != pencil_.front().rows() || m.cols() != d - 1) throw DimensionError("pencil matrix has wrong shape");
    }
  }

  Eigen::Index dim() const { return d_; }
  Eigen::Index n() const { return pencil_.front().rows(); }
  const Mat<Scalar>& coefficient(Eigen::Index k) const { return pencil_[static_cast<std::size_t>(k)]; }

  /// Coefficients on z_0..z_d of the form in row j, column i (the form b_{i+2}).
  Vec<Scalar> form(Eigen::Index j, Eigen::Index i) const {
    Vec<Scalar> f(d_ + 1);
    for (Eigen::Index k = 0; k <= d_; ++k) f(k) = pencil_[static_cast<std::size_t>(k)](j, i);
    return f;
  }

  /// M at the homogeneous point z = (z_0, ..., z_d).
  Mat<Scalar> evaluate(const Vec<Scalar>& z) const {
    if (z.size() != d_ + 1) throw DimensionError("homogeneous point needs d + 1 coordinates");
    Mat<Scalar> m = Mat<Scalar>::Zero(n(), d_ - 1);
    for (Eigen::Index k = 0; k <= d_; ++k) {
      if (z(k) != Scalar(0)) m += z(k) * pencil_[static_cast<std::size_t>(k)];
    }
    return m;
  }

  Mat<Scalar> evaluate(const Scalar& z0, const Vec<Scalar>& point) const {
    if (point.size() != d_) throw DimensionError("point dimension differs from d");
    Vec<Scalar> z(d_ + 1);
    z << z0, point;
    return evaluate(z);
  }

 private:
  Eigen::Index d_;
  std::vector<Mat<Scalar>> pencil_;
};

namespace detail {

template <typename Scalar>
void require_generic_direction(const Line<Scalar>& line) {
  for (Eigen::Index i = 0; i < line.dim(); ++i) {
    if (line.dir()(i) == Scalar(0)) throw PreconditionError("every direction coordinate must be nonzero");
  }
}

/// Rows are the Cremona directions 1/v of the lines, scaled to q_01 = 1.
template <typename Scalar>
Mat<Scalar> cremona_directions(const std::vector<Line<Scalar>>& lines) {
  const Eigen::Index d = lines.front().dim();
  Mat<Scalar> w(static_cast<Eigen::Index>(lines.size()), d);
  for (std::size_t j = 0; j < lines.size(); ++j) {
    for (Eigen::Index i = 0; i < d; ++i) w(static_cast<Eigen::Index>(j), i) = lines[j].dir()(0) / lines[j].dir()(i);
  }
  return w;
}

/// Raw Cremona coordinates (x/v, 1/v) scaled so the w-entries sum to 1.
template <typename Scalar>
std::pair<Vec<Scalar>, Vec<Scalar>> unit_cremona(const Line<Scalar>& line) {
  require_generic_direction(line);
  Vec<Scalar> w = line.dir().cwiseInverse();
  const Scalar s = w.sum();
  if (s == Scalar(0)) throw PreconditionError("Cremona direction sums to zero and cannot be normalized");
  Vec<Scalar> y = line.base().cwiseQuotient(line.dir());
  return {y / s, w / s};
}

}  // namespace detail

template <typename Scalar>
SpanMatrix<Scalar> build_span_matrix(const std::vector<Line<Scalar>>& lines) {
  if (lines.empty()) throw PreconditionError("span needs at least one line");
  const Eigen::Index d = lines.front().dim();
  if (d < 2) throw PreconditionError("span needs d >= 2");
  for (const auto& l : lines) {
    if (l.dim() != d) throw DimensionError("lines differ in dimension");
    detail::require_generic_direction(l);
  }
  const auto n = static_cast<Eigen::Index>(lines.size());
  if (exact_rank(detail::cremona_directions(lines)) < n) {
    throw PreconditionError("generators are dependent: Cremona directions are affinely dependent");
  }
  std::vector<Mat<Scalar>> pencil(static_cast<std::size_t>(d + 1), Mat<Scalar>::Zero(n, d - 1));
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto& x = lines[static_cast<std::size_t>(j)].base();
    const auto& v = lines[static_cast<std::size_t>(j)].dir();
    for (Eigen::Index i = 1; i < d; ++i) {
      const Scalar q0 = v(0) / v(i);
      pencil[0](j, i - 1) = x(0) - x(i) * q0;
      pencil[1](j, i - 1) = Scalar(-1);
      pencil[static_cast<std::size_t>(i + 1)](j, i - 1) = q0;
    }
  }
  return SpanMatrix<Scalar>(d, std::move(pencil));
}

template <typename Scalar>
Eigen::Index rank_at_point(const SpanMatrix<Scalar>& m, const Vec<Scalar>& point, const Scalar& z0 = Scalar(1)) {
  return exact_rank(m.evaluate(z0, point));
}

/// Rank at most n - 1 at the affine point, i.e. all maximal minors vanish.
template <typename Scalar>
bool scroll_membership(const SpanMatrix<Scalar>& m, const Vec<Scalar>& point) {
  if (m.n() > m.dim() - 1) throw PreconditionError("scroll membership needs n <= d - 1");
  return rank_at_point(m, point) <= m.n() - 1;
}

/// A span line: rectilinear when the combined Cremona direction has no zero
/// entry, otherwise the Plücker point of a line parallel to a coordinate
/// hyperplane (or at infinity).
template <typename Scalar>
using SpanLine = std::variant<Line<Scalar>, PlueckerPoint<Scalar>>;

/// Affine combination of the generators' Cremona coordinates, each scaled to
/// unit w-sum. With require_ascending, a negative combined w is an error.
template <typename Scalar>
SpanLine<Scalar> span_line_at(const std::vector<Line<Scalar>>& lines, const std::vector<Scalar>& weights,
                              bool require_ascending = false) {
  if (lines.empty()) throw PreconditionError("span needs at least one line");
  if (lines.size() != weights.size()) throw DimensionError("one weight per line required");
  Scalar total(0);
  for (const auto& t : weights) total += t;
  if (total != Scalar(1)) throw PreconditionError("span weights must sum to 1");
  const Eigen::Index d = lines.front().dim();
  Vec<Scalar> y = Vec<Scalar>::Zero(d), w = Vec<Scalar>::Zero(d);
  for (std::size_t j = 0; j < lines.size(); ++j) {
    if (lines[j].dim() != d) throw DimensionError("lines differ in dimension");
    const auto [yj, wj] = detail::unit_cremona(lines[j]);
    y += weights[j] * yj;
    w += weights[j] * wj;
  }
  bool zero = false;
  for (Eigen::Index i = 0; i < d; ++i) {
    if (w(i) == Scalar(0)) zero = true;
    else if (w(i) < Scalar(0) && require_ascending) throw PreconditionError("combined Cremona direction has a negative entry");
  }
  if (zero) return cremona_transform(to_q_point(y, w));
  return Line<Scalar>(y.cwiseQuotient(w), w.cwiseInverse());
}

/// For each axis i, the span line of the pair with w_i = 0: a line parallel
/// to the i-th axis meeting both generators.
template <typename Scalar>
std::vector<PlueckerPoint<Scalar>> axis_parallel_rulings(const Line<Scalar>& l1, const Line<Scalar>& l2) {
  build_span_matrix<Scalar>({l1, l2});
  const auto [y1, w1] = detail::unit_cremona(l1);
  const auto [y2, w2] = detail::unit_cremona(l2);
  std::string bad;
  for (Eigen::Index i = 0; i < l1.dim(); ++i) {
    if (w1(i) == w2(i)) bad += (bad.empty() ? "" : ", ") + std::to_string(i);
  }
  if (!bad.empty()) throw PreconditionError("no unique axis-parallel ruling for axes " + bad);
  std::vector<PlueckerPoint<Scalar>> out;
  for (Eigen::Index i = 0; i < l1.dim(); ++i) {
    const Scalar t = w1(i) / (w1(i) - w2(i));
    const Vec<Scalar> y = (Scalar(1) - t) * y1 + t * y2;
    const Vec<Scalar> w = (Scalar(1) - t) * w1 + t * w2;
    out.push_back(cremona_transform(to_q_point(y, w)));
  }
  return out;
}

/// {z : z_i = value_i, z_j = value_j}.
template <typename Scalar>
struct Codim2Plane {
  Eigen::Index i = 0, j = 0;
  Scalar value_i, value_j;

  bool meets(const Line<Scalar>& line) const {
    const Scalar &xi = line.base()(i), &xj = line.base()(j), &vi = line.dir()(i), &vj = line.dir()(j);
    // (value_i - xi, value_j - xj) must be a multiple of (vi, vj)
    return (value_i - xi) * vj == (value_j - xj) * vi &&
           (vi != Scalar(0) || vj != Scalar(0) || (value_i == xi && value_j == xj));
  }
};

/// The plane through the common point of the lines' projections to the
/// (z_i, z_j) coordinate plane, parallel to every other axis.
template <typename Scalar>
Codim2Plane<Scalar> meet_codim2_plane(const Line<Scalar>& l1, const Line<Scalar>& l2, Eigen::Index i, Eigen::Index j) {
  if (l1.dim() != l2.dim()) throw DimensionError("lines differ in dimension");
  if (i < 0 || j < 0 || i >= l1.dim() || j >= l1.dim() || i == j) throw PreconditionError("invalid coordinate pair");
  const auto &x1 = l1.base(), &v1 = l1.dir(), &x2 = l2.base(), &v2 = l2.dir();
  // s v1 - t v2 = x2 - x1 in coordinates i, j
  const Scalar det = -v1(i) * v2(j) + v2(i) * v1(j);
  if (det == Scalar(0)) throw PreconditionError("projected directions are parallel");
  const Scalar ri = x2(i) - x1(i), rj = x2(j) - x1(j);
  const Scalar s = (ri * -v2(j) + v2(i) * rj) / det;
  return {i, j, x1(i) + s * v1(i), x1(j) + s * v1(j)};
}

struct RulingConditions {
  bool meets_all_planes = false;       // meets every H_ij
  bool projections_concurrent = false;  // all coordinate-plane projections concurrent
  bool in_cremona_span = false;         // Cremona point on the line through the generators'
  bool agree() const {
    return meets_all_planes == projections_concurrent && projections_concurrent == in_cremona_span;
  }
};

template <typename Scalar>
RulingConditions ruling_equivalence_check(const Line<Scalar>& l1, const Line<Scalar>& l2, const Line<Scalar>& l) {
  const Eigen::Index d = l1.dim();
  if (l2.dim() != d || l.dim() != d) throw DimensionError("lines differ in dimension");
  detail::require_generic_direction(l);
  build_span_matrix<Scalar>({l1, l2});
  RulingConditions out;
  out.meets_all_planes = true;
  out.projections_concurrent = true;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j) {
      if (!meet_codim2_plane(l1, l2, i, j).meets(l)) out.meets_all_planes = false;
      // homogeneous coefficients of v_j X - v_i Y = v_j x_i - v_i x_j per line
      Mat<Scalar> eq(3, 3);
      const std::array<const Line<Scalar>*, 3> ls{&l1, &l2, &l};
      for (Eigen::Index r = 0; r < 3; ++r) {
        const auto& x = ls[static_cast<std::size_t>(r)]->base();
        const auto& v = ls[static_cast<std::size_t>(r)]->dir();
        eq(r, 0) = v(j);
        eq(r, 1) = -v(i);
        eq(r, 2) = v(i) * x(j) - v(j) * x(i);
      }
      if (determinant(eq) != Scalar(0)) out.projections_concurrent = false;
    }
  const auto q1 = cremona_transform(line_to_pluecker(l1));
  const auto q2 = cremona_transform(line_to_pluecker(l2));
  const auto q = cremona_transform(line_to_pluecker(l));
  Mat<Scalar> stack(3, q.entries().size());
  stack.row(0) = q1.entries().transpose();
  stack.row(1) = q2.entries().transpose();
  stack.row(2) = q.entries().transpose();
  out.in_cremona_span = exact_rank(stack) <= 2;
  return out;
}

/// Ratio bounds in permuted coordinates (alpha, beta, gamma).
template <typename Scalar>
struct FrameIntervals {
  Scalar beta_lo, beta_hi;    // on beta / alpha
  Scalar gamma_lo, gamma_hi;  // on gamma / alpha
};

template <typename Scalar>
struct MeetingConeDescription {
  Vec<Scalar> apex;
  /// Cone {A yz + B xz + C xy = 0} in coordinates centered at the apex.
  Scalar A, B, C;
  /// Some 2x2 minor of the directions vanishes: the plane of the two lines
  /// contains a coordinate axis, the quadric splits, and the frame hull is
  /// one-dimensional.
  bool degenerate = false;
  /// permutation[k] is the input coordinate used as permuted coordinate k.
  std::array<Eigen::Index, 3> permutation{0, 1, 2};
  std::array<Vec<Scalar>, 2> directions;  // oriented ascending when possible
  /// Present when both directions are ascending up to sign.
  std::optional<FrameIntervals<Scalar>> frame;
  int frame_hull_dimension = 2;
};

template <typename Scalar>
Scalar quadric_value(const MeetingConeDescription<Scalar>& cone, const Vec<Scalar>& dir) {
  if (dir.size() != 3) throw DimensionError("meeting cone lives in R^3");
  return cone.A * dir(1) * dir(2) + cone.B * dir(0) * dir(2) + cone.C * dir(0) * dir(1);
}

/// Symmetric 4x4 matrix of the cone in homogeneous coordinates (z_0, z_1, z_2, z_3).
template <typename Scalar>
Mat<Scalar> quadric_matrix(const MeetingConeDescription<Scalar>& cone) {
  Mat<Scalar> centered = Mat<Scalar>::Zero(3, 3);
  centered(1, 2) = centered(2, 1) = cone.A / Scalar(2);
  centered(0, 2) = centered(2, 0) = cone.B / Scalar(2);
  centered(0, 1) = centered(1, 0) = cone.C / Scalar(2);
  // (X, Y, Z) = (z_1, z_2, z_3) - apex z_0
  Mat<Scalar> t = Mat<Scalar>::Zero(3, 4);
  for (Eigen::Index i = 0; i < 3; ++i) {
    t(i, 0) = -cone.apex(i);
    t(i, i + 1) = Scalar(1);
  }
  return t.transpose() * centered * t;
}

template <typename Scalar>
MeetingConeDescription<Scalar> meeting_cone(const Line<Scalar>& l1, const Line<Scalar>& l2) {
  if (l1.dim() != 3 || l2.dim() != 3) throw PreconditionError("meeting cone needs d = 3");
  detail::require_generic_direction(l1);
  detail::require_generic_direction(l2);
  Mat<Scalar> dirs(2, 3);
  dirs.row(0) = l1.dir().transpose();
  dirs.row(1) = l2.dir().transpose();
  if (exact_rank(dirs) < 2) throw PreconditionError("lines are parallel or equal");
  if (!lines_meet_affine(l1, l2)) throw PreconditionError("lines do not meet");
  MeetingConeDescription<Scalar> cone;
  {
    // x1 + s v1 = x2 + t v2; solve on the first coordinate pair with a nonzero minor.
    for (Eigen::Index i = 0; i < 3 && cone.apex.size() == 0; ++i)
      for (Eigen::Index j = i + 1; j < 3 && cone.apex.size() == 0; ++j) {
        const Scalar det = l2.dir()(i) * l1.dir()(j) - l1.dir()(i) * l2.dir()(j);
        if (det == Scalar(0)) continue;
        const Scalar ri = l2.base()(i) - l1.base()(i), rj = l2.base()(j) - l1.base()(j);
        const Scalar s = (-ri * l2.dir()(j) + l2.dir()(i) * rj) / det;
        cone.apex = l1.point_at(s);
      }
  }
  const Scalar a = l1.dir()(0), b = l1.dir()(1), c = l1.dir()(2);
  const Scalar a2 = l2.dir()(0), b2 = l2.dir()(1), c2 = l2.dir()(2);
  cone.A = a * a2 * (c * b2 - b * c2);
  cone.B = -b * b2 * (c * a2 - a * c2);
  cone.C = c * c2 * (b * a2 - a * b2);
  cone.degenerate = (c * b2 - b * c2) == Scalar(0) || (c * a2 - a * c2) == Scalar(0) || (b * a2 - a * b2) == Scalar(0);
  cone.frame_hull_dimension = cone.degenerate ? 1 : 2;

  auto orient = [](const Vec<Scalar>& v) -> std::optional<Vec<Scalar>> {
    if (is_ascending(v)) return v;
    if (is_ascending(Vec<Scalar>(-v))) return Vec<Scalar>(-v);
    return std::nullopt;
  };
  const auto u1 = orient(l1.dir()), u2 = orient(l2.dir());
  cone.directions = {u1.value_or(l1.dir()), u2.value_or(l2.dir())};
  if (!u1 || !u2) return cone;

  const auto& p = *u1;
  const auto& r = *u2;
  auto minor = [&](Eigen::Index s, Eigen::Index t) { return p(s) * r(t) - r(s) * p(t); };
  // products of the two minors sharing a lead coordinate, for the cyclic shifts
  const std::array<std::array<Eigen::Index, 3>, 3> shifts{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  std::optional<std::size_t> pick;
  for (std::size_t k = 0; k < 3 && !pick; ++k) {
    const auto& s = shifts[k];
    if (minor(s[0], s[1]) * minor(s[0], s[2]) == Scalar(0)) pick = k;
  }
  for (std::size_t k = 0; k < 3 && !pick; ++k) {
    const auto& s = shifts[k];
    if (minor(s[0], s[1]) * minor(s[0], s[2]) < Scalar(0)) pick = k;
  }
  if (!pick) throw InternalError("no cyclic shift gives a non-positive minor product");
  auto perm = shifts[*pick];
  if (!(minor(perm[0], perm[1]) <= Scalar(0) && Scalar(0) <= minor(perm[0], perm[2]))) std::swap(perm[1], perm[2]);
  cone.permutation = perm;
  const Scalar &pa = p(perm[0]), &pb = p(perm[1]), &pc = p(perm[2]);
  const Scalar &ra = r(perm[0]), &rb = r(perm[1]), &rc = r(perm[2]);
  cone.frame = FrameIntervals<Scalar>{rb / ra, pb / pa, pc / pa, rc / ra};
  if (cone.frame->beta_lo > cone.frame->beta_hi || cone.frame->gamma_lo > cone.frame->gamma_hi) {
    throw InternalError("frame hull intervals are reversed after permutation");
  }
  return cone;
}

template <typename Scalar>
bool frame_hull_membership_meeting(const MeetingConeDescription<Scalar>& cone, const Line<Scalar>& query) {
  if (query.dim() != 3) throw DimensionError("meeting cone lives in R^3");
  Mat<Scalar> m(3, 2);
  m.col(0) = query.dir();
  m.col(1) = cone.apex - query.base();
  if (exact_rank(m) != 1) throw PreconditionError("query line misses the cone apex");
  if (!cone.frame) throw PreconditionError("frame hull is described only for ascending generators");
  const Scalar& alpha = query.dir()(cone.permutation[0]);
  if (alpha == Scalar(0)) return false;
  const Scalar beta = query.dir()(cone.permutation[1]) / alpha;
  const Scalar gamma = query.dir()(cone.permutation[2]) / alpha;
  const auto& f = *cone.frame;
  return f.beta_lo <= beta && beta <= f.beta_hi && f.gamma_lo <= gamma && gamma <= f.gamma_hi;
}

/// n - rank - 1 at the point, for n = d generators: the dimension of the
/// family of span lines through it.
template <typename Scalar>
long secancy_defect_locus_check(const std::vector<Line<Scalar>>& lines, const Vec<Scalar>& point) {
  const auto m = build_span_matrix(lines);
  if (m.n() != m.dim()) throw PreconditionError("secancy check needs n = d generators");
  return static_cast<long>(m.n() - rank_at_point(m, point) - 1);
}

/// Homogeneous point z with M(z) mu = 0 (a point of Z(G) when n = d), or
/// nullopt when the linear system does not single out one point.
template <typename Scalar>
std::optional<Vec<Scalar>> z_locus_point(const SpanMatrix<Scalar>& m, const Vec<Scalar>& mu) {
  if (mu.size() != m.dim() - 1) throw DimensionError("mu needs d - 1 entries");
  Mat<Scalar> sys(m.n(), m.dim() + 1);
  for (Eigen::Index k = 0; k <= m.dim(); ++k) sys.col(k) = m.coefficient(k) * mu;
  const auto ker = null_space(sys);
  if (ker.cols() != 1) return std::nullopt;
  return Vec<Scalar>(ker.col(0));
}

/// Monic gcd of the maximal minors of M along x + t v: its roots are the
/// parameters where the line meets the rank-drop locus.
template <typename Scalar>
Poly<Scalar> secant_polynomial(const SpanMatrix<Scalar>& m, const Line<Scalar>& line) {
  const Eigen::Index k = std::min(m.n(), m.dim() - 1);
  // minors have degree <= k in t; sample at t = 0..k
  std::vector<std::vector<Scalar>> samples;
  for (Eigen::Index t = 0; t <= k; ++t) {
    const auto minors = maximal_minors(m.evaluate(Scalar(1), line.point_at(Scalar(static_cast<long>(t)))));
    if (samples.empty()) samples.resize(minors.size());
    for (std::size_t r = 0; r < minors.size(); ++r) samples[r].push_back(minors[r]);
  }
  Poly<Scalar> g;
  for (const auto& s : samples) g = poly_gcd(g, poly_interpolate(s));
  return g;
}

/// Total degree of det M(z) as a polynomial in z_0..z_d (square M only).
template <typename Scalar>
long scroll_determinant_degree(const SpanMatrix<Scalar>& m) {
  if (m.n() != m.dim() - 1) throw PreconditionError("determinant degree needs n = d - 1");
  const auto nvars = static_cast<std::size_t>(m.dim() + 1);
  const auto deg = static_cast<std::size_t>(m.n());
  std::function<Scalar(const std::vector<Scalar>&)> f = [&](const std::vector<Scalar>& z) {
    Vec<Scalar> zz(static_cast<Eigen::Index>(z.size()));
    for (std::size_t i = 0; i < z.size(); ++i) zz(static_cast<Eigen::Index>(i)) = z[i];
    return determinant(m.evaluate(zz));
  };
  return tensor_total_degree(tensor_interpolate(f, nvars, deg), nvars, deg);
}

}  // namespace tk

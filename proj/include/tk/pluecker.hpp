#pragma once

// Plücker coordinates of lines in P^d and the Cremona transformation.
//
// Homogeneous coordinates are z_0, z_1, ..., z_d with z_0 the homogenizing
// one, so the affine point x is (1, x) and the direction v is (0, v). The line
// through them has p_ab = X_a V_b - X_b V_a for 0 <= a < b <= d:
//
//   p_0i = v_i,   p_ij = x_i v_j - x_j v_i.
//
// Entries are stored as 01, ..., 0d, 12, 13, ..., (d-1)d. Affine indices in
// this module are therefore 1-based, matching the z_0 convention.

#include "tk/cremona.hpp"
#include "tk/error.hpp"
#include "tk/geometry.hpp"
#include "tk/linalg.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace tk {

enum class Chart { P, Q };

inline Chart opposite(Chart c) { return c == Chart::P ? Chart::Q : Chart::P; }

template <typename Scalar>
class PlueckerPoint {
 public:
  PlueckerPoint(Eigen::Index d, Chart chart, Vec<Scalar> entries)
      : d_(d), chart_(chart), e_(std::move(entries)) {
    if (d < 2) throw PreconditionError("Pluecker space needs d >= 2");
    if (e_.size() != size_for(d)) throw DimensionError("Pluecker entry count does not match d");
    if (e_.isZero()) throw PreconditionError("Pluecker point must be nonzero");
  }

  static Eigen::Index size_for(Eigen::Index d) { return d + d * (d - 1) / 2; }

  /// Storage slot of p_ij, 0 <= i < j <= d.
  static Eigen::Index index_of(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
    if (!(0 <= i && i < j && j <= d)) throw PreconditionError("Pluecker index needs 0 <= i < j <= d");
    if (i == 0) return j - 1;
    Eigen::Index k = d;
    for (Eigen::Index a = 1; a < i; ++a) k += d - a;
    return k + (j - i - 1);
  }

  Eigen::Index dim() const { return d_; }
  Chart chart() const { return chart_; }
  const Vec<Scalar>& entries() const { return e_; }

  const Scalar& at(Eigen::Index i, Eigen::Index j) const { return e_(index_of(d_, i, j)); }

  /// Antisymmetric extension: p(i, j) = -p(j, i), p(i, i) = 0.
  Scalar operator()(Eigen::Index i, Eigen::Index j) const {
    if (i == j) return Scalar(0);
    return i < j ? at(i, j) : Scalar(-at(j, i));
  }

  /// The (d+1) x (d+1) antisymmetric matrix of the entries.
  Mat<Scalar> matrix() const {
    Mat<Scalar> m(d_ + 1, d_ + 1);
    for (Eigen::Index i = 0; i <= d_; ++i)
      for (Eigen::Index j = 0; j <= d_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

 private:
  Eigen::Index d_;
  Chart chart_;
  Vec<Scalar> e_;
};

/// Key text of slot (i, j): "ij" when d <= 9, "i,j" otherwise.
inline std::string pluecker_key(Eigen::Index d, Eigen::Index i, Eigen::Index j) {
  if (d <= 9) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "," + std::to_string(j);
}

/// Index pairs in storage order.
inline std::vector<std::pair<Eigen::Index, Eigen::Index>> pluecker_pairs(Eigen::Index d) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  for (Eigen::Index j = 1; j <= d; ++j) out.emplace_back(0, j);
  for (Eigen::Index i = 1; i <= d; ++i)
    for (Eigen::Index j = i + 1; j <= d; ++j) out.emplace_back(i, j);
  return out;
}

template <typename Scalar>
PlueckerPoint<Scalar> line_to_pluecker(const Line<Scalar>& line) {
  const Eigen::Index d = line.dim();
  const auto& x = line.base();
  const auto& v = line.dir();
  Vec<Scalar> e(PlueckerPoint<Scalar>::size_for(d));
  for (Eigen::Index i = 1; i <= d; ++i) e(PlueckerPoint<Scalar>::index_of(d, 0, i)) = v(i - 1);
  for (Eigen::Index i = 1; i <= d; ++i)
    for (Eigen::Index j = i + 1; j <= d; ++j)
      e(PlueckerPoint<Scalar>::index_of(d, i, j)) = x(i - 1) * v(j - 1) - x(j - 1) * v(i - 1);
  return PlueckerPoint<Scalar>(d, Chart::P, std::move(e));
}

/// Three-term and four-term quadratic relations.
template <typename Scalar>
bool check_pluecker_relations(const PlueckerPoint<Scalar>& p) {
  if (p.chart() != Chart::P) throw PreconditionError("Pluecker relations apply to the p chart");
  const Eigen::Index d = p.dim();
  for (Eigen::Index i = 1; i <= d; ++i)
    for (Eigen::Index j = i + 1; j <= d; ++j)
      for (Eigen::Index k = j + 1; k <= d; ++k) {
        if (p.at(0, i) * p.at(j, k) - p.at(0, j) * p.at(i, k) + p.at(0, k) * p.at(i, j) != Scalar(0))
          return false;
        for (Eigen::Index l = k + 1; l <= d; ++l) {
          if (p.at(i, j) * p.at(k, l) - p.at(i, k) * p.at(j, l) + p.at(i, l) * p.at(j, k) != Scalar(0))
            return false;
        }
      }
  return true;
}

/// Homogeneous points on the line (rows of the result, length d + 1).
template <typename Scalar>
Mat<Scalar> points_on(const PlueckerPoint<Scalar>& p) {
  if (p.chart() != Chart::P) throw PreconditionError("points_on needs a p-chart point");
  if (!check_pluecker_relations(p)) throw PreconditionError("point is not on the Grassmannian");
  return row_space(p.matrix());
}

/// Affine line of a p-chart point with some p_0i != 0.
template <typename Scalar>
Line<Scalar> pluecker_to_line(const PlueckerPoint<Scalar>& p) {
  if (!check_pluecker_relations(p)) throw PreconditionError("point is not on the Grassmannian");
  const Eigen::Index d = p.dim();
  Vec<Scalar> v(d);
  Eigen::Index j = -1;
  for (Eigen::Index i = 1; i <= d; ++i) {
    v(i - 1) = p.at(0, i);
    if (j < 0 && v(i - 1) != Scalar(0)) j = i;
  }
  if (j < 0) throw PreconditionError("line lies at infinity");
  // Column j of the matrix is v_j X - x_j V, an affine point after division by v_j.
  Vec<Scalar> x(d);
  for (Eigen::Index i = 1; i <= d; ++i) x(i - 1) = p(i, j) / v(j - 1);
  return Line<Scalar>(std::move(x), std::move(v));
}

template <typename Scalar>
bool projectively_equal(const PlueckerPoint<Scalar>& a, const PlueckerPoint<Scalar>& b) {
  if (a.dim() != b.dim() || a.chart() != b.chart()) return false;
  Eigen::Index k = 0;
  while (a.entries()(k) == Scalar(0)) ++k;
  const Scalar& ak = a.entries()(k);
  const Scalar& bk = b.entries()(k);
  if (bk == Scalar(0)) return false;
  for (Eigen::Index i = 0; i < a.entries().size(); ++i) {
    if (a.entries()(i) * bk != b.entries()(i) * ak) return false;
  }
  return true;
}

struct IndeterminacyClass {
  enum class Kind { None, Lijk, Lij };
  Kind kind = Kind::None;
  /// Affine index triples {i, j, k} with p_0i = p_0j = p_0k = 0 (1-based).
  std::vector<std::array<Eigen::Index, 3>> triples;
  /// Affine index pairs {i, j} with p_ij = p_0i = p_0j = 0 (1-based).
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;

  bool none() const { return kind == Kind::None; }
  std::string describe() const {
    if (none()) return "none";
    std::string out;
    for (const auto& t : triples) {
      out += (out.empty() ? "" : ", ") + std::string("L_") + std::to_string(t[0]) +
             std::to_string(t[1]) + std::to_string(t[2]);
    }
    for (const auto& [i, j] : pairs) {
      out += (out.empty() ? "" : ", ") + std::string("L_") + std::to_string(i) + std::to_string(j);
    }
    return out;
  }
};

/// Membership in the linear subspaces where the homogeneous form of C vanishes.
/// Kind is Lijk if any triple witness exists, else Lij if any pair does.
template <typename Scalar>
IndeterminacyClass classify_indeterminacy(const PlueckerPoint<Scalar>& p) {
  const Eigen::Index d = p.dim();
  IndeterminacyClass out;
  for (Eigen::Index i = 1; i <= d; ++i)
    for (Eigen::Index j = i + 1; j <= d; ++j) {
      if (p.at(0, i) != Scalar(0) || p.at(0, j) != Scalar(0)) continue;
      if (p.at(i, j) == Scalar(0)) out.pairs.emplace_back(i, j);
      for (Eigen::Index k = j + 1; k <= d; ++k) {
        if (p.at(0, k) == Scalar(0)) out.triples.push_back({i, j, k});
      }
    }
  if (!out.triples.empty()) out.kind = IndeterminacyClass::Kind::Lijk;
  else if (!out.pairs.empty()) out.kind = IndeterminacyClass::Kind::Lij;
  return out;
}

/// The homogeneous polynomial form q_0i = prod_{j != i} p_0j,
/// q_ij = p_ij prod_{k != i, j} p_0k. Maps either chart to the other.
template <typename Scalar>
PlueckerPoint<Scalar> cremona_transform(const PlueckerPoint<Scalar>& p) {
  const Eigen::Index d = p.dim();
  Vec<Scalar> e(PlueckerPoint<Scalar>::size_for(d));
  auto prod_except = [&](Eigen::Index a, Eigen::Index b) {
    Scalar r(1);
    for (Eigen::Index k = 1; k <= d; ++k) {
      if (k != a && k != b) r *= p.at(0, k);
    }
    return r;
  };
  for (Eigen::Index i = 1; i <= d; ++i) e(PlueckerPoint<Scalar>::index_of(d, 0, i)) = prod_except(i, i);
  for (Eigen::Index i = 1; i <= d; ++i)
    for (Eigen::Index j = i + 1; j <= d; ++j)
      e(PlueckerPoint<Scalar>::index_of(d, i, j)) = p.at(i, j) * prod_except(i, j);
  if (e.isZero()) {
    throw PreconditionError("Cremona transformation undefined at point in " +
                            classify_indeterminacy(p).describe());
  }
  return PlueckerPoint<Scalar>(d, opposite(p.chart()), std::move(e));
}

/// The rational form 1/p_0i, p_ij/(p_0i p_0j). Needs every p_0i != 0.
template <typename Scalar>
PlueckerPoint<Scalar> cremona_transform_rational(const PlueckerPoint<Scalar>& p) {
  const Eigen::Index d = p.dim();
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (p.at(0, i) == Scalar(0)) throw PreconditionError("rational Cremona form needs all p_0i nonzero");
  }
  Vec<Scalar> e(PlueckerPoint<Scalar>::size_for(d));
  for (Eigen::Index i = 1; i <= d; ++i) e(PlueckerPoint<Scalar>::index_of(d, 0, i)) = Scalar(1) / p.at(0, i);
  for (Eigen::Index i = 1; i <= d; ++i)
    for (Eigen::Index j = i + 1; j <= d; ++j)
      e(PlueckerPoint<Scalar>::index_of(d, i, j)) = p.at(i, j) / (p.at(0, i) * p.at(0, j));
  return PlueckerPoint<Scalar>(d, opposite(p.chart()), std::move(e));
}

/// q_jk - q_ik + q_ij = 0 for all 1 <= i < j < k <= d.
template <typename Scalar>
bool check_lg_relations(const PlueckerPoint<Scalar>& q) {
  if (q.chart() != Chart::Q) throw PreconditionError("LG relations apply to the q chart");
  const Eigen::Index d = q.dim();
  for (Eigen::Index i = 1; i <= d; ++i)
    for (Eigen::Index j = i + 1; j <= d; ++j)
      for (Eigen::Index k = j + 1; k <= d; ++k) {
        if (q.at(j, k) - q.at(i, k) + q.at(i, j) != Scalar(0)) return false;
      }
  return true;
}

/// Image of a point with exactly one vanishing p_0i. Only q_0i and the
/// entries q(j, i), j != i, survive, and the latter are all equal.
template <typename Scalar>
PlueckerPoint<Scalar> contraction_image(const PlueckerPoint<Scalar>& p) {
  const Eigen::Index d = p.dim();
  Eigen::Index zero = -1;
  for (Eigen::Index i = 1; i <= d; ++i) {
    if (p.at(0, i) != Scalar(0)) continue;
    if (zero >= 0) throw PreconditionError("contraction needs exactly one vanishing p_0i");
    zero = i;
  }
  if (zero < 0) throw PreconditionError("contraction needs exactly one vanishing p_0i");
  auto q = cremona_transform(p);
  const Scalar common = q(1 == zero ? 2 : 1, zero);
  for (const auto& [a, b] : pluecker_pairs(d)) {
    const bool kept = (a == 0 && b == zero) || (a != 0 && (a == zero || b == zero));
    if (!kept && q.at(a, b) != Scalar(0)) throw InternalError("contraction image has unexpected support");
  }
  for (Eigen::Index j = 1; j <= d; ++j) {
    if (j != zero && q(j, zero) != common) throw InternalError("contraction image entries differ");
  }
  return q;
}

/// Whether two lines (p-chart, on the Grassmannian) meet in P^d, counting
/// parallel lines as meeting at infinity.
template <typename Scalar>
bool lines_meet(const PlueckerPoint<Scalar>& a, const PlueckerPoint<Scalar>& b) {
  if (a.dim() != b.dim()) throw DimensionError("lines differ in dimension");
  Mat<Scalar> pa = points_on(a);
  Mat<Scalar> pb = points_on(b);
  Mat<Scalar> stacked(pa.rows() + pb.rows(), pa.cols());
  stacked << pa, pb;
  return exact_rank(stacked) <= 3;
}

/// Whether two affine lines meet at a finite point.
template <typename Scalar>
bool lines_meet_affine(const Line<Scalar>& a, const Line<Scalar>& b) {
  if (a.dim() != b.dim()) throw DimensionError("lines differ in dimension");
  // x_a + s v_a = x_b + t v_b solvable: rank [v_a, -v_b] == rank [v_a, -v_b | x_b - x_a].
  Mat<Scalar> m(a.dim(), 3);
  m.col(0) = a.dir();
  m.col(1) = -b.dir();
  m.col(2) = b.base() - a.base();
  return exact_rank(m.leftCols(2)) == exact_rank(m);
}

/// q-chart point with q_0i = w_i, q_ij = y_i - y_j. Gauge choices of (y, w)
/// change it only by a global scale.
template <typename Scalar>
PlueckerPoint<Scalar> to_q_point(const Vec<Scalar>& y, const Vec<Scalar>& w) {
  if (y.size() != w.size()) throw DimensionError("y and w differ in dimension");
  const Eigen::Index d = y.size();
  Vec<Scalar> e(PlueckerPoint<Scalar>::size_for(d));
  for (Eigen::Index i = 1; i <= d; ++i) e(PlueckerPoint<Scalar>::index_of(d, 0, i)) = w(i - 1);
  for (Eigen::Index i = 1; i <= d; ++i)
    for (Eigen::Index j = i + 1; j <= d; ++j)
      e(PlueckerPoint<Scalar>::index_of(d, i, j)) = y(i - 1) - y(j - 1);
  return PlueckerPoint<Scalar>(d, Chart::Q, std::move(e));
}

template <typename Scalar>
PlueckerPoint<Scalar> to_q_point(const CremonaLine<Scalar>& c) {
  return to_q_point(c.y(), c.w());
}

}  // namespace tk

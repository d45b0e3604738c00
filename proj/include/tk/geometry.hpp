#pragma once

#include "tk/error.hpp"
#include "tk/linalg.hpp"
#include "tk/rational.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace tk {

/// Axis-parallel box [a_1, b_1] x ... x [a_d, b_d]. Degenerate intervals
/// (a_i == b_i) are allowed.
template <typename Scalar>
class Box {
 public:
  Box(Vec<Scalar> min_corner, Vec<Scalar> max_corner)
      : lo_(std::move(min_corner)), hi_(std::move(max_corner)) {
    if (lo_.size() != hi_.size()) throw DimensionError("box corners have different dimensions");
    if (lo_.size() == 0) throw PreconditionError("box must have positive dimension");
    for (Eigen::Index i = 0; i < lo_.size(); ++i) {
      if (lo_(i) > hi_(i)) throw PreconditionError("box min corner exceeds max corner");
    }
  }

  /// The degenerate box consisting of a single point.
  static Box point(const Vec<Scalar>& p) { return Box(p, p); }

  const Vec<Scalar>& min_corner() const { return lo_; }
  const Vec<Scalar>& max_corner() const { return hi_; }
  Eigen::Index dim() const { return lo_.size(); }

  bool contains(const Vec<Scalar>& p) const {
    for (Eigen::Index i = 0; i < dim(); ++i) {
      if (p(i) < lo_(i) || p(i) > hi_(i)) return false;
    }
    return true;
  }

  friend bool operator==(const Box& a, const Box& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

 private:
  Vec<Scalar> lo_;
  Vec<Scalar> hi_;
};

/// Line { base + t * dir : t real } in rectilinear coordinates.
template <typename Scalar>
class Line {
 public:
  Line(Vec<Scalar> base, Vec<Scalar> dir) : x_(std::move(base)), v_(std::move(dir)) {
    if (x_.size() != v_.size()) throw DimensionError("line base and direction differ in dimension");
    if (x_.size() == 0) throw PreconditionError("line must have positive dimension");
    if (v_.isZero()) throw PreconditionError("line direction must be nonzero");
  }

  const Vec<Scalar>& base() const { return x_; }
  const Vec<Scalar>& dir() const { return v_; }
  Eigen::Index dim() const { return x_.size(); }
  Vec<Scalar> point_at(const Scalar& t) const { return x_ + t * v_; }

  friend bool operator==(const Line& a, const Line& b) { return a.x_ == b.x_ && a.v_ == b.v_; }

 private:
  Vec<Scalar> x_;
  Vec<Scalar> v_;
};

/// Orthant class at infinity, defined modulo a global sign. Stored in the
/// canonical representative whose first entry is +1.
class SignClass {
 public:
  explicit SignClass(std::vector<int> signs) : s_(std::move(signs)) {
    if (s_.empty()) throw PreconditionError("sign class must have positive dimension");
    for (int e : s_) {
      if (e != 1 && e != -1) throw PreconditionError("sign entries must be +1 or -1");
    }
    if (s_.front() == -1) {
      for (int& e : s_) e = -e;
    }
  }

  static SignClass ascending(Eigen::Index d) {
    return SignClass(std::vector<int>(static_cast<std::size_t>(d), 1));
  }

  /// Parses "+-+" style strings.
  static SignClass parse(std::string_view text) {
    std::vector<int> s;
    for (char c : text) {
      if (c == '+') s.push_back(1);
      else if (c == '-') s.push_back(-1);
      else throw PreconditionError("sign string must consist of '+' and '-'");
    }
    return SignClass(std::move(s));
  }

  Eigen::Index dim() const { return static_cast<Eigen::Index>(s_.size()); }
  int operator[](Eigen::Index i) const { return s_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& signs() const { return s_; }
  bool is_ascending() const {
    return std::all_of(s_.begin(), s_.end(), [](int e) { return e == 1; });
  }

  std::string str() const {
    std::string out;
    for (int e : s_) out.push_back(e > 0 ? '+' : '-');
    return out;
  }

  friend bool operator==(const SignClass&, const SignClass&) = default;
  friend auto operator<=>(const SignClass& a, const SignClass& b) {
    // '+' orders before '-'
    return b.s_ <=> a.s_;
  }

 private:
  std::vector<int> s_;
};

/// The 2^(d-1) canonical sign classes, '+' before '-' lexicographically.
inline std::vector<SignClass> all_sign_classes(Eigen::Index d) {
  std::vector<SignClass> out;
  const std::size_t count = std::size_t{1} << (d - 1);
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> s(static_cast<std::size_t>(d), 1);
    for (Eigen::Index i = 1; i < d; ++i) {
      if (mask >> (d - 1 - i) & 1U) s[static_cast<std::size_t>(i)] = -1;
    }
    out.emplace_back(std::move(s));
  }
  return out;
}

template <typename Scalar>
bool is_weakly_ascending(const Vec<Scalar>& v) {
  return !v.isZero() && (v.array() >= Scalar(0)).all();
}

template <typename Scalar>
bool is_ascending(const Vec<Scalar>& v) {
  return (v.array() > Scalar(0)).all();
}

/// Indices i with v_i != 0.
template <typename Scalar>
std::vector<Eigen::Index> support_of(const Vec<Scalar>& v) {
  std::vector<Eigen::Index> s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != Scalar(0)) s.push_back(i);
  }
  return s;
}

/// Every canonical sign class eps such that eps_i * v_i are all >= 0 or all <= 0.
template <typename Scalar>
std::vector<SignClass> line_sign(const Line<Scalar>& line) {
  std::vector<SignClass> out;
  for (auto& eps : all_sign_classes(line.dim())) {
    bool nonneg = true, nonpos = true;
    for (Eigen::Index i = 0; i < line.dim(); ++i) {
      const int s = eps[i] * sign_of(line.dir()(i));
      if (s < 0) nonneg = false;
      if (s > 0) nonpos = false;
    }
    if (nonneg || nonpos) out.push_back(std::move(eps));
  }
  return out;
}

template <typename Scalar>
Vec<Scalar> reflect(const Vec<Scalar>& v, const SignClass& eps) {
  if (v.size() != eps.dim()) throw DimensionError("sign class dimension mismatch");
  Vec<Scalar> out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (eps[i] < 0) out(i) = -out(i);
  }
  return out;
}

/// Negates the coordinates where eps is -1 and re-sorts the corners.
template <typename Scalar>
Box<Scalar> reflect(const Box<Scalar>& box, const SignClass& eps) {
  Vec<Scalar> lo = reflect(box.min_corner(), eps);
  Vec<Scalar> hi = reflect(box.max_corner(), eps);
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (lo(i) > hi(i)) std::swap(lo(i), hi(i));
  }
  return Box<Scalar>(std::move(lo), std::move(hi));
}

/// Negates the coordinates where eps is -1; a direction that lands in the
/// non-positive orthant is then reversed so lines of sign eps come out weakly
/// ascending. On point sets this is an involution.
template <typename Scalar>
Line<Scalar> reflect(const Line<Scalar>& line, const SignClass& eps) {
  Vec<Scalar> v = reflect(line.dir(), eps);
  if ((v.array() <= Scalar(0)).all()) v = -v;
  return Line<Scalar>(reflect(line.base(), eps), std::move(v));
}

/// Exact box-meeting test for a weakly ascending line.
template <typename Scalar>
bool line_meets_box(const Line<Scalar>& line, const Box<Scalar>& box) {
  if (line.dim() != box.dim()) throw DimensionError("line and box dimensions differ");
  const auto& x = line.base();
  const auto& v = line.dir();
  if (!is_weakly_ascending(v)) throw PreconditionError("line_meets_box needs a weakly ascending line");
  const auto& a = box.min_corner();
  const auto& b = box.max_corner();
  bool first = true;
  Scalar lower, upper;
  for (Eigen::Index i = 0; i < line.dim(); ++i) {
    if (v(i) == Scalar(0)) {
      if (x(i) < a(i) || x(i) > b(i)) return false;
      continue;
    }
    Scalar lo = (a(i) - x(i)) / v(i);
    Scalar hi = (b(i) - x(i)) / v(i);
    if (first) {
      lower = std::move(lo);
      upper = std::move(hi);
      first = false;
    } else {
      if (lo > lower) lower = std::move(lo);
      if (hi < upper) upper = std::move(hi);
    }
  }
  return lower <= upper;
}

/// Any line: reduces to the weakly ascending case through one of its sign
/// classes (every direction has at least one).
template <typename Scalar>
bool line_meets_box_any(const Line<Scalar>& line, const Box<Scalar>& box) {
  const auto eps = line_sign(line).front();
  return line_meets_box(reflect(line, eps), reflect(box, eps));
}

/// True when both lines are the same point set.
template <typename Scalar>
bool same_line(const Line<Scalar>& l1, const Line<Scalar>& l2) {
  if (l1.dim() != l2.dim()) return false;
  Mat<Scalar> m(2, l1.dim());
  m.row(0) = l1.dir().transpose();
  m.row(1) = l2.dir().transpose();
  if (exact_rank(m) != 1) return false;
  m.row(1) = (l2.base() - l1.base()).transpose();
  return exact_rank(m) == 1;
}

}  // namespace tk

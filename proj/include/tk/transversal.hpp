#pragma once

// Line transversals to box families through the Cremona chart.
//
// A weakly ascending line with support S meets the box [a, b] iff
//
//   a_i w_i - y_i <= b_j w_j - y_j   for all i != j in S,
//   a_i <= y_i <= b_i                for all i outside S,
//
// which is linear in (y, w). The pair constraints are jointly homogeneous in
// the on-support (y, w), so the open condition w_i > 0 can be replaced by
// w_i >= 1 without losing solutions; the result is renormalized afterwards.

#include "tk/cremona.hpp"
#include "tk/geometry.hpp"
#include "tk/lp.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tk {

using Support = std::vector<Eigen::Index>;

template <typename Scalar>
Eigen::Index family_dim(const std::vector<Box<Scalar>>& boxes) {
  if (boxes.empty()) throw PreconditionError("box family is empty");
  const Eigen::Index d = boxes.front().dim();
  for (const auto& b : boxes) {
    if (b.dim() != d) throw DimensionError("boxes differ in dimension");
  }
  return d;
}

/// Nonempty subsets of {0..d-1}: full support first, then by decreasing size,
/// lexicographic within a size.
inline std::vector<Support> support_order(Eigen::Index d) {
  std::vector<Support> out;
  for (Eigen::Index k = d; k >= 1; --k) {
    for (auto& s : index_subsets(d, k)) out.push_back(std::move(s));
  }
  return out;
}

/// Variables: y_0..y_{d-1}, then w_s for s in the support (in order).
template <typename Scalar>
LinearProgram<Scalar> build_ascending_lp(const std::vector<Box<Scalar>>& boxes, Eigen::Index d,
                                         const Support& support) {
  if (support.empty()) throw PreconditionError("support must be nonempty");
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(d), -1);
  for (std::size_t k = 0; k < support.size(); ++k) {
    const Eigen::Index i = support[k];
    if (i < 0 || i >= d) throw PreconditionError("support index out of range");
    if (slot[static_cast<std::size_t>(i)] >= 0) throw PreconditionError("support has a repeated index");
    slot[static_cast<std::size_t>(i)] = d + static_cast<Eigen::Index>(k);
  }
  const Eigen::Index n = d + static_cast<Eigen::Index>(support.size());
  LinearProgram<Scalar> lp(n);
  for (auto i : support) {
    Vec<Scalar> row = Vec<Scalar>::Zero(n);
    row(slot[static_cast<std::size_t>(i)]) = Scalar(1);
    lp.add_greater_equal(row, Scalar(1));
  }
  for (const auto& box : boxes) {
    if (box.dim() != d) throw DimensionError("box dimension differs from d");
    const auto& a = box.min_corner();
    const auto& b = box.max_corner();
    for (auto i : support) {
      for (auto j : support) {
        if (i == j) continue;
        // a_i w_i - y_i - b_j w_j + y_j <= 0
        Vec<Scalar> row = Vec<Scalar>::Zero(n);
        row(slot[static_cast<std::size_t>(i)]) = a(i);
        row(i) = Scalar(-1);
        row(slot[static_cast<std::size_t>(j)]) = -b(j);
        row(j) = Scalar(1);
        lp.add_less_equal(std::move(row), Scalar(0));
      }
    }
    for (Eigen::Index i = 0; i < d; ++i) {
      if (slot[static_cast<std::size_t>(i)] >= 0) continue;
      Vec<Scalar> row = Vec<Scalar>::Zero(n);
      row(i) = Scalar(1);
      lp.add_less_equal(row, b(i));
      lp.add_greater_equal(row, a(i));
    }
  }
  return lp;
}

/// Weakly ascending transversal with exactly the given support, or nullopt.
template <typename Scalar>
std::optional<CremonaLine<Scalar>> ascending_transversal(const std::vector<Box<Scalar>>& boxes,
                                                         const Support& support) {
  const Eigen::Index d = family_dim(boxes);
  const auto x = lp_feasible(build_ascending_lp(boxes, d, support));
  if (!x) return std::nullopt;
  Vec<Scalar> y = x->head(d);
  Vec<Scalar> w = Vec<Scalar>::Zero(d);
  for (std::size_t k = 0; k < support.size(); ++k) w(support[k]) = (*x)(d + static_cast<Eigen::Index>(k));
  CremonaLine<Scalar> c(std::move(y), std::move(w));
  const auto line = from_cremona(c);
  for (const auto& box : boxes) {
    if (!line_meets_box(line, box)) throw InternalError("ascending transversal misses a box");
  }
  return c;
}

template <typename Scalar>
struct SignWitness {
  Line<Scalar> line;            // in the input frame
  Support support;              // support of the direction
  SignClass sign;               // sign class the search ran under
};

/// Transversal of sign eps, trying supports in support_order.
template <typename Scalar>
std::optional<SignWitness<Scalar>> sign_transversal_witness(const std::vector<Box<Scalar>>& boxes,
                                                           const SignClass& eps) {
  const Eigen::Index d = eps.dim();
  if (boxes.empty()) {
    return SignWitness<Scalar>{reflect(Line<Scalar>(Vec<Scalar>::Zero(d), Vec<Scalar>::Ones(d)), eps),
                               support_order(d).front(), eps};
  }
  if (family_dim(boxes) != d) throw DimensionError("sign class dimension differs from boxes");
  std::vector<Box<Scalar>> reflected;
  reflected.reserve(boxes.size());
  for (const auto& b : boxes) reflected.push_back(reflect(b, eps));
  for (const auto& s : support_order(d)) {
    if (auto c = ascending_transversal(reflected, s)) {
      return SignWitness<Scalar>{reflect(from_cremona(*c), eps), s, eps};
    }
  }
  return std::nullopt;
}

template <typename Scalar>
std::optional<Line<Scalar>> sign_transversal(const std::vector<Box<Scalar>>& boxes, const SignClass& eps) {
  auto w = sign_transversal_witness(boxes, eps);
  if (!w) return std::nullopt;
  return std::move(w->line);
}

/// Transversal whose direction has every coordinate nonzero with signs eps.
template <typename Scalar>
std::optional<Line<Scalar>> strict_sign_transversal(const std::vector<Box<Scalar>>& boxes,
                                                    const SignClass& eps) {
  const Eigen::Index d = eps.dim();
  if (boxes.empty()) return reflect(Line<Scalar>(Vec<Scalar>::Zero(d), Vec<Scalar>::Ones(d)), eps);
  std::vector<Box<Scalar>> reflected;
  for (const auto& b : boxes) reflected.push_back(reflect(b, eps));
  auto c = ascending_transversal(reflected, support_order(d).front());
  if (!c) return std::nullopt;
  return reflect(from_cremona(*c), eps);
}

template <typename Scalar>
struct TransversalCertificate {
  struct SignRecord {
    SignClass sign;
    bool feasible = false;
    std::size_t supports_tried = 0;  // LPs attributed to this sign, cached or not
  };
  bool feasible = false;
  std::optional<SignWitness<Scalar>> witness;
  std::vector<SignRecord> per_sign;   // in canonical order; stops at the witness sign
  std::size_t lps_solved = 0;         // distinct LPs after caching
};

/// Tries every canonical sign class. An LP depends only on the support S and
/// on eps restricted to S up to a global sign, so (3^d - 1) / 2 LPs suffice.
template <typename Scalar>
TransversalCertificate<Scalar> santalo_transversal(const std::vector<Box<Scalar>>& boxes) {
  const Eigen::Index d = family_dim(boxes);
  if (d < 2) throw PreconditionError("santalo_transversal needs d >= 2");
  TransversalCertificate<Scalar> cert;
  std::map<std::pair<Support, std::vector<int>>, std::optional<Line<Scalar>>> cache;
  const auto supports = support_order(d);
  for (const auto& eps : all_sign_classes(d)) {
    typename TransversalCertificate<Scalar>::SignRecord rec{eps};
    std::vector<Box<Scalar>> reflected;
    for (const auto& s : supports) {
      ++rec.supports_tried;
      std::vector<int> key;
      for (auto i : s) key.push_back(eps[i] * eps[s.front()]);
      auto it = cache.find({s, key});
      if (it == cache.end()) {
        if (reflected.empty()) {
          for (const auto& b : boxes) reflected.push_back(reflect(b, eps));
        }
        ++cert.lps_solved;
        std::optional<Line<Scalar>> found;
        if (auto c = ascending_transversal(reflected, s)) found = reflect(from_cremona(*c), eps);
        it = cache.emplace(std::make_pair(s, key), std::move(found)).first;
      }
      if (it->second) {
        rec.feasible = true;
        cert.per_sign.push_back(rec);
        cert.feasible = true;
        cert.witness = SignWitness<Scalar>{*it->second, s, eps};
        for (const auto& box : boxes) {
          if (!line_meets_box_any(cert.witness->line, box)) throw InternalError("witness misses a box");
        }
        return cert;
      }
    }
    cert.per_sign.push_back(rec);
  }
  return cert;
}

}  // namespace tk

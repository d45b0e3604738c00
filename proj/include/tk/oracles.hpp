#pragma once

// Brute-force cross-checks for the main-path algorithms. Each one is written
// against the defining property directly rather than the fast formulation.

#include "tk/geometry.hpp"
#include "tk/linalg.hpp"
#include "tk/lp.hpp"

#include <array>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace tk::oracles {

/// Parameter range {t : x + t v lies in the box}. Unbounded ends are nullopt.
template <typename Scalar>
struct TInterval {
  std::optional<Scalar> lower;
  std::optional<Scalar> upper;
  bool empty = false;
};

template <typename Scalar>
TInterval<Scalar> t_interval(const Line<Scalar>& line, const Box<Scalar>& box) {
  if (line.dim() != box.dim()) throw DimensionError("line and box dimensions differ");
  TInterval<Scalar> out;
  for (Eigen::Index i = 0; i < line.dim(); ++i) {
    const Scalar& x = line.base()(i);
    const Scalar& v = line.dir()(i);
    const Scalar& a = box.min_corner()(i);
    const Scalar& b = box.max_corner()(i);
    if (v == Scalar(0)) {
      if (x < a || x > b) out.empty = true;
      continue;
    }
    Scalar lo = (a - x) / v;
    Scalar hi = (b - x) / v;
    if (v < Scalar(0)) std::swap(lo, hi);
    if (!out.lower || lo > *out.lower) out.lower = std::move(lo);
    if (!out.upper || hi < *out.upper) out.upper = std::move(hi);
  }
  if (out.lower && out.upper && *out.lower > *out.upper) out.empty = true;
  return out;
}

inline constexpr Eigen::Index kFourierMotzkinMaxVars = 8;
inline constexpr std::size_t kFourierMotzkinMaxRows = 200000;

/// Feasibility by Fourier-Motzkin elimination. Exponential; guarded to
/// kFourierMotzkinMaxVars variables.
template <typename Scalar>
bool fm_eliminate(const LinearProgram<Scalar>& lp) {
  const Eigen::Index n = lp.num_vars();
  if (n > kFourierMotzkinMaxVars) {
    throw PreconditionError("Fourier-Motzkin cost guard: too many variables");
  }
  using Row = std::vector<Scalar>;  // n coefficients followed by rhs, meaning a.x <= b
  std::vector<Row> rows;
  auto push = [&](const Vec<Scalar>& a, const Scalar& b) {
    Row r(static_cast<std::size_t>(n) + 1);
    for (Eigen::Index j = 0; j < n; ++j) r[static_cast<std::size_t>(j)] = a(j);
    r.back() = b;
    rows.push_back(std::move(r));
  };
  for (const auto& c : lp.constraints()) {
    push(c.coeffs, c.rhs);
    if (c.relation == Relation::Equal) push(-c.coeffs, -c.rhs);
  }

  // Scales each row so its first nonzero coefficient has magnitude one and
  // keeps the tightest rhs per coefficient pattern. Returns false on a
  // contradiction 0 <= b < 0.
  auto normalize = [&](std::vector<Row>& in) {
    std::map<Row, Scalar> best;
    for (auto& r : in) {
      Scalar lead(0);
      for (std::size_t j = 0; j + 1 < r.size(); ++j) {
        if (r[j] != Scalar(0)) {
          lead = r[j] < Scalar(0) ? -r[j] : r[j];
          break;
        }
      }
      if (lead == Scalar(0)) {
        if (r.back() < Scalar(0)) return false;
        continue;
      }
      for (auto& e : r) e /= lead;
      Scalar rhs = r.back();
      r.pop_back();
      auto it = best.find(r);
      if (it == best.end()) best.emplace(std::move(r), std::move(rhs));
      else if (rhs < it->second) it->second = std::move(rhs);
    }
    in.clear();
    for (auto& [coeffs, rhs] : best) {
      Row r = coeffs;
      r.push_back(rhs);
      in.push_back(std::move(r));
    }
    return true;
  };

  if (!normalize(rows)) return false;
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  for (Eigen::Index step = 0; step < n; ++step) {
    // eliminate the variable producing the fewest new rows
    std::size_t col = 0, best = 0;
    bool have = false;
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      if (done[j]) continue;
      std::size_t np = 0, nn = 0;
      for (const auto& r : rows) {
        if (r[j] > Scalar(0)) ++np;
        else if (r[j] < Scalar(0)) ++nn;
      }
      if (!have || np * nn < best) {
        col = j;
        best = np * nn;
        have = true;
      }
    }
    done[col] = true;
    std::vector<Row> pos, neg, rest;
    for (auto& r : rows) {
      if (r[col] > Scalar(0)) pos.push_back(std::move(r));
      else if (r[col] < Scalar(0)) neg.push_back(std::move(r));
      else rest.push_back(std::move(r));
    }
    if (pos.size() * neg.size() + rest.size() > kFourierMotzkinMaxRows) {
      throw PreconditionError("Fourier-Motzkin cost guard: too many rows");
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        // p[col] > 0, q[col] < 0: (-q[col]) * p + p[col] * q cancels the column.
        Row r(p.size());
        const Scalar fp = -q[col];
        const Scalar fq = p[col];
        for (std::size_t j = 0; j < p.size(); ++j) r[j] = fp * p[j] + fq * q[j];
        r[col] = Scalar(0);
        rest.push_back(std::move(r));
      }
    }
    rows = std::move(rest);
    if (!normalize(rows)) return false;
  }
  return true;
}

/// det of the matrix whose rows are the coordinatewise reciprocals of three
/// directions in R^3, multiplied by the product of all nine coordinates. Zero
/// exactly when the reciprocal vectors are linearly dependent.
template <typename Scalar>
Scalar reciprocal_collinearity(const std::array<Vec<Scalar>, 3>& dirs) {
  Mat<Scalar> r(3, 3);
  Scalar clear(1);
  for (Eigen::Index k = 0; k < 3; ++k) {
    const auto& d = dirs[static_cast<std::size_t>(k)];
    if (d.size() != 3) throw DimensionError("reciprocal_collinearity works in R^3");
    for (Eigen::Index i = 0; i < 3; ++i) {
      if (d(i) == Scalar(0)) throw PreconditionError("direction coordinates must be nonzero");
      r(k, i) = Scalar(1) / d(i);
      clear *= d(i);
    }
  }
  return determinant(r) * clear;
}

/// Randomized search for a transversal to the boxes: lines through random
/// points of two random boxes, screened in floating point and confirmed
/// exactly. A hit is a certificate; a miss proves nothing.
std::optional<Line<Rat>> sampled_transversal_search(const std::vector<Box<Rat>>& boxes,
                                                    std::size_t samples, std::uint64_t seed);

}  // namespace tk::oracles

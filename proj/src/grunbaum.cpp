#include "tk/grunbaum.hpp"

#include "tk/lp.hpp"
#include "tk/transversal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace tk {

namespace {

constexpr long kMaxSlope = 50;
constexpr int kClimbSteps = 2000;

// Centre and radius of the three squares of A, in tenths.
using Params = std::array<long, 9>;

Box<Rat> square(long cx, long cy, long r) {
  const VecQ c = vq({Rat(cx, 10), Rat(cy, 10)});
  const VecQ h = VecQ::Constant(2, Rat(r, 10));
  return {c - h, c + h};
}

std::vector<Box<Rat>> half_family(const Params& p) {
  std::vector<Box<Rat>> a;
  for (std::size_t k = 0; k < 3; ++k) a.push_back(square(p[3 * k], p[3 * k + 1], p[3 * k + 2]));
  return a;
}

std::vector<Box<Rat>> mirrored(const std::vector<Box<Rat>>& a) {
  std::vector<Box<Rat>> d;
  for (const auto& b : a) {
    d.emplace_back(vq({-b.max_corner()(0), b.min_corner()(1)}), vq({-b.min_corner()(0), b.max_corner()(1)}));
  }
  return d;
}

Rat score(const Params& p) {
  const auto a = half_family(p);
  const auto d = mirrored(a);
  Rat worst = ascending_slack(a);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) worst = std::min(worst, Rat(-ascending_slack({a[i], a[j]})));
    auto five = d;
    for (std::size_t k = 0; k < 3; ++k) {
      if (k != i) five.push_back(a[k]);
    }
    worst = std::min(worst, Rat(-ascending_slack(five)));
  }
  return worst / Rat(p[2] + p[5] + p[8], 10);
}

std::optional<GrunbaumInstance> certify_candidate(const Params& p, std::uint64_t attempts) {
  auto squares = half_family(p);
  for (auto& b : mirrored(squares)) squares.push_back(std::move(b));
  if (santalo_transversal(squares).feasible) return std::nullopt;
  std::vector<Line<Rat>> stabbers;
  for (std::size_t j = 0; j < 6; ++j) {
    std::vector<Box<Rat>> five;
    for (std::size_t k = 0; k < 6; ++k) {
      if (k != j) five.push_back(squares[k]);
    }
    const auto cert = santalo_transversal(five);
    if (!cert.feasible) return std::nullopt;
    stabbers.push_back(cert.witness->line);
  }
  return GrunbaumInstance{std::move(squares), std::move(stabbers), attempts};
}

}  // namespace

Rat ascending_slack(const std::vector<Box<Rat>>& boxes) {
  // variables m, c, t: minimize t with m x_lo + c <= y_hi + t and m x_hi + c >= y_lo - t
  LinearProgram<Rat> lp(3);
  lp.add_greater_equal(vq({1, 0, 0}), Rat(0));
  lp.add_less_equal(vq({1, 0, 0}), Rat(kMaxSlope));
  lp.add_greater_equal(vq({0, 0, 1}), Rat(-1000));
  Rat gap_lo = boxes.front().min_corner()(0), gap_hi = boxes.front().max_corner()(0);
  for (const auto& b : boxes) {
    lp.add_less_equal(vq({b.min_corner()(0), 1, -1}), b.max_corner()(1));
    lp.add_greater_equal(vq({b.max_corner()(0), 1, 1}), b.min_corner()(1));
    gap_lo = std::max(gap_lo, b.min_corner()(0));
    gap_hi = std::min(gap_hi, b.max_corner()(0));
  }
  const auto opt = lp_maximize(lp, vq({0, 0, -1}));
  if (opt.status != LpOptimum<Rat>::Status::Optimal) throw InternalError("slack LP is bounded and feasible");
  return std::min(Rat(-opt.value), Rat(gap_lo - gap_hi));
}

std::optional<GrunbaumInstance> grunbaum_search(std::uint64_t seed, std::uint64_t budget) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::uint64_t attempts = 0;
  while (attempts < budget) {
    Params p;
    for (std::size_t k = 0; k < 3; ++k) {
      p[3 * k] = uniform(-50, 50);
      p[3 * k + 1] = uniform(-50, 50);
      p[3 * k + 2] = uniform(3, 20);
    }
    Rat s = score(p);
    ++attempts;
    if (s > 0) {
      if (auto inst = certify_candidate(p, attempts)) return inst;
    }
    double step = 10.0;
    for (int it = 0; it < kClimbSteps && attempts < budget; ++it) {
      Params q = p;
      std::normal_distribution<double> noise(0.0, step);
      for (auto& x : q) x += std::lround(noise(rng));
      for (std::size_t k = 0; k < 3; ++k) q[3 * k + 2] = std::max(1L, std::abs(q[3 * k + 2]));
      if (q == p) continue;
      const Rat t = score(q);
      ++attempts;
      if (t <= s) {
        step = std::max(0.5, step * 0.997);
        continue;
      }
      p = q;
      s = t;
      if (s > 0) {
        if (auto inst = certify_candidate(p, attempts)) return inst;
      }
    }
  }
  return std::nullopt;
}

HellyReport verify_grunbaum(const std::vector<Box<Rat>>& squares, unsigned jobs) {
  if (squares.size() != 6) throw PreconditionError("a Grunbaum instance has exactly 6 squares");
  for (const auto& s : squares) {
    if (s.dim() != 2 || s.max_corner()(0) - s.min_corner()(0) != s.max_corner()(1) - s.min_corner()(1)) {
      throw PreconditionError("Grunbaum instance members must be planar squares");
    }
  }
  HellyOptions opt;
  opt.jobs = jobs;
  opt.subset_size = 5;
  return helly_check(squares, HellyMode::Global, std::nullopt, opt);
}

}  // namespace tk

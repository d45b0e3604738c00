#include "tk/oracles.hpp"

namespace tk::oracles {

namespace {

bool meets_approx(const std::vector<double>& x, const std::vector<double>& v,
                  const std::vector<double>& lo, const std::vector<double>& hi) {
  constexpr double kSlack = 1e-9;
  double tl = -1e300, tu = 1e300;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (v[i] == 0.0) {
      if (x[i] < lo[i] - kSlack || x[i] > hi[i] + kSlack) return false;
      continue;
    }
    double a = (lo[i] - x[i]) / v[i];
    double b = (hi[i] - x[i]) / v[i];
    if (a > b) std::swap(a, b);
    tl = std::max(tl, a);
    tu = std::min(tu, b);
  }
  return tl <= tu + kSlack;
}

}  // namespace

std::optional<Line<Rat>> sampled_transversal_search(const std::vector<Box<Rat>>& boxes,
                                                    std::size_t samples, std::uint64_t seed) {
  if (boxes.empty()) return std::nullopt;
  const auto d = static_cast<std::size_t>(boxes.front().dim());
  std::vector<std::vector<double>> lo, hi;
  for (const auto& b : boxes) {
    std::vector<double> l(d), h(d);
    for (std::size_t i = 0; i < d; ++i) {
      l[i] = to_double(b.min_corner()(static_cast<Eigen::Index>(i)));
      h[i] = to_double(b.max_corner()(static_cast<Eigen::Index>(i)));
    }
    lo.push_back(std::move(l));
    hi.push_back(std::move(h));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, boxes.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> p(d), r(d), v(d);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (boxes.size() > 1) {
      while (j == i) j = pick(rng);
    }
    for (std::size_t k = 0; k < d; ++k) {
      p[k] = lo[i][k] + unit(rng) * (hi[i][k] - lo[i][k]);
      r[k] = lo[j][k] + unit(rng) * (hi[j][k] - lo[j][k]);
      v[k] = r[k] - p[k];
    }
    if (std::all_of(v.begin(), v.end(), [](double e) { return e == 0.0; })) continue;
    bool all = true;
    for (std::size_t b = 0; b < boxes.size() && all; ++b) all = meets_approx(p, v, lo[b], hi[b]);
    if (!all) continue;
    // Doubles are exact rationals, so the candidate can be confirmed exactly.
    VecQ x(static_cast<Eigen::Index>(d)), dir(static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < d; ++k) {
      x(static_cast<Eigen::Index>(k)) = Rat(p[k]);
      dir(static_cast<Eigen::Index>(k)) = Rat(v[k]);
    }
    Line<Rat> line(x, dir);
    bool exact = true;
    for (const auto& b : boxes) {
      if (!line_meets_box_any(line, b)) {
        exact = false;
        break;
      }
    }
    if (exact) return line;
  }
  return std::nullopt;
}

}  // namespace tk::oracles

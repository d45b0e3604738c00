#pragma once

// Seeded generators of small random rationals, lines and boxes for property
// tests and randomized searches.

#include "tk/geometry.hpp"

#include <cstdint>
#include <random>

namespace tk {

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rat rational(long max_num = 20, long max_den = 6) {
    return Rat(integer(-max_num, max_num), integer(1, max_den));
  }
  Rat positive(long max_num = 20, long max_den = 6) {
    return Rat(integer(1, max_num), integer(1, max_den));
  }
  Rat nonzero(long max_num = 20, long max_den = 6) {
    Rat r = positive(max_num, max_den);
    return coin() ? r : Rat(-r);
  }

  VecQ vec(Eigen::Index d, long max_num = 20, long max_den = 6) {
    VecQ v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = rational(max_num, max_den);
    return v;
  }
  VecQ positive_vec(Eigen::Index d, long max_num = 20, long max_den = 6) {
    VecQ v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = positive(max_num, max_den);
    return v;
  }
  VecQ nonzero_vec(Eigen::Index d, long max_num = 20, long max_den = 6) {
    VecQ v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = nonzero(max_num, max_den);
    return v;
  }

  /// Any line with a nonzero direction.
  Line<Rat> line(Eigen::Index d) {
    VecQ v = vec(d);
    while (v.isZero()) v = vec(d);
    return Line<Rat>(vec(d), std::move(v));
  }
  /// Every direction coordinate nonzero, signs random.
  Line<Rat> generic_line(Eigen::Index d) { return Line<Rat>(vec(d), nonzero_vec(d)); }
  /// Every direction coordinate positive.
  Line<Rat> ascending_line(Eigen::Index d) { return Line<Rat>(vec(d), positive_vec(d)); }
  /// Non-negative direction; each coordinate vanishes with probability 1/3.
  Line<Rat> weakly_ascending_line(Eigen::Index d) {
    VecQ v(d);
    do {
      for (Eigen::Index i = 0; i < d; ++i) v(i) = integer(0, 2) == 0 ? Rat(0) : positive();
    } while (v.isZero());
    return Line<Rat>(vec(d), std::move(v));
  }

  Box<Rat> box(Eigen::Index d, long max_num = 20, long max_den = 6) {
    VecQ a = vec(d, max_num, max_den);
    VecQ b = vec(d, max_num, max_den);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (a(i) > b(i)) std::swap(a(i), b(i));
    }
    return Box<Rat>(std::move(a), std::move(b));
  }

  /// Box containing p, each side extending up to max_extent on either side.
  Box<Rat> box_around(const VecQ& p, long max_extent = 3) {
    VecQ a(p.size()), b(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      a(i) = p(i) - Rat(integer(0, 4 * max_extent), 4);
      b(i) = p(i) + Rat(integer(0, 4 * max_extent), 4);
    }
    return Box<Rat>(std::move(a), std::move(b));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tk

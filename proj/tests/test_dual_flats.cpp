#include "tk/dual_flats.hpp"
#include "tk/sampling.hpp"

#include <doctest.h>

using namespace tk;

TEST_CASE("hyperplane_meets_box examples") {
  const Box<Rat> unit(vq({0, 0}), vq({1, 1}));
  CHECK(hyperplane_meets_box(AscendingHyperplane<Rat>(vq({q(1, 2), q(1, 2)}), q(1)), unit));
  CHECK_FALSE(hyperplane_meets_box(AscendingHyperplane<Rat>(vq({q(1, 2), q(1, 2)}), q(2)), unit));
  CHECK(hyperplane_meets_box(AscendingHyperplane<Rat>(vq({q(1, 2), q(1, 2)}), q(0)), unit));
  // gauge
  const AscendingHyperplane<Rat> h(vq({2, 2}), q(2));
  CHECK(h.normal() == vq({q(1, 2), q(1, 2)}));
  CHECK(h.offset() == q(1, 2));
  CHECK_THROWS_AS(AscendingHyperplane<Rat>(vq({1, -1}), q(0)), PreconditionError);
  CHECK(hyperplane_meets_box(Hyperplane<Rat>{vq({1, -1}), q(1)}, unit));
  CHECK_FALSE(hyperplane_meets_box(Hyperplane<Rat>{vq({1, -1}), q(2)}, unit));
}

TEST_CASE("hyperplane_transversal examples") {
  const std::vector<Box<Rat>> pair{Box<Rat>(vq({0, 0}), vq({1, 1})), Box<Rat>(vq({5, -5}), vq({6, -4}))};
  // The translated square lies beyond every hyperplane with normal of sign (+,-)
  // through the unit square, but x + y = 1 meets both.
  CHECK_FALSE(hyperplane_transversal(pair, SignClass::parse("+-")).has_value());
  const auto h = hyperplane_transversal(pair, SignClass::parse("++"));
  REQUIRE(h.has_value());
  for (const auto& b : pair) CHECK(hyperplane_meets_box(*h, b));
  for (const auto& b : pair) CHECK(hyperplane_meets_box(Hyperplane<Rat>{vq({1, 1}), q(1)}, b));
  const auto any = hyperplane_transversal_any(pair);
  REQUIRE(any.has_value());
  CHECK(any->first == SignClass::parse("++"));

  RationalSampler rs(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = rs.integer(2, 4);
    const VecQ n = rs.nonzero_vec(d);
    const Rat c = rs.rational();
    std::vector<Box<Rat>> family;
    for (int k = 0; k < 3; ++k) {
      VecQ p = rs.vec(d);
      p(0) = (c - n.tail(d - 1).dot(p.tail(d - 1))) / n(0);  // on the hyperplane
      family.push_back(rs.box_around(p, 1));
    }
    VecQ sgn(d);
    std::vector<int> signs;
    for (Eigen::Index i = 0; i < d; ++i) signs.push_back(n(i) > 0 ? 1 : -1);
    const auto found = hyperplane_transversal(family, SignClass(signs));
    REQUIRE(found.has_value());
    for (const auto& b : family) CHECK(hyperplane_meets_box(*found, b));
    CHECK(hyperplane_transversal(std::vector<Box<Rat>>{family[0]}, SignClass::ascending(d)).has_value());
  }
}

TEST_CASE("star boxes and flats") {
  CHECK_THROWS_AS(StarBox<Rat>(vq({1, 0}), vq({0, 1})), PreconditionError);
  CHECK_THROWS_AS(StarFlat<Rat>(vq({0, 0}), vq({1, 1})), PreconditionError);
  CHECK_THROWS_AS(StarFlat<Rat>(vq({1, 0}), vq({1, -1})), PreconditionError);

  const StarFlat<Rat> diag(vq({1, 1, 1}), vq({1, 1, 1}));
  CHECK_FALSE(diag.proper());
  CHECK(star_transversal(diag, StarBox<Rat>(vq({0, 0, 0}), vq({2, 2, 2}))));

  const StarFlat<Rat> k(vq({1, 0, 0}), vq({0, 1, 2}));
  CHECK(k.proper());
  CHECK(k.contains(vq({1, 2, -1})));
  CHECK_FALSE(k.contains(vq({1, 0, 1})));

  RationalSampler rs(37);
  for (int trial = 0; trial < 2000; ++trial) {
    const Eigen::Index d = rs.integer(2, 6);
    const auto line = rs.weakly_ascending_line(d);
    if (line.base().isZero()) continue;
    const auto box = rs.box(d);
    const StarFlat<Rat> flat(line.base(), line.dir());
    CHECK(star_transversal(flat, StarBox<Rat>(box.min_corner(), box.max_corner())) == line_meets_box(line, box));
  }
}

TEST_CASE("star family transversal") {
  RationalSampler rs(41);
  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = rs.integer(2, 4);
    const auto line = rs.ascending_line(d);
    std::vector<StarBox<Rat>> family;
    for (int k = 0; k < 4; ++k) {
      const auto b = rs.box_around(line.point_at(rs.rational()), 2);
      family.emplace_back(b.min_corner(), b.max_corner());
    }
    const auto flat = star_family_transversal(family);
    if (!flat) continue;
    ++found;
    CHECK(flat->proper());
    for (const auto& s : family) CHECK(star_transversal(*flat, s));
  }
  CHECK(found == 100);

  // Every transversal in coefficient space runs through the origin.
  const std::vector<StarBox<Rat>> pinned{StarBox<Rat>(vq({0, 0}), vq({0, 0})), StarBox<Rat>(vq({1, 1}), vq({1, 1})),
                                         StarBox<Rat>(vq({-1, -1}), vq({-1, -1}))};
  CHECK_FALSE(star_family_transversal(pinned).has_value());
  // Origin-line feasible but a shifted one too.
  const std::vector<StarBox<Rat>> loose{StarBox<Rat>(vq({-1, -1}), vq({1, 1})), StarBox<Rat>(vq({2, 2}), vq({3, 3}))};
  const auto f = star_family_transversal(loose);
  REQUIRE(f.has_value());
  CHECK(f->proper());
}

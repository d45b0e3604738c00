#include "tk/pluecker.hpp"
#include "tk/sampling.hpp"

#include <doctest.h>

using namespace tk;

namespace {

PlueckerPoint<Rat> p3(Chart chart, std::initializer_list<Rat> e) { return {3, chart, make_vec<Rat>(e)}; }

}  // namespace

TEST_CASE("index layout") {
  CHECK(PlueckerPoint<Rat>::size_for(3) == 6);
  CHECK(PlueckerPoint<Rat>::index_of(3, 0, 3) == 2);
  CHECK(PlueckerPoint<Rat>::index_of(3, 1, 2) == 3);
  CHECK(PlueckerPoint<Rat>::index_of(3, 2, 3) == 5);
  CHECK(PlueckerPoint<Rat>::index_of(5, 4, 5) == 14);
  const auto pairs = pluecker_pairs(4);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    CHECK(PlueckerPoint<Rat>::index_of(4, pairs[k].first, pairs[k].second) == static_cast<Eigen::Index>(k));
  }
  CHECK(pluecker_key(3, 1, 2) == "12");
  CHECK(pluecker_key(10, 1, 10) == "1,10");
  CHECK_THROWS_AS(PlueckerPoint<Rat>(3, Chart::P, VecQ::Zero(6)), PreconditionError);
}

TEST_CASE("line_to_pluecker examples") {
  const auto a = line_to_pluecker(Line<Rat>(vq({0, 0, 0}), vq({1, 2, 3})));
  CHECK(a.entries() == vq({1, 2, 3, 0, 0, 0}));
  const auto b = line_to_pluecker(Line<Rat>(vq({1, 0, 0}), vq({0, 1, 0})));
  CHECK(b.entries() == vq({0, 1, 0, 1, 0, 0}));
  CHECK(check_pluecker_relations(a));
  CHECK(check_pluecker_relations(b));
}

TEST_CASE("Pluecker relations") {
  CHECK_FALSE(check_pluecker_relations(p3(Chart::P, {1, 1, 1, 1, 1, 1})));
  CHECK(check_pluecker_relations(p3(Chart::P, {1, 1, 1, 1, 1, 0})));
  CHECK_THROWS_AS(check_pluecker_relations(p3(Chart::Q, {1, 1, 1, 1, 1, 0})), PreconditionError);
  RationalSampler rs(1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto line = rs.line(rs.integer(2, 6));
    const auto p = line_to_pluecker(line);
    CHECK(check_pluecker_relations(p));
    CHECK(same_line(pluecker_to_line(p), line));
  }
}

TEST_CASE("cremona_transform examples") {
  const auto img = cremona_transform(p3(Chart::P, {1, 2, 3, 0, 0, 0}));
  CHECK(img.chart() == Chart::Q);
  CHECK(img.entries() == vq({6, 3, 2, 0, 0, 0}));
  CHECK(projectively_equal(img, p3(Chart::Q, {1, q(1, 2), q(1, 3), 0, 0, 0})));
  CHECK_FALSE(projectively_equal(img, p3(Chart::P, {6, 3, 2, 0, 0, 0})));
  CHECK_FALSE(projectively_equal(img, p3(Chart::Q, {6, 3, 2, 0, 0, 1})));
}

TEST_CASE("involution, linearization and chart consistency") {
  RationalSampler rs(2);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index d = rs.integer(2, 6);
    // arbitrary point of Pluecker space with nonzero p_0i
    VecQ e = rs.vec(PlueckerPoint<Rat>::size_for(d));
    for (Eigen::Index i = 0; i < d; ++i) e(i) = rs.nonzero();
    const PlueckerPoint<Rat> p(d, Chart::P, e);
    CHECK(projectively_equal(cremona_transform(cremona_transform(p)), p));
    CHECK(projectively_equal(cremona_transform(p), cremona_transform_rational(p)));

    const auto line = rs.generic_line(d);
    const auto q = cremona_transform(line_to_pluecker(line));
    CHECK(check_lg_relations(q));
    if (is_ascending(line.dir())) {
      CHECK(projectively_equal(q, to_q_point(to_cremona(line))));
    }
    const auto asc = rs.ascending_line(d);
    CHECK(projectively_equal(cremona_transform(line_to_pluecker(asc)), to_q_point(to_cremona(asc))));
  }
  CHECK_FALSE(check_lg_relations(p3(Chart::Q, {1, 1, 1, 1, 1, 1})));
}

TEST_CASE("classify_indeterminacy") {
  const auto axis = classify_indeterminacy(line_to_pluecker(Line<Rat>(vq({1, 2, 0}), vq({0, 0, 1}))));
  CHECK(axis.kind == IndeterminacyClass::Kind::Lij);
  CHECK(axis.pairs == std::vector<std::pair<Eigen::Index, Eigen::Index>>{{1, 2}});
  CHECK(axis.triples.empty());
  CHECK_THROWS_AS(cremona_transform(line_to_pluecker(Line<Rat>(vq({1, 2, 0}), vq({0, 0, 1})))),
                  PreconditionError);
  // same direction, base off the z_3 axis plane pair: p_12 != 0, so C is defined
  CHECK(classify_indeterminacy(line_to_pluecker(Line<Rat>(vq({1, 2, 0}), vq({0, 0, 1})))).pairs.size() == 1);

  CHECK(classify_indeterminacy(line_to_pluecker(Line<Rat>(vq({1, 2, 3}), vq({1, 2, 3})))).none());

  VecQ e = VecQ::Zero(10);
  e(3) = 1;                                  // p_04
  e(PlueckerPoint<Rat>::index_of(4, 1, 2)) = 5;  // p_12
  const auto deep = classify_indeterminacy(PlueckerPoint<Rat>(4, Chart::P, e));
  CHECK(deep.kind == IndeterminacyClass::Kind::Lijk);
  CHECK(deep.triples == std::vector<std::array<Eigen::Index, 3>>{{1, 2, 3}});

  RationalSampler rs(4);
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index d = rs.integer(2, 5);
    VecQ f(PlueckerPoint<Rat>::size_for(d));
    do {
      for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = rs.integer(0, 2) == 0 ? Rat(rs.integer(1, 3)) : Rat(0);
    } while (f.isZero());
    const PlueckerPoint<Rat> p(d, Chart::P, f);
    bool defined = true;
    try {
      cremona_transform(p);
    } catch (const PreconditionError&) {
      defined = false;
    }
    CHECK(classify_indeterminacy(p).none() == defined);
  }
}

TEST_CASE("contraction_image") {
  const auto p = line_to_pluecker(Line<Rat>(vq({0, 0, 1}), vq({1, 1, 0})));
  CHECK(p.entries() == vq({1, 1, 0, 0, -1, -1}));
  const auto q = contraction_image(p);
  CHECK(q.at(0, 3) != 0);
  CHECK(q.at(1, 3) == q.at(2, 3));
  CHECK(q.at(0, 1) == 0);
  CHECK(q.at(0, 2) == 0);
  CHECK(q.at(1, 2) == 0);
  CHECK_THROWS_AS(contraction_image(line_to_pluecker(Line<Rat>(vq({0, 0, 1}), vq({1, 1, 1})))),
                  PreconditionError);

  RationalSampler rs(6);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index d = rs.integer(2, 6);
    const Eigen::Index zero = rs.integer(0, d - 1);
    VecQ v = rs.nonzero_vec(d);
    v(zero) = 0;
    VecQ x = rs.vec(d);
    if (x(zero) == 0) x(zero) = 1;
    const auto img = contraction_image(line_to_pluecker(Line<Rat>(x, v)));
    for (const auto& [a, b] : pluecker_pairs(d)) {
      const bool kept = (a == 0 && b == zero + 1) || (a != 0 && (a == zero + 1 || b == zero + 1));
      if (!kept) CHECK(img.at(a, b) == 0);
    }
    CHECK(img.at(0, zero + 1) != 0);
  }
}

TEST_CASE("incidence") {
  const auto a = line_to_pluecker(Line<Rat>(vq({0, 0, 0}), vq({1, 2, 3})));
  const auto b = line_to_pluecker(Line<Rat>(vq({1, 2, 3}), vq({1, 0, 0})));
  const auto c = line_to_pluecker(Line<Rat>(vq({1, 0, 0}), vq({0, 1, 0})));
  CHECK(lines_meet(a, b));
  CHECK_FALSE(lines_meet(a, c));
  CHECK(points_on(a).rows() == 2);
  CHECK(lines_meet_affine(Line<Rat>(vq({0, 0, 0}), vq({1, 2, 3})), Line<Rat>(vq({1, 2, 3}), vq({1, 0, 0}))));
  CHECK_FALSE(lines_meet_affine(Line<Rat>(vq({0, 0, 0}), vq({1, 2, 3})), Line<Rat>(vq({1, 0, 0}), vq({0, 1, 0}))));
}

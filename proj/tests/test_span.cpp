#include "tk/oracles.hpp"
#include "tk/sampling.hpp"
#include "tk/span.hpp"

#include <doctest.h>

using namespace tk;

namespace {

Line<Rat> origin_line(std::initializer_list<Rat> dir) { return {VecQ::Zero(3), make_vec<Rat>(dir)}; }

Vec<Rat> form_of(const SpanMatrix<Rat>& m, Eigen::Index j, Eigen::Index i) { return m.form(j, i); }

bool all_minors_vanish(const SpanMatrix<Rat>& m, const VecQ& p) {
  for (const auto& x : maximal_minors(m.evaluate(Rat(1), p))) {
    if (x != 0) return false;
  }
  return true;
}

Line<Rat> as_line(const SpanLine<Rat>& s) {
  REQUIRE(std::holds_alternative<Line<Rat>>(s));
  return std::get<Line<Rat>>(s);
}

}  // namespace

TEST_CASE("polynomial helpers") {
  const Poly<Rat> p{Rat(-2), Rat(0), Rat(1)};  // t^2 - 2
  CHECK(poly_degree(p) == 2);
  CHECK(poly_eval(p, Rat(3)) == 7);
  CHECK(poly_derivative(p) == Poly<Rat>{Rat(0), Rat(2)});
  CHECK(poly_interpolate(std::vector<Rat>{Rat(-2), Rat(-1), Rat(2), Rat(7)}) == p);
  const Poly<Rat> a{Rat(-1), Rat(0), Rat(1)};   // (t-1)(t+1)
  const Poly<Rat> b{Rat(-2), Rat(1), Rat(1)};   // (t-1)(t+2)
  CHECK(poly_gcd(a, b) == Poly<Rat>{Rat(-1), Rat(1)});
  CHECK(poly_degree(Poly<Rat>{}) == -1);
  std::function<Rat(const std::vector<Rat>&)> f = [](const std::vector<Rat>& z) { return z[0] * z[1] + z[2]; };
  const auto c = tensor_interpolate(f, 3, 2);
  CHECK(tensor_total_degree(c, 3, 2) == 2);
  CHECK(tensor_eval(c, 3, 2, {Rat(5), Rat(7), Rat(1, 2)}) == Rat(71, 2));
}

TEST_CASE("build_span_matrix examples") {
  const auto m = build_span_matrix<Rat>({origin_line({1, 2, 3})});
  CHECK(m.n() == 1);
  CHECK(form_of(m, 0, 0) == vq({0, -1, Rat(1, 2), 0}));
  CHECK(form_of(m, 0, 1) == vq({0, -1, 0, Rat(1, 3)}));

  RationalSampler rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto l1 = rng.generic_line(4), l2 = rng.generic_line(4);
    const auto mm = build_span_matrix<Rat>({l1, l2});
    for (auto t : {Rat(0), Rat(5, 3)}) {
      CHECK(mm.evaluate(Rat(1), l1.point_at(t)).row(0).isZero());
      CHECK(mm.evaluate(Rat(1), l2.point_at(t)).row(1).isZero());
    }
  }
  const Line<Rat> p1(vq({0, 0, 0}), vq({1, 2, 3})), p2(vq({1, 5, 0}), vq({2, 4, 6}));
  CHECK_THROWS_AS(build_span_matrix<Rat>({p1, p2}), PreconditionError);
  CHECK_THROWS_AS(build_span_matrix<Rat>({origin_line({1, 0, 3})}), PreconditionError);
}

TEST_CASE("rank_at_point and scroll membership") {
  const auto l1 = origin_line({1, 2, 3});
  const Line<Rat> l2(vq({1, 0, 0}), vq({2, 3, 1}));
  const auto m = build_span_matrix<Rat>({l1, l2});
  CHECK(rank_at_point(m, l1.point_at(Rat(7))) <= 1);
  CHECK(scroll_membership(m, l2.point_at(Rat(-2))));
  CHECK(rank_at_point(m, vq({1, 1, 0})) == 2);
  CHECK_FALSE(scroll_membership(m, vq({1, 1, 0})));
  for (Eigen::Index i = 0; i < 3; ++i) {
    VecQ axis = VecQ::Zero(3);
    axis(i) = 1;
    CHECK(rank_at_point(m, axis, Rat(0)) == 1);
  }
  const auto m3 = build_span_matrix<Rat>({l1, l2, Line<Rat>(vq({0, 1, 0}), vq({1, -1, 2}))});
  CHECK_THROWS_AS(scroll_membership(m3, vq({0, 0, 0})), PreconditionError);
}

TEST_CASE("row span matches Cremona affine combination") {
  RationalSampler rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto l1 = rng.generic_line(3), l2 = rng.generic_line(3);
    const auto m = build_span_matrix<Rat>({l1, l2});
    const Rat t = rng.rational();
    Vec<Rat> coeffs(3);
    coeffs << Rat(1) - t, t, Rat(0);
    // the combined row, rescaled to q_01 = 1 through the w-normalization
    const auto [y1, w1] = detail::unit_cremona(l1);
    const auto [y2, w2] = detail::unit_cremona(l2);
    const Vec<Rat> w = (Rat(1) - t) * w1 + t * w2;
    const Vec<Rat> y = (Rat(1) - t) * y1 + t * y2;
    for (Eigen::Index i = 1; i < 3; ++i) {
      // form of the combined line, scaled by w_0: (y_0 - y_i) z_0 - w_0 z_1 + w_i z_{i+1}
      const Vec<Rat> row = (Rat(1) - t) * w1(0) * m.form(0, i - 1) + t * w2(0) * m.form(1, i - 1);
      VecQ expected = VecQ::Zero(4);
      expected(0) = y(0) - y(i);
      expected(1) = -w(0);
      expected(i + 1) = w(i);
      CHECK(row == expected);
    }
  }
}

TEST_CASE("span_line_at examples") {
  const auto l1 = origin_line({1, 2, 3}), l2 = origin_line({2, 3, 1});
  const auto mid = as_line(span_line_at<Rat>({l1, l2}, {Rat(1, 2), Rat(1, 2)}));
  CHECK(mid.base().isZero());
  CHECK(same_line(mid, origin_line({Rat(4, 3), Rat(12, 5), Rat(3, 2)})));
  CHECK(same_line(as_line(span_line_at<Rat>({l1, l2}, {Rat(1), Rat(0)})), l1));
  CHECK_THROWS_AS(span_line_at<Rat>({l1, l2}, {Rat(1), Rat(1)}), PreconditionError);

  RationalSampler rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = rng.ascending_line(3), b = rng.ascending_line(3);
    if (a.dir() == b.dir()) continue;
    const auto m = build_span_matrix<Rat>({a, b});
    const auto s = span_line_at<Rat>({a, b}, {Rat(3, 2), Rat(-1, 2)});
    if (const auto* line = std::get_if<Line<Rat>>(&s)) {
      for (int k = 0; k < 10; ++k) CHECK(all_minors_vanish(m, line->point_at(Rat(k - 5, 3))));
    }
  }
  // extrapolating far enough makes some w negative
  const auto far = origin_line({1, 1, Rat(1, 10)});
  CHECK_THROWS_AS(span_line_at<Rat>({l1, far}, {Rat(-3), Rat(4)}, true), PreconditionError);
}

TEST_CASE("axis-parallel rulings") {
  const Line<Rat> l1(vq({0, 0, 0}), vq({1, 2, 3})), l2(vq({1, 0, 0}), vq({2, 3, 1}));
  const auto m = build_span_matrix<Rat>({l1, l2});
  const auto r = axis_parallel_rulings(l1, l2);
  REQUIRE(r.size() == 3);
  for (Eigen::Index i = 0; i < 3; ++i) {
    const auto& p = r[static_cast<std::size_t>(i)];
    CHECK(p.chart() == Chart::P);
    for (Eigen::Index k = 1; k <= 3; ++k) CHECK((p.at(0, k) != 0) == (k == i + 1));
    // skew generators: the rulings share their ruling family, so they meet the H_ij planes instead
    CHECK_FALSE(lines_meet(p, line_to_pluecker(l1)));
    const auto line = pluecker_to_line(p);
    for (Eigen::Index a = 0; a < 3; ++a)
      for (Eigen::Index b = a + 1; b < 3; ++b) {
        // H_ab with i outside {a, b} already contains the ruling's point at infinity
        if (a == i || b == i) CHECK(meet_codim2_plane(l1, l2, a, b).meets(line));
      }
    for (int k = 0; k < 5; ++k) CHECK(scroll_membership(m, line.point_at(Rat(k))));
  }
  const Line<Rat> c1(vq({1, 1, 1}), vq({1, 2, 3})), c2(vq({0, 0, 3}), vq({-1, -1, 2}));
  for (const auto& p : axis_parallel_rulings(c1, c2)) {
    CHECK(lines_meet(p, line_to_pluecker(c1)));
    CHECK(lines_meet(p, line_to_pluecker(c2)));
  }
  const Line<Rat> l3(vq({0, 1, 0}), vq({1, 3, 2}));
  CHECK_THROWS_WITH_AS(axis_parallel_rulings(l1, l3), "no unique axis-parallel ruling for axes 0", PreconditionError);
}

TEST_CASE("codimension-2 planes and ruling conditions") {
  const Line<Rat> l1(vq({0, 0, 0}), vq({1, 2, 3})), l2(vq({1, 0, 0}), vq({2, 3, 1}));
  const auto h = meet_codim2_plane(l1, l2, 0, 1);
  CHECK(h.value_i == -3);
  CHECK(h.value_j == -6);
  CHECK(h.meets(l1));
  CHECK(h.meets(l2));
  CHECK_THROWS_AS(meet_codim2_plane(l1, Line<Rat>(vq({1, 0, 0}), vq({2, 4, 1})), 0, 1), PreconditionError);

  const auto on = as_line(span_line_at<Rat>({l1, l2}, {Rat(1, 3), Rat(2, 3)}));
  const auto c_on = ruling_equivalence_check(l1, l2, on);
  CHECK(c_on.meets_all_planes);
  CHECK(c_on.projections_concurrent);
  CHECK(c_on.in_cremona_span);
  CHECK(ruling_equivalence_check(l1, l2, l1).agree());
  const auto c_off = ruling_equivalence_check(l1, l2, Line<Rat>(vq({5, 1, 2}), vq({1, 1, 3})));
  CHECK_FALSE(c_off.meets_all_planes);
  CHECK_FALSE(c_off.projections_concurrent);
  CHECK_FALSE(c_off.in_cremona_span);
}

TEST_CASE("meeting cone example") {
  const auto l1 = origin_line({1, 2, 3}), l2 = origin_line({2, 3, 1});
  const auto cone = meeting_cone(l1, l2);
  CHECK(cone.apex.isZero());
  CHECK(cone.A * -30 == cone.B * 14);
  CHECK(cone.A * 3 == cone.C * 14);
  CHECK(cone.A == 14);
  CHECK_FALSE(cone.degenerate);
  CHECK(cone.frame_hull_dimension == 2);
  CHECK(quadric_value(cone, l1.dir()) == 0);
  CHECK(quadric_value(cone, l2.dir()) == 0);
  const VecQ mid = vq({Rat(4, 3), Rat(12, 5), Rat(3, 2)});
  CHECK(quadric_value(cone, mid) == 0);
  CHECK(oracles::reciprocal_collinearity<Rat>({l1.dir(), l2.dir(), mid}) == 0);
  CHECK(quadric_value(cone, vq({1, 1, 1})) == -13);

  CHECK(cone.permutation == std::array<Eigen::Index, 3>{1, 2, 0});
  REQUIRE(cone.frame.has_value());
  CHECK(cone.frame->beta_lo == Rat(1, 3));
  CHECK(cone.frame->beta_hi == Rat(3, 2));
  CHECK(cone.frame->gamma_lo == Rat(1, 2));
  CHECK(cone.frame->gamma_hi == Rat(2, 3));

  CHECK(frame_hull_membership_meeting(cone, l1));
  CHECK(frame_hull_membership_meeting(cone, l2));
  CHECK(frame_hull_membership_meeting(cone, origin_line({Rat(4, 3), Rat(12, 5), Rat(3, 2)})));
  // permuted (alpha, beta, gamma) = (z2, z3, z1): beta/alpha = 2 > 3/2
  CHECK_FALSE(frame_hull_membership_meeting(cone, origin_line({Rat(3, 5), 1, 2})));
  // gamma/alpha = 1 > 2/3
  CHECK_FALSE(frame_hull_membership_meeting(cone, origin_line({1, 1, 1})));
  CHECK_THROWS_AS(frame_hull_membership_meeting(cone, Line<Rat>(vq({1, 0, 0}), vq({1, 1, 1}))), PreconditionError);

  // determinant of the 4x4 homogeneous matrix vanishes: the cone is singular at its apex
  CHECK(determinant(quadric_matrix(cone)) == 0);
  CHECK(exact_rank(quadric_matrix(cone)) == 3);

  CHECK_THROWS_AS(meeting_cone(l1, Line<Rat>(vq({1, 0, 0}), vq({1, 1, 1}))), PreconditionError);
}

TEST_CASE("meeting cone away from the origin and degenerate case") {
  const VecQ apex = vq({1, -2, Rat(1, 2)});
  const Line<Rat> l1(apex + vq({1, 2, 3}), vq({1, 2, 3})), l2(apex - vq({2, 3, 1}), vq({2, 3, 1}));
  const auto cone = meeting_cone(l1, l2);
  CHECK(cone.apex == apex);
  CHECK(cone.A * -30 == cone.B * 14);
  const VecQ h = (VecQ(4) << 1, apex + vq({1, 2, 3})).finished();
  CHECK(h.dot(quadric_matrix(cone) * h) == 0);

  const auto deg = meeting_cone(origin_line({1, 2, 3}), origin_line({2, 4, 1}));
  CHECK(deg.degenerate);
  CHECK(deg.frame_hull_dimension == 1);
  const auto neg = meeting_cone(origin_line({1, 2, 3}), origin_line({1, -1, 2}));
  CHECK_FALSE(neg.frame.has_value());
}

TEST_CASE("secancy defect and secant polynomial") {
  const std::vector<Line<Rat>> lines{Line<Rat>(vq({0, 0, 0}), vq({1, 2, 3})), Line<Rat>(vq({1, 0, 0}), vq({2, 3, 1})),
                                     Line<Rat>(vq({0, 1, -1}), vq({3, -1, 2}))};
  const auto m = build_span_matrix(lines);
  RationalSampler rng(21);
  int unique = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Rat a = rng.rational(), b = rng.rational();
    const auto s = span_line_at<Rat>(lines, {a, b, Rat(1) - a - b});
    const auto* line = std::get_if<Line<Rat>>(&s);
    if (!line) continue;
    const auto g = secant_polynomial(m, *line);
    CHECK(poly_degree(g) == 2);
    const Rat disc = g[1] * g[1] - 4 * g[0] * g[2];
    CHECK(disc != 0);
    const VecQ p = line->point_at(rng.rational());
    const long defect = secancy_defect_locus_check(lines, p);
    CHECK(defect == (all_minors_vanish(m, p) ? 1 : 0));
    if (defect == 0) ++unique;
  }
  CHECK(unique > 0);
  const long generic = secancy_defect_locus_check(lines, vq({7, -3, 11}));
  CHECK((generic == -1 || generic == 0));

  // z-locus points have rank-1 evaluation
  const auto z = z_locus_point(m, vq({1, 2}));
  REQUIRE(z.has_value());
  CHECK(exact_rank(m.evaluate(*z)) <= 1);
}

TEST_CASE("scroll determinant degree") {
  RationalSampler rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const auto l1 = rng.generic_line(3), l2 = rng.generic_line(3);
    CHECK(scroll_determinant_degree(build_span_matrix<Rat>({l1, l2})) == 2);
  }
}

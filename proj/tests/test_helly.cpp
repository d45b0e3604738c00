#include "tk/helly.hpp"
#include "tk/sampling.hpp"

#include <doctest.h>

using namespace tk;

TEST_CASE("helly numbers") {
  CHECK(helly_number(HellyMode::Ascending, 2) == 3);
  CHECK(helly_number(HellyMode::Global, 2) == 6);
  CHECK(helly_number(HellyMode::Global, 3) == 20);
  CHECK(helly_number(HellyMode::Hyperplane, 3) == 4);
  CHECK(helly_number(HellyMode::HyperplaneGlobal, 3) == 16);
  CHECK(parse_helly_mode("hyperplane-global") == HellyMode::HyperplaneGlobal);
  CHECK_THROWS_AS(parse_helly_mode("bogus"), PreconditionError);
}

TEST_CASE("subset unranking") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(binomial(200, 100), PreconditionError);
  const auto all = index_subsets(7, 3);
  for (std::size_t r = 0; r < all.size(); ++r) {
    const auto u = unrank_subset(7, 3, r);
    REQUIRE(u.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(static_cast<Eigen::Index>(u[i]) == all[r][i]);
  }
}

TEST_CASE("planted ascending family") {
  RationalSampler rs(43);
  const auto line = rs.ascending_line(2);
  std::vector<Box<Rat>> family;
  for (int k = 0; k < 10; ++k) family.push_back(rs.box_around(line.point_at(rs.rational()), 2));
  const auto rep = helly_check(family, HellyMode::Ascending);
  CHECK(rep.all_subsets_feasible);
  CHECK(rep.family_feasible);
  CHECK(rep.certified_by_family);
  CHECK_FALSE(rep.theorem_violation);

  HellyOptions full;
  full.exhaustive = true;
  full.jobs = 3;
  const auto ex = helly_check(family, HellyMode::Ascending, {}, full);
  CHECK(ex.all_subsets_feasible);
  CHECK(ex.subsets_checked == binomial(10, 3));
  CHECK(ex.subsets_total == 120);
}

TEST_CASE("infeasible families report the first failing subset independent of threads") {
  RationalSampler rs(47);
  int infeasible = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Box<Rat>> family;
    for (int k = 0; k < 7; ++k) family.push_back(rs.box(2, 10, 2));
    HellyOptions one, many;
    many.jobs = 4;
    for (auto mode : {HellyMode::Ascending, HellyMode::Global, HellyMode::Hyperplane, HellyMode::Star}) {
      const auto a = helly_check(family, mode, {}, one);
      const auto b = helly_check(family, mode, {}, many);
      CHECK_FALSE(a.theorem_violation);
      CHECK(a.violating_subset == b.violating_subset);
      CHECK(a.subsets_checked == b.subsets_checked);
      if (!a.family_feasible) {
        ++infeasible;
        REQUIRE(a.violating_subset.has_value());
        std::vector<Box<Rat>> sub;
        for (auto i : *a.violating_subset) sub.push_back(family[i]);
        CHECK_FALSE(mode_predicate<Rat>(mode, 2)(sub));
        // every earlier subset is feasible
        for (std::uint64_t r = 0; r + 1 < a.subsets_checked; ++r) {
          std::vector<Box<Rat>> earlier;
          for (auto i : unrank_subset(family.size(), a.subset_size, r)) earlier.push_back(family[i]);
          CHECK(mode_predicate<Rat>(mode, 2)(earlier));
        }
      }
    }
  }
  CHECK(infeasible > 10);
}

TEST_CASE("small families decide (i) and (ii) together") {
  const std::vector<Box<Rat>> pair{Box<Rat>(vq({0, 0}), vq({1, 1})), Box<Rat>(vq({2, -3}), vq({3, -2}))};
  const auto rep = helly_check(pair, HellyMode::Ascending);
  CHECK_FALSE(rep.family_feasible);
  CHECK_FALSE(rep.all_subsets_feasible);
  CHECK(rep.subsets_total == 1);
  CHECK(rep.violating_subset == std::vector<std::size_t>{0, 1});
  const auto sign = helly_check(pair, HellyMode::Sign, SignClass::parse("+-"));
  CHECK(sign.family_feasible);
}

TEST_CASE("subset size override below the Helly number reports tightness, not violation") {
  // Three collinear-free tiny boxes: every pair has a transversal, the triple none.
  const Rat h = q(1, 20);
  std::vector<Box<Rat>> far;
  for (const auto& c : {vq({0, 0}), vq({10, 0}), vq({5, 10})}) far.emplace_back(VecQ(c.array() - h), VecQ(c.array() + h));
  HellyOptions opts;
  opts.subset_size = 2;
  const auto rep = helly_check(far, HellyMode::Global, {}, opts);
  CHECK(rep.all_subsets_feasible);
  CHECK_FALSE(rep.family_feasible);
  CHECK(rep.tightness_instance);
  CHECK_FALSE(rep.theorem_violation);
}

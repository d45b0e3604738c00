#include "tk/grunbaum.hpp"
#include "tk/json_io.hpp"
#include "tk/transversal.hpp"

#include <doctest.h>

#include <fstream>

using namespace tk;

namespace {

Json load_fixture() {
  std::ifstream f(TK_FIXTURE_DIR "/grunbaum6.json");
  REQUIRE(f.good());
  return Json::parse(f);
}

}  // namespace

TEST_CASE("ascending slack") {
  const Box<Rat> unit(vq({0, 0}), vq({1, 1}));
  const Box<Rat> north_west(vq({-3, 3}), vq({-2, 4}));
  CHECK(ascending_slack({unit}) <= 0);
  CHECK(ascending_slack({unit, north_west}) > 0);
  CHECK(ascending_slack({unit, Box<Rat>(vq({3, 3}), vq({4, 4}))}) <= 0);
  // stacked vertically: only a vertical line works for the x-overlap case
  CHECK(ascending_slack({unit, Box<Rat>(vq({0, 5}), vq({1, 6}))}) <= 0);
}

TEST_CASE("stored six-square fixture is a tightness instance") {
  const auto fx = load_fixture();
  const auto squares = boxes_from_json(fx);
  const auto rep = verify_grunbaum(squares, 2);
  CHECK(rep.all_subsets_feasible);
  CHECK_FALSE(rep.family_feasible);
  CHECK(rep.helly_number == 6);
  CHECK(rep.subsets_checked == 6);
  CHECK_FALSE(rep.theorem_violation);
  CHECK(rep.tightness_instance);

  const auto& stabbers = fx["stabbers"];
  REQUIRE(stabbers.size() == 6);
  for (std::size_t j = 0; j < 6; ++j) {
    const auto l = line_from_json(stabbers[j]);
    for (std::size_t i = 0; i < 6; ++i) {
      if (i != j) CHECK(line_meets_box_any(l, squares[i]));
    }
  }
}

TEST_CASE("search reproduces the fixture from its seed") {
  const auto fx = load_fixture();
  const auto inst = grunbaum_search(fx["seed"].get<std::uint64_t>(), 100000);
  REQUIRE(inst);
  CHECK(inst->attempts == fx["attempts"].get<std::uint64_t>());
  const auto stored = boxes_from_json(fx);
  REQUIRE(inst->squares.size() == stored.size());
  for (std::size_t k = 0; k < stored.size(); ++k) CHECK(inst->squares[k] == stored[k]);
}

TEST_CASE("search is seed-deterministic and verified") {
  for (std::uint64_t seed : {5u, 8u}) {
    const auto a = grunbaum_search(seed, 100000);
    const auto b = grunbaum_search(seed, 100000);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->attempts == b->attempts);
    CHECK(verify_grunbaum(a->squares).tightness_instance);
  }
  CHECK_FALSE(grunbaum_search(2, 5));
}

TEST_CASE("verification rejects non-squares and wrong sizes") {
  const auto squares = boxes_from_json(load_fixture());
  CHECK_THROWS_AS(verify_grunbaum({squares.begin(), squares.begin() + 5}), PreconditionError);
  auto bad = squares;
  bad[0] = Box<Rat>(vq({0, 0}), vq({1, 2}));
  CHECK_THROWS_AS(verify_grunbaum(bad), PreconditionError);
}

#pragma once

// Randomized search for six axis-parallel squares in the plane, every five of
// which have a line transversal while all six do not.
//
// The family is A together with its mirror image D under x -> -x, where A is
// three squares that pairwise admit an ascending transversal but jointly do
// not. By the mirror symmetry D is an obstruction for descending lines, so
// the six squares have no transversal. Every five have one as soon as D plus
// any two squares of A admit an ascending line. The search hill-climbs the
// centres and radii of A on a grid of tenths, scoring the worst of these
// conditions by an exact LP slack, and accepts the first candidate that passes
// exact verification.

#include "tk/geometry.hpp"
#include "tk/helly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tk {

struct GrunbaumInstance {
  std::vector<Box<Rat>> squares;
  /// stabbers[j] meets every square except squares[j].
  std::vector<Line<Rat>> stabbers;
  /// Number of candidate scorings spent.
  std::uint64_t attempts = 0;
};

/// Signed slack of the best ascending transversal (slopes in [0, 50] or
/// vertical): negative or zero when one exists, positive when every such line
/// misses some square by at least that much vertically or horizontally.
Rat ascending_slack(const std::vector<Box<Rat>>& boxes);

/// Runs until budget scorings are spent; nullopt if nothing verified.
std::optional<GrunbaumInstance> grunbaum_search(std::uint64_t seed, std::uint64_t budget);

/// Exact verification: every 5-subset has a transversal, the family of 6 has
/// none. Uses the global Helly check at subset size 5.
HellyReport verify_grunbaum(const std::vector<Box<Rat>>& squares, unsigned jobs = 1);

}  // namespace tk

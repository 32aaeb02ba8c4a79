#include "support/oracles.hpp"
#include "support/properties.hpp"

#include "gib/errors.hpp"
#include "gib/orbits.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace gib;

namespace {

LabeledPartition lp(std::vector<Block> b) { return LabeledPartition(std::move(b)); }

} // namespace

TEST_CASE("validity of labeled partitions") {
  CHECK(isValid(lp({{5, 0}, {3, 1}, {1, 2}}), ThetaRep({3, 3, 3})));
  CHECK(isValid(lp({{5, 0}, {3, 0}}), ThetaRep({3, 3, 2})));
  CHECK(isValid(lp({{5, 0}, {3, 1}}), ThetaRep({3, 3, 2})));
  CHECK(isValid(lp({{9, 0}}), ThetaRep({3, 3, 3})));
  CHECK_FALSE(isValid(lp({{9, 0}}), ThetaRep({3, 3, 2})));
  CHECK_FALSE(isValid(lp({{2, 3}}), ThetaRep({1, 1, 0})));
}

TEST_CASE("partition text form") {
  const auto P = LabeledPartition::parse("1^2 5^0 3^1");
  CHECK(P.str() == "5^0 3^1 1^2");
  CHECK(P == lp({{3, 1}, {1, 2}, {5, 0}}));
  CHECK(P.n() == 9);
  CHECK(P.weightCounts(3) == std::vector<int>{3, 3, 3});
  CHECK_THROWS_AS(LabeledPartition::parse("5^"), ParseError);
  CHECK_THROWS_AS(LabeledPartition::parse("0^1"), ParseError);
  CHECK_THROWS_AS(LabeledPartition::parse("a^b"), ParseError);
}

TEST_CASE("orbit counts of small representations") {
  CHECK(enumerateOrbits(ThetaRep({1, 0})).size() == 1);
  CHECK(enumerateOrbits(ThetaRep({1, 0}))[0] == lp({{1, 0}}));
  CHECK(enumerateOrbits(ThetaRep({0, 0, 0})).size() == 1);
}

TEST_CASE("orbit count of (3,3,3)") {
  const auto orbits = enumerateOrbits(ThetaRep({3, 3, 3}));
  const auto nonzero = std::count_if(orbits.begin(), orbits.end(),
                                     [](const LabeledPartition &P) { return P.blocks().front().length > 1; });
  CHECK(nonzero == 191);
  CHECK(orbits.size() == 192);
}

TEST_CASE("orbit counts against label enumeration") {
  CHECK(enumerateOrbits(ThetaRep({2, 2})).size() == oracle::labelAssignmentOrbitCount(ThetaRep({2, 2})));
  CHECK(enumerateOrbits(ThetaRep({2, 2})).size() == 10);
  for (const auto &T : props::reps(1, 7, 2, 4, 0))
    CHECK(enumerateOrbits(T).size() == oracle::labelAssignmentOrbitCount(T));
}

TEST_CASE("orbit counts against group orbits over F_2") {
  for (const std::vector<int> r : {std::vector<int>{1, 1}, {2, 1}, {2, 2}, {3, 1}, {1, 1, 1}, {2, 1, 1}, {2, 2, 1},
                                    {2, 2, 2}, {1, 1, 1, 1}, {2, 1, 1, 1}, {1, 2, 0}, {3, 0}, {1, 1, 1, 0}})
    CHECK_MESSAGE(enumerateOrbits(ThetaRep(r)).size() == oracle::nilpotentOrbitCountF2(r), ThetaRep(r).str());
}

TEST_CASE("enumeration is valid, canonical and duplicate-free") {
  for (const auto &T : props::reps(1, 8, 2, 4, 0)) {
    const auto orbits = enumerateOrbits(T);
    std::set<LabeledPartition> distinct(orbits.begin(), orbits.end());
    CHECK(distinct.size() == orbits.size());
    CHECK(std::is_sorted(orbits.begin(), orbits.end()));
    for (const auto &P : orbits) {
      CHECK(isValid(P, T));
      CHECK(std::is_sorted(P.blocks().begin(), P.blocks().end()));
    }
  }
}

TEST_CASE("orbit dimensions") {
  const ThetaRep T({3, 3, 3});
  CHECK(orbitDimension(lp({{5, 0}, {3, 1}, {1, 2}}), T) == 21);
  CHECK(orbitDimension(lp({{1, 0}, {1, 0}, {1, 0}, {1, 1}, {1, 1}, {1, 1}, {1, 2}, {1, 2}, {1, 2}}), T) == 0);
  CHECK_THROWS_AS(orbitDimension(lp({{9, 1}, {1, 0}}), T), PreconditionError);
}

TEST_CASE("largest orbit has dimension dim g1 - rank for n <= 9") {
  std::size_t reps = 0;
  for (const auto &T : props::reps(1, 9, 2, 5, 0)) {
    ++reps;
    long best = 0;
    for (const auto &P : enumerateOrbits(T))
      best = std::max(best, orbitDimension(P, T));
    CHECK_MESSAGE(best == gradedDims(T).g1 - rankOfRep(T), T.str());
  }
  CHECK(reps > 300);
}

TEST_CASE("orbit count is invariant under duality and rotation for n <= 8") {
  for (const auto &T : props::reps(1, 8, 2, 5, 0)) {
    const std::size_t count = enumerateOrbits(T).size();
    CHECK(enumerateOrbits(dualRep(T)).size() == count);
    std::vector<int> rotated(T.multiplicities().begin() + 1, T.multiplicities().end());
    rotated.push_back(T[0]);
    CHECK(enumerateOrbits(ThetaRep(rotated)).size() == count);
  }
}

#include "support/properties.hpp"

#include "gib/errors.hpp"
#include "gib/gib_checker.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gib;

namespace {

LabeledPartition lp(const std::string &s) { return LabeledPartition::parse(s); }

bool contains(const std::vector<LabeledPartition> &v, const LabeledPartition &P) {
  return std::find(v.begin(), v.end(), P) != v.end();
}

} // namespace

TEST_CASE("single orbit verdicts") {
  const OrbitVerdict bad = checkOrbit(ThetaRep({2, 2, 2, 1}), lp("3^0 3^2 1^1"));
  CHECK(bad.gib == Verdict::False);
  CHECK(bad.indexResult.index >= 2);
  CHECK(bad.indexResult.certified);
  CHECK(bad.dimG0e == 5);
  CHECK(bad.dimGm1e == 4);

  const OrbitVerdict nilp = checkOrbit(ThetaRep({3, 3, 3}), lp("5^0 3^1 1^2"));
  CHECK(nilp.gib == Verdict::False);
  CHECK(nilp.indexResult.index == 4);

  const OrbitVerdict ex332 = checkOrbit(ThetaRep({3, 3, 2}), lp("5^0 3^1"));
  CHECK(ex332.gib == Verdict::False);
  CHECK(ex332.indexResult.index == 3);
}

TEST_CASE("zero orbit always has the property") {
  for (const auto &T : props::reps(1, 8, 2, 4, 0)) {
    const LabeledPartition zero = enumerateOrbits(T).back();
    REQUIRE(zero.blocks().front().length == 1);
    const OrbitVerdict v = checkOrbit(T, zero);
    CHECK(v.gib == Verdict::True);
    CHECK(v.indexResult.certificate == Certificate::LowerBoundMatch);
  }
}

TEST_CASE("invalid orbit is rejected") {
  CHECK_THROWS_AS(checkOrbit(ThetaRep({3, 3, 3}), lp("9^0 1^1")), PreconditionError);
}

TEST_CASE("representation verdicts") {
  CHECK(checkRep(ThetaRep({2, 2, 4})).repGib == Verdict::True);
  CHECK(checkRep(ThetaRep({2, 3, 1})).repGib == Verdict::True);
  CHECK(checkRep(ThetaRep({1, 1, 1, 1})).repGib == Verdict::True);
  const GibReport r332 = checkRep(ThetaRep({3, 3, 2}));
  CHECK(r332.repGib == Verdict::False);
  CHECK(contains(r332.badOrbits, lp("5^0 3^1")));
}

TEST_CASE("(3,3,3) has exactly three bad orbits") {
  const GibReport r = checkRep(ThetaRep({3, 3, 3}));
  CHECK(r.orbitCount == 192);
  CHECK(r.repGib == Verdict::False);
  CHECK(r.badOrbits.size() == 3);
  CHECK(r.undecidedOrbits.empty());
  CHECK(contains(r.badOrbits, lp("5^0 3^1 1^2")));
  CHECK(contains(r.badOrbits, lp("5^1 3^2 1^0")));
  CHECK(contains(r.badOrbits, lp("5^2 3^0 1^1")));
}

TEST_CASE("every false verdict carries an exact rank") {
  for (const auto &T : props::reps(1, 8, 3, 4, 1)) {
    CheckPolicy policy;
    policy.stopAtFirstFalse = false;
    const GibReport r = checkRep(T, policy);
    for (const auto &v : r.verdicts) {
      if (v.gib == Verdict::False) {
        CHECK(v.indexResult.certified);
        CHECK(v.indexResult.certificate != Certificate::None);
        CHECK(v.indexResult.index > static_cast<std::size_t>(r.rank));
      }
      if (v.gib == Verdict::True)
        CHECK(v.indexResult.index == static_cast<std::size_t>(r.rank));
    }
  }
}

TEST_CASE("certification cap leaves suspicious orbits undecided") {
  // one orbit of (2,3,4) passes none of the shortcuts
  const ThetaRep T({2, 3, 4});
  CheckPolicy capped;
  capped.certificationCap = 0;
  const GibReport r = checkRep(T, capped);
  CHECK(r.repGib == Verdict::Undecided);
  REQUIRE(r.undecidedOrbits.size() == 1);
  CHECK(r.badOrbits.empty());

  const GibReport full = checkRep(T);
  CHECK(full.repGib == Verdict::False);
  CHECK(full.undecidedOrbits.empty());
  REQUIRE(full.badOrbits.size() == 1);
  CHECK(full.badOrbits.front() == r.undecidedOrbits.front());
  for (const auto &v : full.verdicts)
    if (v.orbit == r.undecidedOrbits.front())
      CHECK(v.indexResult.certificate == Certificate::Elimination);
}

TEST_CASE("parallel and serial runs give identical reports") {
  CheckPolicy serial, parallel;
  parallel.jobs = 3;
  for (const ThetaRep &T : {ThetaRep({3, 3, 2}), ThetaRep({2, 2, 2, 1}), ThetaRep({2, 2, 4})})
    CHECK(props::signature(checkRep(T, serial)) == props::signature(checkRep(T, parallel)));
}

TEST_CASE("exhaustive certification agrees with the default schedule") {
  CheckPolicy all;
  all.certifyAll = true;
  all.stopAtFirstFalse = false;
  for (const ThetaRep &T : {ThetaRep({1, 2, 1, 2}), ThetaRep({2, 2, 1}), ThetaRep({3, 3, 2, 0})}) {
    const GibReport a = checkRep(T), b = checkRep(T, all);
    CHECK(a.repGib == b.repGib);
    for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
      if (a.verdicts[i].gib != Verdict::Undecided)
        CHECK(a.verdicts[i].gib == b.verdicts[i].gib);
      if (b.verdicts[i].indexResult.certificate == Certificate::Elimination)
        CHECK(*b.verdicts[i].indexResult.certRank == b.verdicts[i].indexResult.probRank);
    }
  }
}

TEST_CASE("verdicts agree with the dual representation") {
  const auto out = props::dualAgreement(props::reps(1, 8, 2, 4, 1));
  CHECK_MESSAGE(out.ok(), out.summary());
}

TEST_CASE("slice implication") {
  const auto out = props::sliceImplication(props::reps(1, 8, 2, 4, 1));
  CHECK_MESSAGE(out.ok(), out.summary());
}

TEST_CASE("fold implication") {
  const auto out = props::foldImplication(7, 4);
  CHECK_MESSAGE(out.ok(), out.summary());
  CHECK(out.cases > 0);
}

TEST_CASE("verdicts do not depend on the seed") {
  const auto out = props::seedIndependence(props::reps(1, 7, 2, 4, 1), {1, 2, 3, 0x5eed, 0xdeadbeef});
  CHECK_MESSAGE(out.ok(), out.summary());
}

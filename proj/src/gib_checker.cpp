#include "gib/gib_checker.hpp"

#include "gib/centralizer.hpp"
#include "gib/errors.hpp"
#include "gib/parallel.hpp"
#include "gib/rank.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gib {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::True:
    return "true";
  case Verdict::False:
    return "false";
  case Verdict::Undecided:
    return "undecided";
  }
  return "undecided";
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Intermediate state of one orbit between the two certification passes.
struct OrbitWork {
  OrbitVerdict verdict;
  LinearFormMatrix reduced;
  bool needsElimination = false;
  /// the rank is a proven lower bound for the index (false for user input)
  bool trustedBound = true;
};

Verdict verdictFromIndex(std::size_t index, int rank) {
  return index == static_cast<std::size_t>(rank) ? Verdict::True : Verdict::False;
}

// Steps 3-5 plus the term-rank bound on a built action matrix; elimination
// is left to the caller.
void screenMatrix(OrbitWork &w, const LinearFormMatrix &A, int rank, const CheckPolicy &policy,
                  std::uint64_t seed, const std::string &what) {
  OrbitVerdict &v = w.verdict;
  IndexResult &res = v.indexResult;
  res.dimModule = A.cols();
  res.probRank = probabilisticRank(A, policy.index.trials, seed);
  res.index = res.dimModule - res.probRank;
  if (!w.trustedBound && res.index < static_cast<std::size_t>(rank)) {
    // the evaluated index bounds the true one from above
    v.gib = Verdict::False;
    w.reduced = groundFieldReduce(A);
    v.reducedRows = w.reduced.rows();
    v.reducedCols = w.reduced.cols();
    w.needsElimination = true;
    return;
  }
  if (res.index < static_cast<std::size_t>(rank))
    throw std::logic_error("index upper bound " + std::to_string(res.index) + " below rank " +
                           std::to_string(rank) + " for " + what);

  const bool exhaustive = policy.index.forceCertify || policy.certifyAll;
  w.needsElimination = exhaustive;

  if (res.index == static_cast<std::size_t>(rank)) {
    setExactRank(res, res.probRank, Certificate::LowerBoundMatch);
    v.gib = Verdict::True;
    if (exhaustive) {
      w.reduced = groundFieldReduce(A);
      v.reducedRows = w.reduced.rows();
      v.reducedCols = w.reduced.cols();
    }
    return;
  }

  w.reduced = groundFieldReduce(A);
  v.reducedRows = w.reduced.rows();
  v.reducedCols = w.reduced.cols();
  if (res.probRank == v.reducedRows || res.probRank == v.reducedCols) {
    setExactRank(res, res.probRank, Certificate::ReducedShape);
    v.gib = Verdict::False;
    return;
  }
  if (policy.useTermRankBound && termRank(w.reduced) == res.probRank) {
    setExactRank(res, res.probRank, Certificate::TermRank);
    v.gib = Verdict::False;
    return;
  }
  w.needsElimination = true;
}

// Steps 1-2 (centraliser and action matrix), then screenMatrix.
OrbitWork screen(const ThetaRep &T, const LabeledPartition &P, const CheckPolicy &policy,
                 std::uint64_t seed) {
  if (!isValid(P, T))
    throw PreconditionError("partition " + P.str() + " is not a nilpotent orbit for " + T.str());
  OrbitWork w;
  OrbitVerdict &v = w.verdict;
  v.orbit = P;
  const GradedCentralizer C = buildCentralizer(P, T.order());
  v.dimG0e = C.degree(0).size();
  v.dimGm1e = C.degree(T.order() - 1).size();
  screenMatrix(w, buildActionMatrix(C), rankOfRep(T), policy, seed, "orbit " + P.str() + " of " + T.str());
  return w;
}

void eliminate(OrbitWork &w, int rank, const CheckPolicy &policy) {
  IndexResult &res = w.verdict.indexResult;
  IndexResult attempt = res;
  certify(attempt, w.reduced, policy.index.termLimit);
  w.needsElimination = false;
  if (attempt.certified) {
    if (*attempt.certRank < attempt.probRank)
      throw std::logic_error("certified rank below evaluated rank for orbit " + w.verdict.orbit.str());
    if (w.trustedBound && attempt.index < static_cast<std::size_t>(rank))
      throw std::logic_error("certified index below rank for orbit " + w.verdict.orbit.str());
    res = attempt;
    w.verdict.gib = verdictFromIndex(res.index, rank);
  } else {
    // keep any verdict the cheaper steps already proved
    res.certificationAborted = true;
  }
}

} // namespace

ActionDecision decideAction(const LinearFormMatrix &A, int rank, const CheckPolicy &policy) {
  OrbitWork w;
  w.trustedBound = false;
  screenMatrix(w, A, rank, policy, policy.index.seed, "supplied action");
  if (w.needsElimination)
    eliminate(w, rank, policy);
  return {w.verdict.indexResult, w.verdict.gib, w.verdict.reducedRows, w.verdict.reducedCols};
}

OrbitVerdict checkOrbit(const ThetaRep &T, const LabeledPartition &P, const CheckPolicy &policy) {
  OrbitWork w = screen(T, P, policy, policy.index.seed);
  if (w.needsElimination)
    eliminate(w, rankOfRep(T), policy);
  return w.verdict;
}

GibReport checkRep(const ThetaRep &T, const CheckPolicy &policy) {
  GibReport report;
  report.rep = T;
  report.rank = rankOfRep(T);
  const auto orbits = enumerateOrbits(T);
  report.orbitCount = orbits.size();

  std::vector<OrbitWork> work(orbits.size());
  parallelFor(orbits.size(), policy.jobs, [&](std::size_t i) {
    work[i] = screen(T, orbits[i], policy, splitmix(policy.index.seed ^ splitmix(i)));
  });

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < work.size(); ++i)
    if (work[i].needsElimination)
      pending.push_back(i);
  std::stable_sort(pending.begin(), pending.end(), [&](std::size_t a, std::size_t b) {
    return work[a].reduced.rows() * work[a].reduced.cols() < work[b].reduced.rows() * work[b].reduced.cols();
  });

  const bool exhaustive = policy.index.forceCertify || policy.certifyAll;
  if (exhaustive) {
    parallelFor(pending.size(), policy.jobs, [&](std::size_t k) { eliminate(work[pending[k]], report.rank, policy); });
  } else {
    auto anyFalse = [&] {
      return std::any_of(work.begin(), work.end(), [](const OrbitWork &w) { return w.verdict.gib == Verdict::False; });
    };
    std::size_t attempts = 0;
    for (std::size_t i : pending) {
      if (attempts >= policy.certificationCap || (policy.stopAtFirstFalse && anyFalse()))
        break;
      eliminate(work[i], report.rank, policy);
      ++attempts;
    }
  }

  bool anyFalse = false, anyUndecided = false;
  for (auto &w : work) {
    const OrbitVerdict &v = w.verdict;
    if (v.gib == Verdict::False) {
      anyFalse = true;
      report.badOrbits.push_back(v.orbit);
    } else if (v.gib == Verdict::Undecided) {
      anyUndecided = true;
      report.undecidedOrbits.push_back(v.orbit);
    }
    report.verdicts.push_back(std::move(w.verdict));
  }
  report.repGib = anyFalse ? Verdict::False : (anyUndecided ? Verdict::Undecided : Verdict::True);
  return report;
}

} // namespace gib

#pragma once

#include "gib/index_engine.hpp"
#include "gib/orbits.hpp"
#include "gib/theta_rep.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace gib {

enum class Verdict { True, False, Undecided };
std::string to_string(Verdict v);

struct CheckPolicy {
  IndexPolicy index;
  /// run elimination on every orbit, not only the suspicious ones
  bool certifyAll = false;
  /// try the term-rank bound before elimination
  bool useTermRankBound = true;
  /// maximum number of elimination runs per representation
  std::size_t certificationCap = std::numeric_limits<std::size_t>::max();
  /// stop certifying once some orbit is a certified failure
  bool stopAtFirstFalse = true;
  unsigned jobs = 1;
};

struct OrbitVerdict {
  LabeledPartition orbit;
  std::size_t dimG0e = 0, dimGm1e = 0;
  /// shape of the ground-field reduced action matrix (0 x 0 when not computed)
  std::size_t reducedRows = 0, reducedCols = 0;
  IndexResult indexResult;
  Verdict gib = Verdict::Undecided;
};

struct GibReport {
  ThetaRep rep{std::vector<int>{1, 0}};
  int rank = 0;
  std::size_t orbitCount = 0;
  std::vector<OrbitVerdict> verdicts;
  Verdict repGib = Verdict::Undecided;
  std::vector<LabeledPartition> badOrbits;
  std::vector<LabeledPartition> undecidedOrbits;
};

struct ActionDecision {
  IndexResult index;
  Verdict gib = Verdict::Undecided;
  std::size_t reducedRows = 0, reducedCols = 0;
};

/// Steps 3-6 on an already built action matrix, comparing the index with
/// `rank`. A rank above the evaluated index gives a false verdict.
ActionDecision decideAction(const LinearFormMatrix &A, int rank, const CheckPolicy &policy = {});

/// Decide rank(G_0, g_1) = ind(g_{0,e}, g_{-1,e}) for one nilpotent orbit,
/// escalating from random evaluation to exact certificates as needed.
OrbitVerdict checkOrbit(const ThetaRep &T, const LabeledPartition &P, const CheckPolicy &policy = {});

/// Check every nilpotent orbit. Orbits failing the random test are
/// certified afterwards, smallest reduced matrix first.
GibReport checkRep(const ThetaRep &T, const CheckPolicy &policy = {});

} // namespace gib

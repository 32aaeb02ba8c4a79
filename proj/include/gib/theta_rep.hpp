#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gib {

/// Inner automorphism of gl_n of order m, given by the eigenspace
/// dimensions r_t = dim V_t, t = 0..m-1. Zero entries are allowed, and the
/// all-zero vector (n = 0) is kept as the end point of slicing.
class ThetaRep {
public:
  /// Requires m = r.size() >= 2 and r_t >= 0.
  explicit ThetaRep(std::vector<int> r);

  [[nodiscard]] int order() const { return static_cast<int>(r_.size()); }
  [[nodiscard]] int n() const;
  [[nodiscard]] int operator[](int t) const { return r_[static_cast<std::size_t>(((t % order()) + order()) % order())]; }
  [[nodiscard]] const std::vector<int> &multiplicities() const { return r_; }

  friend bool operator==(const ThetaRep &, const ThetaRep &) = default;
  friend auto operator<=>(const ThetaRep &a, const ThetaRep &b) {
    if (a.order() != b.order())
      return a.order() <=> b.order();
    if (a.n() != b.n())
      return a.n() <=> b.n();
    return a.r_ <=> b.r_;
  }

  /// "m=4 r=3,3,1,2"
  [[nodiscard]] std::string str() const;
  /// "3,3,1,2"
  [[nodiscard]] std::string vectorStr() const;
  /// Accepts "m=4 r=3,3,1,2", "r=3,3,1,2" or "3,3,1,2"; a given m must
  /// match and n must be positive.
  static ThetaRep parse(const std::string &text);

private:
  std::vector<int> r_;
};

struct GradedDims {
  long g0 = 0, g1 = 0, gMinus1 = 0;
  friend bool operator==(const GradedDims &, const GradedDims &) = default;
};

/// Cyclic Kac diagram of affine type A: true = black (label 1).
struct KacDiagramA {
  std::vector<bool> nodes;
  friend bool operator==(const KacDiagramA &, const KacDiagramA &) = default;
  /// Cycle of 'o' (white) and '●' (black), read from node 0.
  [[nodiscard]] std::string render() const;
  static KacDiagramA parse(const std::string &text);
};

/// Dimension of a Cartan subspace of g_1: min_t r_t.
int rankOfRep(const ThetaRep &T);
GradedDims gradedDims(const ThetaRep &T);

/// Black nodes mark the starts of the m arcs; r_i = 1 + whites before the next black.
ThetaRep fromKacDiagram(const KacDiagramA &D);
KacDiagramA toKacDiagram(const ThetaRep &T);

ThetaRep normalizeCyclic(const ThetaRep &T);
ThetaRep sliceReduce(const ThetaRep &T, int b);
/// (r_0, r_{m-1}, ..., r_1): the same grading with g_{-1} as the degree-one piece.
ThetaRep dualRep(const ThetaRep &T);

struct PatternFlags {
  bool hasCyclicTripleGe2 = false;
  bool m3GibShape = false;
  bool unitWithoutTriple = false;
  friend bool operator==(const PatternFlags &, const PatternFlags &) = default;
};

/// Shape predicates used to predict the GIB verdict. Triples are read
/// cyclically; for m < 3 there is no triple and the flags are false.
PatternFlags patternPredicates(const ThetaRep &T);

enum class Prediction { Gib, NoGib, None };
/// Verdict expected from the known classification for m = 3 (all ranks)
/// Verdict predicted by the classification theorems for m = 3 (all ranks)
/// and m >= 4 with positive rank; None elsewhere.
Prediction predictVerdict(const ThetaRep &T);

} // namespace gib

#pragma once

// Reference computations that share no code with the library beyond the
// plain data types. Each one recomputes a quantity from first principles.

#include "gib/centralizer.hpp"
#include "gib/linear_form.hpp"
#include "gib/orbits.hpp"
#include "gib/theta_rep.hpp"

#include <cstdint>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix zeroMatrix(std::size_t n);
IntMatrix commutator(const IntMatrix &a, const IntMatrix &b);

/// Explicit n x n model of e and of the centraliser basis on the space with
/// basis e^k w_i (block i, 0 <= k <= d_i).
class MatrixModel {
public:
  MatrixModel(const gib::LabeledPartition &P, int m);

  [[nodiscard]] std::size_t dim() const { return n_; }
  [[nodiscard]] std::size_t position(int block, int k) const { return offset_[static_cast<std::size_t>(block)] + static_cast<std::size_t>(k); }
  /// theta-weight of e^k w_i, i.e. t_i + k mod m
  [[nodiscard]] int weight(std::size_t pos) const { return weight_[pos]; }
  [[nodiscard]] const IntMatrix &e() const { return e_; }
  [[nodiscard]] IntMatrix xi(const gib::XiElement &x) const;
  [[nodiscard]] IntMatrix combination(const gib::XiCombination &c) const;
  /// Coefficient of xi_i^{j,s} in a centraliser element X, read off the
  /// entry X[pos(j, s)][pos(i, 0)].
  [[nodiscard]] long coefficient(const IntMatrix &X, const gib::XiElement &x) const;

private:
  std::size_t n_ = 0;
  int m_;
  std::vector<std::size_t> offset_;
  std::vector<int> length_;
  std::vector<int> weight_;
  IntMatrix e_;
};

/// n^2 minus the rank of ad(e) on gl_n, by exact elimination.
std::size_t centraliserDimension(const MatrixModel &model);

/// Number of GL(V_0) x ... x GL(V_{m-1}) orbits on nilpotent cyclic-quiver
/// representations of dimension vector r over F_2, by exhaustive union of
/// orbits. Only feasible for tiny r.
std::size_t nilpotentOrbitCountF2(const std::vector<int> &r);

/// Enumerates every partition of n with every assignment of labels mod m,
/// canonicalises and deduplicates the valid ones.
std::size_t labelAssignmentOrbitCount(const gib::ThetaRep &T);

/// Structure constants of g_{0,e} acting on g_{-1,e} computed by explicit
/// matrix commutators.
gib::ActionData actionByMatrices(const gib::GradedCentralizer &C);

/// Maximum exact rational rank over `points` random integer points.
std::size_t sampledRank(const gib::LinearFormMatrix &M, std::size_t points, std::uint64_t seed);

/// Random matrix of linear forms with entries built as B * L * C where L is
/// inner x inner with random linear entries and B, C are random integer
/// matrices, so the generic rank is at most `inner`.
gib::LinearFormMatrix randomLowRank(std::size_t rows, std::size_t cols, std::size_t inner, std::size_t nvars,
                                    std::uint64_t seed);

} // namespace oracle

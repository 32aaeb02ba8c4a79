#pragma once

#include "gib/orbits.hpp"
#include "gib/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gib {

/// Basis element xi_i^{j,s} of the centraliser g_e: sends the generator
/// w_i to e^s w_j and every other generator to 0. Blocks are 0-based here
/// and printed 1-based.
struct XiElement {
  int i = 0, j = 0, s = 0;
  friend bool operator==(const XiElement &, const XiElement &) = default;
  friend auto operator<=>(const XiElement &, const XiElement &) = default;
  [[nodiscard]] std::string str() const;
};

using XiCombination = std::vector<std::pair<XiElement, int>>;

/// Centraliser basis of a nilpotent element bucketed by Z/mZ-degree.
class GradedCentralizer {
public:
  GradedCentralizer(LabeledPartition partition, int m);

  [[nodiscard]] const LabeledPartition &partition() const { return partition_; }
  [[nodiscard]] int order() const { return m_; }
  /// Basis of g_{k,e}, sorted by (i, j, s); k is taken mod m.
  [[nodiscard]] const std::vector<XiElement> &degree(int k) const;
  [[nodiscard]] std::size_t dimension() const;

  /// d_i = length of block i minus one.
  [[nodiscard]] int blockDegree(int i) const { return partition_[static_cast<std::size_t>(i)].length - 1; }
  /// max(d_j - d_i, 0) <= s <= d_j
  [[nodiscard]] bool inRange(int i, int j, int s) const;
  /// s + t(j) - t(i) mod m
  [[nodiscard]] int degreeOf(const XiElement &x) const;
  /// Position of x inside its degree bucket.
  [[nodiscard]] std::optional<std::size_t> indexOf(const XiElement &x) const;

  /// Listing of the basis per degree, one line per nonempty degree.
  [[nodiscard]] std::string dump() const;

private:
  LabeledPartition partition_;
  int m_;
  std::vector<std::vector<XiElement>> byDegree_;
};

GradedCentralizer buildCentralizer(const LabeledPartition &P, int m);

/// [xi_i^{j,s}, xi_p^{q,t}] = delta_{q,i} xi_p^{j,t+s} - delta_{j,p} xi_i^{q,s+t},
/// dropping out-of-range terms.
XiCombination bracket(const GradedCentralizer &C, const XiElement &x, const XiElement &y);

/// Structure constants of a module action: x_row . v_col = sum coeff * v_target.
struct ActionEntry {
  std::size_t row = 0, col = 0, target = 0;
  Rational coeff;
  friend bool operator==(const ActionEntry &, const ActionEntry &) = default;
};

/// Finite-dimensional module data (dim q, dim V, sparse bracket tensor).
struct ActionData {
  std::size_t dimQ = 0, dimV = 0;
  std::vector<ActionEntry> entries;
  friend bool operator==(const ActionData &, const ActionData &) = default;
};

/// Action of g_{0,e} (rows) on g_{-1,e} (columns, targets). Throws
/// GradingError if a bracket leaves g_{-1,e}.
ActionData actionStructureConstants(const GradedCentralizer &C);

} // namespace gib

#pragma once

#include "gib/theta_rep.hpp"

#include <compare>
#include <string>
#include <vector>

namespace gib {

/// A Jordan block of a nilpotent e in g_1: `length` = d + 1 and `label` = t,
/// where the block generator w satisfies theta(w) = zeta^t w.
struct Block {
  int length = 1;
  int label = 0;
  friend bool operator==(const Block &, const Block &) = default;
  /// Canonical order: longer blocks first, then smaller labels.
  friend std::strong_ordering operator<=>(const Block &a, const Block &b) {
    if (a.length != b.length)
      return b.length <=> a.length;
    return a.label <=> b.label;
  }
};

/// Labeled partition parametrising a nilpotent G_0-orbit in g_1.
/// Blocks are stored in canonical order.
class LabeledPartition {
public:
  LabeledPartition() = default;
  explicit LabeledPartition(std::vector<Block> blocks);

  [[nodiscard]] const std::vector<Block> &blocks() const { return blocks_; }
  [[nodiscard]] std::size_t blockCount() const { return blocks_.size(); }
  [[nodiscard]] const Block &operator[](std::size_t i) const { return blocks_[i]; }
  [[nodiscard]] int n() const;
  /// Residue counts: entry c is the number of basis vectors e^s w_i of weight c mod m.
  [[nodiscard]] std::vector<int> weightCounts(int m) const;

  friend bool operator==(const LabeledPartition &, const LabeledPartition &) = default;
  friend auto operator<=>(const LabeledPartition &, const LabeledPartition &) = default;

  /// "5^0 3^1 1^2"
  [[nodiscard]] std::string str() const;
  static LabeledPartition parse(const std::string &text);

private:
  std::vector<Block> blocks_;
};

/// Labels in [0, m) and weight counts equal to r.
bool isValid(const LabeledPartition &P, const ThetaRep &T);

/// All labeled partitions with weight counts r, each once, in canonical
/// (lexicographic) order. Includes the zero orbit (all blocks of length 1).
std::vector<LabeledPartition> enumerateOrbits(const ThetaRep &T);

/// dim g_0 - dim g_{0,e}. Throws PreconditionError for an invalid partition.
long orbitDimension(const LabeledPartition &P, const ThetaRep &T);

} // namespace gib

#include "gib/orbits.hpp"

#include "gib/centralizer.hpp"
#include "gib/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gib {

LabeledPartition::LabeledPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (const Block &b : blocks_)
    if (b.length < 1 || b.label < 0)
      throw PreconditionError("block lengths must be positive and labels non-negative");
  std::sort(blocks_.begin(), blocks_.end());
}

int LabeledPartition::n() const {
  return std::accumulate(blocks_.begin(), blocks_.end(), 0,
                         [](int acc, const Block &b) { return acc + b.length; });
}

std::vector<int> LabeledPartition::weightCounts(int m) const {
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  for (const Block &b : blocks_)
    for (int s = 0; s < b.length; ++s)
      ++counts[static_cast<std::size_t>((b.label + s) % m)];
  return counts;
}

std::string LabeledPartition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    os << (i ? " " : "") << blocks_[i].length << "^" << blocks_[i].label;
  return os.str();
}

LabeledPartition LabeledPartition::parse(const std::string &text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Block> blocks;
  while (in >> tok) {
    const auto caret = tok.find('^');
    if (caret == std::string::npos)
      throw ParseError("block '" + tok + "' is not of the form length^label");
    try {
      std::size_t u1 = 0, u2 = 0;
      const std::string a = tok.substr(0, caret), b = tok.substr(caret + 1);
      Block blk{std::stoi(a, &u1), std::stoi(b, &u2)};
      if (u1 != a.size() || u2 != b.size())
        throw ParseError("");
      blocks.push_back(blk);
    } catch (const std::exception &) {
      throw ParseError("block '" + tok + "' is not of the form length^label");
    }
  }
  try {
    return LabeledPartition(std::move(blocks));
  } catch (const PreconditionError &e) {
    throw ParseError(e.what());
  }
}

bool isValid(const LabeledPartition &P, const ThetaRep &T) {
  const int m = T.order();
  for (const Block &b : P.blocks())
    if (b.label >= m)
      return false;
  return P.weightCounts(m) == T.multiplicities();
}

namespace {

struct Enumerator {
  int m;
  std::vector<Block> candidates;
  std::vector<std::vector<int>> usage; // weight counts per candidate
  std::vector<int> budget;
  std::vector<Block> current;
  std::vector<LabeledPartition> out;

  void run(std::size_t start, int remaining) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::size_t c = start; c < candidates.size(); ++c) {
      if (candidates[c].length > remaining)
        continue;
      const auto &u = usage[c];
      bool fits = true;
      for (int t = 0; t < m && fits; ++t)
        fits = u[static_cast<std::size_t>(t)] <= budget[static_cast<std::size_t>(t)];
      if (!fits)
        continue;
      for (int t = 0; t < m; ++t)
        budget[static_cast<std::size_t>(t)] -= u[static_cast<std::size_t>(t)];
      current.push_back(candidates[c]);
      run(c, remaining - candidates[c].length);
      current.pop_back();
      for (int t = 0; t < m; ++t)
        budget[static_cast<std::size_t>(t)] += u[static_cast<std::size_t>(t)];
    }
  }
};

} // namespace

std::vector<LabeledPartition> enumerateOrbits(const ThetaRep &T) {
  Enumerator e;
  e.m = T.order();
  e.budget = T.multiplicities();
  for (int len = T.n(); len >= 1; --len)
    for (int t = 0; t < e.m; ++t) {
      Block b{len, t};
      LabeledPartition single({b});
      e.candidates.push_back(b);
      e.usage.push_back(single.weightCounts(e.m));
    }
  e.run(0, T.n());
  std::sort(e.out.begin(), e.out.end());
  return std::move(e.out);
}

long orbitDimension(const LabeledPartition &P, const ThetaRep &T) {
  if (!isValid(P, T))
    throw PreconditionError("partition " + P.str() + " is not a nilpotent orbit for " + T.str());
  const GradedCentralizer C = buildCentralizer(P, T.order());
  return gradedDims(T).g0 - static_cast<long>(C.degree(0).size());
}

} // namespace gib

#include "gib/rank.hpp"

#include "gib/errors.hpp"
#include "gib/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace gib {

std::size_t modp::rank(Matrix m, std::uint64_t p) {
  if (m.empty())
    return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t inv = inverse(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j)
      m[r][j] = mul(m[r][j], inv, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = m[i][c];
      if (f == 0)
        continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = sub(m[i][j], mul(f, m[r][j], p), p);
    }
    ++r;
  }
  return r;
}

RationalMatrix evaluate(const LinearFormMatrix &m, std::span<const Rational> point) {
  if (point.size() != m.numIndeterminates())
    throw DimensionError("evaluation point has length " + std::to_string(point.size()) +
                         ", matrix has " + std::to_string(m.numIndeterminates()) + " indeterminates");
  RationalMatrix out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = m.at(i, j).evaluate(point);
  return out;
}

modp::Matrix evaluate(const LinearFormMatrix &m, std::span<const std::uint64_t> point, std::uint64_t p) {
  if (point.size() != m.numIndeterminates())
    throw DimensionError("evaluation point has length " + std::to_string(point.size()) +
                         ", matrix has " + std::to_string(m.numIndeterminates()) + " indeterminates");
  modp::Matrix out(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i][j] = m.at(i, j).evaluate(point, p);
  return out;
}

std::size_t exactRank(RationalMatrix m) {
  if (m.empty())
    return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].isZero())
      ++piv;
    if (piv == rows)
      continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c].isZero())
        continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t probabilisticRank(const LinearFormMatrix &m, std::size_t trials, std::uint64_t seed,
                              std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0 || m.isZero())
    return 0;
  // reduce coefficients once, then reuse for every trial
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> coeffs(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto &[k, c] : m.at(i, j).terms())
        coeffs[i * cols + j].emplace_back(k, c.modP(p));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  const std::size_t cap = std::min(rows, cols);
  std::size_t best = 0;
  std::vector<std::uint64_t> point(m.numIndeterminates());
  for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1) && best < cap; ++t) {
    for (auto &x : point)
      x = dist(rng);
    modp::Matrix e(rows, std::vector<std::uint64_t>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        std::uint64_t acc = 0;
        for (const auto &[k, c] : coeffs[i * cols + j])
          acc = modp::add(acc, modp::mul(c, point[k], p), p);
        e[i][j] = acc;
      }
    best = std::max(best, modp::rank(std::move(e), p));
  }
  return best;
}

namespace {

using SparseVec = std::map<std::size_t, Rational>;

// Echelon basis keyed by leading index; accepts a vector iff it is
// Q-independent of what was accepted before.
class IndependenceTracker {
public:
  bool insert(SparseVec v) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto b = basis_.find(lead->first);
      if (b == basis_.end()) {
        const Rational inv = Rational(1) / lead->second;
        for (auto &[idx, c] : v)
          c *= inv;
        const std::size_t key = lead->first;
        basis_.emplace(key, std::move(v));
        return true;
      }
      const Rational f = lead->second;
      for (const auto &[idx, c] : b->second) {
        auto [pos, inserted] = v.try_emplace(idx);
        pos->second -= f * c;
        if (pos->second.isZero())
          v.erase(pos);
      }
    }
    return false;
  }

private:
  std::map<std::size_t, SparseVec> basis_;
};

std::vector<std::size_t> independentRows(const LinearFormMatrix &m) {
  const std::size_t s = m.numIndeterminates();
  IndependenceTracker tracker;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseVec v;
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const auto &[k, c] : m.at(i, j).terms())
        v.emplace(j * s + k, c);
    if (tracker.insert(std::move(v)))
      keep.push_back(i);
  }
  return keep;
}

struct Block {
  std::vector<std::size_t> rows, cols;
};

// Connected components of the bipartite row/column incidence graph.
std::vector<Block> blocks(const LinearFormMatrix &m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> parent(R + C);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (!m.at(i, j).isZero())
        parent[find(i)] = find(R + j);
  std::map<std::size_t, Block> byRoot;
  for (std::size_t i = 0; i < R; ++i)
    if (!m.rowIsZero(i))
      byRoot[find(i)].rows.push_back(i);
  for (std::size_t j = 0; j < C; ++j) {
    auto it = byRoot.find(find(R + j));
    if (it != byRoot.end())
      it->second.cols.push_back(j);
  }
  std::vector<Block> out;
  for (auto &kv : byRoot)
    out.push_back(std::move(kv.second));
  return out;
}

void checkSize(const MultiPoly &p, std::size_t limit) {
  if (p.termCount() > limit)
    throw ResourceLimitError(p.termCount(), limit);
}

std::size_t bareissRank(std::vector<std::vector<MultiPoly>> a, std::size_t nvars, std::size_t limit) {
  const std::size_t R = a.size();
  if (R == 0)
    return 0;
  const std::size_t C = a.front().size();
  MultiPoly prev = MultiPoly::constant(nvars, 1);
  std::size_t k = 0;
  for (; k < std::min(R, C); ++k) {
    std::size_t pi = R, pj = C, best = 0;
    for (std::size_t i = k; i < R; ++i)
      for (std::size_t j = k; j < C; ++j) {
        const std::size_t t = a[i][j].termCount();
        if (t && (pi == R || t < best)) {
          pi = i;
          pj = j;
          best = t;
        }
      }
    if (pi == R)
      break;
    std::swap(a[k], a[pi]);
    if (pj != k)
      for (auto &row : a)
        std::swap(row[k], row[pj]);
    const MultiPoly &piv = a[k][k];
    for (std::size_t i = k + 1; i < R; ++i) {
      const bool hasLead = !a[i][k].isZero();
      for (std::size_t j = k + 1; j < C; ++j) {
        if (a[i][j].isZero() && (!hasLead || a[k][j].isZero()))
          continue;
        MultiPoly num = piv * a[i][j];
        if (hasLead && !a[k][j].isZero())
          num -= a[i][k] * a[k][j];
        checkSize(num, limit);
        a[i][j] = num.divideExact(prev);
      }
      a[i][k] = MultiPoly(nvars);
    }
    prev = a[k][k];
  }
  return k;
}

} // namespace

LinearFormMatrix groundFieldReduce(const LinearFormMatrix &m) {
  std::vector<std::size_t> allCols(m.cols());
  std::iota(allCols.begin(), allCols.end(), 0);
  const auto rowsKept = independentRows(m);
  LinearFormMatrix byRows = m.submatrix(rowsKept, allCols);
  const auto colsKept = independentRows(byRows.transposed());
  std::vector<std::size_t> allRows(byRows.rows());
  std::iota(allRows.begin(), allRows.end(), 0);
  return byRows.submatrix(allRows, colsKept);
}

std::size_t termRank(const LinearFormMatrix &m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<std::size_t>> adj(R);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j)
      if (!m.at(i, j).isZero())
        adj[i].push_back(j);
  std::vector<std::size_t> matchCol(C, R);
  std::vector<char> seen;
  auto augment = [&](auto &&self, std::size_t i) -> bool {
    for (std::size_t j : adj[i]) {
      if (seen[j])
        continue;
      seen[j] = 1;
      if (matchCol[j] == R || self(self, matchCol[j])) {
        matchCol[j] = i;
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t i = 0; i < R; ++i) {
    seen.assign(C, 0);
    if (augment(augment, i))
      ++matched;
  }
  return matched;
}

std::size_t certifiedRank(const LinearFormMatrix &m, const CertifiedRankOptions &opts) {
  const LinearFormMatrix reduced = groundFieldReduce(m);
  std::size_t total = 0;
  for (const Block &b : blocks(reduced)) {
    LinearFormMatrix sub = reduced.submatrix(b.rows, b.cols);
    // compact the indeterminates used by this block
    std::map<std::uint32_t, std::size_t> varIndex;
    for (std::size_t i = 0; i < sub.rows(); ++i)
      for (std::size_t j = 0; j < sub.cols(); ++j)
        for (const auto &[k, c] : sub.at(i, j).terms())
          varIndex.emplace(k, 0);
    std::size_t next = 0;
    for (auto &kv : varIndex)
      kv.second = next++;
    const std::size_t nv = varIndex.size();

    std::vector<std::vector<MultiPoly>> a(sub.rows(), std::vector<MultiPoly>(sub.cols(), MultiPoly(nv)));
    for (std::size_t i = 0; i < sub.rows(); ++i) {
      // clearing denominators row-wise keeps the rank
      Integer scale = 1;
      for (std::size_t j = 0; j < sub.cols(); ++j)
        for (const auto &[k, c] : sub.at(i, j).terms())
          mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.denominator().get_mpz_t());
      for (std::size_t j = 0; j < sub.cols(); ++j) {
        MultiPoly p(nv);
        for (const auto &[k, c] : sub.at(i, j).terms()) {
          Integer coeff = c.numerator() * (scale / c.denominator());
          p += MultiPoly::variable(nv, varIndex.at(k), coeff);
        }
        a[i][j] = std::move(p);
      }
    }
    total += bareissRank(std::move(a), nv, opts.termLimit);
  }
  return total;
}

} // namespace gib

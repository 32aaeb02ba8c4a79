#include "gib/centralizer.hpp"

#include "gib/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gib {

std::string XiElement::str() const {
  return "xi_" + std::to_string(i + 1) + "^{" + std::to_string(j + 1) + "," + std::to_string(s) + "}";
}

GradedCentralizer::GradedCentralizer(LabeledPartition partition, int m)
    : partition_(std::move(partition)), m_(m), byDegree_(static_cast<std::size_t>(m)) {
  if (m < 1)
    throw PreconditionError("grading order must be positive");
  const int k = static_cast<int>(partition_.blockCount());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int s = std::max(blockDegree(j) - blockDegree(i), 0); s <= blockDegree(j); ++s) {
        XiElement x{i, j, s};
        byDegree_[static_cast<std::size_t>(degreeOf(x))].push_back(x);
      }
}

const std::vector<XiElement> &GradedCentralizer::degree(int k) const {
  return byDegree_[static_cast<std::size_t>(((k % m_) + m_) % m_)];
}

std::size_t GradedCentralizer::dimension() const {
  std::size_t d = 0;
  for (const auto &b : byDegree_)
    d += b.size();
  return d;
}

bool GradedCentralizer::inRange(int i, int j, int s) const {
  return s >= std::max(blockDegree(j) - blockDegree(i), 0) && s <= blockDegree(j);
}

int GradedCentralizer::degreeOf(const XiElement &x) const {
  const int d = x.s + partition_[static_cast<std::size_t>(x.j)].label - partition_[static_cast<std::size_t>(x.i)].label;
  return ((d % m_) + m_) % m_;
}

std::optional<std::size_t> GradedCentralizer::indexOf(const XiElement &x) const {
  if (x.i < 0 || x.j < 0 || static_cast<std::size_t>(std::max(x.i, x.j)) >= partition_.blockCount() ||
      !inRange(x.i, x.j, x.s))
    return std::nullopt;
  const auto &bucket = degree(degreeOf(x));
  auto it = std::lower_bound(bucket.begin(), bucket.end(), x);
  if (it == bucket.end() || *it != x)
    return std::nullopt;
  return static_cast<std::size_t>(it - bucket.begin());
}

std::string GradedCentralizer::dump() const {
  std::ostringstream os;
  for (int k = 0; k < m_; ++k) {
    const auto &b = degree(k);
    if (b.empty())
      continue;
    os << "degree " << k << " (" << b.size() << "):";
    for (const auto &x : b)
      os << " " << x.str();
    os << "\n";
  }
  return os.str();
}

GradedCentralizer buildCentralizer(const LabeledPartition &P, int m) { return GradedCentralizer(P, m); }

XiCombination bracket(const GradedCentralizer &C, const XiElement &x, const XiElement &y) {
  XiCombination out;
  auto push = [&](XiElement e, int c) {
    if (!C.inRange(e.i, e.j, e.s))
      return;
    for (auto &[el, coeff] : out)
      if (el == e) {
        coeff += c;
        return;
      }
    out.emplace_back(e, c);
  };
  if (y.j == x.i)
    push({y.i, x.j, x.s + y.s}, +1);
  if (x.j == y.i)
    push({x.i, y.j, x.s + y.s}, -1);
  std::erase_if(out, [](const auto &t) { return t.second == 0; });
  std::sort(out.begin(), out.end());
  return out;
}

ActionData actionStructureConstants(const GradedCentralizer &C) {
  const auto &q = C.degree(0);
  const auto &v = C.degree(C.order() - 1);
  ActionData a;
  a.dimQ = q.size();
  a.dimV = v.size();
  for (std::size_t r = 0; r < q.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      for (const auto &[el, coeff] : bracket(C, q[r], v[c])) {
        if (C.degreeOf(el) != C.order() - 1)
          throw GradingError("bracket " + q[r].str() + " with " + v[c].str() + " left g_{-1,e}");
        const auto k = C.indexOf(el);
        if (!k)
          throw GradingError("bracket term " + el.str() + " is not a basis element");
        a.entries.push_back({r, c, *k, Rational(coeff)});
      }
  return a;
}

} // namespace gib

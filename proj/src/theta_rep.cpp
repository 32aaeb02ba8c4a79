#include "gib/theta_rep.hpp"

#include "gib/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gib {

ThetaRep::ThetaRep(std::vector<int> r) : r_(std::move(r)) {
  if (r_.size() < 2)
    throw PreconditionError("automorphism order must be at least 2");
  if (std::any_of(r_.begin(), r_.end(), [](int x) { return x < 0; }))
    throw PreconditionError("multiplicities must be non-negative");
}

int ThetaRep::n() const { return std::accumulate(r_.begin(), r_.end(), 0); }

std::string ThetaRep::vectorStr() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_.size(); ++i)
    os << (i ? "," : "") << r_[i];
  return os.str();
}

std::string ThetaRep::str() const { return "m=" + std::to_string(order()) + " r=" + vectorStr(); }

ThetaRep ThetaRep::parse(const std::string &text) {
  std::istringstream in(text);
  std::string tok, vec;
  int m = -1;
  while (in >> tok) {
    if (tok.rfind("m=", 0) == 0) {
      try {
        m = std::stoi(tok.substr(2));
      } catch (const std::exception &) {
        throw ParseError("bad order in '" + text + "'");
      }
    } else if (tok.rfind("r=", 0) == 0) {
      vec = tok.substr(2);
    } else if (vec.empty()) {
      vec = tok;
    } else {
      throw ParseError("unexpected token '" + tok + "' in '" + text + "'");
    }
  }
  if (vec.empty())
    throw ParseError("no multiplicity vector in '" + text + "'");
  std::vector<int> r;
  std::istringstream parts(vec);
  std::string piece;
  while (std::getline(parts, piece, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(piece, &used);
    } catch (const std::exception &) {
      throw ParseError("bad multiplicity '" + piece + "' in '" + text + "'");
    }
    if (used != piece.size())
      throw ParseError("bad multiplicity '" + piece + "' in '" + text + "'");
    r.push_back(v);
  }
  if (m >= 0 && static_cast<std::size_t>(m) != r.size())
    throw ParseError("m=" + std::to_string(m) + " but " + std::to_string(r.size()) + " multiplicities given");
  if (std::accumulate(r.begin(), r.end(), 0) < 1)
    throw ParseError("multiplicities must sum to at least 1 in '" + text + "'");
  try {
    return ThetaRep(std::move(r));
  } catch (const PreconditionError &e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

std::string KacDiagramA::render() const {
  std::string out;
  for (bool b : nodes)
    out += b ? "●" : "o";
  return out;
}

KacDiagramA KacDiagramA::parse(const std::string &text) {
  KacDiagramA d;
  const std::string black = "●";
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, black.size(), black) == 0) {
      d.nodes.push_back(true);
      i += black.size();
    } else if (text[i] == 'o' || text[i] == '0') {
      d.nodes.push_back(false);
      ++i;
    } else if (text[i] == '*' || text[i] == '1') {
      d.nodes.push_back(true);
      ++i;
    } else if (text[i] == '-' || text[i] == ' ') {
      ++i;
    } else {
      throw ParseError("unexpected character in Kac diagram '" + text + "'");
    }
  }
  return d;
}

int rankOfRep(const ThetaRep &T) {
  const auto &r = T.multiplicities();
  return *std::min_element(r.begin(), r.end());
}

GradedDims gradedDims(const ThetaRep &T) {
  GradedDims d;
  for (int t = 0; t < T.order(); ++t) {
    d.g0 += static_cast<long>(T[t]) * T[t];
    d.g1 += static_cast<long>(T[t]) * T[t + 1];
  }
  d.gMinus1 = d.g1;
  return d;
}

ThetaRep fromKacDiagram(const KacDiagramA &D) {
  const auto &nodes = D.nodes;
  auto first = std::find(nodes.begin(), nodes.end(), true);
  if (first == nodes.end())
    throw PreconditionError("Kac diagram has no black node");
  const std::size_t n = nodes.size();
  const std::size_t start = static_cast<std::size_t>(first - nodes.begin());
  std::vector<int> r;
  int arc = 0;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t pos = (start + step) % n;
    if (nodes[pos] && step > 0) {
      r.push_back(arc);
      arc = 0;
    }
    ++arc;
  }
  r.push_back(arc);
  if (r.size() < 2)
    throw PreconditionError("Kac diagram with a single black node has order 1");
  return ThetaRep(std::move(r));
}

KacDiagramA toKacDiagram(const ThetaRep &T) {
  KacDiagramA d;
  for (int x : T.multiplicities()) {
    if (x < 1)
      throw PreconditionError("Kac diagram needs every multiplicity >= 1, got " + T.vectorStr());
    d.nodes.push_back(true);
    d.nodes.insert(d.nodes.end(), static_cast<std::size_t>(x - 1), false);
  }
  return d;
}

ThetaRep normalizeCyclic(const ThetaRep &T) {
  const auto &r = T.multiplicities();
  std::vector<int> best = r, rot = r;
  for (std::size_t k = 1; k < r.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best)
      best = rot;
  }
  return ThetaRep(std::move(best));
}

ThetaRep sliceReduce(const ThetaRep &T, int b) {
  if (b < 0 || b > rankOfRep(T))
    throw PreconditionError("slice parameter " + std::to_string(b) + " exceeds rank of " + T.vectorStr());
  std::vector<int> r = T.multiplicities();
  for (int &x : r)
    x -= b;
  return ThetaRep(std::move(r));
}

ThetaRep dualRep(const ThetaRep &T) {
  std::vector<int> r = T.multiplicities();
  std::reverse(r.begin() + 1, r.end());
  return ThetaRep(std::move(r));
}

PatternFlags patternPredicates(const ThetaRep &T) {
  PatternFlags f;
  const int m = T.order();
  if (m >= 3)
    for (int i = 0; i < m && !f.hasCyclicTripleGe2; ++i)
      f.hasCyclicTripleGe2 = T[i] >= 2 && T[i + 1] >= 2 && T[i + 2] >= 2;
  if (m == 3) {
    const auto &r = T.multiplicities();
    f.m3GibShape = rankOfRep(T) <= 1 || std::count(r.begin(), r.end(), 2) >= 2;
  }
  if (m >= 3) {
    const auto &r = T.multiplicities();
    // rotating a 1 to the front makes the cyclic and linear readings agree
    f.unitWithoutTriple = std::count(r.begin(), r.end(), 1) > 0 && !f.hasCyclicTripleGe2;
  }
  return f;
}

Prediction predictVerdict(const ThetaRep &T) {
  const PatternFlags f = patternPredicates(T);
  const int rank = rankOfRep(T);
  if (T.order() == 3)
    return f.m3GibShape ? Prediction::Gib : Prediction::NoGib;
  if (T.order() >= 4 && rank > 0) {
    if (rank > 1 || f.hasCyclicTripleGe2)
      return Prediction::NoGib;
    if (f.unitWithoutTriple)
      return Prediction::Gib;
  }
  return Prediction::None;
}

} // namespace gib

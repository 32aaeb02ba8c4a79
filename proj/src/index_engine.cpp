#include "gib/index_engine.hpp"

#include "gib/errors.hpp"
#include "gib/rank.hpp"

namespace gib {

std::string to_string(Certificate c) {
  switch (c) {
  case Certificate::None:
    return "none";
  case Certificate::LowerBoundMatch:
    return "lower-bound-match";
  case Certificate::ReducedShape:
    return "reduced-shape";
  case Certificate::TermRank:
    return "term-rank";
  case Certificate::Elimination:
    return "elimination";
  }
  return "none";
}

LinearFormMatrix buildActionMatrix(const ActionData &action) {
  LinearFormMatrix m(action.dimQ, action.dimV, action.dimV);
  for (const auto &e : action.entries) {
    if (e.row >= action.dimQ || e.col >= action.dimV || e.target >= action.dimV)
      throw ValidationError("structure constant index out of range");
    m.add(e.row, e.col, static_cast<std::uint32_t>(e.target), e.coeff);
  }
  return m;
}

LinearFormMatrix buildActionMatrix(const GradedCentralizer &C) {
  return buildActionMatrix(actionStructureConstants(C));
}

void setExactRank(IndexResult &result, std::size_t rank, Certificate how) {
  result.certRank = rank;
  result.index = result.dimModule - rank;
  result.certified = true;
  result.certificationAborted = false;
  result.certificate = how;
}

void certify(IndexResult &result, const LinearFormMatrix &matrix, std::size_t termLimit) {
  try {
    setExactRank(result, certifiedRank(matrix, {termLimit}), Certificate::Elimination);
  } catch (const ResourceLimitError &) {
    result.certificationAborted = true;
  }
}

IndexResult computeIndex(const ActionData &action, const IndexPolicy &policy) {
  const LinearFormMatrix m = buildActionMatrix(action);
  IndexResult r;
  r.dimModule = action.dimV;
  r.probRank = probabilisticRank(m, policy.trials, policy.seed);
  r.index = r.dimModule - r.probRank;
  if (policy.forceCertify)
    certify(r, m, policy.termLimit);
  return r;
}

IndexResult computeIndex(const GradedCentralizer &C, const IndexPolicy &policy) {
  return computeIndex(actionStructureConstants(C), policy);
}

} // namespace gib

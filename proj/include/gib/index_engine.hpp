#pragma once

#include "gib/centralizer.hpp"
#include "gib/linear_form.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

namespace gib {

/// How an exact rank (and hence index) was established.
enum class Certificate {
  None,            ///< probabilistic value only
  LowerBoundMatch, ///< evaluated rank meets the theoretical index lower bound
  ReducedShape,    ///< evaluated rank equals the row or column count of the reduced matrix
  TermRank,        ///< evaluated rank equals the term rank of the reduced matrix
  Elimination,     ///< fraction-free elimination over Z[a]
};

std::string to_string(Certificate c);

struct IndexPolicy {
  std::size_t trials = 3;
  std::uint64_t seed = 0x5eed;
  bool forceCertify = false;
  std::size_t termLimit = 1'000'000;
};

struct IndexResult {
  std::size_t dimModule = 0;
  std::size_t probRank = 0;
  std::optional<std::size_t> certRank;
  std::size_t index = 0;
  bool certified = false;
  /// certification was attempted and hit the term limit
  bool certificationAborted = false;
  Certificate certificate = Certificate::None;
};

/// Rows indexed by q, columns by V; entry (i, j) = sum_k N[i][j][k] a_k.
LinearFormMatrix buildActionMatrix(const ActionData &action);
LinearFormMatrix buildActionMatrix(const GradedCentralizer &C);

/// ind(q, V) = dim V - rank of the action matrix, probabilistic unless
/// `forceCertify` is set.
IndexResult computeIndex(const ActionData &action, const IndexPolicy &policy = {});
IndexResult computeIndex(const GradedCentralizer &C, const IndexPolicy &policy = {});

/// Replace the probabilistic value by an exact one (elimination); on the
/// term limit the result stays uncertified and `certificationAborted` is set.
void certify(IndexResult &result, const LinearFormMatrix &matrix, std::size_t termLimit);

/// Record an exact rank established by other means.
void setExactRank(IndexResult &result, std::size_t rank, Certificate how);

} // namespace gib

#pragma once

#include "gib/linear_form.hpp"
#include "gib/modp.hpp"
#include "gib/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gib {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Evaluate every entry at a rational point.
RationalMatrix evaluate(const LinearFormMatrix &m, std::span<const Rational> point);
/// Evaluate every entry at a point of F_p; p must be a prime above 2^30.
modp::Matrix evaluate(const LinearFormMatrix &m, std::span<const std::uint64_t> point,
                      std::uint64_t p = modp::kDefaultPrime);

/// Exact rank of a rational matrix (fraction-carrying Gaussian elimination).
std::size_t exactRank(RationalMatrix m);

/// Max rank over `trials` uniformly random points of F_p. A lower bound for
/// the generic rank over Q(a); deterministic for a given seed.
std::size_t probabilisticRank(const LinearFormMatrix &m, std::size_t trials, std::uint64_t seed,
                              std::uint64_t p = modp::kDefaultPrime);

/// Keep a maximal Q-independent subset of rows (rows read as vectors in
/// Q^{s*cols}), then the same for columns. Generic rank is unchanged.
LinearFormMatrix groundFieldReduce(const LinearFormMatrix &m);

/// Maximum matching in the bipartite graph of nonzero entries; an upper
/// bound on the generic rank.
std::size_t termRank(const LinearFormMatrix &m);

struct CertifiedRankOptions {
  std::size_t termLimit = 1'000'000;
};

/// Exact generic rank over Q(a_1..a_s): ground-field reduction, splitting
/// into independent blocks, then Bareiss elimination over Z[a] with
/// fewest-terms pivoting. Throws ResourceLimitError past `termLimit`.
std::size_t certifiedRank(const LinearFormMatrix &m, const CertifiedRankOptions &opts = {});

} // namespace gib

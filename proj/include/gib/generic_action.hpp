#pragma once

#include "gib/centralizer.hpp"
#include "gib/gib_checker.hpp"
#include "gib/index_engine.hpp"

#include <string>

namespace gib {

/// Externally supplied module action together with the rank it is
/// compared against.
///
/// File layout (indices 0-based, coefficient num/den):
///   {"dim_q": 2, "dim_v": 3, "target_rank": 1,
///    "brackets": [[i, j, k, num, den], ...]}
/// meaning x_i . v_j has coefficient num/den on v_k. Integers that do not fit
/// in 64 bits may be written as decimal strings.
struct GenericAction {
  ActionData action;
  int targetRank = 0;
  friend bool operator==(const GenericAction &, const GenericAction &) = default;
};

/// Throws ParseError (with byte offset or field path) on malformed input and
/// ValidationError when an index is out of range or a denominator is zero.
GenericAction parseGenericAction(const std::string &text);
GenericAction loadGenericAction(const std::string &path);

std::string exportGenericAction(const GenericAction &g);

struct GenericCheck {
  IndexResult index;
  int targetRank = 0;
  /// true iff the index equals the declared rank
  Verdict verdict = Verdict::Undecided;
};

/// Same escalation as for an orbit: random evaluation, then the shape and
/// term-rank shortcuts, then elimination. The declared rank is taken as a
/// lower bound for the index.
GenericCheck checkGenericAction(const GenericAction &g, const CheckPolicy &policy = {});

} // namespace gib

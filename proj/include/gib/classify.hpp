#pragma once

#include "gib/gib_checker.hpp"
#include "gib/theta_rep.hpp"

#include <string>
#include <vector>

namespace gib {

struct SweepSpec {
  int nMin = 1, nMax = 1;
  int mMin = 3, mMax = 3;
  /// representations with min r_t below this are skipped
  int minRank = 1;
  /// keep one representative per cyclic rotation class
  bool dedupCyclic = true;
};

/// Compositions of n into m non-negative parts for every (n, m) in range,
/// filtered and deduplicated according to `spec`, sorted by (m, n, r).
/// Throws PreconditionError for nMin < 1, mMin < 2 or empty ranges.
std::vector<ThetaRep> sweepReps(const SweepSpec &spec);

enum class Agreement { Agree, Disagree, NoPrediction };
std::string to_string(Agreement a);

struct ClassificationRow {
  ThetaRep rep{std::vector<int>{1, 0}};
  int rank = 0;
  std::size_t orbitCount = 0;
  Verdict repGib = Verdict::Undecided;
  std::vector<std::string> badOrbits;
  PatternFlags predicateFlags;
  Agreement agreement = Agreement::NoPrediction;
  friend bool operator==(const ClassificationRow &, const ClassificationRow &) = default;
};

/// Compares a computed verdict with predictVerdict. An undecided verdict
/// under a prediction counts as a disagreement.
Agreement compareWithPrediction(const ThetaRep &T, Verdict computed);

ClassificationRow toRow(const GibReport &report);

/// checkRep on every representation of the sweep. Representations are
/// distributed over `jobs` workers; the row order does not depend on it.
std::vector<ClassificationRow> sweep(const SweepSpec &spec, const CheckPolicy &policy = {}, unsigned jobs = 1);

enum class ReportFormat { Text, Json, Csv };
ReportFormat parseReportFormat(const std::string &name);

std::string emitReport(const std::vector<ClassificationRow> &rows, ReportFormat format);

/// Inverse of emitReport(rows, Json). Throws ParseError on malformed input.
std::vector<ClassificationRow> parseJsonReport(const std::string &text);

} // namespace gib

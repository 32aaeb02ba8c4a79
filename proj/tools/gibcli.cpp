#include "gib/classify.hpp"
#include "gib/errors.hpp"
#include "gib/generic_action.hpp"
#include "gib/gib_checker.hpp"
#include "gib/orbits.hpp"
#include "gib/theta_rep.hpp"

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <limits>

namespace {

struct Options {
  bool certifyAll = false;
  bool findAllBad = false;
  bool includeRankZero = false;
  bool noDedup = false;
  std::size_t trials = 3;
  std::uint64_t seed = 0x5eed;
  std::size_t termLimit = 1'000'000;
  std::size_t maxEliminations = std::numeric_limits<std::size_t>::max();
  std::string format = "text";
  unsigned jobs = 1;
  std::string rep;
  std::string orbit;
  std::string path;
  int nMin = 1, nMax = 6, mMin = 3, mMax = 3;
};

gib::CheckPolicy policyFrom(const Options &o) {
  gib::CheckPolicy p;
  p.certifyAll = o.certifyAll;
  p.stopAtFirstFalse = !o.findAllBad;
  p.index.trials = o.trials;
  p.index.seed = o.seed;
  p.index.termLimit = o.termLimit;
  p.certificationCap = o.maxEliminations;
  p.jobs = o.jobs;
  return p;
}

int exitFor(gib::Verdict v) { return v == gib::Verdict::Undecided ? 2 : 0; }

int runCheck(const Options &o) {
  const gib::ThetaRep T = gib::ThetaRep::parse(o.rep);
  const gib::GibReport report = gib::checkRep(T, policyFrom(o));
  const auto format = gib::parseReportFormat(o.format);
  std::cout << gib::emitReport({gib::toRow(report)}, format);
  if (format != gib::ReportFormat::Text)
    return exitFor(report.repGib);
  for (const auto &v : report.verdicts) {
    const auto &ir = v.indexResult;
    std::cout << "  " << v.orbit.str() << "  dims " << v.dimG0e << "x" << v.dimGm1e << "  reduced " << v.reducedRows
              << "x" << v.reducedCols << "  index " << ir.index << (ir.certified ? "" : "?") << "  via "
              << gib::to_string(ir.certificate) << (ir.certificationAborted ? " (elimination aborted)" : "")
              << "  gib " << gib::to_string(v.gib) << '\n';
  }
  return exitFor(report.repGib);
}

int runSweep(const Options &o) {
  gib::SweepSpec spec;
  spec.nMin = o.nMin;
  spec.nMax = o.nMax;
  spec.mMin = o.mMin;
  spec.mMax = o.mMax;
  spec.minRank = o.includeRankZero ? 0 : 1;
  spec.dedupCyclic = !o.noDedup;
  gib::CheckPolicy policy = policyFrom(o);
  const auto rows = gib::sweep(spec, policy, o.jobs);
  std::cout << gib::emitReport(rows, gib::parseReportFormat(o.format));
  for (const auto &row : rows)
    if (row.repGib == gib::Verdict::Undecided)
      return 2;
  return 0;
}

int runOrbits(const Options &o) {
  const gib::ThetaRep T = gib::ThetaRep::parse(o.rep);
  const auto orbits = gib::enumerateOrbits(T);
  std::cout << T.str() << "  " << orbits.size() << " orbits\n";
  for (const auto &P : orbits)
    std::cout << "  " << P.str() << "  dim " << gib::orbitDimension(P, T) << '\n';
  return 0;
}

int runIndexFile(const Options &o) {
  const gib::GenericAction g = gib::loadGenericAction(o.path);
  const gib::GenericCheck c = gib::checkGenericAction(g, policyFrom(o));
  std::cout << "dim_q " << g.action.dimQ << "  dim_v " << g.action.dimV << "  index " << c.index.index
            << (c.index.certified ? "" : "?") << "  via " << gib::to_string(c.index.certificate) << "  declared rank "
            << c.targetRank << "  gib " << gib::to_string(c.verdict) << '\n';
  return exitFor(c.verdict);
}

int runExport(const Options &o) {
  const gib::ThetaRep T = gib::ThetaRep::parse(o.rep);
  const gib::LabeledPartition P = gib::LabeledPartition::parse(o.orbit);
  if (!gib::isValid(P, T))
    throw gib::PreconditionError("orbit " + P.str() + " does not belong to " + T.str());
  const auto C = gib::buildCentralizer(P, T.order());
  std::cout << gib::exportGenericAction({gib::actionStructureConstants(C), gib::rankOfRep(T)});
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Decide the GIB property for theta-representations of gl_n"};
  app.require_subcommand(1);
  Options o;

  auto addPolicy = [&](CLI::App *cmd) {
    cmd->add_flag("--certify-all", o.certifyAll, "run exact elimination on every orbit");
    cmd->add_flag("--find-all-bad", o.findAllBad, "keep certifying after the first failing orbit");
    cmd->add_option("--trials", o.trials, "random evaluations per rank estimate")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "seed for the random evaluations");
    cmd->add_option("--term-limit", o.termLimit, "abort elimination above this many polynomial terms");
    cmd->add_option("--max-eliminations", o.maxEliminations, "elimination runs allowed per representation");
    cmd->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--include-rank-zero", o.includeRankZero, "keep representations with some r_t = 0");
  };

  auto *check = app.add_subcommand("check", "check one representation, e.g. 3,3,2");
  check->add_option("r", o.rep, "multiplicity vector")->required();
  addPolicy(check);

  auto *sweepCmd = app.add_subcommand("sweep", "classify all representations in a range");
  sweepCmd->add_option("--n-min", o.nMin, "smallest n")->check(CLI::PositiveNumber);
  sweepCmd->add_option("--n-max", o.nMax, "largest n")->check(CLI::PositiveNumber);
  sweepCmd->add_option("--m-min", o.mMin, "smallest order")->check(CLI::Range(2, 1000));
  sweepCmd->add_option("--m-max", o.mMax, "largest order")->check(CLI::Range(2, 1000));
  sweepCmd->add_flag("--no-dedup", o.noDedup, "do not identify cyclic rotations");
  addPolicy(sweepCmd);

  auto *orbitsCmd = app.add_subcommand("orbits", "list the nilpotent orbits of a representation");
  orbitsCmd->add_option("r", o.rep, "multiplicity vector")->required();

  auto *indexFile = app.add_subcommand("index-file", "index of an action given as JSON structure constants");
  indexFile->add_option("path", o.path, "JSON file")->required()->check(CLI::ExistingFile);
  addPolicy(indexFile);

  auto *exportCmd = app.add_subcommand("export-orbit", "write the action of one orbit in the index-file format");
  exportCmd->add_option("r", o.rep, "multiplicity vector")->required();
  exportCmd->add_option("orbit", o.orbit, "labeled partition, e.g. \"3^0 3^2 1^1\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*check)
      return runCheck(o);
    if (*sweepCmd)
      return runSweep(o);
    if (*orbitsCmd)
      return runOrbits(o);
    if (*indexFile)
      return runIndexFile(o);
    if (*exportCmd)
      return runExport(o);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

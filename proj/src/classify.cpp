#include "gib/classify.hpp"

#include "gib/errors.hpp"
#include "gib/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace gib {

namespace {

void compositions(int n, int m, std::vector<int> &prefix, std::vector<std::vector<int>> &out) {
  if (static_cast<int>(prefix.size()) == m - 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int part = 0; part <= n; ++part) {
    prefix.push_back(part);
    compositions(n - part, m, prefix, out);
    prefix.pop_back();
  }
}

nlohmann::json verdictJson(Verdict v) {
  if (v == Verdict::Undecided)
    return "undecided";
  return v == Verdict::True;
}

Verdict verdictFromJson(const nlohmann::json &j) {
  if (j.is_boolean())
    return j.get<bool>() ? Verdict::True : Verdict::False;
  if (j.is_string() && j.get<std::string>() == "undecided")
    return Verdict::Undecided;
  throw ParseError("rep_gib must be true, false or \"undecided\"");
}

nlohmann::json agreementJson(Agreement a) {
  if (a == Agreement::NoPrediction)
    return "no-prediction";
  return a == Agreement::Agree;
}

Agreement agreementFromJson(const nlohmann::json &j) {
  if (j.is_boolean())
    return j.get<bool>() ? Agreement::Agree : Agreement::Disagree;
  if (j.is_string() && j.get<std::string>() == "no-prediction")
    return Agreement::NoPrediction;
  throw ParseError("agreement must be true, false or \"no-prediction\"");
}

std::string joined(const std::vector<std::string> &items, const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? sep : "") + items[i];
  return out;
}

std::string csvQuote(const std::string &s) {
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string emitText(const std::vector<ClassificationRow> &rows) {
  std::ostringstream os;
  for (const auto &row : rows) {
    const auto &r = row.rep.multiplicities();
    const bool allPositive = std::all_of(r.begin(), r.end(), [](int x) { return x >= 1; });
    os << row.rep.str();
    if (allPositive)
      os << "  kac " << toKacDiagram(row.rep).render();
    os << "  rank " << row.rank << "  orbits " << row.orbitCount << "  gib " << to_string(row.repGib)
       << "  agreement " << to_string(row.agreement) << '\n';
    if (!row.badOrbits.empty())
      os << "    bad: " << joined(row.badOrbits, " | ") << '\n';
  }
  return os.str();
}

std::string emitCsv(const std::vector<ClassificationRow> &rows) {
  std::ostringstream os;
  os << "m,r,rank,orbit_count,rep_gib,bad_orbits,agreement\n";
  for (const auto &row : rows)
    os << row.rep.order() << ',' << csvQuote(row.rep.vectorStr()) << ',' << row.rank << ',' << row.orbitCount
       << ',' << to_string(row.repGib) << ',' << csvQuote(joined(row.badOrbits, ";")) << ','
       << to_string(row.agreement) << '\n';
  return os.str();
}

std::string emitJson(const std::vector<ClassificationRow> &rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto &row : rows) {
    nlohmann::json j;
    j["m"] = row.rep.order();
    j["r"] = row.rep.multiplicities();
    j["rank"] = row.rank;
    j["orbit_count"] = row.orbitCount;
    j["rep_gib"] = verdictJson(row.repGib);
    j["bad_orbits"] = row.badOrbits;
    j["predicate_flags"] = {
        {"cyclic_triple_ge2", row.predicateFlags.hasCyclicTripleGe2},
        {"m3_gib_shape", row.predicateFlags.m3GibShape},
        {"unit_without_triple", row.predicateFlags.unitWithoutTriple},
    };
    j["agreement"] = agreementJson(row.agreement);
    doc.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

} // namespace

std::vector<ThetaRep> sweepReps(const SweepSpec &spec) {
  if (spec.nMin < 1 || spec.mMin < 2 || spec.nMax < spec.nMin || spec.mMax < spec.mMin)
    throw PreconditionError("sweep needs 1 <= nMin <= nMax and 2 <= mMin <= mMax");
  std::set<ThetaRep> reps;
  for (int m = spec.mMin; m <= spec.mMax; ++m)
    for (int n = spec.nMin; n <= spec.nMax; ++n) {
      std::vector<std::vector<int>> all;
      std::vector<int> prefix;
      compositions(n, m, prefix, all);
      for (auto &r : all) {
        ThetaRep T(std::move(r));
        if (rankOfRep(T) < spec.minRank)
          continue;
        reps.insert(spec.dedupCyclic ? normalizeCyclic(T) : T);
      }
    }
  return {reps.begin(), reps.end()};
}

std::string to_string(Agreement a) {
  switch (a) {
  case Agreement::Agree:
    return "agree";
  case Agreement::Disagree:
    return "disagree";
  case Agreement::NoPrediction:
    return "no-prediction";
  }
  return "no-prediction";
}

Agreement compareWithPrediction(const ThetaRep &T, Verdict computed) {
  const Prediction p = predictVerdict(T);
  if (p == Prediction::None)
    return Agreement::NoPrediction;
  const Verdict expected = p == Prediction::Gib ? Verdict::True : Verdict::False;
  return computed == expected ? Agreement::Agree : Agreement::Disagree;
}

ClassificationRow toRow(const GibReport &report) {
  ClassificationRow row;
  row.rep = report.rep;
  row.rank = report.rank;
  row.orbitCount = report.orbitCount;
  row.repGib = report.repGib;
  for (const auto &P : report.badOrbits)
    row.badOrbits.push_back(P.str());
  row.predicateFlags = patternPredicates(report.rep);
  row.agreement = compareWithPrediction(report.rep, report.repGib);
  return row;
}

std::vector<ClassificationRow> sweep(const SweepSpec &spec, const CheckPolicy &policy, unsigned jobs) {
  const auto reps = sweepReps(spec);
  std::vector<ClassificationRow> rows(reps.size());
  CheckPolicy inner = policy;
  inner.jobs = 1;
  parallelFor(reps.size(), jobs, [&](std::size_t i) { rows[i] = toRow(checkRep(reps[i], inner)); });
  return rows;
}

ReportFormat parseReportFormat(const std::string &name) {
  if (name == "text")
    return ReportFormat::Text;
  if (name == "json")
    return ReportFormat::Json;
  if (name == "csv")
    return ReportFormat::Csv;
  throw ParseError("unknown report format '" + name + "' (expected text, json or csv)");
}

std::string emitReport(const std::vector<ClassificationRow> &rows, ReportFormat format) {
  switch (format) {
  case ReportFormat::Text:
    return emitText(rows);
  case ReportFormat::Json:
    return emitJson(rows);
  case ReportFormat::Csv:
    return emitCsv(rows);
  }
  return {};
}

std::vector<ClassificationRow> parseJsonReport(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw ParseError("report must be a JSON array");
  std::vector<ClassificationRow> rows;
  try {
    for (const auto &j : doc) {
      ClassificationRow row;
      const auto r = j.at("r").get<std::vector<int>>();
      if (static_cast<int>(r.size()) != j.at("m").get<int>())
        throw ParseError("field m disagrees with the length of r");
      row.rep = ThetaRep(r);
      row.rank = j.at("rank").get<int>();
      row.orbitCount = j.at("orbit_count").get<std::size_t>();
      row.repGib = verdictFromJson(j.at("rep_gib"));
      row.badOrbits = j.at("bad_orbits").get<std::vector<std::string>>();
      const auto &f = j.at("predicate_flags");
      row.predicateFlags.hasCyclicTripleGe2 = f.at("cyclic_triple_ge2").get<bool>();
      row.predicateFlags.m3GibShape = f.at("m3_gib_shape").get<bool>();
      row.predicateFlags.unitWithoutTriple = f.at("unit_without_triple").get<bool>();
      row.agreement = agreementFromJson(j.at("agreement"));
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed report row: ") + e.what());
  }
  return rows;
}

} // namespace gib

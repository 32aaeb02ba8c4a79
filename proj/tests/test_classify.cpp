#include "gib/centralizer.hpp"
#include "gib/classify.hpp"
#include "gib/errors.hpp"
#include "gib/generic_action.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

using namespace gib;

namespace {

const ClassificationRow *find(const std::vector<ClassificationRow> &rows, const ThetaRep &T) {
  for (const auto &row : rows)
    if (row.rep == T)
      return &row;
  return nullptr;
}

std::string exceptionText(const std::function<void()> &f) {
  try {
    f();
  } catch (const std::exception &e) {
    return e.what();
  }
  return {};
}

GenericAction orbitAction(const ThetaRep &T, const std::string &orbit) {
  const auto C = buildCentralizer(LabeledPartition::parse(orbit), T.order());
  return {actionStructureConstants(C), rankOfRep(T)};
}

} // namespace

TEST_CASE("sweep rows for small cases") {
  const auto m3 = sweep({6, 6, 3, 3});
  const ClassificationRow *r222 = find(m3, ThetaRep({2, 2, 2}));
  REQUIRE(r222 != nullptr);
  CHECK(r222->repGib == Verdict::True);
  CHECK(r222->agreement == Agreement::Agree);

  const auto m4 = sweep({4, 4, 4, 4});
  const ClassificationRow *r1111 = find(m4, ThetaRep({1, 1, 1, 1}));
  REQUIRE(r1111 != nullptr);
  CHECK(r1111->repGib == Verdict::True);
  CHECK(r1111->orbitCount == enumerateOrbits(ThetaRep({1, 1, 1, 1})).size());

  const auto n8 = sweep({8, 8, 3, 3});
  const ClassificationRow *r233 = find(n8, normalizeCyclic(ThetaRep({3, 3, 2})));
  REQUIRE(r233 != nullptr);
  CHECK(r233->repGib == Verdict::False);
  CHECK_FALSE(r233->badOrbits.empty());
  for (const auto &row : n8)
    CHECK_MESSAGE(row.agreement == Agreement::Agree, row.rep.str());
}

TEST_CASE("sweep range and deduplication") {
  CHECK_THROWS_AS(sweepReps({0, 3, 3, 3}), PreconditionError);
  CHECK_THROWS_AS(sweepReps({3, 2, 3, 3}), PreconditionError);
  CHECK_THROWS_AS(sweepReps({1, 3, 1, 3}), PreconditionError);

  const auto all = sweepReps({1, 7, 3, 4, 1, false});
  const auto classes = sweepReps({1, 7, 3, 4, 1, true});
  CHECK(classes.size() < all.size());
  for (const auto &T : all)
    CHECK(std::binary_search(classes.begin(), classes.end(), normalizeCyclic(T)));

  // verdicts are constant on rotation classes
  const auto full = sweep({1, 7, 3, 4, 1, false});
  const auto dedup = sweep({1, 7, 3, 4, 1, true});
  for (const auto &row : full) {
    const ClassificationRow *rep = find(dedup, normalizeCyclic(row.rep));
    REQUIRE(rep != nullptr);
    CHECK_MESSAGE(rep->repGib == row.repGib, row.rep.str());
  }
}

TEST_CASE("sweep results do not depend on the number of workers") {
  const SweepSpec spec{1, 7, 3, 4};
  CHECK(sweep(spec, {}, 1) == sweep(spec, {}, 3));
}

TEST_CASE("JSON report of (2,2,2,1)") {
  const auto row = toRow(checkRep(ThetaRep({2, 2, 2, 1})));
  const auto doc = nlohmann::json::parse(emitReport({row}, ReportFormat::Json));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  const auto &j = doc[0];
  CHECK(j["m"] == 4);
  CHECK(j["r"] == nlohmann::json({2, 2, 2, 1}));
  CHECK(j["rank"] == 1);
  CHECK(j["rep_gib"] == false);
  const auto bad = j["bad_orbits"].get<std::vector<std::string>>();
  CHECK(std::find(bad.begin(), bad.end(), "3^0 3^2 1^1") != bad.end());
  CHECK(j["predicate_flags"]["cyclic_triple_ge2"] == true);
  CHECK(j["agreement"] == true);
}

TEST_CASE("JSON report round trip") {
  const auto rows = sweep({1, 6, 3, 4}, {}, 1);
  REQUIRE_FALSE(rows.empty());
  CHECK(parseJsonReport(emitReport(rows, ReportFormat::Json)) == rows);
  CHECK(parseJsonReport(emitReport({}, ReportFormat::Json)).empty());
  CHECK(nlohmann::json::parse(emitReport({}, ReportFormat::Json)) == nlohmann::json::array());
}

TEST_CASE("JSON report parse errors") {
  CHECK_THROWS_AS(parseJsonReport("[{"), ParseError);
  CHECK_THROWS_AS(parseJsonReport("{}"), ParseError);
  CHECK_THROWS_AS(parseJsonReport(R"([{"m": 3}])"), ParseError);
  auto doc = nlohmann::json::parse(emitReport({toRow(checkRep(ThetaRep({2, 2, 2})))}, ReportFormat::Json));
  doc[0]["m"] = 4;
  CHECK_THROWS_AS(parseJsonReport(doc.dump()), ParseError);
  doc[0]["m"] = 3;
  doc[0]["rep_gib"] = "maybe";
  CHECK_THROWS_AS(parseJsonReport(doc.dump()), ParseError);
}

TEST_CASE("text and CSV reports") {
  const auto row = toRow(checkRep(ThetaRep({3, 3, 1, 2})));
  const std::string text = emitReport({row}, ReportFormat::Text);
  CHECK(text.find("m=4 r=3,3,1,2") != std::string::npos);
  CHECK(text.find("●oo●oo●●o") != std::string::npos);
  CHECK(text.find("rank 1") != std::string::npos);

  const auto bad = toRow(checkRep(ThetaRep({2, 2, 2, 1})));
  const std::string text2 = emitReport({bad}, ReportFormat::Text);
  CHECK(text2.find("    bad: ") != std::string::npos);
  CHECK(text2.find("3^0 3^2 1^1") != std::string::npos);

  const std::string csv = emitReport({row, bad}, ReportFormat::Csv);
  std::istringstream in(csv);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(header == "m,r,rank,orbit_count,rep_gib,bad_orbits,agreement");
  CHECK(first.rfind("4,\"3,3,1,2\",1,", 0) == 0);
  CHECK(second.find("false") != std::string::npos);
  CHECK(second.find("3^0 3^2 1^1") != std::string::npos);
  CHECK(emitReport({}, ReportFormat::Csv) == header + "\n");

  CHECK(parseReportFormat("csv") == ReportFormat::Csv);
  CHECK_THROWS_AS(parseReportFormat("yaml"), ParseError);
}

TEST_CASE("representations without a predicted verdict") {
  CHECK(compareWithPrediction(ThetaRep({2, 2}), Verdict::True) == Agreement::NoPrediction);
  CHECK(compareWithPrediction(ThetaRep({1, 2, 2, 2, 1, 0}), Verdict::False) == Agreement::NoPrediction);
  CHECK(compareWithPrediction(ThetaRep({3, 3, 2}), Verdict::Undecided) == Agreement::Disagree);
  CHECK(compareWithPrediction(ThetaRep({3, 3, 2}), Verdict::True) == Agreement::Disagree);
}

TEST_CASE("exported orbit action rechecks to the same verdict") {
  const ThetaRep T({2, 2, 2, 1});
  const GenericAction g = orbitAction(T, "3^0 3^2 1^1");
  const std::string text = exportGenericAction(g);
  const GenericAction back = parseGenericAction(text);
  CHECK(back.action.dimQ == g.action.dimQ);
  CHECK(back.action.dimV == g.action.dimV);
  CHECK(back.targetRank == 1);
  const GenericCheck c = checkGenericAction(back);
  CHECK(c.index.index == 2);
  CHECK(c.index.certified);
  CHECK(c.verdict == Verdict::False);

  const OrbitVerdict direct = checkOrbit(T, LabeledPartition::parse("3^0 3^2 1^1"));
  CHECK(direct.indexResult.index == c.index.index);
  CHECK(direct.gib == c.verdict);
}

TEST_CASE("every orbit of (3,3,2) survives the export round trip") {
  const ThetaRep T({3, 3, 2});
  const GibReport report = [&] {
    CheckPolicy p;
    p.stopAtFirstFalse = false;
    return checkRep(T, p);
  }();
  for (const auto &v : report.verdicts) {
    const GenericAction g = orbitAction(T, v.orbit.str());
    const GenericAction back = parseGenericAction(exportGenericAction(g));
    CHECK(buildActionMatrix(back.action) == buildActionMatrix(g.action));
    const GenericCheck c = checkGenericAction(back);
    CHECK_MESSAGE(c.verdict == v.gib, v.orbit.str());
  }
}

TEST_CASE("hand-written generic actions") {
  const GenericCheck trivial =
      checkGenericAction(parseGenericAction(R"({"dim_q": 1, "dim_v": 1, "target_rank": 1, "brackets": []})"));
  CHECK(trivial.index.index == 1);
  CHECK(trivial.verdict == Verdict::True);

  // x_0 . v_0 = v_0 has trivial generic stabiliser, below the declared rank
  const GenericCheck scaling = checkGenericAction(parseGenericAction(
      R"({"dim_q": 1, "dim_v": 1, "target_rank": 1, "brackets": [[0, 0, 0, 1, 1]]})"));
  CHECK(scaling.index.index == 0);
  CHECK(scaling.verdict == Verdict::False);

  // diagonal torus with distinct weights: generic stabiliser is trivial
  const GenericCheck torus = checkGenericAction(parseGenericAction(R"({"dim_q": 3, "dim_v": 3, "target_rank": 0,
      "brackets": [[0, 0, 0, 1, 1], [1, 1, 1, 2, 1], [2, 2, 2, "-3", "2"]]})"));
  CHECK(torus.index.index == 0);
  CHECK(torus.verdict == Verdict::True);

  // the zero action: every vector is fixed by all of q
  const GenericCheck zero =
      checkGenericAction(parseGenericAction(R"({"dim_q": 2, "dim_v": 2, "target_rank": 1, "brackets": []})"));
  CHECK(zero.index.index == 2);
  CHECK(zero.verdict == Verdict::False);
}

TEST_CASE("generic action input errors") {
  const std::string bad = exceptionText([] { (void)parseGenericAction(R"({"dim_q": 1,, })"); });
  CHECK(bad.find("byte") != std::string::npos);
  CHECK_THROWS_AS((void)parseGenericAction(R"({"dim_q": 1,, })"), ParseError);
  CHECK_THROWS_AS((void)parseGenericAction(R"([1, 2])"), ParseError);
  CHECK_THROWS_AS((void)parseGenericAction(R"({"dim_q": 1, "dim_v": 1, "brackets": []})"), ParseError);

  const std::string path = exceptionText([] {
    (void)parseGenericAction(R"({"dim_q": 1, "dim_v": 1, "target_rank": 0, "brackets": [[0, 0, "x", 1, 1]]})");
  });
  CHECK(path.find("brackets[0][2]") != std::string::npos);

  CHECK_THROWS_AS((void)parseGenericAction(
                      R"({"dim_q": 1, "dim_v": 2, "target_rank": 0, "brackets": [[0, 0, 2, 1, 1]]})"),
                  ValidationError);
  CHECK_THROWS_AS((void)parseGenericAction(
                      R"({"dim_q": 1, "dim_v": 2, "target_rank": 0, "brackets": [[0, 0, 1, 1, 0]]})"),
                  ValidationError);
  CHECK_THROWS_AS((void)parseGenericAction(R"({"dim_q": 1, "dim_v": 2, "target_rank": 3, "brackets": []})"),
                  ValidationError);
  CHECK_THROWS_AS((void)loadGenericAction("/nonexistent/action.json"), ParseError);
}

TEST_CASE("generic actions load from disk") {
  const GenericAction g = orbitAction(ThetaRep({3, 3, 3}), "5^0 3^1 1^2");
  const std::string file = "test_classify_action.json";
  {
    std::ofstream out(file);
    out << exportGenericAction(g);
  }
  const GenericAction back = loadGenericAction(file);
  CHECK(back.targetRank == 3);
  const GenericCheck c = checkGenericAction(back);
  CHECK(c.index.index == 4);
  CHECK(c.verdict == Verdict::False);
  std::remove(file.c_str());
}

#include "gib/generic_action.hpp"

#include "gib/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace gib {

namespace {

using nlohmann::json;

Integer integerField(const json &j, const std::string &where) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError(where + ": '" + j.get<std::string>() + "' is not a decimal integer");
    return v;
  }
  throw ParseError(where + ": expected an integer");
}

std::size_t sizeField(const json &j, const std::string &where) {
  const Integer v = integerField(j, where);
  if (v < 0 || !v.fits_ulong_p())
    throw ValidationError(where + ": expected a non-negative integer");
  return v.get_ui();
}

const json &member(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

json integerJson(const Integer &v) {
  if (v.fits_slong_p())
    return v.get_si();
  return v.get_str();
}

} // namespace

GenericAction parseGenericAction(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object())
    throw ParseError("top level must be a JSON object");

  GenericAction g;
  g.action.dimQ = sizeField(member(doc, "dim_q"), "dim_q");
  g.action.dimV = sizeField(member(doc, "dim_v"), "dim_v");
  const std::size_t rank = sizeField(member(doc, "target_rank"), "target_rank");
  if (rank > g.action.dimV)
    throw ValidationError("target_rank exceeds dim_v");
  g.targetRank = static_cast<int>(rank);

  const json &brackets = member(doc, "brackets");
  if (!brackets.is_array())
    throw ParseError("brackets: expected an array");
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const std::string where = "brackets[" + std::to_string(n) + "]";
    const json &b = brackets[n];
    if (!b.is_array() || b.size() != 5)
      throw ParseError(where + ": expected [i, j, k, num, den]");
    ActionEntry e;
    e.row = sizeField(b[0], where + "[0]");
    e.col = sizeField(b[1], where + "[1]");
    e.target = sizeField(b[2], where + "[2]");
    if (e.row >= g.action.dimQ)
      throw ValidationError(where + ": i = " + std::to_string(e.row) + " out of range for dim_q");
    if (e.col >= g.action.dimV)
      throw ValidationError(where + ": j = " + std::to_string(e.col) + " out of range for dim_v");
    if (e.target >= g.action.dimV)
      throw ValidationError(where + ": k = " + std::to_string(e.target) + " out of range for dim_v");
    const Integer num = integerField(b[3], where + "[3]");
    const Integer den = integerField(b[4], where + "[4]");
    if (den == 0)
      throw ValidationError(where + ": zero denominator");
    e.coeff = Rational(num, den);
    if (!e.coeff.isZero())
      g.action.entries.push_back(std::move(e));
  }
  return g;
}

GenericAction loadGenericAction(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parseGenericAction(buf.str());
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError &e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string exportGenericAction(const GenericAction &g) {
  json doc;
  doc["dim_q"] = g.action.dimQ;
  doc["dim_v"] = g.action.dimV;
  doc["target_rank"] = g.targetRank;
  json brackets = json::array();
  for (const auto &e : g.action.entries)
    brackets.push_back({e.row, e.col, e.target, integerJson(e.coeff.numerator()), integerJson(e.coeff.denominator())});
  doc["brackets"] = std::move(brackets);
  return doc.dump() + "\n";
}

GenericCheck checkGenericAction(const GenericAction &g, const CheckPolicy &policy) {
  const ActionDecision d = decideAction(buildActionMatrix(g.action), g.targetRank, policy);
  return {d.index, g.targetRank, d.gib};
}

} // namespace gib

#include "vvmacd/json_io.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace vvmacd {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw json_parse_error(msg); }

const Json& expect_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail(what + ": expected an array");
  return j;
}

long long expect_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(what + ": expected an integer");
  return j.get<long long>();
}

int expect_small_int(const Json& j, const std::string& what) {
  long long v = expect_int(j, what);
  if (v < -1000000 || v > 1000000) fail(what + ": integer out of range");
  return static_cast<int>(v);
}

mpz_class expect_bigint(const Json& j, const std::string& what) {
  if (j.is_number_integer())
    return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail(what + ": not a decimal integer string");
    }
  }
  fail(what + ": expected an integer or a decimal string");
}

// Row-major integer matrix with per-cell complaints.
std::vector<std::vector<int>> expect_matrix(const Json& j,
                                            const std::string& what) {
  expect_array(j, what);
  std::vector<std::vector<int>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string where = what + " row " + std::to_string(r + 1);
    expect_array(j[r], where);
    std::vector<int> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(expect_small_int(
          j[r][c], where + ", column " + std::to_string(c + 1)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_of_rows(const std::vector<std::vector<int>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

}  // namespace

Json json_of(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& [key, c] : p.terms())
    out.push_back(Json::array({key.first, key.second, c.get_str()}));
  return out;
}

IntPoly intpoly_from_json(const Json& j) {
  expect_array(j, "polynomial");
  IntPoly p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "polynomial term " + std::to_string(i + 1);
    expect_array(j[i], where);
    if (j[i].size() != 3) fail(where + ": expected [dq, dt, coeff]");
    int dq = expect_small_int(j[i][0], where + " q-exponent");
    int dt = expect_small_int(j[i][1], where + " t-exponent");
    if (dq < 0 || dt < 0) fail(where + ": exponents must be nonnegative");
    p.add_term(dq, dt, expect_bigint(j[i][2], where + " coefficient"));
  }
  return p;
}

Json json_of(const RatQT& f) {
  return Json{{"num", json_of(f.num())}, {"den", json_of(f.den())}};
}

RatQT ratqt_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail("rational: expected {num, den}");
  IntPoly den = intpoly_from_json(j["den"]);
  if (den.is_zero()) fail("rational: zero denominator");
  return RatQT(intpoly_from_json(j["num"]), std::move(den));
}

Json json_of(const TSeries& s) {
  Json coeffs = Json::array();
  for (const RatQT& c : s.coeffs()) coeffs.push_back(json_of(c));
  return Json{{"val", s.val()}, {"coeffs", std::move(coeffs)}};
}

TSeries tseries_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("val") || !j.contains("coeffs"))
    fail("series: expected {val, coeffs}");
  long long val = expect_int(j["val"], "series val");
  expect_array(j["coeffs"], "series coeffs");
  std::vector<RatQT> coeffs;
  for (const Json& c : j["coeffs"]) coeffs.push_back(ratqt_from_json(c));
  if (coeffs.empty()) fail("series coeffs: must not be empty");
  return TSeries(static_cast<long>(val), std::move(coeffs));
}

Json json_of(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  expect_array(j, "partition");
  std::vector<int> parts;
  for (std::size_t i = 0; i < j.size(); ++i)
    parts.push_back(
        expect_small_int(j[i], "partition part " + std::to_string(i + 1)));
  try {
    return Partition(std::move(parts));
  } catch (const tableau_error& e) {
    fail(std::string("partition: ") + e.what());
  }
}

Json json_of(const Shape& s) {
  Json out = Json::array();
  for (int r = 1; r <= s.rows(); ++r) out.push_back(s.row_len(r));
  return out;
}

Json json_of(const Ryt& T) { return json_of_rows(T.rows()); }

Ryt ryt_from_json(const Json& j) {
  std::vector<std::vector<int>> rows = expect_matrix(j, "labelling");
  std::vector<int> lens;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty())
      fail("labelling row " + std::to_string(r + 1) + ": must not be empty");
    if (r > 0 && rows[r].size() > rows[r - 1].size())
      fail("labelling row " + std::to_string(r + 1) +
           ": longer than the row above");
    lens.push_back(static_cast<int>(rows[r].size()));
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::string where = "labelling row " + std::to_string(r + 1) +
                                ", column " + std::to_string(c + 1);
      if (rows[r][c] < 0) fail(where + ": negative value");
      if (c > 0 && rows[r][c] > rows[r][c - 1])
        fail(where + ": rows must decrease weakly left to right");
      if (r > 0 && rows[r][c] > rows[r - 1][c])
        fail(where + ": columns must decrease weakly top to bottom");
    }
  return Ryt(Shape(std::move(lens)), std::move(rows));
}

Json json_of(const Syt& s) { return json_of_rows(s.rows()); }

Syt syt_from_json(const Json& j) {
  std::vector<std::vector<int>> rows = expect_matrix(j, "tableau");
  std::vector<int> lens;
  for (const auto& row : rows) lens.push_back(static_cast<int>(row.size()));
  try {
    return Syt(Shape(std::move(lens)), std::move(rows));
  } catch (const tableau_error& e) {
    fail(std::string("tableau: ") + e.what());
  }
}

Json json_of(const Psyt& tau) {
  Json out = Json::array();
  for (const auto& row : tau.rows()) {
    Json jr = Json::array();
    for (const Psyt::Cell& cell : row)
      jr.push_back(Json::array({cell.label, cell.power}));
    out.push_back(std::move(jr));
  }
  return out;
}

Psyt psyt_from_json(const Json& j) {
  expect_array(j, "tableau");
  std::vector<std::vector<Psyt::Cell>> rows;
  std::vector<int> lens;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string where = "tableau row " + std::to_string(r + 1);
    expect_array(j[r], where);
    std::vector<Psyt::Cell> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      const std::string cell_where =
          where + ", column " + std::to_string(c + 1);
      expect_array(j[r][c], cell_where);
      if (j[r][c].size() != 2) fail(cell_where + ": expected [label, power]");
      Psyt::Cell cell;
      cell.label = expect_small_int(j[r][c][0], cell_where + " label");
      cell.power = expect_small_int(j[r][c][1], cell_where + " power");
      if (cell.power < 0) fail(cell_where + ": negative power");
      row.push_back(cell);
    }
    lens.push_back(static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  try {
    return Psyt(Shape(std::move(lens)), std::move(rows));
  } catch (const tableau_error& e) {
    fail(std::string("tableau: ") + e.what());
  }
}

Json json_of(const AsymLabelling& T) {
  int rk = T.rank();
  Json rows = rk > 0 ? json_of(T.restrict(rk)) : Json::array();
  return Json{{"base", json_of(T.base())}, {"rank", rk},
              {"rows", std::move(rows)}};
}

AsymLabelling asym_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("rows"))
    fail("labelling: expected {base, rows}");
  Partition base = partition_from_json(j["base"]);
  std::vector<std::vector<int>> rows = expect_matrix(j["rows"], "labelling");
  std::vector<int> row1 = rows.empty() ? std::vector<int>{} : rows[0];
  while (!row1.empty() && row1.back() == 0) row1.pop_back();
  std::vector<std::vector<int>> lower(rows.begin() + (rows.empty() ? 0 : 1),
                                      rows.end());
  if (static_cast<int>(lower.size()) != base.length())
    fail("labelling: expected " + std::to_string(base.length()) +
         " rows below the top one, found " + std::to_string(lower.size()));
  for (std::size_t r = 0; r < lower.size(); ++r)
    if (static_cast<int>(lower[r].size()) != base.part(static_cast<int>(r) + 1))
      fail("labelling row " + std::to_string(r + 2) + ": expected " +
           std::to_string(base.part(static_cast<int>(r) + 1)) + " entries");
  try {
    return AsymLabelling(std::move(base), std::move(row1), std::move(lower));
  } catch (const tableau_error& e) {
    fail(std::string("labelling: ") + e.what());
  }
}

Json json_of(const VElement& v) {
  Json out = Json::array();
  for (const auto& [alpha, part] : v.fibers())
    for (const auto& [tau, c] : part.terms())
      out.push_back(Json{{"alpha", alpha},
                         {"tableau", json_of(tau)},
                         {"coeff", json_of(c)}});
  return out;
}

VElement velement_from_json(const Json& j, const Shape& shape) {
  expect_array(j, "element");
  VElement v(shape);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "element term " + std::to_string(i + 1);
    if (!j[i].is_object() || !j[i].contains("alpha") ||
        !j[i].contains("tableau") || !j[i].contains("coeff"))
      fail(where + ": expected {alpha, tableau, coeff}");
    expect_array(j[i]["alpha"], where + " alpha");
    std::vector<int> alpha;
    for (const Json& a : j[i]["alpha"])
      alpha.push_back(expect_small_int(a, where + " alpha entry"));
    if (static_cast<int>(alpha.size()) != shape.size())
      fail(where + ": alpha length does not match the diagram size");
    v.add_term(alpha, syt_from_json(j[i]["tableau"]),
               ratqt_from_json(j[i]["coeff"]));
  }
  return v;
}

Json json_of(const MacdonaldCoeffs& P) {
  Json coeffs = Json::array();
  for (const auto& [tau, c] : P.coefficients)
    coeffs.push_back(Json{{"tableau", json_of(tau)}, {"coeff", json_of(c)}});
  return Json{{"labelling", json_of(P.labelling)},
              {"coefficients", std::move(coeffs)}};
}

Json json_of(const MacdonaldP& P) {
  return json_of(MacdonaldCoeffs{P.labelling, P.f_expansion});
}

MacdonaldCoeffs macdonald_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labelling") || !j.contains("coefficients"))
    fail("expected {labelling, coefficients}");
  MacdonaldCoeffs out{ryt_from_json(j["labelling"]), {}};
  expect_array(j["coefficients"], "coefficients");
  for (const Json& e : j["coefficients"]) {
    if (!e.is_object() || !e.contains("tableau") || !e.contains("coeff"))
      fail("coefficients: expected {tableau, coeff} entries");
    out.coefficients.emplace(psyt_from_json(e["tableau"]),
                             ratqt_from_json(e["coeff"]));
  }
  return out;
}

Json json_of(const PieriRow& row) {
  Json entries = Json::array();
  for (const auto& [target, c] : row.entries)
    entries.push_back(Json{{"target", json_of(target)}, {"coeff", json_of(c)}});
  return Json{{"source", json_of(row.source)},
              {"r", row.r},
              {"entries", std::move(entries)}};
}

PieriRow pieri_row_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("r") ||
      !j.contains("entries"))
    fail("expected {source, r, entries}");
  PieriRow row{ryt_from_json(j["source"]),
               expect_small_int(j["r"], "degree r"), {}};
  expect_array(j["entries"], "entries");
  for (const Json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("target") || !e.contains("coeff"))
      fail("entries: expected {target, coeff}");
    row.entries.emplace(ryt_from_json(e["target"]),
                        ratqt_from_json(e["coeff"]));
  }
  return row;
}

Json json_of(const StablePieriRow& row) {
  Json entries = Json::array();
  for (const auto& [target, c] : row.entries)
    entries.push_back(Json{{"target", json_of(target)}, {"coeff", json_of(c)}});
  return Json{{"source", json_of(row.source)},
              {"r", row.r},
              {"rank", row.realized_rank},
              {"entries", std::move(entries)}};
}

StablePieriRow stable_pieri_row_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("source") || !j.contains("r") ||
      !j.contains("rank") || !j.contains("entries"))
    fail("expected {source, r, rank, entries}");
  StablePieriRow row{asym_from_json(j["source"]),
                     expect_small_int(j["r"], "degree r"),
                     expect_small_int(j["rank"], "rank"),
                     {}};
  expect_array(j["entries"], "entries");
  for (const Json& e : j["entries"]) {
    if (!e.is_object() || !e.contains("target") || !e.contains("coeff"))
      fail("entries: expected {target, coeff}");
    row.entries.emplace(asym_from_json(e["target"]),
                        ratqt_from_json(e["coeff"]));
  }
  return row;
}

namespace {

Json json_of_side(const std::variant<RatQT, TSeries>& side) {
  if (std::holds_alternative<RatQT>(side))
    return json_of(std::get<RatQT>(side));
  return json_of(std::get<TSeries>(side));
}

std::variant<RatQT, TSeries> side_from_json(const Json& j) {
  if (j.is_object() && j.contains("num")) return ratqt_from_json(j);
  if (j.is_object() && j.contains("val")) return tseries_from_json(j);
  fail("identity side: expected a rational {num, den} or a series {val, coeffs}");
}

}  // namespace

Json json_of(const IdentityReport& rep) {
  return Json{
      {"labelling", rep.labelling},
      {"mode", rep.mode == IdentityMode::finite_exact ? "finite_exact"
                                                      : "asymptotic_truncated"},
      {"order", rep.order},
      {"verdict", rep.verdict},
      {"lhs", json_of_side(rep.lhs)},
      {"rhs", json_of_side(rep.rhs)},
      {"term_count", rep.term_count},
      {"elapsed_ms", rep.elapsed_ms}};
}

IdentityReport identity_report_from_json(const Json& j) {
  for (const char* key : {"labelling", "mode", "order", "verdict", "lhs",
                          "rhs", "term_count", "elapsed_ms"})
    if (!j.is_object() || !j.contains(key))
      fail(std::string("report: missing field ") + key);
  IdentityReport rep;
  if (!j["labelling"].is_string()) fail("report labelling: expected a string");
  rep.labelling = j["labelling"].get<std::string>();
  std::string mode = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
  if (mode == "finite_exact")
    rep.mode = IdentityMode::finite_exact;
  else if (mode == "asymptotic_truncated")
    rep.mode = IdentityMode::asymptotic_truncated;
  else
    fail("report mode: expected finite_exact or asymptotic_truncated");
  rep.order = expect_small_int(j["order"], "report order");
  if (!j["verdict"].is_boolean()) fail("report verdict: expected a boolean");
  rep.verdict = j["verdict"].get<bool>();
  rep.lhs = side_from_json(j["lhs"]);
  rep.rhs = side_from_json(j["rhs"]);
  rep.term_count = expect_int(j["term_count"], "report term_count");
  rep.elapsed_ms = expect_int(j["elapsed_ms"], "report elapsed_ms");
  return rep;
}

}  // namespace vvmacd

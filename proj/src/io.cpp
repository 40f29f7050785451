#include "indexlab/io.hpp"

#include <fstream>
#include <sstream>

namespace indexlab::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) { throw ParseError(path, why); }

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

std::int64_t integer_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

std::string string_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

bool bool_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_boolean()) fail(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

const json& array_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

ExactReal rational_from_json(const json& j, const std::string& path) {
  ExactReal x = exact_from_json(j, path);
  if (x.is_irrational()) fail(path, "expected a rational number");
  return x;
}

std::vector<std::int64_t> int_list(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail(at(path, i), "expected an integer");
    out.push_back(j[i].get<std::int64_t>());
  }
  return out;
}

json claim_to_json(const Claim& claim) {
  return std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Comparison>) {
          return {{"type", "compare"}, {"lhs", to_json(c.lhs)}, {"op", to_string(c.op)},
                  {"rhs", to_json(c.rhs)}, {"holds", c.holds}};
        } else if constexpr (std::is_same_v<T, Inclusion>) {
          return {{"type", "subset"}, {"subset", c.subset}, {"superset", c.superset}, {"holds", c.holds}};
        } else {
          return {{"type", "rational"}, {"value", to_json(c.value)}, {"rational", c.rational}};
        }
      },
      claim);
}

Claim claim_from_json(const json& j, const std::string& path) {
  const std::string type = string_field(j, "type", path);
  if (type == "compare") {
    Relation op;
    try {
      op = parse_relation(string_field(j, "op", path));
    } catch (const ParseError& e) {
      fail(path + ".op", e.what());
    }
    return Comparison{exact_from_json(field(j, "lhs", path), path + ".lhs"), op,
                      exact_from_json(field(j, "rhs", path), path + ".rhs"), bool_field(j, "holds", path)};
  }
  if (type == "subset") {
    return Inclusion{int_list(field(j, "subset", path), path + ".subset"),
                     int_list(field(j, "superset", path), path + ".superset"), bool_field(j, "holds", path)};
  }
  if (type == "rational") {
    return Rationality{exact_from_json(field(j, "value", path), path + ".value"),
                       bool_field(j, "rational", path)};
  }
  fail(path + ".type", "unknown claim type '" + type + "'");
}

Violation violation_from_json(const json& j, const std::string& path) {
  const std::string kind = string_field(j, "kind", path);
  if (kind != "alternating" && kind != "pointwise") fail(path + ".kind", "unknown violation kind");
  return {integer_field(j, "q", path),
          kind == "alternating" ? Violation::Kind::kAlternating : Violation::Kind::kPointwise,
          integer_field(j, "lhs", path), integer_field(j, "rhs", path)};
}

}  // namespace

json to_json(const ExactReal& x) { return x.to_string(); }

ExactReal exact_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return ExactReal(j.get<std::int64_t>());
  if (!j.is_string()) fail(path, "expected an exact number string");
  try {
    return ExactReal::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

json rational_to_json(const ExactReal& x) {
  return x.c() == 1 ? x.a().str() : x.a().str() + "/" + x.c().str();
}

json to_json(const Block& block) {
  return std::visit(
      [](const auto& b) -> json {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Rotation>) {
          return {{"type", "rot"}, {"rho", to_json(b.rho)}};
        } else if constexpr (std::is_same_v<T, Hyperbolic>) {
          return {{"type", "hyp"}, {"d", rational_to_json(b.d)}};
        } else {
          json rows = json::array();
          for (const auto& row : b.coupling) rows.push_back({rational_to_json(row[0]), rational_to_json(row[1])});
          return {{"type", "n"}, {"rho", to_json(b.rho)}, {"B", rows}};
        }
      },
      block);
}

Block block_from_json(const json& j, const std::string& path) {
  const std::string type = string_field(j, "type", path);
  Block block;
  if (type == "rot") {
    block = Rotation{exact_from_json(field(j, "rho", path), path + ".rho")};
  } else if (type == "hyp") {
    block = Hyperbolic{rational_from_json(field(j, "d", path), path + ".d")};
  } else if (type == "n") {
    NBlock nb{exact_from_json(field(j, "rho", path), path + ".rho"), {}};
    const json& rows = array_field(j, "B", path);
    if (rows.size() != 2) fail(path + ".B", "expected a 2x2 matrix");
    for (std::size_t r = 0; r < 2; ++r) {
      const std::string row_path = at(path + ".B", r);
      if (!rows[r].is_array() || rows[r].size() != 2) fail(row_path, "expected a row of 2 entries");
      for (std::size_t c = 0; c < 2; ++c) nb.coupling[r][c] = rational_from_json(rows[r][c], at(row_path, c));
    }
    block = nb;
  } else {
    fail(path + ".type", "unknown block type '" + type + "' (expected rot, hyp or n)");
  }
  try {
    validate_block(block);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return block;
}

json to_json(const NormalFormDecomposition& dec) {
  json blocks = json::array();
  for (const auto& b : dec.blocks()) blocks.push_back(to_json(b));
  return {{"blocks", blocks}};
}

NormalFormDecomposition decomposition_from_json(const json& j, const std::string& path) {
  const json& blocks = array_field(j, "blocks", path);
  std::vector<Block> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) out.push_back(block_from_json(blocks[i], at(path + ".blocks", i)));
  return NormalFormDecomposition(std::move(out));
}

json to_json(const GeodesicModel& g) {
  return {{"n", g.n()}, {"p", g.p()}, {"case", to_string(g.ncg_case())}, {"dec", to_json(g.dec())}};
}

GeodesicModel model_from_json(const json& j, const std::string& path) {
  const auto n = integer_field(j, "n", path);
  const auto p = integer_field(j, "p", path);
  std::optional<NcgCase> declared;
  if (j.contains("case")) {
    try {
      declared = parse_ncg_case(string_field(j, "case", path));
    } catch (const ParseError& e) {
      fail(path + ".case", e.what());
    }
  }
  auto dec = decomposition_from_json(field(j, "dec", path), path + ".dec");
  try {
    return GeodesicModel(static_cast<int>(n), std::move(dec), p, declared);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

ModelSet models_from_json(const json& j) {
  ModelSet set;
  const json* list = &j;
  std::string path = "models";
  if (j.is_object()) {
    set.n = static_cast<int>(integer_field(j, "n", ""));
    list = &array_field(j, "models", "");
  } else if (!j.is_array()) {
    fail("$", "expected an object with \"models\" or an array of models");
  }
  for (std::size_t i = 0; i < list->size(); ++i) {
    auto g = model_from_json((*list)[i], at(path, i));
    if (set.n && *set.n != g.n()) {
      fail(at(path, i) + ".n", "model is on S^" + std::to_string(g.n()) + " but the set is on S^" +
                                   std::to_string(*set.n));
    }
    set.n = g.n();
    set.models.push_back(std::move(g));
  }
  return set;
}

json to_json(const Violation& v) {
  return {{"q", v.q}, {"kind", to_string(v.kind)}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

json to_json(const SymbolicFact& fact) {
  json claims = json::array();
  for (const auto& c : fact.claims) claims.push_back(claim_to_json(c));
  json evidence = json::array();
  for (const auto& v : fact.evidence) evidence.push_back(to_json(v));
  return {{"rule", fact.rule},    {"kind", to_string(fact.kind)}, {"statement", fact.statement},
          {"values", fact.values}, {"claims", claims},             {"evidence", evidence}};
}

json to_json(const ProofTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  const bool contradiction = trace.verdict.type == Verdict::Type::kContradiction;
  return {{"case", to_string(trace.ncg)},
          {"subcase", trace.subcase()},
          {"steps", steps},
          {"verdict", {{"type", contradiction ? "contradiction" : "vacuous"}, {"detail", trace.verdict.detail}}}};
}

ProofTrace trace_from_json(const json& j, const std::string& path) {
  ProofTrace t;
  try {
    t.ncg = parse_ncg_case(string_field(j, "case", path));
  } catch (const ParseError& e) {
    fail(path + ".case", e.what());
  }
  const std::string sub = string_field(j, "subcase", path);
  if (sub == "p even") {
    t.p_parity = 0;
  } else if (sub == "p odd") {
    t.p_parity = 1;
  } else if (!sub.empty()) {
    fail(path + ".subcase", "unknown subcase '" + sub + "'");
  }
  const json& steps = array_field(j, "steps", path);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string sp = at(path + ".steps", i);
    SymbolicFact f;
    f.rule = string_field(steps[i], "rule", sp);
    try {
      f.kind = parse_fact_kind(string_field(steps[i], "kind", sp));
    } catch (const ParseError& e) {
      fail(sp + ".kind", e.what());
    }
    f.statement = string_field(steps[i], "statement", sp);
    const json& values = field(steps[i], "values", sp);
    if (!values.is_object()) fail(sp + ".values", "expected an object");
    for (const auto& [k, v] : values.items()) {
      if (!v.is_string()) fail(sp + ".values." + k, "expected a string");
      f.values[k] = v.get<std::string>();
    }
    const json& claims = array_field(steps[i], "claims", sp);
    for (std::size_t c = 0; c < claims.size(); ++c) f.claims.push_back(claim_from_json(claims[c], at(sp + ".claims", c)));
    const json& evidence = array_field(steps[i], "evidence", sp);
    for (std::size_t e = 0; e < evidence.size(); ++e) {
      f.evidence.push_back(violation_from_json(evidence[e], at(sp + ".evidence", e)));
    }
    t.steps.push_back(std::move(f));
  }
  const json& verdict = field(j, "verdict", path);
  const std::string type = string_field(verdict, "type", path + ".verdict");
  if (type == "contradiction") {
    t.verdict.type = Verdict::Type::kContradiction;
  } else if (type == "vacuous") {
    t.verdict.type = Verdict::Type::kVacuous;
  } else {
    fail(path + ".verdict.type", "unknown verdict '" + type + "'");
  }
  t.verdict.detail = string_field(verdict, "detail", path + ".verdict");
  return t;
}

json certificate(int n, const std::vector<ProofTrace>& traces) {
  json list = json::array();
  for (const auto& t : traces) list.push_back(to_json(t));
  return {{"n", n}, {"traces", list}};
}

std::vector<std::string> verify_certificate(const json& cert) {
  std::vector<std::string> problems;
  const int n = static_cast<int>(integer_field(cert, "n", "certificate"));
  const json& traces = array_field(cert, "traces", "certificate");
  if (traces.empty()) problems.push_back("certificate has no traces");
  for (std::size_t i = 0; i < traces.size(); ++i) {
    auto t = trace_from_json(traces[i], at("traces", i));
    t.n = n;
    for (const auto& p : verify_trace(t)) problems.push_back(at("traces", i) + ": " + p);
  }
  return problems;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace indexlab::io

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "g1min/minimise.hpp"
#include "g1min/testgen.hpp"

namespace g1min {

using json = nlohmann::ordered_json;

inline constexpr const char* kModelSchema = "g1min-model/1";
inline constexpr const char* kReportSchema = "g1min-report/1";

struct ModelFile {
  GenusOneEquation equation;
  std::optional<long> prime;
  std::optional<Options> options;
};

inline Rat rat_from_json(const json& v) {
  if (v.is_number_integer()) return Rat(Integer(v.dump(), 10));
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected rational string or integer, got " + v.dump());
}

inline json coeffs_json(const std::vector<Rat>& c) {
  json a = json::array();
  for (const auto& x : c) a.push_back(to_string(x));
  return a;
}

inline json to_json(const GenusOneEquation& e) {
  json j;
  j["degree"] = e.degree;
  j["coeffs"] = coeffs_json(e.coeffs);
  return j;
}

inline json to_json(const ModelFile& m) {
  json j;
  j["schema"] = kModelSchema;
  j["degree"] = m.equation.degree;
  j["coeffs"] = coeffs_json(m.equation.coeffs);
  if (m.prime) j["prime"] = *m.prime;
  if (m.options) j["options"] = {{"prime_bound", m.options->prime_bound}, {"depth", m.options->depth}};
  return j;
}

inline GenusOneEquation equation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
    throw Error(ErrorCode::ParseError, "model needs degree and coeffs");
  if (!j["degree"].is_number_integer()) throw Error(ErrorCode::ParseError, "degree must be an integer");
  int n = j["degree"].get<int>();
  if (n < 1 || n > 4) throw Error(ErrorCode::ParseError, "degree must be 1..4");
  const auto& a = j["coeffs"];
  if (!a.is_array()) throw Error(ErrorCode::ParseError, "coeffs must be an array");
  std::vector<Rat> c;
  for (const auto& v : a) c.push_back(rat_from_json(v));
  if (c.size() != coefficient_count(n))
    throw Error(ErrorCode::ParseError, "degree " + std::to_string(n) + " needs " +
                                           std::to_string(coefficient_count(n)) + " coefficients");
  return GenusOneEquation(n, c);
}

inline ModelFile model_from_json(const json& j) {
  ModelFile m;
  if (j.contains("schema") && j["schema"] != kModelSchema)
    throw Error(ErrorCode::ParseError, "unknown schema " + j["schema"].dump());
  m.equation = equation_from_json(j);
  if (j.contains("prime")) {
    if (!j["prime"].is_number_integer()) throw Error(ErrorCode::ParseError, "prime must be an integer");
    m.prime = j["prime"].get<long>();
  }
  if (j.contains("options")) {
    Options o = Options::from_env();
    const auto& oj = j["options"];
    if (oj.contains("prime_bound")) o.prime_bound = oj["prime_bound"].get<long>();
    if (oj.contains("depth")) o.depth = oj["depth"].get<int>();
    m.options = o;
  }
  return m;
}

inline ModelFile parse_model(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
  try {
    return model_from_json(j);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

inline std::string print_model(const ModelFile& m) { return to_json(m).dump(2) + "\n"; }

inline bool operator==(const ModelFile& a, const ModelFile& b) {
  auto opts = [](const std::optional<Options>& o) {
    return o ? std::optional<std::pair<long, int>>({o->prime_bound, o->depth}) : std::nullopt;
  };
  return a.equation == b.equation && a.prime == b.prime && opts(a.options) == opts(b.options);
}

inline ModelFile read_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

inline json matrix_json(const RatMatrix& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    a.push_back(row);
  }
  return a;
}

inline json to_json(const Transformation& g) {
  json j;
  j["degree"] = degree(g);
  switch (g.index()) {
    case 0: {
      const auto& t = g.as<WeierstrassTransform>();
      j["u"] = to_string(t.u);
      j["r"] = to_string(t.r);
      j["s"] = to_string(t.s);
      j["t"] = to_string(t.t);
      break;
    }
    case 1: {
      const auto& t = g.as<QuarticTransform>();
      j["mu"] = to_string(t.mu);
      j["r"] = coeffs_json({t.r[0], t.r[1], t.r[2]});
      j["m"] = matrix_json(t.m);
      break;
    }
    case 2: {
      const auto& t = g.as<CubicTransform>();
      j["mu"] = to_string(t.mu);
      j["m"] = matrix_json(t.m);
      break;
    }
    default: {
      const auto& t = g.as<QuadricPairTransform>();
      j["m"] = matrix_json(t.m);
      j["n"] = matrix_json(t.n);
    }
  }
  j["det"] = to_string(det(g));
  return j;
}

inline json to_json(const InvariantTriple& t) {
  return {{"c4", to_string(t.c4)}, {"c6", to_string(t.c6)}, {"disc", to_string(t.disc)}};
}

inline json to_json(const FiberReport& r) {
  json j;
  j["class"] = fiber_name(r.cls);
  if (r.position) {
    j["standard_position"] = {{"transform", to_json(r.position->transform)},
                              {"equation", to_json(r.position->equation)}};
  }
  j["multiple_components"] = r.components.size();
  if (!r.common_factors.empty()) {
    json a = json::array();
    for (const auto& l : r.common_factors) {
      json row = json::array();
      for (const auto& x : l) row.push_back(x.v);
      a.push_back(row);
    }
    j["common_factors"] = a;
  }
  return j;
}

inline json to_json(const NormalityVerdict& v) {
  return {{"normal", v.normal}, {"conclusive", v.conclusive}, {"criterion", v.criterion}, {"witness", v.witness}};
}

inline json to_json(const Move& m) {
  return {{"tag", m.tag}, {"prime", m.prime}, {"levels", m.levels}, {"transform", to_json(m.transform)}};
}

inline json to_json(const MinimisationCertificate& c) {
  json j;
  if (c.prime) j["prime"] = c.prime;
  j["input"] = to_json(c.input);
  json moves = json::array();
  for (const auto& m : c.moves) moves.push_back(to_json(m));
  j["moves"] = moves;
  if (!c.disc_valuations.empty()) j["disc_valuations"] = c.disc_valuations;
  j["output"] = to_json(c.output);
  j["output_discriminant"] = to_string(discriminant(c.output));
  j["total"] = to_json(c.total);
  j["initial_level"] = c.initial_level;
  j["final_level"] = c.final_level;
  j["status"] = status_name(c.status);
  j["is_minimal"] = tristate_name(c.minimal);
  if (c.screen) j["screen"] = fiber_name(*c.screen);
  if (!c.locals.empty()) {
    json a = json::array();
    for (const auto& l : c.locals) a.push_back(to_json(l));
    j["primes"] = a;
  }
  return j;
}

inline json to_json(const GroundTruth& t) {
  json j;
  j["A"] = t.A.get_str();
  j["B"] = t.B.get_str();
  j["degree"] = t.degree;
  json pl = json::object();
  for (const auto& [p, k] : t.planted)
    pl[std::to_string(p)] = {{"levels", k},
                             {"minimal_valuation", t.minimal_valuation.at(p)},
                             {"input_valuation", t.input_valuation.at(p)}};
  j["planted"] = pl;
  return j;
}

}  // namespace g1min

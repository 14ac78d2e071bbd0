#include "htype/io.hpp"

#include "htype/errors.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace htype::io {

namespace {

std::string indexed(const std::string& field, std::size_t i) {
  return field + "[" + std::to_string(i) + "]";
}

const Json& require(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw ParseError(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(field + "." + key, "missing");
  return *it;
}

int integer_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field, "expected an integer");
  return j.get<int>();
}

Vector vector_from_json(const Json& j, const std::string& field, Eigen::Index expected) {
  if (!j.is_array()) throw ParseError(field, "expected an array of reals");
  if (static_cast<Eigen::Index>(j.size()) != expected) {
    throw ParseError(field, "expected " + std::to_string(expected) + " entries, got " +
                                std::to_string(j.size()));
  }
  Vector v(expected);
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = real_from_json(j[i], indexed(field, i));
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(real_to_json(v[i]));
  return out;
}

}  // namespace

Json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double real_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ParseError(field, "expected a real number");
}

Json algebra_to_json(const HTypeAlgebra& alg) {
  Json us = Json::array();
  for (const auto& u : alg.generators()) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < u.rows(); ++r) rows.push_back(vector_to_json(u.row(r).transpose()));
    us.push_back(std::move(rows));
  }
  return {{"m", alg.m()}, {"n", alg.n()}, {"U", std::move(us)}};
}

HTypeAlgebra algebra_from_json(const Json& j) {
  const int m = integer_from_json(require(j, "m", "algebra"), "algebra.m");
  const int n = integer_from_json(require(j, "n", "algebra"), "algebra.n");
  if (m < 1) throw ParseError("algebra.m", "must be >= 1");
  if (n < 1) throw ParseError("algebra.n", "must be >= 1");
  const Json& us = require(j, "U", "algebra");
  if (!us.is_array()) throw ParseError("algebra.U", "expected an array of matrices");
  if (static_cast<int>(us.size()) != n) {
    throw ParseError("algebra.U", "expected " + std::to_string(n) + " matrices, got " +
                                      std::to_string(us.size()));
  }
  std::vector<Matrix> generators;
  for (std::size_t k = 0; k < us.size(); ++k) {
    const std::string field = indexed("algebra.U", k);
    if (!us[k].is_array() || static_cast<int>(us[k].size()) != m) {
      throw ParseError(field, "expected " + std::to_string(m) + " rows");
    }
    Matrix u(m, m);
    for (int r = 0; r < m; ++r) u.row(r) = vector_from_json(us[k][r], indexed(field, r), m).transpose();
    generators.push_back(std::move(u));
  }
  return HTypeAlgebra::custom(m, n, std::move(generators));
}

Json point_to_json(const ExtendedPoint& p) {
  if (p.is_infinity()) return "inf";
  return {{"x", vector_to_json(p.finite().x)}, {"t", vector_to_json(p.finite().t)}};
}

ExtendedPoint point_from_json(const Json& j, const HTypeAlgebra& alg, const std::string& field) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtendedPoint::infinity();
    throw ParseError(field, "expected a point object or \"inf\"");
  }
  return GroupElement{vector_from_json(require(j, "x", field), field + ".x", alg.m()),
                      vector_from_json(require(j, "t", field), field + ".t", alg.n())};
}

std::vector<ExtendedPoint> points_from_json(const Json& j, const HTypeAlgebra& alg,
                                            const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array of points");
  std::vector<ExtendedPoint> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(point_from_json(j[i], alg, indexed(field, i)));
  return out;
}

Json word_to_json(const SimilarityWord& w) {
  Json out = Json::array();
  for (const auto& atom : w.atoms()) {
    if (const auto* t = std::get_if<LeftTranslate>(&atom)) {
      out.push_back({{"op", "translate"}, {"arg", point_to_json(t->by)}});
    } else if (const auto* d = std::get_if<Dilate>(&atom)) {
      out.push_back({{"op", "dilate"}, {"arg", d->factor()}});
    } else {
      out.push_back({{"op", "invert"}, {"arg", nullptr}});
    }
  }
  return out;
}

SimilarityWord word_from_json(const Json& j, const HTypeAlgebra& alg, const std::string& field) {
  if (!j.is_array()) throw ParseError(field, "expected an array of atoms");
  SimilarityWord word;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = indexed(field, i);
    const Json& opj = require(j[i], "op", f);
    if (!opj.is_string()) throw ParseError(f + ".op", "expected a string");
    const auto op = opj.get<std::string>();
    const Json arg = j[i].contains("arg") ? j[i]["arg"] : Json(nullptr);
    if (op == "translate") {
      const auto p = point_from_json(arg, alg, f + ".arg");
      if (p.is_infinity()) throw ParseError(f + ".arg", "cannot translate by infinity");
      word.translate(p.finite());
    } else if (op == "dilate") {
      const double lambda = real_from_json(arg, f + ".arg");
      if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParseError(f + ".arg", "dilation factor must be > 0");
      word.dilate(lambda);
    } else if (op == "invert") {
      word.invert();
    } else {
      throw ParseError(f + ".op", "unknown op '" + op + "'");
    }
  }
  return word;
}

Json pairing_defect_to_json(const PairingDefect& d) {
  return {{"pairing", std::string(pairing_name(d.pairing))},
          {"X1_sqrt", real_to_json(d.x1_sqrt)},
          {"X2_sqrt", real_to_json(d.x2_sqrt)},
          {"defect", real_to_json(d.defect)}};
}

Json defect_report_to_json(const DefectReport& r) {
  Json records = Json::array();
  for (const auto& d : r.pairings) records.push_back(pairing_defect_to_json(d));
  Json quad = Json::array();
  for (const auto& p : r.quadruple) quad.push_back(point_to_json(p));
  return {{"quadruple", std::move(quad)},
          {"pairings", std::move(records)},
          {"min_defect", real_to_json(r.min_defect)},
          {"argmin", std::string(pairing_name(r.argmin))}};
}

Json validation_report_to_json(const ValidationReport& r) {
  Json out = {{"htype_ok", r.htype_ok},
              {"iwasawa_ok", r.iwasawa_ok},
              {"tolerance", real_to_json(r.tolerance)},
              {"skew_residual", real_to_json(r.skew_residual)},
              {"orthogonality_residual", real_to_json(r.orthogonality_residual)},
              {"anticommutation_residual", real_to_json(r.anticommutation_residual)},
              {"iwasawa_residual", real_to_json(r.iwasawa_residual)},
              {"witness", nullptr}};
  if (r.witness) {
    out["witness"] = {{"i", r.witness->i}, {"j", r.witness->j}, {"x", vector_to_json(r.witness->x)}};
  }
  return out;
}

Json suite_config_to_json(const verify::SuiteConfig& cfg) {
  return {{"samples", cfg.samples},
          {"seed", cfg.seed},
          {"tolerance", cfg.tolerance ? real_to_json(*cfg.tolerance) : Json(nullptr)},
          {"workers", cfg.workers},
          {"sampler",
           {{"horizontal_scale", cfg.sampler.horizontal_scale},
            {"central_scale", cfg.sampler.central_scale},
            {"stratified", cfg.sampler.stratified}}}};
}

verify::SuiteConfig suite_config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config", "expected an object");
  verify::SuiteConfig cfg;
  try {
    if (j.contains("samples")) cfg.samples = j.at("samples").get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerance") && !j.at("tolerance").is_null()) {
      cfg.tolerance = real_from_json(j.at("tolerance"), "config.tolerance");
    }
    if (j.contains("workers")) cfg.workers = j.at("workers").get<unsigned>();
    if (j.contains("sampler")) {
      const auto& s = j.at("sampler");
      if (s.contains("horizontal_scale")) cfg.sampler.horizontal_scale = s.at("horizontal_scale").get<double>();
      if (s.contains("central_scale")) cfg.sampler.central_scale = s.at("central_scale").get<double>();
      if (s.contains("stratified")) cfg.sampler.stratified = s.at("stratified").get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config", e.what());
  }
  try {
    cfg.validate();
  } catch (const Error& e) {
    throw ParseError("config", e.what());
  }
  return cfg;
}

Json witness_to_json(const verify::Witness& w) {
  Json points = Json::array();
  for (const auto& p : w.points) points.push_back(point_to_json(p));
  Json scalars = Json::array();
  for (double s : w.scalars) scalars.push_back(real_to_json(s));
  return {{"points", std::move(points)}, {"scalars", std::move(scalars)}, {"note", w.note}};
}

Json suite_result_to_json(const verify::SuiteResult& r) {
  Json out = {{"suite", r.name},
              {"passed", r.passed},
              {"worst_violation", real_to_json(r.worst_violation)},
              {"tolerance", real_to_json(r.tolerance)},
              {"samples", r.samples},
              {"duration", r.duration_seconds}};
  out["witness_index"] = r.witness_index ? Json(*r.witness_index) : Json(nullptr);
  out["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  out["shrunk_witness"] = r.shrunk_witness ? witness_to_json(*r.shrunk_witness) : Json(nullptr);
  Json metrics = Json::object();
  for (const auto& m : r.metrics) metrics[m.name] = real_to_json(m.value);
  out["metrics"] = std::move(metrics);
  if (!r.children.empty()) {
    Json children = Json::array();
    for (const auto& c : r.children) children.push_back(suite_result_to_json(c));
    out["children"] = std::move(children);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace htype::io

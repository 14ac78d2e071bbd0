#include "htype/cli.hpp"

#include "htype/errors.hpp"
#include "htype/io.hpp"
#include "htype/moebius.hpp"
#include "htype/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace htype::cli {

namespace {

using io::Json;

struct Options {
  std::string algebra = "heisenberg:1";
  std::string points;
  std::string suite = "all";
  std::string mutation = "none";
  std::string format = "json";
  std::string out;
  std::size_t samples = 0;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  unsigned workers = 0;
};

int parse_block_count(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw ParseError("algebra", "bad parameter in '" + source + "'");
  }
  return k;
}

// Inline JSON when the argument looks like JSON, otherwise a file path.
Json load_json_argument(const std::string& arg, const std::string& flag) {
  if (arg.empty()) throw ParseError(flag, "required");
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{' || arg[first] == '"')) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(flag, std::string("malformed JSON: ") + e.what());
    }
  }
  return io::read_json_file(arg);
}

std::string csv_real(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void flatten_suite_rows(const verify::SuiteResult& r, std::vector<std::vector<std::string>>& rows) {
  if (!r.children.empty()) {
    for (const auto& c : r.children) flatten_suite_rows(c, rows);
    return;
  }
  rows.push_back({r.name, r.passed ? "true" : "false", csv_real(r.worst_violation),
                  csv_real(r.tolerance), std::to_string(r.samples), csv_real(r.duration_seconds)});
}

struct Report {
  std::string command;
  Json algebra;
  std::uint64_t seed = 0;
  Json tolerances = Json::object();
  Json results;
  std::vector<std::string> csv_header{};
  std::vector<std::vector<std::string>> csv_rows{};
  int status = kOk;
};

Json algebra_summary(const HTypeAlgebra& alg) {
  return {{"source", alg.label()}, {"m", alg.m()}, {"n", alg.n()}};
}

void emit(const Report& report, const Options& opt, double duration, std::ostream& out) {
  std::ostringstream text;
  if (opt.format == "csv") {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) text << (i ? "," : "") << cells[i];
      text << '\n';
    };
    line(report.csv_header);
    for (const auto& row : report.csv_rows) line(row);
  } else if (report.command == "export") {
    // The algebra interchange format itself, loadable by --algebra.
    text << report.results.dump(2) << '\n';
  } else {
    Json j = {{"command", report.command},       {"algebra", report.algebra},
              {"seed", report.seed},             {"tolerances", report.tolerances},
              {"results", report.results},       {"duration", duration}};
    text << j.dump(2) << '\n';
  }
  if (opt.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(opt.out);
    if (!file) throw ParseError("--out", "cannot write '" + opt.out + "'");
    file << text.str();
  }
}

Report cmd_validate(const Options& opt) {
  const auto alg = resolve_algebra(opt.algebra);
  const double tol = opt.tol.value_or(1e-9);
  const int samples = opt.samples == 0 ? 100 : static_cast<int>(opt.samples);
  const auto v = validate_htype(alg, samples, tol, opt.seed);
  Report r{"validate", algebra_summary(alg), opt.seed, {{"axioms", tol}}, io::validation_report_to_json(v)};
  r.csv_header = {"htype_ok", "iwasawa_ok", "skew_residual", "orthogonality_residual",
                  "anticommutation_residual", "iwasawa_residual"};
  r.csv_rows = {{v.htype_ok ? "true" : "false", v.iwasawa_ok ? "true" : "false",
                 csv_real(v.skew_residual), csv_real(v.orthogonality_residual),
                 csv_real(v.anticommutation_residual), csv_real(v.iwasawa_residual)}};
  r.status = v.htype_ok && v.iwasawa_ok ? kOk : kVerificationFailed;
  return r;
}

Report cmd_check(const Options& opt) {
  const auto alg = resolve_algebra(opt.algebra);
  const auto mutation = verify::parse_mutation(opt.mutation);
  const Group group = verify::mutate(alg, mutation);
  verify::SuiteConfig cfg;
  cfg.samples = opt.samples == 0 ? 10000 : opt.samples;
  cfg.seed = opt.seed;
  cfg.tolerance = opt.tol;
  cfg.workers = opt.workers;
  const auto result = verify::run_suite(opt.suite, group, cfg);

  Report r{"check", algebra_summary(alg), opt.seed, Json::object(), io::suite_result_to_json(result)};
  r.algebra["mutation"] = std::string(verify::mutation_name(mutation));
  r.tolerances["override"] = opt.tol ? io::real_to_json(*opt.tol) : Json(nullptr);
  r.csv_header = {"suite", "passed", "worst_violation", "tolerance", "samples", "duration"};
  flatten_suite_rows(result, r.csv_rows);
  r.status = result.passed ? kOk : kVerificationFailed;
  return r;
}

std::vector<ExtendedPoint> load_points(const Options& opt, const HTypeAlgebra& alg,
                                       std::size_t expected) {
  const auto pts = io::points_from_json(load_json_argument(opt.points, "--points"), alg, "points");
  if (pts.size() != expected) {
    throw ParseError("points", "expected " + std::to_string(expected) + " points, got " +
                                    std::to_string(pts.size()));
  }
  return pts;
}

Report cmd_distance(const Options& opt) {
  const auto alg = resolve_algebra(opt.algebra);
  const Group group(alg);
  const auto pts = load_points(opt, alg, 2);
  const double d = group.distance(pts[0], pts[1]);
  Report r{"distance", algebra_summary(alg), opt.seed, Json::object(), {{"distance", io::real_to_json(d)}}};
  r.csv_header = {"distance"};
  r.csv_rows = {{csv_real(d)}};
  return r;
}

Report cmd_cross_ratio(const Options& opt) {
  const auto alg = resolve_algebra(opt.algebra);
  const Group group(alg);
  const auto pts = load_points(opt, alg, 4);
  const auto x = cross_ratio(group, pts[0], pts[1], pts[2], pts[3]);
  Report r{"cross-ratio", algebra_summary(alg), opt.seed, Json::object(),
           {{"sqrt_value", io::real_to_json(x.sqrt_value)}}};
  r.csv_header = {"sqrt_value"};
  r.csv_rows = {{csv_real(x.sqrt_value)}};
  return r;
}

Report cmd_defect(const Options& opt) {
  const auto alg = resolve_algebra(opt.algebra);
  const Group group(alg);
  const auto pts = load_points(opt, alg, 4);
  const double tol = opt.tol.value_or(1e-9);
  const auto report = ptolemaean_defects(group, {pts[0], pts[1], pts[2], pts[3]});
  Report r{"defect", algebra_summary(alg), opt.seed, {{"defect", tol}},
           io::defect_report_to_json(report)};
  r.csv_header = {"pairing", "X1_sqrt", "X2_sqrt", "defect"};
  for (const auto& d : report.pairings) {
    r.csv_rows.push_back({std::string(pairing_name(d.pairing)), csv_real(d.x1_sqrt),
                          csv_real(d.x2_sqrt), csv_real(d.defect)});
  }
  r.status = report.min_defect >= -tol ? kOk : kVerificationFailed;
  return r;
}

Report cmd_rcircle(const Options& opt) {
  const auto alg = resolve_algebra(opt.algebra);
  const Group group(alg);
  const Json spec = load_json_argument(opt.points, "--points");
  if (!spec.is_object()) throw ParseError("points", "expected {\"direction\", \"lambdas\", \"word\"}");
  if (!spec.contains("direction")) throw ParseError("points.direction", "missing");
  if (!spec.contains("lambdas")) throw ParseError("points.lambdas", "missing");
  const auto& dirj = spec.at("direction");
  if (!dirj.is_array() || static_cast<int>(dirj.size()) != alg.m()) {
    throw ParseError("points.direction", "expected " + std::to_string(alg.m()) + " reals");
  }
  Vector dir(alg.m());
  for (int i = 0; i < alg.m(); ++i) dir[i] = io::real_from_json(dirj[i], "points.direction");
  const auto& lj = spec.at("lambdas");
  if (!lj.is_array() || lj.size() != 4) throw ParseError("points.lambdas", "expected 4 parameters");
  std::array<double, 4> lambdas{};
  for (int i = 0; i < 4; ++i) lambdas[i] = io::real_from_json(lj[i], "points.lambdas");
  const SimilarityWord word =
      spec.contains("word") ? io::word_from_json(spec.at("word"), alg, "points.word") : SimilarityWord{};
  const double tol = opt.tol.value_or(word.empty() ? 1e-9 : 1e-8);
  const auto check = rcircle_equality_check(group, dir, lambdas, word, tol);

  Json images = Json::array();
  for (const auto& p : check.points) images.push_back(io::point_to_json(p));
  Json results = {{"separated", check.separated},
                  {"passed", check.passed},
                  {"tested", io::pairing_defect_to_json(check.tested)},
                  {"points", std::move(images)}};
  Report r{"rcircle", algebra_summary(alg), opt.seed, {{"defect", tol}}, std::move(results)};
  r.csv_header = {"separated", "defect", "passed"};
  r.csv_rows = {{check.separated ? "true" : "false", csv_real(check.tested.defect),
                 check.passed ? "true" : "false"}};
  r.status = check.passed ? kOk : kVerificationFailed;
  return r;
}

Report cmd_export(const Options& opt) {
  const auto alg = resolve_algebra(opt.algebra);
  Report r{"export", algebra_summary(alg), opt.seed, Json::object(), io::algebra_to_json(alg)};
  r.csv_header = {"m", "n"};
  r.csv_rows = {{std::to_string(alg.m()), std::to_string(alg.n())}};
  return r;
}

}  // namespace

HTypeAlgebra resolve_algebra(const std::string& source) {
  const auto colon = source.find(':');
  const std::string name = source.substr(0, colon);
  const std::string param = colon == std::string::npos ? "" : source.substr(colon + 1);
  if (name == "heisenberg" || name == "quaternionic") {
    if (param.empty()) throw ParseError("algebra", "'" + name + "' needs a block count, e.g. " + name + ":1");
    const int k = parse_block_count(param, source);
    return name == "heisenberg" ? HTypeAlgebra::heisenberg(k) : HTypeAlgebra::quaternionic(k);
  }
  if (name == "octonionic") {
    if (!param.empty() && param != "1") throw ParseError("algebra", "octonionic takes no parameter");
    return HTypeAlgebra::octonionic();
  }
  if (std::filesystem::exists(source)) {
    auto alg = io::algebra_from_json(io::read_json_file(source));
    return HTypeAlgebra(alg.m(), alg.n(), alg.generators(), source);
  }
  throw ParseError("algebra", "unknown built-in or missing file '" + source + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("htype");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"H-type group gauge metric: validation, metric queries and verification campaigns"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", opt.algebra, "heisenberg:k | quaternionic:k | octonionic | file.json")
        ->capture_default_str();
    sub->add_option("--format", opt.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out, "write the report to this path");
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    sub->add_option("--tol", opt.tol, "tolerance override");
  };

  auto* validate = app.add_subcommand("validate", "check the H-type axioms and the Iwasawa condition");
  add_common(validate);
  validate->add_option("--samples", opt.samples, "random unit vectors per generator pair (default 100)");

  auto* check = app.add_subcommand("check", "run verification suites");
  add_common(check);
  check->add_option("--suite", opt.suite, "suite name or 'all'")->capture_default_str();
  check->add_option("--samples", opt.samples, "samples per suite (default 10000)");
  check->add_option("--workers", opt.workers, "worker threads (0 = all cores)")->capture_default_str();
  check->add_option("--mutation", opt.mutation,
                    "none | doubled-central | scaled-u | dropped-t | unit-gauge")
      ->capture_default_str();

  auto* distance = app.add_subcommand("distance", "distance between two points");
  add_common(distance);
  distance->add_option("--points", opt.points, "JSON file or inline JSON list of 2 points")->required();

  auto* cross = app.add_subcommand("cross-ratio", "square-root cross-ratio of four points");
  add_common(cross);
  cross->add_option("--points", opt.points, "JSON file or inline JSON list of 4 points")->required();

  auto* defect = app.add_subcommand("defect", "Ptolemaean defects of a quadruple");
  add_common(defect);
  defect->add_option("--points", opt.points, "JSON file or inline JSON list of 4 points")->required();

  auto* rcircle = app.add_subcommand("rcircle", "equality check on an R-circle image");
  add_common(rcircle);
  rcircle->add_option("--points", opt.points, "JSON {direction, lambdas, word}")->required();

  auto* exp = app.add_subcommand("export", "write an algebra as JSON");
  add_common(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);  // prints help for the subcommand that asked
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Report report;
    if (*validate) report = cmd_validate(opt);
    else if (*check) report = cmd_check(opt);
    else if (*distance) report = cmd_distance(opt);
    else if (*cross) report = cmd_cross_ratio(opt);
    else if (*defect) report = cmd_defect(opt);
    else if (*rcircle) report = cmd_rcircle(opt);
    else report = cmd_export(opt);
    const double duration =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(report, opt, duration, out);
    return report.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace htype::cli

#pragma once

// JSON interchange for algebras, points, similarity words, defect reports and
// verification results. Non-finite reals are written as the strings "inf",
// "-inf" and "nan".

#include "htype/algebra.hpp"
#include "htype/group.hpp"
#include "htype/moebius.hpp"
#include "htype/verify.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace htype::io {

using Json = nlohmann::json;

/// {"m": int, "n": int, "U": [[[row], ...], ...]} with row-major entries.
Json algebra_to_json(const HTypeAlgebra& alg);
HTypeAlgebra algebra_from_json(const Json& j);

/// {"x": [...], "t": [...]} or the string "inf".
Json point_to_json(const ExtendedPoint& p);
ExtendedPoint point_from_json(const Json& j, const HTypeAlgebra& alg, const std::string& field = "point");

std::vector<ExtendedPoint> points_from_json(const Json& j, const HTypeAlgebra& alg,
                                            const std::string& field = "points");

/// [{"op": "translate"|"dilate"|"invert", "arg": point | lambda | null}, ...]
Json word_to_json(const SimilarityWord& w);
SimilarityWord word_from_json(const Json& j, const HTypeAlgebra& alg, const std::string& field = "word");

/// A real or one of "inf", "-inf", "nan".
Json real_to_json(double v);
double real_from_json(const Json& j, const std::string& field);

/// Records {pairing, X1_sqrt, X2_sqrt, defect}, plus min_defect and argmin.
Json defect_report_to_json(const DefectReport& r);
Json pairing_defect_to_json(const PairingDefect& d);

Json validation_report_to_json(const ValidationReport& r);

Json suite_config_to_json(const verify::SuiteConfig& cfg);
verify::SuiteConfig suite_config_from_json(const Json& j);

Json witness_to_json(const verify::Witness& w);
Json suite_result_to_json(const verify::SuiteResult& r);

/// Reads and parses a JSON file; ParseError names the path on failure.
Json read_json_file(const std::string& path);

}  // namespace htype::io

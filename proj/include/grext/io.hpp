#pragma once

// JSON algebra files and report fragments.
//
// Algebra file:
//   {
//     "prime": 7919,
//     "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 1}],
//     "unit": [{"basis": "1", "coeff": 1}],
//     "idempotents": [[{"basis": "1", "coeff": 1}]],
//     "products": {"1*x": [{"basis": "x", "coeff": 1}], ...}
//   }
// Absent products are zero. Coefficients are integers reduced mod prime.

#include <string>
#include <string_view>

#include <json.hpp>

#include "grext/algebra.hpp"
#include "grext/construct.hpp"
#include "grext/equiv.hpp"
#include "grext/gmod.hpp"
#include "grext/selfinj.hpp"

namespace grext::io {

using Json = nlohmann::ordered_json;

// Parses, installs the file's prime as the session prime, then validates.
// Throws Error(Parse) with "source:line:col" for malformed text or keys.
AlgebraPtr parse_algebra(std::string_view text, std::string_view source = "<input>");
AlgebraPtr load_algebra(const std::string& path);

// Canonical text for the current session prime; parse_algebra(save) re-saves
// to the identical string.
std::string save_algebra(const GradedAlgebra& a);
Json algebra_json(const GradedAlgebra& a);
void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

// kind: truncated_poly (param n >= 1), exterior (param m in {1, 2}),
// product_counterexample, upper_triangular (param c >= 1).
// Throws Error(Unsupported).
AlgebraPtr gen_example(std::string_view kind, int param = 0);

Json to_json(const Vec& v);
Json to_json(const Matrix& m);
Json to_json(const GradedModule& m);
Json to_json(const SelfInjectivity& s);
Json to_json(const NakayamaData& n);
Json to_json(const GldimResult& g);
Json to_json(const SigmaExtraction& s);
Json to_json(const EquivalenceCertificate& c);

}  // namespace grext::io

#include <doctest.h>

#include "grext/equiv.hpp"
#include "grext/io.hpp"
#include "grext/selfinj.hpp"
#include "support.hpp"

using namespace grext;
using namespace grext::testing;

namespace {

const char* kDual = R"({
  "prime": 7919,
  "basis": [{"name": "1", "degree": 0}, {"name": "x", "degree": 1}],
  "unit": [{"basis": "1", "coeff": 1}],
  "idempotents": [[{"basis": "1", "coeff": 1}]],
  "products": {
    "1*1": [{"basis": "1", "coeff": 1}],
    "1*x": [{"basis": "x", "coeff": 1}],
    "x*1": [{"basis": "x", "coeff": 1}]
  }
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

Error parse_error(const std::string& text) {
  try {
    io::parse_algebra(text, "t.json");
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse error");
  return Error(ErrorKind::Unsupported, "");
}

}  // namespace

TEST_CASE("corpus files are canonical") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const std::string text = io::read_file(corpus_path(name));
    CHECK(io::save_algebra(*io::parse_algebra(text)) == text);
  }
}

TEST_CASE("save and parse round trip") {
  const AlgebraPtr a = io::parse_algebra(kDual);
  const std::string once = io::save_algebra(*a);
  CHECK(io::save_algebra(*io::parse_algebra(once)) == once);
  CHECK(io::parse_algebra(once)->presentation() == a->presentation());
}

TEST_CASE("parse errors name the offending key") {
  SUBCASE("unknown basis in a product key") {
    const Error e = parse_error(replace(kDual, "\"x*1\"", "\"x*z\""));
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("x*z") != std::string::npos);
    CHECK(std::string(e.what()).find("t.json:9:") != std::string::npos);
  }
  SUBCASE("product key without a star") {
    const Error e = parse_error(replace(kDual, "\"x*1\"", "\"x1\""));
    CHECK(std::string(e.what()).find("x1") != std::string::npos);
  }
  SUBCASE("non-integer coefficient") {
    const Error e = parse_error(replace(kDual, "\"coeff\": 1}]\n  }", "\"coeff\": 1.5}]\n  }"));
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("x*1") != std::string::npos);
  }
  SUBCASE("unknown top-level key") {
    std::string text = kDual;
    text.insert(1, "\"extra\": 0,");
    const Error e = parse_error(text);
    CHECK(std::string(e.what()).find("extra") != std::string::npos);
  }
  SUBCASE("missing key") {
    const Error e = parse_error(replace(kDual, "\"unit\"", "\"unot\""));
    CHECK(e.kind() == ErrorKind::Parse);
  }
  SUBCASE("syntax error carries line and column") {
    const Error e = parse_error(replace(kDual, "\"degree\": 1}", "\"degree\": 1,}"));
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("t.json:3:") != std::string::npos);
  }
  SUBCASE("composite prime") {
    const Error e = parse_error(replace(kDual, "7919", "7917"));
    CHECK(std::string(e.what()).find("prime") != std::string::npos);
  }
}

TEST_CASE("coefficients are reduced with the file's prime") {
  const AlgebraPtr a = io::parse_algebra(replace(replace(kDual, "7919", "5"), "\"x*1\": [{\"basis\": \"x\", \"coeff\": 1}]",
                                                 "\"x*1\": [{\"basis\": \"x\", \"coeff\": 6}]"));
  CHECK(prime() == 5);
  CHECK(a->basis_product(1, 0)[1] == Fp::one());
  set_prime(kDefaultPrime);
}

TEST_CASE("validation errors pass through parsing") {
  const std::string bad = replace(kDual, "\"x*1\": [{\"basis\": \"x\", \"coeff\": 1}]", "\"x*1\": [{\"basis\": \"x\", \"coeff\": 2}]");
  CHECK(error_kind([&] { io::parse_algebra(bad); }) == ErrorKind::UnitMismatch);
}

TEST_CASE("example generators") {
  const AlgebraPtr t3 = io::gen_example("truncated_poly", 3);
  CHECK(t3->dim() == 3);
  CHECK(t3->top_degree() == 2);
  CHECK(radical(*t3).size() == 2);  // local: A/rad = k

  const AlgebraPtr ext = io::gen_example("exterior", 2);
  CHECK(ext->dim() == 4);
  CHECK(is_left_well_graded(*ext).holds);
  CHECK(is_graded_selfinjective(ext).holds);

  const AlgebraPtr a4 = io::gen_example("product_counterexample");
  CHECK(is_graded_selfinjective(a4).holds);
  CHECK_FALSE(is_left_well_graded(*a4).holds);

  const AlgebraPtr ut = io::gen_example("upper_triangular", 3);
  CHECK(ut->dim() == 6);
  CHECK(ut->is_trivially_graded());

  CHECK(error_kind([] { io::gen_example("exterior", 3); }) == ErrorKind::Unsupported);
  CHECK(error_kind([] { io::gen_example("truncated_poly", 0); }) == ErrorKind::Unsupported);
  CHECK(error_kind([] { io::gen_example("quaternions", 1); }) == ErrorKind::Unsupported);
}

TEST_CASE("bundled exterior algebra") {
  const AlgebraPtr a = corpus("exterior_2");
  CHECK(a->dim() == 4);
  CHECK(a->top_degree() == 2);
}

TEST_CASE("reports are reproducible") {
  const AlgebraPtr a = corpus("exterior_2");
  const auto first = io::to_json(theorem_pipeline(a, 5)).dump();
  const auto second = io::to_json(theorem_pipeline(a, 5)).dump();
  CHECK(first == second);
  const auto j = io::to_json(theorem_pipeline(a, 5));
  CHECK(j["passed"] == true);
  CHECK(j["sigma"]["sigma"].size() == 4);
  CHECK(j["pairs"].size() == j["samples"].size() * j["samples"].size());
  CHECK(io::to_json(global_dimension(forget_grading(*corpus("truncated_poly_2"))))["value"] == "ExceedsCutoff");
}

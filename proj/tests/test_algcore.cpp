#include <doctest.h>

#include <map>
#include <tuple>

#include "grext/algebra.hpp"
#include "grext/construct.hpp"
#include "grext/selfinj.hpp"
#include "support.hpp"

using namespace grext;
using namespace grext::testing;

namespace {

using Terms = std::vector<std::pair<std::string, std::int64_t>>;

// Build a presentation from name-level data; products not listed are zero.
Presentation make_presentation(const std::vector<std::string>& names, const std::vector<int>& degrees,
                               const std::vector<std::tuple<std::string, std::string, Terms>>& products,
                               const Terms& unit, const std::vector<Terms>& idempotents) {
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < names.size(); ++i) at[names[i]] = i;
  const std::size_t n = names.size();
  auto vec = [&](const Terms& t) {
    Vec v(n);
    for (const auto& [name, c] : t) v[at.at(name)] += Fp::from(c);
    return v;
  };
  Presentation p;
  p.names = names;
  p.degrees = degrees;
  p.products.assign(n * n, Vec(n));
  for (const auto& [l, r, t] : products) p.products[at.at(l) * n + at.at(r)] = vec(t);
  p.unit = vec(unit);
  for (const auto& e : idempotents) p.idempotents.push_back(vec(e));
  return p;
}

Presentation dual_numbers(int deg_x) {
  return make_presentation({"1", "x"}, {0, deg_x}, {{"1", "1", {{"1", 1}}}, {"1", "x", {{"x", 1}}}, {"x", "1", {{"x", 1}}}},
                           {{"1", 1}}, {{{"1", 1}}});
}

// Span of products u*v for u, v in the given spans.
std::vector<Vec> product_span(const GradedAlgebra& a, const std::vector<Vec>& us, const std::vector<Vec>& vs) {
  std::vector<Vec> out;
  for (const auto& u : us)
    for (const auto& v : vs) out.push_back(a.multiply(u, v));
  std::vector<Vec> kept;
  for (auto i : independent_subset(out, a.dim())) kept.push_back(out[i]);
  return kept;
}

}  // namespace

TEST_CASE("validate accepts the dual numbers") {
  const AlgebraPtr a = validate_algebra(dual_numbers(1));
  CHECK(a->dim() == 2);
  CHECK(a->top_degree() == 1);
}

TEST_CASE("validate rejects broken presentations") {
  SUBCASE("grading violation") {
    Presentation p = dual_numbers(1);
    p.products[1 * 2 + 1] = unit_vec(2, 0);  // x*x = 1
    CHECK(error_kind([&] { validate_algebra(p); }) == ErrorKind::GradingViolation);
  }
  SUBCASE("negative degree") {
    CHECK(error_kind([&] { validate_algebra(dual_numbers(-1)); }) == ErrorKind::GradingViolation);
  }
  SUBCASE("non-associative") {
    // x*y = z, y*x = 0 ... plus (x*x)*y != x*(x*y)
    Presentation p = make_presentation({"1", "x", "y"}, {0, 0, 0},
                                       {{"1", "1", {{"1", 1}}},
                                        {"1", "x", {{"x", 1}}},
                                        {"x", "1", {{"x", 1}}},
                                        {"1", "y", {{"y", 1}}},
                                        {"y", "1", {{"y", 1}}},
                                        {"x", "x", {{"y", 1}}},
                                        {"x", "y", {{"x", 1}}}},
                                       {{"1", 1}}, {{{"1", 1}}});
    CHECK(error_kind([&] { validate_algebra(p); }) == ErrorKind::NonAssociative);
  }
  SUBCASE("unit") {
    Presentation p = dual_numbers(1);
    p.unit = unit_vec(2, 1);
    CHECK(error_kind([&] { validate_algebra(p); }) == ErrorKind::UnitMismatch);
  }
  SUBCASE("idempotents not summing to one") {
    Presentation p = make_presentation({"e", "f"}, {0, 0}, {{"e", "e", {{"e", 1}}}, {"f", "f", {{"f", 1}}}},
                                       {{"e", 1}, {"f", 1}}, {{{"e", 1}}});
    CHECK(error_kind([&] { validate_algebra(p); }) == ErrorKind::IdempotentFault);
  }
  SUBCASE("non-primitive idempotent") {
    Presentation p = make_presentation({"e", "f"}, {0, 0}, {{"e", "e", {{"e", 1}}}, {"f", "f", {{"f", 1}}}},
                                       {{"e", 1}, {"f", 1}}, {{{"e", 1}, {"f", 1}}});
    CHECK(error_kind([&] { validate_algebra(p); }) == ErrorKind::NotPrimitive);
  }
  SUBCASE("prime too small") {
    const Presentation p = corpus("exterior_2")->presentation();
    PrimeScope small(3);
    CHECK(error_kind([&] { validate_algebra(p); }) == ErrorKind::PrimeTooSmall);
  }
  SUBCASE("shape") {
    Presentation p = dual_numbers(1);
    p.products.pop_back();
    CHECK(error_kind([&] { validate_algebra(p); }) == ErrorKind::ShapeMismatch);
  }
}

TEST_CASE("exterior algebra on two generators") {
  const AlgebraPtr a = corpus("exterior_2");
  CHECK(a->dim() == 4);
  CHECK(a->top_degree() == 2);
  CHECK(a->component_dims() == std::vector<std::size_t>{1, 2, 1});
  // brute-force associativity on all 64 triples
  int checked = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(a->multiply(a->basis_product(i, j), a->basis_vector(k)) ==
              a->multiply(a->basis_vector(i), a->basis_product(j, k)));
        ++checked;
      }
  CHECK(checked == 64);
}

TEST_CASE("radical") {
  CHECK(radical(*corpus("product_counterexample")).size() == 1);
  CHECK(radical(*degree_zero_part(*corpus("product_counterexample"))).empty());

  const AlgebraPtr t3 = corpus("truncated_poly_3");
  const auto r = radical(*t3);
  CHECK(r.size() == 2);
  EchelonBasis span(3);
  for (const auto& v : r) span.insert(v);
  CHECK(span.contains(t3->basis_vector(1)));
  CHECK(span.contains(t3->basis_vector(2)));

  const AlgebraPtr ut = corpus("upper_triangular_2");
  const auto ru = radical(*ut);
  REQUIRE(ru.size() == 1);
  EchelonBasis s2(3);
  s2.insert(ru[0]);
  CHECK(s2.contains(ut->basis_vector(*ut->index_of("E1,2"))));
}

TEST_CASE("radical is a nilpotent two-sided ideal on the corpus") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    const auto rad = radical(*a);
    EchelonBasis span(a->dim());
    for (const auto& v : rad) span.insert(v);
    for (const auto& v : rad)
      for (std::size_t k = 0; k < a->dim(); ++k) {
        CHECK(span.contains(a->multiply(a->basis_vector(k), v)));
        CHECK(span.contains(a->multiply(v, a->basis_vector(k))));
      }
    std::vector<Vec> power = rad;
    for (std::size_t step = 1; step < a->dim() && !power.empty(); ++step) power = product_span(*a, power, rad);
    CHECK(power.empty());
  }
}

TEST_CASE("top degree and component dims") {
  CHECK(corpus("truncated_poly_3")->top_degree() == 2);
  CHECK(corpus("truncated_poly_3")->component_dims() == std::vector<std::size_t>{1, 1, 1});
  CHECK(corpus("upper_triangular_2")->top_degree() == 0);
  CHECK(corpus("upper_triangular_2")->is_trivially_graded());
}

TEST_CASE("well-gradedness") {
  for (int n = 2; n <= 5; ++n) {
    const AlgebraPtr a = corpus("truncated_poly_" + std::to_string(n));
    CHECK(is_left_well_graded(*a).holds);
    CHECK(is_right_well_graded(*a).holds);
  }
  const AlgebraPtr a4 = corpus("product_counterexample");
  const auto left = is_left_well_graded(*a4);
  CHECK_FALSE(left.holds);
  REQUIRE(left.failing_idempotent);
  CHECK(idempotent_label(*a4, *left.failing_idempotent) == "e");
  CHECK(is_left_well_graded(*corpus("exterior_2")).holds);
  CHECK(is_right_well_graded(*corpus("exterior_2")).holds);
  CHECK(error_kind([] { is_left_well_graded(*corpus("field")); }) == ErrorKind::TrivialGrading);
}

TEST_CASE("well-gradedness matches a direct count of e A_c") {
  for (const auto& name : graded_corpus()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    bool left = true, right = true;
    for (const auto& e : a->idempotents()) {
      std::vector<Vec> l, r;
      for (auto k : a->component(a->top_degree())) {
        l.push_back(a->multiply(e, a->basis_vector(k)));
        r.push_back(a->multiply(a->basis_vector(k), e));
      }
      left = left && !independent_subset(l, a->dim()).empty();
      right = right && !independent_subset(r, a->dim()).empty();
    }
    CHECK(is_left_well_graded(*a).holds == left);
    CHECK(is_right_well_graded(*a).holds == right);
  }
}

TEST_CASE("left and right well-gradedness agree on self-injective corpus algebras") {
  for (const auto& name : graded_corpus()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    if (!is_graded_selfinjective(a).holds) continue;
    CHECK(is_left_well_graded(*a).holds == is_right_well_graded(*a).holds);
  }
}

TEST_CASE("basic algebras") {
  CHECK(is_basic(*corpus("truncated_poly_4")));
  CHECK_FALSE(is_basic(*corpus("matrix_2")));
  CHECK(is_basic(*corpus("upper_triangular_2")));
  CHECK(corpus("matrix_2")->simple_data().class_of == std::vector<std::size_t>{0, 0});
}

TEST_CASE("unit is the sum of the designated idempotents and dims add up") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    Vec sum(a->dim());
    for (const auto& e : a->idempotents()) sum = add(sum, e);
    CHECK(sum == a->unit());
    std::size_t total = 0;
    for (auto d : a->component_dims()) total += d;
    CHECK(total == a->dim());
  }
}

TEST_CASE("corner algebras") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    const AlgebraPtr c = corner(*a, a->unit());
    CHECK(c->dim() == a->dim());
    CHECK(c->presentation().products == a->presentation().products);
    CHECK(c->degrees() == a->degrees());
  }
  const AlgebraPtr a4 = corpus("product_counterexample");
  const AlgebraPtr k = corner(*a4, a4->idempotents()[0]);
  CHECK(k->dim() == 1);

  const TData td = build_t(corpus("truncated_poly_3"));
  const AlgebraPtr c00 = corner(*td.t, td.diagonal_idempotent(0));
  CHECK(c00->dim() == 2);
  // independent count: basis elements b with e00 b e00 = b
  const Vec e = td.diagonal_idempotent(0);
  std::size_t fixed = 0;
  for (std::size_t k2 = 0; k2 < td.t->dim(); ++k2) {
    const Vec b = td.t->basis_vector(k2);
    if (td.t->multiply(td.t->multiply(e, b), e) == b) ++fixed;
  }
  CHECK(fixed == 2);

  CHECK(error_kind([&] { corner(*a4, a4->basis_vector(2)); }) == ErrorKind::NotIdempotent);
}

TEST_CASE("degree zero part and forgetting the grading") {
  const AlgebraPtr a = corpus("exterior_2");
  CHECK(degree_zero_part(*a)->dim() == 1);
  const AlgebraPtr f = forget_grading(*a);
  CHECK(f->is_trivially_graded());
  CHECK(f->dim() == 4);
}

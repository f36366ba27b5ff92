#include <doctest.h>

#include "grext/construct.hpp"
#include "grext/selfinj.hpp"
#include "support.hpp"

using namespace grext;
using namespace grext::testing;

namespace {

// Entry count of the c×c grid with A_{s-r} above and A_{c+s-r} on/below the
// diagonal, counted row by row from the component dimensions alone.
std::size_t block_grid_count(const GradedAlgebra& a, std::size_t& upper, std::size_t& lower) {
  const int c = a.top_degree();
  const auto dims = a.component_dims();
  upper = lower = 0;
  std::size_t total = 0;
  for (int r = 0; r < c; ++r) {
    std::size_t row = 0;
    for (int s = 0; s < c; ++s) {
      const int up = s - r, low = c + s - r;
      if (s >= r && up <= c) upper += dims[up], row += dims[up];
      if (s <= r && low <= c) lower += dims[low], row += dims[low];
    }
    // each row meets A_0 .. A_c exactly once
    CHECK(row == a.dim());
    total += row;
  }
  return total;
}

}  // namespace

TEST_CASE("Beilinson algebra dimensions") {
  CHECK(beilinson(corpus("truncated_poly_2"))->dim() == 1);
  const AlgebraPtr b3 = beilinson(corpus("truncated_poly_3"));
  CHECK(b3->dim() == 3);
  CHECK(b3->is_trivially_graded());
  CHECK(b3->idempotent_count() == 2);
  CHECK(is_basic(*b3));
  CHECK(beilinson(corpus("exterior_2"))->dim() == 4);
  CHECK(error_kind([] { beilinson(corpus("upper_triangular_2")); }) == ErrorKind::TrivialGrading);
}

TEST_CASE("Beilinson of k[x]/(x^3) is the 2x2 upper triangular algebra") {
  const AlgebraPtr b3 = beilinson(corpus("truncated_poly_3"));
  const AlgebraPtr ut = corpus("upper_triangular_2");
  CHECK(radical(*b3).size() == 1);
  CHECK(global_dimension(b3).finite);
  CHECK(global_dimension(b3).value == global_dimension(ut).value);
  CHECK(is_graded_selfinjective(b3).holds == is_graded_selfinjective(ut).holds);
}

TEST_CASE("x(A) dimensions") {
  const AlgebraPtr a2 = corpus("truncated_poly_2");
  CHECK(x_bimodule(a2, beilinson(a2)).dim() == 1);
  const AlgebraPtr a3 = corpus("truncated_poly_3");
  CHECK(x_bimodule(a3, beilinson(a3)).dim() == 3);
  const AlgebraPtr ext = corpus("exterior_2");
  CHECK(x_bimodule(ext, beilinson(ext)).dim() == 4);
  CHECK(error_kind([&] { x_bimodule(a3, beilinson(ext)); }) == ErrorKind::AlgebraMismatch);
}

TEST_CASE("trivial extensions") {
  const AlgebraPtr k = corpus("field");
  const AlgebraPtr tk = T_of(k);
  CHECK(tk->dim() == 2);
  CHECK(tk->degrees() == std::vector<int>{0, 1});
  CHECK(is_zero(tk->basis_product(1, 1)));  // ε² = 0
  CHECK(tk->presentation().products == corpus("truncated_poly_2")->presentation().products);

  const AlgebraPtr t3 = t_of(corpus("truncated_poly_3"));
  CHECK(t3->dim() == 6);
  CHECK(t3->top_degree() == 1);

  // the degree-0 part reproduces B's product
  const TData td = build_t(corpus("exterior_2"));
  const std::size_t nb = td.b->dim();
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      const Vec& p = td.t->basis_product(i, j);
      const Vec& q = td.b->basis_product(i, j);
      CHECK(std::equal(q.begin(), q.end(), p.begin()));
      CHECK(std::all_of(p.begin() + nb, p.end(), [](Fp x) { return x.is_zero(); }));
    }
}

TEST_CASE("trivial extension errors") {
  const AlgebraPtr k = corpus("field");
  Bimodule zero{.over = k, .names = {}, .degrees = {}, .left = {Matrix(0, 0)}, .right = {Matrix(0, 0)}};
  CHECK(error_kind([&] { trivial_extension(k, zero); }) == ErrorKind::ZeroBimodule);
  const AlgebraPtr graded = corpus("truncated_poly_2");
  CHECK(error_kind([&] { trivial_extension(graded, dual_bimodule(graded)); }) == ErrorKind::GradingViolation);
  CHECK(error_kind([&] { trivial_extension(k, dual_bimodule(corpus("upper_triangular_2"))); }) == ErrorKind::AlgebraMismatch);
}

TEST_CASE("dual bimodule") {
  const AlgebraPtr k = corpus("field");
  const Bimodule dk = dual_bimodule(k);
  CHECK(dk.left[0] == Matrix::identity(1));
  CHECK(dk.right[0] == Matrix::identity(1));

  const AlgebraPtr kk = degree_zero_part(*corpus("product_counterexample"));
  const Bimodule d = dual_bimodule(kk);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Vec img = d.left[i].apply(unit_vec(2, j));
      CHECK(img == (i == j ? unit_vec(2, j) : Vec(2)));
    }

  const AlgebraPtr ut = corpus("upper_triangular_2");
  const std::size_t strict = *ut->index_of("E1,2");
  const Bimodule du = dual_bimodule(ut);
  CHECK(du.left[strict] == ut->right_regular(strict).transpose());
  CHECK(du.right[strict] == ut->left_regular(strict).transpose());
}

TEST_CASE("twisted dual bimodule") {
  const AlgebraPtr ut = corpus("upper_triangular_2");
  const Bimodule plain = dual_bimodule(ut);
  const Bimodule same = twisted_dual_bimodule(ut, identity_automorphism(ut));
  CHECK(plain.left == same.left);
  CHECK(plain.right == same.right);

  // k × k with the factor swap: the twist exchanges the actions of e and f
  // on the side where σ enters, and leaves the other side alone.
  const AlgebraPtr kk = degree_zero_part(*corpus("product_counterexample"));
  const AlgebraAutomorphism swap{kk, Matrix::from_ints({{0, 1}, {1, 0}})};
  const Bimodule tw = twisted_dual_bimodule(kk, swap);
  const Bimodule d = dual_bimodule(kk);
  CHECK(tw.left[0] == d.left[1]);
  CHECK(tw.left[1] == d.left[0]);
  CHECK(tw.right == d.right);
  CHECK(is_graded_selfinjective(twisted_T_of(kk, swap)).holds);
}

TEST_CASE("automorphism validation") {
  const AlgebraPtr a = corpus("truncated_poly_3");
  validate_automorphism(identity_automorphism(a));
  // x -> 2x, x^2 -> 4x^2 is multiplicative
  validate_automorphism({a, Matrix::from_ints({{1, 0, 0}, {0, 2, 0}, {0, 0, 4}})});
  CHECK(error_kind([&] { validate_automorphism({a, Matrix::from_ints({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})}); }) ==
        ErrorKind::NotAutomorphism);
  CHECK(error_kind([&] { validate_automorphism({a, Matrix::from_ints({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})}); }) ==
        ErrorKind::NotAutomorphism);
  CHECK(error_kind([&] { validate_automorphism({a, Matrix(3, 3)}); }) == ErrorKind::NotAutomorphism);
}

TEST_CASE("small t(A) and T(b(A)) dimensions") {
  const AlgebraPtr a2 = corpus("truncated_poly_2");
  const AlgebraPtr t2 = t_of(a2);
  CHECK(t2->presentation().products == a2->presentation().products);
  CHECK(t2->degrees() == a2->degrees());
  CHECK(t_of(corpus("exterior_2"))->dim() == 8);
  CHECK(T_of(beilinson(corpus("truncated_poly_3")))->dim() == 6);
}

TEST_CASE("counting identities on the graded corpus") {
  for (const auto& name : graded_corpus()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    const TData td = build_t(a);
    std::size_t upper = 0, lower = 0;
    const std::size_t grid = block_grid_count(*a, upper, lower);
    CHECK(td.t->dim() == grid);
    CHECK(td.t->dim() == static_cast<std::size_t>(a->top_degree()) * a->dim());
    CHECK(td.b->dim() == upper);
    CHECK(td.x.dim() == lower);
    CHECK(T_of(td.b)->dim() == 2 * td.b->dim());
    validate_bimodule(td.x);
    validate_bimodule(dual_bimodule(td.b));
  }
}

TEST_CASE("graded Frobenius algebras have palindromic dimensions") {
  for (const auto& name : graded_corpus()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    if (!is_graded_frobenius(a)) continue;
    const auto dims = a->component_dims();
    const int c = a->top_degree();
    for (int n = 0; n <= c; ++n) CHECK(dims[n] == dims[c - n]);
    const TData td = build_t(a);
    CHECK(td.x.dim() == td.b->dim());
  }
}

TEST_CASE("T(B) is well-graded and self-injective for trivially graded corpus algebras and Beilinson algebras") {
  std::vector<AlgebraPtr> bases;
  for (const auto& name : corpus_names()) {
    const AlgebraPtr a = corpus(name);
    bases.push_back(a->is_trivially_graded() ? a : beilinson(a));
  }
  for (const auto& b : bases) {
    const AlgebraPtr t = T_of(b);
    CHECK(t->top_degree() == 1);
    CHECK(is_left_well_graded(*t).holds);
    CHECK(is_right_well_graded(*t).holds);
    CHECK(is_graded_selfinjective(t).holds);
    for (std::size_t i = 0; i < t->idempotent_count(); ++i) CHECK(width(proj(t, i, 0)) == 2);
  }
}

TEST_CASE("trivial extension widths follow well-gradedness") {
  // t(A4) = (k × k) ⋉ A_1 is not well-graded: the projective at e has width 1
  const TData td = build_t(corpus("product_counterexample"));
  CHECK_FALSE(is_left_well_graded(*td.t).holds);
  bool all_two = true;
  for (std::size_t i = 0; i < td.t->idempotent_count(); ++i) all_two = all_two && width(proj(td.t, i, 0)) == 2;
  CHECK_FALSE(all_two);
}

TEST_CASE("constructions serialize and re-validate") {
  for (const auto& name : graded_corpus()) {
    CAPTURE(name);
    const TData td = build_t(corpus(name));
    for (const AlgebraPtr& built : {td.b, td.t, T_of(td.b)}) {
      const std::string text = io::save_algebra(*built);
      const AlgebraPtr back = io::parse_algebra(text);
      CHECK(back->presentation() == built->presentation());
      CHECK(io::save_algebra(*back) == text);
    }
  }
}

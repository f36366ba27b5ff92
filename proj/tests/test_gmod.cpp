#include <doctest.h>

#include "grext/construct.hpp"
#include "grext/gmod.hpp"
#include "support.hpp"

using namespace grext;
using namespace grext::testing;

TEST_CASE("width") {
  const AlgebraPtr a = corpus("truncated_poly_3");
  CHECK(width(GradedModule::zero(a)) == 0);
  CHECK(width(simple(a, 0, 4)) == 1);
  for (const auto& name : graded_corpus()) {
    CAPTURE(name);
    const AlgebraPtr b = corpus(name);
    CHECK(width(regular_module(b)) == b->top_degree() + 1);
  }
}

TEST_CASE("shift") {
  const AlgebraPtr a = corpus("truncated_poly_2");
  const GradedModule m = regular_module(a);
  CHECK(shift(m, 0).same_tables(m));
  const GradedModule s = shift(m, 1);
  CHECK(s.degrees() == std::vector<int>{-1, 0});
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const AlgebraPtr b = corpus(name);
    for (const auto& x : sample_modules(b))
      for (int d : {-3, -1, 2}) {
        CHECK(width(shift(x, d)) == width(x));
        CHECK(shift(shift(x, d), 2).same_tables(shift(x, d + 2)));
      }
  }
}

TEST_CASE("indecomposable projectives and injectives") {
  const AlgebraPtr a = corpus("truncated_poly_3");
  const GradedModule p = proj(a, 0, 0);
  CHECK(p.same_tables(regular_module(a)));
  CHECK(p.graded_dims() == std::map<int, std::size_t>{{0, 1}, {1, 1}, {2, 1}});
  const GradedModule i = inj(a, 0, 0);
  CHECK(i.graded_dims() == std::map<int, std::size_t>{{-2, 1}, {-1, 1}, {0, 1}});
  CHECK(inj(a, 0, 1).graded_dims() == std::map<int, std::size_t>{{-3, 1}, {-2, 1}, {-1, 1}});

  const TData td = build_t(a);
  CHECK(td.t->idempotent_count() == 2);
  for (std::size_t k = 0; k < td.t->idempotent_count(); ++k) CHECK(width(proj(td.t, k, 0)) == 2);
}

TEST_CASE("width of A e_i detects left well-gradedness") {
  for (const auto& name : graded_corpus()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    bool all_full = true;
    for (std::size_t i = 0; i < a->idempotent_count(); ++i) {
      const int w = width(proj(a, i, 0));
      CHECK(w <= a->top_degree() + 1);
      all_full = all_full && w == a->top_degree() + 1;
    }
    CHECK(all_full == is_left_well_graded(*a).holds);
  }
}

TEST_CASE("top and socle") {
  const AlgebraPtr a = corpus("truncated_poly_3");
  const GradedModule r = regular_module(a);
  CHECK(top(r).graded_dims() == std::map<int, std::size_t>{{0, 1}});
  CHECK(socle(r).graded_dims() == std::map<int, std::size_t>{{2, 1}});
  CHECK(socle(inj(a, 0, 0)).graded_dims() == std::map<int, std::size_t>{{0, 1}});

  const AlgebraPtr ut = corpus("upper_triangular_3");
  const GradedModule ss = direct_sum({simple(ut, 0, 0), simple(ut, 2, 1)});
  CHECK(top(ss).same_tables(ss));
  CHECK(socle(ss).same_tables(ss));
}

TEST_CASE("hom dimensions") {
  const AlgebraPtr a = corpus("truncated_poly_2");
  CHECK(hom_dim(regular_module(a), regular_module(a)) == 1);
  const auto basis = hom_basis(regular_module(a), regular_module(a));
  REQUIRE(basis.size() == 1);
  CHECK(is_morphism(regular_module(a), regular_module(a), basis[0]));

  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const AlgebraPtr b = corpus(name);
    for (const auto& m : sample_modules(b))
      if (m.dim() > 0) CHECK(hom_dim(m, m) >= 1);
  }
}

TEST_CASE("hom from A e_i counts the idempotent slice") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    const auto samples = sample_modules(a);
    for (std::size_t i = 0; i < a->idempotent_count(); ++i)
      for (int d : {0, 1}) {
        const GradedModule p = proj(a, i, d);
        for (const auto& m : samples) {
          // Hom(A e_i(d), M) = (e_i M)_{-d}
          CHECK(hom_dim(p, m) == idempotent_slice_dim(m, a->idempotents()[i], -d));
        }
      }
  }
}

TEST_CASE("projectivity") {
  const AlgebraPtr a2 = corpus("truncated_poly_2");
  CHECK_FALSE(is_projective(simple(a2, 0, 0)));
  CHECK(projective_cover_dim(simple(a2, 0, 0)) == 2);
  CHECK(is_projective(inj(corpus("truncated_poly_3"), 0, 0)));
  CHECK(is_injective(proj(corpus("truncated_poly_3"), 0, 0)));
  CHECK_FALSE(is_injective(simple(a2, 0, 0)));
  CHECK(injective_envelope_dim(simple(a2, 0, 0)) == 2);

  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const AlgebraPtr a = corpus(name);
    for (std::size_t i = 0; i < a->idempotent_count(); ++i)
      for (int d : {-2, 0, 1}) {
        const GradedModule p = proj(a, i, d);
        CHECK(is_projective(p));
        CHECK(projective_cover_dim(p) == p.dim());
        // proper quotients: P / (rad^k P) for k >= 1 while nonzero and proper
        std::vector<Vec> sub = radical_span(p);
        while (!sub.empty()) {
          const GradedModule q = quotient(p, sub);
          CHECK(q.dim() < p.dim());
          CHECK_FALSE(is_projective(q));
          // rad^{k+1} P = rad · rad^k P
          EchelonBasis deeper(p.dim());
          for (const auto& r : a->simple_data().radical) {
            const Matrix act = p.act(r);
            for (const auto& v : sub) deeper.insert(act.apply(v));
          }
          sub = deeper.accepted();
        }
      }
  }
}

TEST_CASE("projective cover and syzygy") {
  const AlgebraPtr a = corpus("truncated_poly_2");
  const ProjectiveCover pc = projective_cover(simple(a, 0, 0));
  CHECK(pc.cover.dim() == 2);
  CHECK(is_morphism(pc.cover, simple(a, 0, 0), pc.map));
  CHECK(rank(pc.map) == 1);
  // Ω S = S(-1)
  const GradedModule om = syzygy(simple(a, 0, 0));
  CHECK(om.same_tables(simple(a, 0, -1)));
  CHECK(syzygy(proj(a, 0, 3)).dim() == 0);
}

TEST_CASE("simple multiplicities of tops") {
  const AlgebraPtr a = corpus("cyclic_nakayama_2");
  const auto m = simple_multiplicities(top(direct_sum({proj(a, 0, 0), proj(a, 1, 2), proj(a, 1, 2)})));
  CHECK(m == std::map<std::pair<std::size_t, int>, std::size_t>{{{0, 0}, 1}, {{1, -2}, 2}});
}

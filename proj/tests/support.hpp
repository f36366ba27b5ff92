#pragma once

// Shared fixtures and small independent oracles for the unit tests.

#include <string>
#include <vector>

#include <doctest.h>

#include "grext/algebra.hpp"
#include "grext/error.hpp"
#include "grext/gmod.hpp"
#include "grext/io.hpp"

namespace grext::testing {

inline std::string corpus_path(const std::string& name) { return std::string(GREXT_CORPUS_DIR) + "/" + name + ".json"; }

inline AlgebraPtr corpus(const std::string& name) { return io::load_algebra(corpus_path(name)); }

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {
      "field",          "truncated_poly_2", "truncated_poly_3",       "truncated_poly_4",
      "truncated_poly_5", "exterior_1",     "exterior_2",             "product_counterexample",
      "upper_triangular_2", "upper_triangular_3", "matrix_2",         "path_a2",
      "square_zero_2",  "cyclic_nakayama_2", "t_truncated_poly_3",    "trivext_upper_triangular_2"};
  return names;
}

// Graded corpus algebras (c >= 1).
inline std::vector<std::string> graded_corpus() {
  std::vector<std::string> out;
  for (const auto& n : corpus_names())
    if (corpus(n)->top_degree() >= 1) out.push_back(n);
  return out;
}

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Unsupported;
}

// dim (e M)_n counted as the rank of the action of e on the degree-n slice.
inline std::size_t idempotent_slice_dim(const GradedModule& m, std::span<const Fp> e, int n) {
  const Matrix act = m.act(e);
  const auto idx = m.slice(n);
  Matrix block(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = act(idx[r], idx[c]);
  return rank(block);
}

// A few modules per corpus algebra for invariant checks.
inline std::vector<GradedModule> sample_modules(const AlgebraPtr& a) {
  std::vector<GradedModule> out{regular_module(a), GradedModule::zero(a)};
  for (std::size_t i = 0; i < a->idempotent_count(); ++i)
    for (int d : {-1, 0, 2}) {
      out.push_back(proj(a, i, d));
      out.push_back(inj(a, i, d));
      out.push_back(simple(a, i, d));
    }
  return out;
}

}  // namespace grext::testing

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "grext/algebra.hpp"

namespace grext {

struct SelfInjectivity {
  bool holds = false;
  // Per designated idempotent i: dim D(e_i A) and its projective cover.
  std::vector<std::size_t> injective_dims;
  std::vector<std::size_t> cover_dims;
  std::optional<std::size_t> failing_index;
};

// Every graded injective D(e_i A) is projective.
SelfInjectivity is_graded_selfinjective(const AlgebraPtr& a);

// Seeded random search for λ with (u, v) -> λ(uv) nondegenerate.
// Throws Error(NotBasic). A miss is never a proof of non-Frobenius.
std::optional<Vec> frobenius_functional_search(const AlgebraPtr& a, std::uint64_t seed, int trials = 64);

// _A A ≅ D(A_A)(-c): each D(e_i A)(-c) is projective with simple top in
// degree 0, and the induced index map is a bijection up to isomorphism class.
// Throws Error(TrivialGrading).
bool is_graded_frobenius(const AlgebraPtr& a);

// {u in A_0 : u A_c = 0} = 0. Throws Error(TrivialGrading).
bool is_Ac_faithful(const GradedAlgebra& a);

struct NakayamaData {
  std::vector<std::size_t> permutation;  // A e_i ≅ D(e_{s(i)} A)(shift[i])
  std::vector<int> shifts;
  std::vector<std::size_t> cover_dims;   // projectivity certificate of D(e_{s(i)} A)
  std::vector<int> top_degrees;          // degree of the simple top of D(e_{s(i)} A)
};

// Throws NotSelfInjective, AmbiguousMatch, or CheckFailed when a well-graded
// input yields a shift other than -c.
NakayamaData graded_nakayama(const AlgebraPtr& a);

struct GldimResult {
  bool finite = false;
  int value = 0;  // the dimension when finite, otherwise the cutoff
  std::vector<int> simple_pds;  // per isomorphism class; -1 past the cutoff
};

inline constexpr int kDefaultGldimCutoff = 32;

// Minimal projective resolutions of the simples, up to `cutoff` steps.
GldimResult global_dimension(const AlgebraPtr& b, int cutoff = kDefaultGldimCutoff);

}  // namespace grext

#pragma once

// The functors behind A-gr ≃ T(b(A))-gr:
//
//   Φ : A-gr -> t(A)-gr          regroup c consecutive slices into one column
//   Ψ : t(A)-gr -> A-gr          split a t(A)-slice by the diagonal idempotents
//   ι*: t(A)-gr -> T(B^σ)-gr     restriction along t(A) ≅ T(B^σ)
//   τ : T(B)-gr -> T(B^σ)-gr     the degree-dependent σ-twist of the action
//
// and the end-to-end certificate F = τ^{-1} ∘ ι* ∘ Φ.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "grext/algebra.hpp"
#include "grext/construct.hpp"
#include "grext/gmod.hpp"

namespace grext {

// A module together with the change of basis from the input module:
// columns of `basis` are the new basis vectors in old coordinates.
struct Transported {
  GradedModule module;
  Matrix basis;
};

// Applies a basis change pair to a morphism f : M -> N.
GradedMorphism transport_morphism(const Transported& m, const Transported& n, const GradedMorphism& f);

// Φ(M)_n = ⊕_{i=nc}^{(n+1)c-1} M_i. Inside slice n, column component r holds
// M_{nc+c-1-r}, listed r = 0..c-1, so that the upper-triangular b(A) acts by
// matrix-times-column.
Transported phi(const TData& t, const GradedModule& m);
// Ψ(N)_{ic+q} = e_rr N_i with r = c-1-q.
Transported psi(const TData& t, const GradedModule& n);

struct SigmaExtraction {
  AlgebraAutomorphism sigma;
  Vec generator;  // m in D(X) with m·b = σ(b)·m
  Matrix theta;   // X -> D(B^σ), columns indexed by X's basis
  int trials = 0;
  bool from_sweep = false;
};

// For T = B ⋉ X with B basic and T well-graded self-injective.
// Throws PreconditionFailed (with witness) or GeneratorNotFound, and
// CheckFailed when a post-hoc verification fails.
SigmaExtraction extract_sigma(const AlgebraPtr& b, const Bimodule& x, std::uint64_t seed,
                              const AlgebraPtr& t = nullptr);

// T(B)-module -> T(B^σ)-module via
//   (b, f) ⋆ m = σ^{|m|}(b) m + (f ∘ σ^{-|m|}) m.
// `target` must be laid out as B ⊕ D(B) (as built by trivial_extension).
Transported twist_transport(const AlgebraAutomorphism& sigma, const GradedModule& m, const AlgebraPtr& target);
// Inverse direction, T(B^σ)-gr -> T(B)-gr, by transporting with σ^{-1}.
Transported untwist_transport(const AlgebraAutomorphism& sigma, const GradedModule& m, const AlgebraPtr& target);

// Restriction along the graded isomorphism B ⋉ X -> B ⋉ D(B^σ), id ⊕ θ.
Transported iso_transport(const Matrix& theta, const GradedModule& m, const AlgebraPtr& target);

struct SampleRecord {
  std::string label;  // P{i}({d}), S{i}({d}) or I{i}({d})
  std::size_t dim = 0;
  bool round_trip = false;
  bool preserved = true;  // projective/injective preserved where applicable
};

struct PairRecord {
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t hom_before = 0;
  std::size_t hom_after = 0;
  bool morphisms_ok = true;  // every F(f) is a morphism
};

struct EquivalenceCertificate {
  AlgebraPtr a;
  TData t;
  AlgebraPtr big_t{};   // T(b(A))
  AlgebraPtr twisted_t{}; // T(b(A)^σ)
  SigmaExtraction sigma{};
  bool algebra_iso_ok = false;
  std::vector<SampleRecord> samples{};
  std::vector<PairRecord> pairs{};
  std::size_t compositions_checked = 0;
  bool round_trip_ok = false;
  bool hom_dims_ok = false;
  bool preservation_ok = false;
  bool functoriality_ok = false;
  std::string first_failure{};

  bool passed() const { return algebra_iso_ok && round_trip_ok && hom_dims_ok && preservation_ok && functoriality_ok; }
};

// Throws Error(PreconditionFailed) when A_0 is not basic, A is not
// well-graded or not self-injective (witness: idempotent_label), or c = 0.
// window < 0 means shifts in [-c, c].
EquivalenceCertificate theorem_pipeline(const AlgebraPtr& a, std::uint64_t seed, int window = -1);

}  // namespace grext

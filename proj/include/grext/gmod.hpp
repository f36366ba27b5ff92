#pragma once

// Finitely generated graded left modules over a GradedAlgebra.
//
// A module is a basis sorted by degree plus one action matrix per algebra
// basis element. Morphisms are plain matrices (target.dim x source.dim) that
// preserve degrees and intertwine the actions.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "grext/algebra.hpp"
#include "grext/exactlin.hpp"

namespace grext {

class GradedModule {
 public:
  // Validates: degrees nondecreasing, unital associative action compatible
  // with the grading. Throws Error(ActionFault) otherwise.
  GradedModule(AlgebraPtr over, std::vector<int> degrees, std::vector<Matrix> action);

  // Zero module over `over`.
  static GradedModule zero(AlgebraPtr over);

  // Sorts the basis by degree (stable) before validating. perm[new] = old.
  static GradedModule from_unsorted(AlgebraPtr over, const std::vector<int>& degrees,
                                    const std::vector<Matrix>& action, std::vector<std::size_t>* perm = nullptr);

  const AlgebraPtr& algebra() const { return over_; }
  std::size_t dim() const { return degrees_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::size_t k) const { return degrees_[k]; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<Matrix>& actions() const { return action_; }
  Matrix act(std::span<const Fp> a) const;

  // Basis indices of the degree-n slice.
  std::vector<std::size_t> slice(int n) const;
  // degree -> dim M_n for nonzero slices.
  std::map<int, std::size_t> graded_dims() const;

  // Same degrees and action tables over the same algebra structure.
  bool same_tables(const GradedModule& o) const;

 private:
  AlgebraPtr over_;
  std::vector<int> degrees_;
  std::vector<Matrix> action_;
};

using GradedMorphism = Matrix;

// max{n : M_n != 0} - min{n : M_n != 0} + 1, and 0 for M = 0.
int width(const GradedModule& m);

// M(d) with M(d)_n = M_{n+d}.
GradedModule shift(const GradedModule& m, int d);

// A e_i (d); basis vectors are b_j e_i chosen greedily in algebra order.
GradedModule proj(const AlgebraPtr& a, std::size_t i, int d);
// D(e_i A)(d) with D(e_i A)_n = D((e_i A)_{-n}).
GradedModule inj(const AlgebraPtr& a, std::size_t i, int d);
// S_i(d) = top of A e_i (d).
GradedModule simple(const AlgebraPtr& a, std::size_t i, int d);
// A as a graded left module over itself.
GradedModule regular_module(const AlgebraPtr& a);

GradedModule direct_sum(const std::vector<GradedModule>& parts);

// Submodule spanned by homogeneous vectors that already form an A-stable
// subspace; throws Error(CheckFailed) if the span is not A-stable.
GradedModule submodule(const GradedModule& m, const std::vector<Vec>& basis);
// M / U for a graded submodule U given by homogeneous spanning vectors.
GradedModule quotient(const GradedModule& m, const std::vector<Vec>& sub_span);

std::vector<Vec> radical_span(const GradedModule& m);
GradedModule top(const GradedModule& m);
GradedModule socle(const GradedModule& m);

// Degree-preserving intertwiners M -> N. Throws Error(AlgebraMismatch).
std::vector<GradedMorphism> hom_basis(const GradedModule& m, const GradedModule& n);
std::size_t hom_dim(const GradedModule& m, const GradedModule& n);
bool is_morphism(const GradedModule& m, const GradedModule& n, const GradedMorphism& f);

// Multiplicities of S_i(-d) in a semisimple module's slices, keyed by
// (class representative i, degree). Uses dim(e_i T)_n / dim End(S_i).
std::map<std::pair<std::size_t, int>, std::size_t> simple_multiplicities(const GradedModule& semisimple);

std::size_t projective_cover_dim(const GradedModule& m);
bool is_projective(const GradedModule& m);
std::size_t injective_envelope_dim(const GradedModule& m);
bool is_injective(const GradedModule& m);

struct ProjectiveCover {
  GradedModule cover;
  Matrix map;  // m.dim x cover.dim, surjective degree-0 morphism
  std::vector<std::pair<std::size_t, int>> summands;  // (idempotent, shift d) per summand A e_i (d)
};
ProjectiveCover projective_cover(const GradedModule& m);

// Kernel of the projective cover.
GradedModule syzygy(const GradedModule& m);

}  // namespace grext

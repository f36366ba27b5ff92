#pragma once

// Algebra-level constructions: the Beilinson algebra b(A), the bimodule x(A),
// trivial extensions B ⋉ X, the dual bimodule D(B) and its twisted variant
// D(B^σ), and the composites t(A) = b(A) ⋉ x(A), T(B) = B ⋉ D(B).
//
// Block conventions (0-based): b(A) has A_{s-r} in block (r, s) for s >= r;
// x(A) has A_{c+s-r} in block (r, s) for s <= r.

#include <cstddef>
#include <optional>
#include <vector>

#include "grext/algebra.hpp"

namespace grext {

struct AlgebraAutomorphism {
  AlgebraPtr over;
  Matrix matrix;  // column k = image of basis element k
};

// Invertible, unit-preserving, multiplicative, degree-preserving.
// Throws Error(NotAutomorphism).
void validate_automorphism(const AlgebraAutomorphism& sigma);
AlgebraAutomorphism inverse(const AlgebraAutomorphism& sigma);
AlgebraAutomorphism identity_automorphism(const AlgebraPtr& b);

struct BlockEntry {
  int row = 0;
  int col = 0;
  std::size_t element = 0;  // basis index in A
};

// Basis enumeration shared by b(A) and x(A): row-major over blocks, then A's
// basis order inside each block.
class BlockLayout {
 public:
  explicit BlockLayout(const GradedAlgebra& a);

  int c() const { return c_; }
  const std::vector<BlockEntry>& b_entries() const { return b_; }
  const std::vector<BlockEntry>& x_entries() const { return x_; }
  std::optional<std::size_t> b_index(int row, int col, std::size_t element) const;
  std::optional<std::size_t> x_index(int row, int col, std::size_t element) const;

 private:
  int c_;
  std::size_t a_dim_;
  std::vector<BlockEntry> b_;
  std::vector<BlockEntry> x_;
  std::vector<std::optional<std::size_t>> b_lookup_;
  std::vector<std::optional<std::size_t>> x_lookup_;
};

// b(A); trivially graded with designated idempotents e_rr e_i ordered by
// (r, i). Throws Error(TrivialGrading) when c = 0.
AlgebraPtr beilinson(const AlgebraPtr& a);

// x(A) as a bimodule over b = beilinson(a).
Bimodule x_bimodule(const AlgebraPtr& a, const AlgebraPtr& b);

// B ⋉ X graded with B in degree 0 and X in degree 1.
// Throws ZeroBimodule, ActionFault, AlgebraMismatch, GradingViolation (B not
// trivially graded).
AlgebraPtr trivial_extension(const AlgebraPtr& b, const Bimodule& x);

// D(B): (b f)(x) = f(x b), (f b)(x) = f(b x) on the dual basis.
Bimodule dual_bimodule(const AlgebraPtr& b);

// D(B^σ) where B^σ has right action x·b = x σ(b). Dualizing turns the twisted
// right action into the left action on D, so b·f = σ(b) f in D(B) terms.
Bimodule twisted_dual_bimodule(const AlgebraPtr& b, const AlgebraAutomorphism& sigma);

// t(A) with its pieces.
struct TData {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule x;
  AlgebraPtr t;
  BlockLayout layout;

  // Index in t(A) of a b-block or x-block entry.
  std::size_t t_index_b(int row, int col, std::size_t element) const;
  std::size_t t_index_x(int row, int col, std::size_t element) const;
  // e_rr in t(A) coordinates.
  Vec diagonal_idempotent(int r) const;
};

TData build_t(const AlgebraPtr& a);
AlgebraPtr t_of(const AlgebraPtr& a);
AlgebraPtr T_of(const AlgebraPtr& b);
AlgebraPtr twisted_T_of(const AlgebraPtr& b, const AlgebraAutomorphism& sigma);

}  // namespace grext

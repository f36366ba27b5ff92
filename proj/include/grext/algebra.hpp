#pragma once

// Finite-dimensional positively graded algebras over F_p, given by structure
// constants on a homogeneous basis together with a designated complete set of
// primitive orthogonal idempotents in degree 0.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "grext/exactlin.hpp"

namespace grext {

// Ungraded multiplication table on F_p^n: products[i * n + j] = b_i b_j.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(std::size_t dim, std::vector<Vec> products);

  std::size_t dim() const { return dim_; }
  const Vec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  Vec multiply(std::span<const Fp> a, std::span<const Fp> b) const;
  // Matrices of x -> a x and x -> x a.
  Matrix left_multiplication(std::span<const Fp> a) const;
  Matrix right_multiplication(std::span<const Fp> a) const;

  // Multiplication table of the subalgebra spanned by `basis` (coordinates
  // relative to that basis). nullopt if the span is not closed.
  std::optional<StructureTable> restrict_to(const std::vector<Vec>& basis) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> products_;
};

// Jacobson radical as the kernel of the trace form (x, y) -> tr L_{xy}.
// Valid only when p > dim; callers enforce that bound.
std::vector<Vec> trace_radical(const StructureTable& table);

// Raw, unvalidated algebra data as it comes out of a parser or a construction.
struct Presentation {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<Vec> products;  // dim * dim entries, each of length dim
  Vec unit;
  std::vector<Vec> idempotents;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class GradedAlgebra {
 public:
  std::size_t dim() const { return pres_.names.size(); }
  const std::string& name(std::size_t i) const { return pres_.names[i]; }
  const std::vector<std::string>& names() const { return pres_.names; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  int degree(std::size_t i) const { return pres_.degrees[i]; }
  const std::vector<int>& degrees() const { return pres_.degrees; }
  const Presentation& presentation() const { return pres_; }
  const StructureTable& table() const { return table_; }

  const Vec& basis_product(std::size_t i, std::size_t j) const { return table_.product(i, j); }
  Vec multiply(std::span<const Fp> a, std::span<const Fp> b) const { return table_.multiply(a, b); }
  Vec basis_vector(std::size_t i) const { return unit_vec(dim(), i); }

  const Vec& unit() const { return pres_.unit; }
  const std::vector<Vec>& idempotents() const { return pres_.idempotents; }
  std::size_t idempotent_count() const { return pres_.idempotents.size(); }

  // c = max{n : A_n != 0}; 0 for the zero-degree-only case.
  int top_degree() const { return top_degree_; }
  std::vector<std::size_t> component_dims() const;
  std::vector<std::size_t> component(int n) const;
  bool is_trivially_graded() const { return top_degree_ == 0; }

  // Degree of a nonzero homogeneous element; nullopt if zero or inhomogeneous.
  std::optional<int> degree_of(std::span<const Fp> v) const;

  const Matrix& left_regular(std::size_t i) const { return left_regular_[i]; }
  const Matrix& right_regular(std::size_t i) const { return right_regular_[i]; }

  // Data about the simple modules, computed once on first use.
  struct SimpleData {
    std::vector<Vec> radical;                // homogeneous basis of rad A
    std::vector<std::size_t> class_of;       // smallest j with A e_j isomorphic to A e_i
    std::vector<std::size_t> endo_dim;       // dim e_i S_i = degree of End(S_i) over F_p
    std::vector<std::size_t> left_proj_dim;  // dim A e_i
    std::vector<std::size_t> right_proj_dim; // dim e_i A
  };
  const SimpleData& simple_data() const;

 private:
  friend AlgebraPtr validate_algebra(Presentation);
  explicit GradedAlgebra(Presentation pres);

  Presentation pres_;
  StructureTable table_;
  int top_degree_ = 0;
  std::vector<Matrix> left_regular_;
  std::vector<Matrix> right_regular_;
  mutable std::once_flag simple_once_;
  mutable SimpleData simple_;
};

// Checks every algebra axiom and primitivity of the designated idempotents.
// Throws Error with kinds NonAssociative, UnitMismatch, GradingViolation,
// IdempotentFault, NotPrimitive, PrimeTooSmall or ShapeMismatch.
AlgebraPtr validate_algebra(Presentation pres);

// Basis name when designated idempotent i is a single basis element with
// coefficient 1, otherwise "#i".
std::string idempotent_label(const GradedAlgebra& a, std::size_t i);

// Homogeneous basis of rad(A) in A-coordinates.
std::vector<Vec> radical(const GradedAlgebra& a);

int top_degree(const GradedAlgebra& a);
std::vector<std::size_t> component_dims(const GradedAlgebra& a);

struct WellGradedResult {
  bool holds = true;
  std::optional<std::size_t> failing_idempotent;
};

// e_i A_c != 0 (resp. A_c e_i != 0) for every designated idempotent.
// Throws Error(TrivialGrading) when c = 0.
WellGradedResult is_left_well_graded(const GradedAlgebra& a);
WellGradedResult is_right_well_graded(const GradedAlgebra& a);

// A / rad A commutative.
bool is_basic(const GradedAlgebra& a);

// The degree-0 subalgebra A_0 with the same designated idempotents.
AlgebraPtr degree_zero_part(const GradedAlgebra& a);

// Same algebra with every basis element placed in degree 0.
AlgebraPtr forget_grading(const GradedAlgebra& a);

// eAe for e a sum of designated idempotents.
// Throws NotIdempotent if e^2 != e or e is not in degree 0, and
// IdempotentFault if e is not a sum of designated idempotents.
AlgebraPtr corner(const GradedAlgebra& a, std::span<const Fp> e);

// Left A-module x -> b x, right x -> x b on a finite space.
struct Bimodule {
  AlgebraPtr over;
  std::vector<std::string> names;
  std::vector<int> degrees;  // optional tags; empty when untagged
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  std::size_t dim() const { return names.size(); }
  Matrix left_action(std::span<const Fp> b) const;
  Matrix right_action(std::span<const Fp> b) const;
};

// Unital, associative on both sides, and the two actions commute.
// Throws Error(ActionFault) naming the first violated axiom.
void validate_bimodule(const Bimodule& x);

}  // namespace grext

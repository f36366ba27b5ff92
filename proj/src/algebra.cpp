#include "grext/algebra.hpp"

#include <algorithm>
#include <set>

#include "grext/error.hpp"

namespace grext {

StructureTable::StructureTable(std::size_t dim, std::vector<Vec> products) : dim_(dim), products_(std::move(products)) {
  if (products_.size() != dim_ * dim_) throw Error(ErrorKind::ShapeMismatch, "product table must have dim^2 entries");
  for (const auto& v : products_)
    if (v.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "product vector has wrong length");
}

Vec StructureTable::multiply(std::span<const Fp> a, std::span<const Fp> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "element outside algebra");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      axpy(out, a[i] * b[j], product(i, j));
    }
  }
  return out;
}

Matrix StructureTable::left_multiplication(std::span<const Fp> a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (a[i]) axpy(col, a[i], product(i, j));
    m.set_column(j, col);
  }
  return m;
}

Matrix StructureTable::right_multiplication(std::span<const Fp> a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      if (a[i]) axpy(col, a[i], product(j, i));
    m.set_column(j, col);
  }
  return m;
}

std::optional<StructureTable> StructureTable::restrict_to(const std::vector<Vec>& basis) const {
  EchelonBasis span(dim_);
  for (const auto& v : basis)
    if (!span.insert(v)) throw Error(ErrorKind::ShapeMismatch, "subalgebra basis is not independent");
  const std::size_t n = basis.size();
  std::vector<Vec> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto coords = span.coordinates(multiply(basis[i], basis[j]));
      if (!coords) return std::nullopt;
      products.push_back(std::move(*coords));
    }
  return StructureTable(n, std::move(products));
}

std::vector<Vec> trace_radical(const StructureTable& table) {
  const std::size_t n = table.dim();
  Vec traces(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) traces[k] += table.product(k, j)[j];
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Fp s;
      const Vec& pij = table.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (pij[k]) s += pij[k] * traces[k];
      gram(i, j) = s;
    }
  return rank_kernel(gram).kernel;
}

namespace {

struct Quotient {
  StructureTable table;
  std::vector<std::size_t> representatives;  // standard basis indices lifting the quotient basis
};

// table / ideal, with quotient basis given by standard basis vectors that
// complete a basis of the ideal.
Quotient quotient_by(const StructureTable& table, const std::vector<Vec>& ideal) {
  const std::size_t n = table.dim();
  EchelonBasis full(n);
  for (const auto& v : ideal) full.insert(v);
  const std::size_t r = full.size();
  std::vector<std::size_t> reps;
  for (std::size_t k = 0; k < n; ++k)
    if (full.insert(unit_vec(n, k))) reps.push_back(k);
  const std::size_t q = reps.size();
  std::vector<Vec> products;
  products.reserve(q * q);
  for (auto i : reps)
    for (auto j : reps) {
      auto coords = full.coordinates(table.product(i, j));
      products.emplace_back(coords->begin() + static_cast<std::ptrdiff_t>(r), coords->end());
    }
  return {StructureTable(q, std::move(products)), std::move(reps)};
}

Vec power(const StructureTable& t, const Vec& x, std::uint64_t e) {
  std::optional<Vec> acc;
  Vec base = x;
  while (e) {
    if (e & 1u) acc = acc ? t.multiply(*acc, base) : base;
    e >>= 1u;
    if (e) base = t.multiply(base, base);
  }
  return *acc;
}

// Local test for the corner algebra e A_0 e: its semisimple quotient must be
// commutative with a one-dimensional Frobenius-fixed space (so a single field).
bool corner_is_local(const GradedAlgebra& a, const Vec& e) {
  std::vector<Vec> spanning;
  for (auto j : a.component(0)) spanning.push_back(a.multiply(a.multiply(e, a.basis_vector(j)), e));
  std::vector<Vec> basis;
  for (auto idx : independent_subset(spanning, a.dim())) basis.push_back(spanning[idx]);
  const auto sub = a.table().restrict_to(basis);
  if (!sub) throw Error(ErrorKind::CheckFailed, "corner of degree-0 part is not closed under multiplication");
  const auto rad = trace_radical(*sub);
  const Quotient quo = quotient_by(*sub, rad);
  const std::size_t q = quo.table.dim();
  if (q == 0) return false;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      if (quo.table.product(i, j) != quo.table.product(j, i)) return false;
  Matrix frob(q, q);
  for (std::size_t i = 0; i < q; ++i) {
    Vec fx = power(quo.table, unit_vec(q, i), prime());
    fx[i] -= Fp::one();
    frob.set_column(i, fx);
  }
  return rank_kernel(frob).kernel.size() == 1;
}

std::string pair_name(const Presentation& p, std::size_t i, std::size_t j) { return p.names[i] + "*" + p.names[j]; }

}  // namespace

GradedAlgebra::GradedAlgebra(Presentation pres) : pres_(std::move(pres)) {
  const std::size_t n = pres_.names.size();
  table_ = StructureTable(n, pres_.products);
  for (int d : pres_.degrees) top_degree_ = std::max(top_degree_, d);
  left_regular_.reserve(n);
  right_regular_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    left_regular_.push_back(table_.left_multiplication(unit_vec(n, i)));
    right_regular_.push_back(table_.right_multiplication(unit_vec(n, i)));
  }
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view name) const {
  auto it = std::find(pres_.names.begin(), pres_.names.end(), name);
  if (it == pres_.names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pres_.names.begin());
}

std::vector<std::size_t> GradedAlgebra::component_dims() const {
  std::vector<std::size_t> dims(static_cast<std::size_t>(top_degree_) + 1, 0);
  for (int d : pres_.degrees) ++dims[static_cast<std::size_t>(d)];
  return dims;
}

std::vector<std::size_t> GradedAlgebra::component(int n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (pres_.degrees[i] == n) out.push_back(i);
  return out;
}

std::optional<int> GradedAlgebra::degree_of(std::span<const Fp> v) const {
  std::optional<int> d;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (d && *d != pres_.degrees[i]) return std::nullopt;
    d = pres_.degrees[i];
  }
  return d;
}

AlgebraPtr validate_algebra(Presentation pres) {
  const std::size_t n = pres.names.size();
  if (n == 0) throw Error(ErrorKind::UnitMismatch, "the zero algebra has no unit");
  if (pres.degrees.size() != n) throw Error(ErrorKind::ShapeMismatch, "one degree per basis element required");
  if (pres.products.size() != n * n) throw Error(ErrorKind::ShapeMismatch, "product table must have dim^2 entries");
  if (pres.unit.size() != n) throw Error(ErrorKind::ShapeMismatch, "unit has wrong length");
  std::set<std::string> seen;
  for (const auto& name : pres.names) {
    if (name.empty() || name.find('*') != std::string::npos)
      throw Error(ErrorKind::ShapeMismatch, "basis names must be nonempty and free of '*'", name);
    if (!seen.insert(name).second) throw Error(ErrorKind::ShapeMismatch, "duplicate basis name", name);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (pres.degrees[i] < 0) throw Error(ErrorKind::GradingViolation, "negative degree on " + pres.names[i], pres.names[i]);
  if (prime() <= n)
    throw Error(ErrorKind::PrimeTooSmall,
                "p = " + std::to_string(prime()) + " must exceed the algebra dimension " + std::to_string(n));

  auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra(std::move(pres)));
  const Presentation& p = alg->pres_;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& v = alg->basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] && p.degrees[k] != p.degrees[i] + p.degrees[j])
          throw Error(ErrorKind::GradingViolation,
                      pair_name(p, i, j) + " has a component outside degree " +
                          std::to_string(p.degrees[i] + p.degrees[j]),
                      pair_name(p, i, j));
    }

  if (alg->degree_of(p.unit) != 0) throw Error(ErrorKind::UnitMismatch, "unit must be a nonzero element of degree 0");
  for (std::size_t j = 0; j < n; ++j) {
    const Vec bj = unit_vec(n, j);
    if (alg->multiply(p.unit, bj) != bj || alg->multiply(bj, p.unit) != bj)
      throw Error(ErrorKind::UnitMismatch, "unit does not fix " + p.names[j], p.names[j]);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = alg->basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = alg->right_regular(k).apply(ij);
        const Vec rhs = alg->left_regular(i).apply(alg->basis_product(j, k));
        if (lhs != rhs)
          throw Error(ErrorKind::NonAssociative,
                      "(" + p.names[i] + "*" + p.names[j] + ")*" + p.names[k] + " != " + p.names[i] + "*(" +
                          p.names[j] + "*" + p.names[k] + ")",
                      p.names[i] + "," + p.names[j] + "," + p.names[k]);
      }
    }

  if (p.idempotents.empty()) throw Error(ErrorKind::IdempotentFault, "at least one designated idempotent is required");
  Vec total(n);
  for (std::size_t i = 0; i < p.idempotents.size(); ++i) {
    const Vec& e = p.idempotents[i];
    const std::string tag = std::to_string(i);
    if (e.size() != n) throw Error(ErrorKind::ShapeMismatch, "idempotent " + tag + " has wrong length");
    if (alg->degree_of(e) != 0)
      throw Error(ErrorKind::IdempotentFault, "idempotent " + tag + " must be nonzero of degree 0", tag);
    if (alg->multiply(e, e) != e) throw Error(ErrorKind::IdempotentFault, "idempotent " + tag + " is not idempotent", tag);
    for (std::size_t j = 0; j < p.idempotents.size(); ++j)
      if (j != i && !is_zero(alg->multiply(e, p.idempotents[j])))
        throw Error(ErrorKind::IdempotentFault,
                    "idempotents " + tag + " and " + std::to_string(j) + " are not orthogonal", tag);
    total = add(total, e);
  }
  if (total != p.unit) throw Error(ErrorKind::IdempotentFault, "designated idempotents do not sum to the unit");
  for (std::size_t i = 0; i < p.idempotents.size(); ++i)
    if (!corner_is_local(*alg, p.idempotents[i]))
      throw Error(ErrorKind::NotPrimitive, "idempotent " + std::to_string(i) + " is not primitive", std::to_string(i));
  return alg;
}

std::vector<Vec> radical(const GradedAlgebra& a) {
  if (prime() <= a.dim()) throw Error(ErrorKind::PrimeTooSmall, "trace-form radical needs p > dim");
  return trace_radical(a.table());
}

const GradedAlgebra::SimpleData& GradedAlgebra::simple_data() const {
  std::call_once(simple_once_, [this] {
    SimpleData data;
    data.radical = radical(*this);
    EchelonBasis rad(dim());
    for (const auto& v : data.radical) rad.insert(v);
    const auto deg0 = component(0);
    const std::size_t l = idempotent_count();
    auto corner_escapes_radical = [&](const Vec& ei, const Vec& ej) {
      for (auto k : deg0)
        if (!rad.contains(multiply(multiply(ei, basis_vector(k)), ej))) return true;
      return false;
    };
    data.class_of.resize(l);
    for (std::size_t i = 0; i < l; ++i) {
      data.class_of[i] = i;
      for (std::size_t j = 0; j < i; ++j)
        if (data.class_of[j] == j && corner_escapes_radical(pres_.idempotents[i], pres_.idempotents[j])) {
          data.class_of[i] = j;
          break;
        }
    }
    for (std::size_t i = 0; i < l; ++i) {
      const Vec& e = pres_.idempotents[i];
      EchelonBasis top = rad;
      std::size_t gained = 0;
      for (auto k : deg0)
        if (top.insert(multiply(multiply(e, basis_vector(k)), e))) ++gained;
      data.endo_dim.push_back(gained);
      data.left_proj_dim.push_back(rank(table_.right_multiplication(e)));
      data.right_proj_dim.push_back(rank(table_.left_multiplication(e)));
    }
    simple_ = std::move(data);
  });
  return simple_;
}

int top_degree(const GradedAlgebra& a) { return a.top_degree(); }
std::vector<std::size_t> component_dims(const GradedAlgebra& a) { return a.component_dims(); }

namespace {

WellGradedResult well_graded(const GradedAlgebra& a, bool left) {
  if (a.top_degree() < 1) throw Error(ErrorKind::TrivialGrading, "well-gradedness needs top degree c >= 1");
  const auto top = a.component(a.top_degree());
  for (std::size_t i = 0; i < a.idempotent_count(); ++i) {
    const Vec& e = a.idempotents()[i];
    bool nonzero = false;
    for (auto k : top) {
      const Vec bk = a.basis_vector(k);
      if (!is_zero(left ? a.multiply(e, bk) : a.multiply(bk, e))) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) return {false, i};
  }
  return {};
}

}  // namespace

WellGradedResult is_left_well_graded(const GradedAlgebra& a) { return well_graded(a, true); }
WellGradedResult is_right_well_graded(const GradedAlgebra& a) { return well_graded(a, false); }

bool is_basic(const GradedAlgebra& a) {
  EchelonBasis rad(a.dim());
  for (const auto& v : radical(a)) rad.insert(v);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!rad.contains(sub(a.basis_product(i, j), a.basis_product(j, i)))) return false;
  return true;
}

namespace {

Presentation restrict_presentation(const GradedAlgebra& a, const std::vector<std::size_t>& idx) {
  auto pick = [&](const Vec& v) {
    Vec out;
    out.reserve(idx.size());
    for (auto k : idx) out.push_back(v[k]);
    return out;
  };
  Presentation p;
  for (auto k : idx) {
    p.names.push_back(a.name(k));
    p.degrees.push_back(a.degree(k));
  }
  for (auto i : idx)
    for (auto j : idx) p.products.push_back(pick(a.basis_product(i, j)));
  p.unit = pick(a.unit());
  for (const auto& e : a.idempotents()) p.idempotents.push_back(pick(e));
  return p;
}

}  // namespace

std::string idempotent_label(const GradedAlgebra& a, std::size_t i) {
  const Vec& e = a.idempotents().at(i);
  std::optional<std::size_t> only;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k].is_zero()) continue;
    if (only || e[k] != Fp::one()) return "#" + std::to_string(i);
    only = k;
  }
  return only ? a.name(*only) : "#" + std::to_string(i);
}

AlgebraPtr degree_zero_part(const GradedAlgebra& a) { return validate_algebra(restrict_presentation(a, a.component(0))); }

AlgebraPtr forget_grading(const GradedAlgebra& a) {
  Presentation p = a.presentation();
  std::fill(p.degrees.begin(), p.degrees.end(), 0);
  return validate_algebra(std::move(p));
}

AlgebraPtr corner(const GradedAlgebra& a, std::span<const Fp> e_span) {
  const Vec e(e_span.begin(), e_span.end());
  if (e.size() != a.dim()) throw Error(ErrorKind::ShapeMismatch, "idempotent has wrong length");
  if (a.degree_of(e) != 0 || a.multiply(e, e) != e)
    throw Error(ErrorKind::NotIdempotent, "corner needs a nonzero idempotent of degree 0");
  std::vector<std::size_t> kept;
  Vec sum(a.dim());
  for (std::size_t i = 0; i < a.idempotent_count(); ++i) {
    const Vec& ei = a.idempotents()[i];
    const Vec prod = a.multiply(e, ei);
    if (prod == ei) {
      kept.push_back(i);
      sum = add(sum, ei);
    } else if (!is_zero(prod)) {
      throw Error(ErrorKind::IdempotentFault, "idempotent is not a sum of designated idempotents");
    }
  }
  if (sum != e) throw Error(ErrorKind::IdempotentFault, "idempotent is not a sum of designated idempotents");

  std::vector<Vec> basis;
  Presentation p;
  EchelonBasis span(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Vec bj = a.basis_vector(j);
    Vec v = a.multiply(a.multiply(e, bj), e);
    if (!span.insert(v)) continue;
    p.names.push_back(v == bj ? a.name(j) : "e[" + a.name(j) + "]e");
    p.degrees.push_back(a.degree(j));
    basis.push_back(std::move(v));
  }
  const auto table = a.table().restrict_to(basis);
  if (!table) throw Error(ErrorKind::CheckFailed, "corner is not closed under multiplication");
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) p.products.push_back(table->product(i, j));
  p.unit = *span.coordinates(e);
  for (auto i : kept) p.idempotents.push_back(*span.coordinates(a.idempotents()[i]));
  return validate_algebra(std::move(p));
}

Matrix Bimodule::left_action(std::span<const Fp> b) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) m += left[i].scaled(b[i]);
  return m;
}

Matrix Bimodule::right_action(std::span<const Fp> b) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) m += right[i].scaled(b[i]);
  return m;
}

void validate_bimodule(const Bimodule& x) {
  if (!x.over) throw Error(ErrorKind::ActionFault, "bimodule has no algebra");
  const GradedAlgebra& b = *x.over;
  const std::size_t n = x.dim();
  if (x.left.size() != b.dim() || x.right.size() != b.dim())
    throw Error(ErrorKind::ActionFault, "one action matrix per algebra basis element required");
  if (!x.degrees.empty() && x.degrees.size() != n) throw Error(ErrorKind::ActionFault, "degree tags have wrong length");
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (const Matrix* m : {&x.left[i], &x.right[i]})
      if (m->rows() != n || m->cols() != n) throw Error(ErrorKind::ActionFault, "action matrix has wrong shape");
  const Matrix id = Matrix::identity(n);
  if (x.left_action(b.unit()) != id) throw Error(ErrorKind::ActionFault, "left action is not unital");
  if (x.right_action(b.unit()) != id) throw Error(ErrorKind::ActionFault, "right action is not unital");
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Vec& ij = b.basis_product(i, j);
      if (x.left_action(ij) != x.left[i] * x.left[j])
        throw Error(ErrorKind::ActionFault, "left action not associative at " + b.name(i) + "*" + b.name(j));
      if (x.right_action(ij) != x.right[j] * x.right[i])
        throw Error(ErrorKind::ActionFault, "right action not associative at " + b.name(i) + "*" + b.name(j));
      if (x.left[i] * x.right[j] != x.right[j] * x.left[i])
        throw Error(ErrorKind::ActionFault, "actions do not commute at " + b.name(i) + ", " + b.name(j));
    }
  if (!x.degrees.empty())
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row)
          if ((x.left[i](row, col) || x.right[i](row, col)) && x.degrees[row] != x.degrees[col] + b.degree(i))
            throw Error(ErrorKind::ActionFault, "action of " + b.name(i) + " breaks degree tags");
}

}  // namespace grext

#include "grext/construct.hpp"

#include "grext/error.hpp"

namespace grext {

void validate_automorphism(const AlgebraAutomorphism& s) {
  if (!s.over) throw Error(ErrorKind::NotAutomorphism, "automorphism has no algebra");
  const GradedAlgebra& b = *s.over;
  const std::size_t n = b.dim();
  if (s.matrix.rows() != n || s.matrix.cols() != n) throw Error(ErrorKind::NotAutomorphism, "matrix has wrong shape");
  if (!invert(s.matrix)) throw Error(ErrorKind::NotAutomorphism, "matrix is singular");
  if (s.matrix.apply(b.unit()) != b.unit()) throw Error(ErrorKind::NotAutomorphism, "unit is not fixed");
  for (std::size_t k = 0; k < n; ++k) {
    const Vec img = s.matrix.column(k);
    if (b.degree_of(img) != b.degree(k)) throw Error(ErrorKind::NotAutomorphism, "degree of " + b.name(k) + " not preserved");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.matrix.apply(b.basis_product(i, j)) != b.multiply(s.matrix.column(i), s.matrix.column(j)))
        throw Error(ErrorKind::NotAutomorphism, "not multiplicative on " + b.name(i) + "*" + b.name(j));
}

AlgebraAutomorphism inverse(const AlgebraAutomorphism& sigma) {
  auto inv = invert(sigma.matrix);
  if (!inv) throw Error(ErrorKind::NotAutomorphism, "matrix is singular");
  return {sigma.over, *inv};
}

AlgebraAutomorphism identity_automorphism(const AlgebraPtr& b) { return {b, Matrix::identity(b->dim())}; }

BlockLayout::BlockLayout(const GradedAlgebra& a) : c_(a.top_degree()), a_dim_(a.dim()) {
  const std::size_t cells = static_cast<std::size_t>(c_) * static_cast<std::size_t>(c_) * a_dim_;
  b_lookup_.resize(cells);
  x_lookup_.resize(cells);
  for (int r = 0; r < c_; ++r)
    for (int s = r; s < c_; ++s)
      for (auto k : a.component(s - r)) {
        b_lookup_[(static_cast<std::size_t>(r * c_ + s)) * a_dim_ + k] = b_.size();
        b_.push_back({r, s, k});
      }
  for (int r = 0; r < c_; ++r)
    for (int s = 0; s <= r; ++s)
      for (auto k : a.component(c_ + s - r)) {
        x_lookup_[(static_cast<std::size_t>(r * c_ + s)) * a_dim_ + k] = x_.size();
        x_.push_back({r, s, k});
      }
}

std::optional<std::size_t> BlockLayout::b_index(int row, int col, std::size_t element) const {
  if (row < 0 || col < 0 || row >= c_ || col >= c_ || element >= a_dim_) return std::nullopt;
  return b_lookup_[(static_cast<std::size_t>(row * c_ + col)) * a_dim_ + element];
}

std::optional<std::size_t> BlockLayout::x_index(int row, int col, std::size_t element) const {
  if (row < 0 || col < 0 || row >= c_ || col >= c_ || element >= a_dim_) return std::nullopt;
  return x_lookup_[(static_cast<std::size_t>(row * c_ + col)) * a_dim_ + element];
}

namespace {

std::string block_name(char kind, const BlockEntry& e, const GradedAlgebra& a) {
  return std::string(1, kind) + "[" + std::to_string(e.row) + "," + std::to_string(e.col) + "]" + a.name(e.element);
}

// Scatter an A-element of known degree into block (row, col) of a layout.
template <class IndexFn>
void scatter(Vec& out, const Vec& elem, int row, int col, IndexFn index) {
  for (std::size_t k = 0; k < elem.size(); ++k) {
    if (elem[k].is_zero()) continue;
    auto idx = index(row, col, k);
    if (!idx) throw Error(ErrorKind::CheckFailed, "block product landed outside the block layout");
    out[*idx] += elem[k];
  }
}

}  // namespace

AlgebraPtr beilinson(const AlgebraPtr& ap) {
  const GradedAlgebra& a = *ap;
  const int c = a.top_degree();
  if (c < 1) throw Error(ErrorKind::TrivialGrading, "Beilinson algebra needs top degree c >= 1");
  const BlockLayout layout(a);
  const auto& entries = layout.b_entries();
  const std::size_t n = entries.size();
  auto bidx = [&](int r, int s, std::size_t k) { return layout.b_index(r, s, k); };

  Presentation p;
  for (const auto& e : entries) {
    p.names.push_back(block_name('b', e, a));
    p.degrees.push_back(0);
  }
  p.products.reserve(n * n);
  for (const auto& u : entries)
    for (const auto& v : entries) {
      Vec out(n);
      if (u.col == v.row) scatter(out, a.basis_product(u.element, v.element), u.row, v.col, bidx);
      p.products.push_back(std::move(out));
    }
  p.unit = Vec(n);
  for (int r = 0; r < c; ++r) scatter(p.unit, a.unit(), r, r, bidx);
  for (int r = 0; r < c; ++r)
    for (const auto& e : a.idempotents()) {
      Vec v(n);
      scatter(v, e, r, r, bidx);
      p.idempotents.push_back(std::move(v));
    }
  return validate_algebra(std::move(p));
}

Bimodule x_bimodule(const AlgebraPtr& ap, const AlgebraPtr& b) {
  const GradedAlgebra& a = *ap;
  if (a.top_degree() < 1) throw Error(ErrorKind::TrivialGrading, "x(A) needs top degree c >= 1");
  const BlockLayout layout(a);
  const auto& bents = layout.b_entries();
  const auto& xents = layout.x_entries();
  if (b->dim() != bents.size()) throw Error(ErrorKind::AlgebraMismatch, "b is not the Beilinson algebra of a");
  const std::size_t n = xents.size();
  auto xidx = [&](int r, int s, std::size_t k) { return layout.x_index(r, s, k); };

  Bimodule x;
  x.over = b;
  for (const auto& e : xents) x.names.push_back(block_name('x', e, a));
  for (const auto& u : bents) {
    Matrix left(n, n), right(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& v = xents[j];
      Vec l(n), r(n);
      // (r,s) * (r',s') is nonzero only when s = r'; degrees above c vanish in A.
      if (u.col == v.row) scatter(l, a.basis_product(u.element, v.element), u.row, v.col, xidx);
      if (v.col == u.row) scatter(r, a.basis_product(v.element, u.element), v.row, u.col, xidx);
      left.set_column(j, l);
      right.set_column(j, r);
    }
    x.left.push_back(std::move(left));
    x.right.push_back(std::move(right));
  }
  validate_bimodule(x);
  return x;
}

AlgebraPtr trivial_extension(const AlgebraPtr& bp, const Bimodule& x) {
  const GradedAlgebra& b = *bp;
  if (!b.is_trivially_graded()) throw Error(ErrorKind::GradingViolation, "trivial extension needs a trivially graded base");
  if (x.dim() == 0) throw Error(ErrorKind::ZeroBimodule, "B ⋉ 0 is trivially graded");
  if (x.over != bp && (!x.over || x.over->presentation() != b.presentation()))
    throw Error(ErrorKind::AlgebraMismatch, "bimodule is over a different algebra");
  validate_bimodule(x);
  const std::size_t nb = b.dim();
  const std::size_t nx = x.dim();
  const std::size_t n = nb + nx;

  Presentation p;
  for (std::size_t i = 0; i < nb; ++i) {
    p.names.push_back(b.name(i));
    p.degrees.push_back(0);
  }
  for (std::size_t j = 0; j < nx; ++j) {
    p.names.push_back(x.names[j]);
    p.degrees.push_back(1);
  }
  p.products.assign(n * n, Vec(n));
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const Vec& v = b.basis_product(i, j);
      std::copy(v.begin(), v.end(), p.products[i * n + j].begin());
    }
    for (std::size_t j = 0; j < nx; ++j)
      for (std::size_t k = 0; k < nx; ++k) {
        p.products[i * n + nb + j][nb + k] = x.left[i](k, j);
        p.products[(nb + j) * n + i][nb + k] = x.right[i](k, j);
      }
  }
  auto pad = [&](const Vec& v) {
    Vec out(n);
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  };
  p.unit = pad(b.unit());
  for (const auto& e : b.idempotents()) p.idempotents.push_back(pad(e));
  return validate_algebra(std::move(p));
}

Bimodule dual_bimodule(const AlgebraPtr& bp) { return twisted_dual_bimodule(bp, identity_automorphism(bp)); }

Bimodule twisted_dual_bimodule(const AlgebraPtr& bp, const AlgebraAutomorphism& sigma) {
  if (sigma.over != bp && sigma.over->presentation() != bp->presentation())
    throw Error(ErrorKind::NotAutomorphism, "automorphism is over a different algebra");
  validate_automorphism(sigma);
  const GradedAlgebra& b = *bp;
  const std::size_t n = b.dim();
  Bimodule d;
  d.over = bp;
  for (std::size_t k = 0; k < n; ++k) d.names.push_back("D(" + b.name(k) + ")");
  for (std::size_t k = 0; k < n; ++k) {
    // (b f)(x) = f(x σ(b)); (f b)(x) = f(b x)
    d.left.push_back(b.table().right_multiplication(sigma.matrix.column(k)).transpose());
    d.right.push_back(b.left_regular(k).transpose());
  }
  validate_bimodule(d);
  return d;
}

std::size_t TData::t_index_b(int row, int col, std::size_t element) const {
  auto idx = layout.b_index(row, col, element);
  if (!idx) throw Error(ErrorKind::IndexOutOfRange, "no such b(A) block entry");
  return *idx;
}

std::size_t TData::t_index_x(int row, int col, std::size_t element) const {
  auto idx = layout.x_index(row, col, element);
  if (!idx) throw Error(ErrorKind::IndexOutOfRange, "no such x(A) block entry");
  return b->dim() + *idx;
}

Vec TData::diagonal_idempotent(int r) const {
  Vec v(t->dim());
  const Vec& one = a->unit();
  for (std::size_t k = 0; k < one.size(); ++k)
    if (one[k]) v[t_index_b(r, r, k)] = one[k];
  return v;
}

TData build_t(const AlgebraPtr& a) {
  AlgebraPtr b = beilinson(a);
  Bimodule x = x_bimodule(a, b);
  AlgebraPtr t = trivial_extension(b, x);
  return TData{a, std::move(b), std::move(x), std::move(t), BlockLayout(*a)};
}

AlgebraPtr t_of(const AlgebraPtr& a) { return build_t(a).t; }

AlgebraPtr T_of(const AlgebraPtr& b) { return trivial_extension(b, dual_bimodule(b)); }

AlgebraPtr twisted_T_of(const AlgebraPtr& b, const AlgebraAutomorphism& sigma) {
  return trivial_extension(b, twisted_dual_bimodule(b, sigma));
}

}  // namespace grext

#include "grext/gmod.hpp"

#include <algorithm>
#include <numeric>

#include "grext/error.hpp"

namespace grext {

GradedModule::GradedModule(AlgebraPtr over, std::vector<int> degrees, std::vector<Matrix> action)
    : over_(std::move(over)), degrees_(std::move(degrees)), action_(std::move(action)) {
  if (!over_) throw Error(ErrorKind::ActionFault, "module without an algebra");
  const GradedAlgebra& a = *over_;
  const std::size_t n = degrees_.size();
  if (!std::is_sorted(degrees_.begin(), degrees_.end()))
    throw Error(ErrorKind::ActionFault, "module basis must be sorted by degree");
  if (action_.size() != a.dim()) throw Error(ErrorKind::ActionFault, "one action matrix per algebra basis element");
  for (const auto& m : action_)
    if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::ActionFault, "action matrix has wrong shape");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        if (action_[i](r, c) && degrees_[r] != degrees_[c] + a.degree(i))
          throw Error(ErrorKind::ActionFault, "action of " + a.name(i) + " is not degree compatible");
  if (act(a.unit()) != Matrix::identity(n)) throw Error(ErrorKind::ActionFault, "action is not unital");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (act(a.basis_product(i, j)) != action_[i] * action_[j])
        throw Error(ErrorKind::ActionFault, "action is not associative at " + a.name(i) + "*" + a.name(j));
}

GradedModule GradedModule::zero(AlgebraPtr over) {
  std::vector<Matrix> action(over->dim(), Matrix(0, 0));
  return GradedModule(std::move(over), {}, std::move(action));
}

GradedModule GradedModule::from_unsorted(AlgebraPtr over, const std::vector<int>& degrees,
                                         const std::vector<Matrix>& action, std::vector<std::size_t>* perm_out) {
  std::vector<std::size_t> perm(degrees.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return degrees[x] < degrees[y]; });
  std::vector<int> sorted;
  sorted.reserve(perm.size());
  for (auto k : perm) sorted.push_back(degrees[k]);
  std::vector<Matrix> permuted;
  permuted.reserve(action.size());
  for (const auto& m : action) {
    Matrix p(perm.size(), perm.size());
    for (std::size_t r = 0; r < perm.size(); ++r)
      for (std::size_t c = 0; c < perm.size(); ++c) p(r, c) = m(perm[r], perm[c]);
    permuted.push_back(std::move(p));
  }
  if (perm_out) *perm_out = perm;
  return GradedModule(std::move(over), std::move(sorted), std::move(permuted));
}

Matrix GradedModule::act(std::span<const Fp> a) const {
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) m += action_[i].scaled(a[i]);
  return m;
}

std::vector<std::size_t> GradedModule::slice(int n) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < dim(); ++k)
    if (degrees_[k] == n) out.push_back(k);
  return out;
}

std::map<int, std::size_t> GradedModule::graded_dims() const {
  std::map<int, std::size_t> out;
  for (int d : degrees_) ++out[d];
  return out;
}

bool GradedModule::same_tables(const GradedModule& o) const {
  if (over_ != o.over_ && over_->presentation() != o.over_->presentation()) return false;
  return degrees_ == o.degrees_ && action_ == o.action_;
}

int width(const GradedModule& m) {
  if (m.dim() == 0) return 0;
  return m.degrees().back() - m.degrees().front() + 1;
}

GradedModule shift(const GradedModule& m, int d) {
  std::vector<int> degrees = m.degrees();
  for (int& x : degrees) x -= d;
  return GradedModule(m.algebra(), std::move(degrees), m.actions());
}

namespace {

void check_index(const GradedAlgebra& a, std::size_t i) {
  if (i >= a.idempotent_count())
    throw Error(ErrorKind::IndexOutOfRange,
                "idempotent index " + std::to_string(i) + " out of range (" + std::to_string(a.idempotent_count()) + ")");
}

std::optional<int> vector_degree(const GradedModule& m, std::span<const Fp> v) {
  std::optional<int> d;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (d && *d != m.degree(k)) return std::nullopt;
    d = m.degree(k);
  }
  return d;
}

// A e_i (d) together with the algebra elements b_j e_i underlying its basis,
// aligned with the sorted module basis.
struct ProjData {
  GradedModule module;
  std::vector<Vec> elements;
};

ProjData proj_data(const AlgebraPtr& ap, std::size_t i, int d) {
  const GradedAlgebra& a = *ap;
  check_index(a, i);
  const Vec& e = a.idempotents()[i];
  EchelonBasis span(a.dim());
  std::vector<int> degrees;
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (span.insert(a.multiply(a.basis_vector(j), e))) degrees.push_back(a.degree(j) - d);
  const auto& elems = span.accepted();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Matrix m(elems.size(), elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c) m.set_column(c, *span.coordinates(a.left_regular(k).apply(elems[c])));
    action.push_back(std::move(m));
  }
  std::vector<std::size_t> perm;
  GradedModule module = GradedModule::from_unsorted(ap, degrees, action, &perm);
  std::vector<Vec> sorted;
  for (auto k : perm) sorted.push_back(elems[k]);
  return {std::move(module), std::move(sorted)};
}

}  // namespace

GradedModule proj(const AlgebraPtr& a, std::size_t i, int d) { return proj_data(a, i, d).module; }

GradedModule inj(const AlgebraPtr& ap, std::size_t i, int d) {
  const GradedAlgebra& a = *ap;
  check_index(a, i);
  const Vec& e = a.idempotents()[i];
  EchelonBasis span(a.dim());
  std::vector<int> degrees;
  for (std::size_t j = 0; j < a.dim(); ++j)
    if (span.insert(a.multiply(e, a.basis_vector(j)))) degrees.push_back(-a.degree(j) - d);
  const auto& elems = span.accepted();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    // (b f)(x) = f(x b): transpose of right multiplication on e_i A
    Matrix right(elems.size(), elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c)
      right.set_column(c, *span.coordinates(a.right_regular(k).apply(elems[c])));
    action.push_back(right.transpose());
  }
  return GradedModule::from_unsorted(ap, degrees, action);
}

GradedModule simple(const AlgebraPtr& a, std::size_t i, int d) { return top(proj(a, i, d)); }

GradedModule regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a->dim(); ++k) action.push_back(a->left_regular(k));
  return GradedModule::from_unsorted(a, a->degrees(), action);
}

GradedModule direct_sum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) throw Error(ErrorKind::AlgebraMismatch, "direct sum of no modules has no algebra");
  const AlgebraPtr& a = parts.front().algebra();
  std::size_t total = 0;
  std::vector<int> degrees;
  for (const auto& p : parts) {
    if (p.algebra() != a) throw Error(ErrorKind::AlgebraMismatch, "direct sum over different algebras");
    total += p.dim();
    degrees.insert(degrees.end(), p.degrees().begin(), p.degrees().end());
  }
  std::vector<Matrix> action(a->dim(), Matrix(total, total));
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t k = 0; k < a->dim(); ++k)
      for (std::size_t r = 0; r < p.dim(); ++r)
        for (std::size_t c = 0; c < p.dim(); ++c) action[k](off + r, off + c) = p.action(k)(r, c);
    off += p.dim();
  }
  return GradedModule::from_unsorted(a, degrees, action);
}

GradedModule submodule(const GradedModule& m, const std::vector<Vec>& basis_in) {
  std::vector<std::pair<int, const Vec*>> tagged;
  for (const auto& v : basis_in) {
    auto d = vector_degree(m, v);
    if (!d) throw Error(ErrorKind::CheckFailed, "submodule basis vector is zero or inhomogeneous");
    tagged.emplace_back(*d, &v);
  }
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  EchelonBasis span(m.dim());
  std::vector<int> degrees;
  for (const auto& [d, v] : tagged)
    if (span.insert(*v)) degrees.push_back(d);
  const auto& elems = span.accepted();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < m.algebra()->dim(); ++k) {
    Matrix a(elems.size(), elems.size());
    for (std::size_t c = 0; c < elems.size(); ++c) {
      auto coords = span.coordinates(m.action(k).apply(elems[c]));
      if (!coords) throw Error(ErrorKind::CheckFailed, "span is not stable under the algebra action");
      a.set_column(c, *coords);
    }
    action.push_back(std::move(a));
  }
  return GradedModule(m.algebra(), std::move(degrees), std::move(action));
}

GradedModule quotient(const GradedModule& m, const std::vector<Vec>& sub_span) {
  EchelonBasis full(m.dim());
  for (const auto& v : sub_span) full.insert(v);
  const std::size_t r = full.size();
  std::vector<std::size_t> reps;
  for (std::size_t k = 0; k < m.dim(); ++k)
    if (full.insert(unit_vec(m.dim(), k))) reps.push_back(k);
  std::vector<int> degrees;
  for (auto k : reps) degrees.push_back(m.degree(k));
  std::vector<Matrix> action;
  for (std::size_t t = 0; t < m.algebra()->dim(); ++t) {
    Matrix a(reps.size(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const auto coords = full.coordinates(m.action(t).column(reps[c]));
      for (std::size_t q = 0; q < reps.size(); ++q) a(q, c) = (*coords)[r + q];
    }
    action.push_back(std::move(a));
  }
  return GradedModule(m.algebra(), std::move(degrees), std::move(action));
}

std::vector<Vec> radical_span(const GradedModule& m) {
  EchelonBasis span(m.dim());
  for (const auto& r : m.algebra()->simple_data().radical) {
    const Matrix act = m.act(r);
    for (std::size_t c = 0; c < m.dim(); ++c) span.insert(act.column(c));
  }
  return span.accepted();
}

GradedModule top(const GradedModule& m) { return quotient(m, radical_span(m)); }

GradedModule socle(const GradedModule& m) {
  std::vector<Matrix> rad_actions;
  for (const auto& r : m.algebra()->simple_data().radical) rad_actions.push_back(m.act(r));
  std::vector<Vec> basis;
  for (const auto& [deg, count] : m.graded_dims()) {
    const auto cols = m.slice(deg);
    Matrix stacked(rad_actions.size() * m.dim(), cols.size());
    for (std::size_t t = 0; t < rad_actions.size(); ++t)
      for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) stacked(t * m.dim() + r, c) = rad_actions[t](r, cols[c]);
    for (const auto& k : rank_kernel(stacked).kernel) {
      Vec v(m.dim());
      for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = k[c];
      basis.push_back(std::move(v));
    }
  }
  return submodule(m, basis);
}

std::vector<GradedMorphism> hom_basis(const GradedModule& m, const GradedModule& n) {
  if (m.algebra() != n.algebra() && m.algebra()->presentation() != n.algebra()->presentation())
    throw Error(ErrorKind::AlgebraMismatch, "hom between modules over different algebras");
  const GradedAlgebra& a = *m.algebra();
  // Unknowns: one block f_d : M_d -> N_d per degree present in both.
  std::map<int, std::size_t> offset;
  std::map<int, std::size_t> m_start, n_start;
  const auto mdims = m.graded_dims();
  const auto ndims = n.graded_dims();
  std::size_t unknowns = 0;
  for (const auto& [d, md] : mdims) {
    auto it = ndims.find(d);
    if (it == ndims.end()) continue;
    offset[d] = unknowns;
    unknowns += md * it->second;
  }
  if (unknowns == 0) return {};
  for (std::size_t k = 0; k < m.dim(); ++k) m_start.try_emplace(m.degree(k), k);
  for (std::size_t k = 0; k < n.dim(); ++k) n_start.try_emplace(n.degree(k), k);
  auto var = [&](int d, std::size_t n_idx, std::size_t m_idx) {
    return offset.at(d) + (n_idx - n_start.at(d)) * mdims.at(d) + (m_idx - m_start.at(d));
  };

  EchelonBasis equations(unknowns);
  for (std::size_t t = 0; t < a.dim(); ++t) {
    const int shift_by = a.degree(t);
    const Matrix& am = m.action(t);
    const Matrix& an = n.action(t);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const int d = m.degree(j);
      const int target = d + shift_by;
      const bool src_block = offset.count(d) > 0;
      const bool dst_block = offset.count(target) > 0;
      for (auto rp : n.slice(target)) {
        Vec row(unknowns);
        // f(b v_j) component rp
        if (dst_block)
          for (auto kp : m.slice(target))
            if (am(kp, j)) row[var(target, rp, kp)] += am(kp, j);
        // - b f(v_j) component rp
        if (src_block)
          for (auto r : n.slice(d))
            if (an(rp, r)) row[var(d, r, j)] -= an(rp, r);
        if (!is_zero(row)) equations.insert(row);
      }
    }
  }
  const Matrix system = Matrix::from_rows(unknowns, equations.accepted());
  std::vector<GradedMorphism> out;
  for (const auto& sol : rank_kernel(system).kernel) {
    Matrix f(n.dim(), m.dim());
    for (const auto& [d, off] : offset)
      for (auto r : n.slice(d))
        for (auto c : m.slice(d)) f(r, c) = sol[var(d, r, c)];
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const GradedModule& m, const GradedModule& n) { return hom_basis(m, n).size(); }

bool is_morphism(const GradedModule& m, const GradedModule& n, const GradedMorphism& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (f(r, c) && n.degree(r) != m.degree(c)) return false;
  for (std::size_t t = 0; t < m.algebra()->dim(); ++t)
    if (f * m.action(t) != n.action(t) * f) return false;
  return true;
}

std::map<std::pair<std::size_t, int>, std::size_t> simple_multiplicities(const GradedModule& t) {
  const GradedAlgebra& a = *t.algebra();
  const auto& info = a.simple_data();
  std::map<std::pair<std::size_t, int>, std::size_t> out;
  for (std::size_t i = 0; i < a.idempotent_count(); ++i) {
    if (info.class_of[i] != i) continue;
    const Matrix e = t.act(a.idempotents()[i]);
    for (const auto& [deg, count] : t.graded_dims()) {
      const auto cols = t.slice(deg);
      Matrix block(t.dim(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) block.set_column(c, e.column(cols[c]));
      const std::size_t rk = rank(block);
      if (rk == 0) continue;
      if (rk % info.endo_dim[i] != 0)
        throw Error(ErrorKind::CheckFailed, "isotypic slice dimension not divisible by endomorphism degree");
      out[{i, deg}] = rk / info.endo_dim[i];
    }
  }
  return out;
}

std::size_t projective_cover_dim(const GradedModule& m) {
  const auto& info = m.algebra()->simple_data();
  std::size_t total = 0;
  for (const auto& [key, mult] : simple_multiplicities(top(m))) total += mult * info.left_proj_dim[key.first];
  return total;
}

bool is_projective(const GradedModule& m) { return projective_cover_dim(m) == m.dim(); }

std::size_t injective_envelope_dim(const GradedModule& m) {
  const auto& info = m.algebra()->simple_data();
  std::size_t total = 0;
  for (const auto& [key, mult] : simple_multiplicities(socle(m))) total += mult * info.right_proj_dim[key.first];
  return total;
}

bool is_injective(const GradedModule& m) { return injective_envelope_dim(m) == m.dim(); }

ProjectiveCover projective_cover(const GradedModule& m) {
  const AlgebraPtr& ap = m.algebra();
  const GradedAlgebra& a = *ap;
  const auto& info = a.simple_data();
  EchelonBasis span(m.dim());
  for (const auto& v : radical_span(m)) span.insert(v);

  struct Generator {
    std::size_t idempotent;
    Vec element;
    int degree;
  };
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < a.idempotent_count(); ++i) {
    if (info.class_of[i] != i) continue;
    const Matrix e = m.act(a.idempotents()[i]);
    for (std::size_t k = 0; k < m.dim(); ++k) {
      Vec u = e.column(k);
      if (is_zero(u) || span.contains(u)) continue;
      for (std::size_t t = 0; t < a.dim(); ++t) span.insert(m.action(t).apply(u));
      gens.push_back({i, std::move(u), m.degree(k)});
    }
  }
  if (gens.empty()) return {GradedModule::zero(ap), Matrix(m.dim(), 0), {}};

  std::vector<GradedModule> parts;
  std::vector<Vec> images;  // image of each unsorted cover basis vector
  std::vector<std::pair<std::size_t, int>> summands;
  for (const auto& g : gens) {
    ProjData pd = proj_data(ap, g.idempotent, -g.degree);
    for (const auto& w : pd.elements) images.push_back(m.act(w).apply(g.element));
    parts.push_back(std::move(pd.module));
    summands.emplace_back(g.idempotent, -g.degree);
  }
  // direct_sum re-sorts by degree; replay the same stable order for the map.
  std::vector<int> degrees;
  for (const auto& p : parts) degrees.insert(degrees.end(), p.degrees().begin(), p.degrees().end());
  std::vector<std::size_t> perm(degrees.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return degrees[x] < degrees[y]; });
  GradedModule cover = direct_sum(parts);
  Matrix map(m.dim(), cover.dim());
  for (std::size_t c = 0; c < perm.size(); ++c) map.set_column(c, images[perm[c]]);
  return {std::move(cover), std::move(map), std::move(summands)};
}

GradedModule syzygy(const GradedModule& m) {
  const ProjectiveCover pc = projective_cover(m);
  std::vector<Vec> kernel;
  for (const auto& [deg, count] : pc.cover.graded_dims()) {
    const auto cols = pc.cover.slice(deg);
    const auto rows = m.slice(deg);
    Matrix block(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) block(r, c) = pc.map(rows[r], cols[c]);
    for (const auto& k : rank_kernel(block).kernel) {
      Vec v(pc.cover.dim());
      for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = k[c];
      kernel.push_back(std::move(v));
    }
  }
  if (kernel.empty()) return GradedModule::zero(m.algebra());
  return submodule(pc.cover, kernel);
}

}  // namespace grext

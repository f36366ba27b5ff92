#include "grext/selfinj.hpp"

#include <algorithm>
#include <random>

#include "grext/error.hpp"
#include "grext/gmod.hpp"

namespace grext {

SelfInjectivity is_graded_selfinjective(const AlgebraPtr& a) {
  SelfInjectivity out;
  out.holds = true;
  for (std::size_t i = 0; i < a->idempotent_count(); ++i) {
    const GradedModule d = inj(a, i, 0);
    const std::size_t cover = projective_cover_dim(d);
    out.injective_dims.push_back(d.dim());
    out.cover_dims.push_back(cover);
    if (cover != d.dim() && out.holds) {
      out.holds = false;
      out.failing_index = i;
    }
  }
  return out;
}

std::optional<Vec> frobenius_functional_search(const AlgebraPtr& ap, std::uint64_t seed, int trials) {
  const GradedAlgebra& a = *ap;
  if (!is_basic(a)) throw Error(ErrorKind::NotBasic, "functional search is only meaningful for basic algebras");
  const std::size_t n = a.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, prime() - 1);
  for (int trial = 0; trial < trials; ++trial) {
    Vec lambda(n);
    for (auto& x : lambda) x = Fp::from(coeff(rng));
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Fp s;
        const Vec& ij = a.basis_product(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (ij[k]) s += ij[k] * lambda[k];
        gram(i, j) = s;
      }
    if (rank(gram) == n) return lambda;
  }
  return std::nullopt;
}

namespace {

// Class and degree of the top of a module whose top must be a single simple.
std::optional<std::pair<std::size_t, int>> simple_top(const GradedModule& m) {
  const auto mult = simple_multiplicities(top(m));
  if (mult.size() != 1 || mult.begin()->second != 1) return std::nullopt;
  return mult.begin()->first;
}

std::vector<std::size_t> sorted_classes(std::vector<std::size_t> classes) {
  std::sort(classes.begin(), classes.end());
  return classes;
}

}  // namespace

bool is_graded_frobenius(const AlgebraPtr& ap) {
  const GradedAlgebra& a = *ap;
  const int c = a.top_degree();
  if (c < 1) throw Error(ErrorKind::TrivialGrading, "graded Frobenius needs top degree c >= 1");
  const auto& info = a.simple_data();
  std::vector<std::size_t> hit;
  for (std::size_t i = 0; i < a.idempotent_count(); ++i) {
    const GradedModule d = inj(ap, i, -c);
    if (!is_projective(d)) return false;
    const auto t = simple_top(d);
    if (!t || t->second != 0) return false;
    hit.push_back(t->first);
  }
  return sorted_classes(hit) == sorted_classes(info.class_of);
}

bool is_Ac_faithful(const GradedAlgebra& a) {
  const int c = a.top_degree();
  if (c < 1) throw Error(ErrorKind::TrivialGrading, "faithfulness of A_c needs top degree c >= 1");
  const auto zero = a.component(0);
  const auto topc = a.component(c);
  const std::size_t n = a.dim();
  Matrix m(topc.size() * n, zero.size());
  for (std::size_t col = 0; col < zero.size(); ++col)
    for (std::size_t t = 0; t < topc.size(); ++t) {
      const Vec& prod = a.basis_product(zero[col], topc[t]);
      for (std::size_t k = 0; k < n; ++k) m(t * n + k, col) = prod[k];
    }
  return rank(m) == zero.size();
}

NakayamaData graded_nakayama(const AlgebraPtr& ap) {
  const GradedAlgebra& a = *ap;
  const auto& info = a.simple_data();
  const std::size_t l = a.idempotent_count();
  // For each injective D(e_j A): its cover and its simple top (class, degree).
  std::vector<std::vector<std::size_t>> by_class(l);
  std::vector<int> top_degree(l);
  std::vector<std::size_t> cover(l);
  for (std::size_t j = 0; j < l; ++j) {
    const GradedModule d = inj(ap, j, 0);
    cover[j] = projective_cover_dim(d);
    if (cover[j] != d.dim())
      throw Error(ErrorKind::NotSelfInjective, "D(e_" + std::to_string(j) + "A) is not projective", idempotent_label(a, j));
    const auto t = simple_top(d);
    if (!t) throw Error(ErrorKind::AmbiguousMatch, "injective " + std::to_string(j) + " does not have a simple top");
    by_class[t->first].push_back(j);
    top_degree[j] = t->second;
  }
  NakayamaData out;
  out.permutation.assign(l, 0);
  out.shifts.assign(l, 0);
  out.cover_dims.assign(l, 0);
  out.top_degrees.assign(l, 0);
  std::vector<std::size_t> used(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t cls = info.class_of[i];
    auto& pool = by_class[cls];
    if (used[cls] >= pool.size())
      throw Error(ErrorKind::AmbiguousMatch, "no unused injective matches A e_" + std::to_string(i), idempotent_label(a, i));
    const std::size_t j = pool[used[cls]++];
    out.permutation[i] = j;
    // D(e_j A)(d) has its top in degree top - d; matching A e_i needs degree 0.
    out.shifts[i] = top_degree[j];
    out.cover_dims[i] = cover[j];
    out.top_degrees[i] = top_degree[j];
  }
  for (std::size_t cls = 0; cls < l; ++cls)
    if (used[cls] != by_class[cls].size())
      throw Error(ErrorKind::AmbiguousMatch, "Nakayama assignment is not a bijection");
  if (a.top_degree() >= 1 && is_left_well_graded(a).holds && is_right_well_graded(a).holds)
    for (std::size_t i = 0; i < l; ++i)
      if (out.shifts[i] != -a.top_degree())
        throw Error(ErrorKind::CheckFailed,
                    "well-graded algebra has Nakayama shift " + std::to_string(out.shifts[i]) + " at index " +
                        std::to_string(i));
  return out;
}

GldimResult global_dimension(const AlgebraPtr& b, int cutoff) {
  const auto& info = b->simple_data();
  GldimResult out;
  out.finite = true;
  for (std::size_t i = 0; i < b->idempotent_count(); ++i) {
    if (info.class_of[i] != i) continue;
    GradedModule m = simple(b, i, 0);
    int pd = -1;
    for (int step = 0; step <= cutoff; ++step) {
      if (is_projective(m)) {
        pd = step;
        break;
      }
      m = syzygy(m);
    }
    out.simple_pds.push_back(pd);
    if (pd < 0)
      out.finite = false;
    else
      out.value = std::max(out.value, pd);
  }
  if (!out.finite) out.value = cutoff;
  return out;
}

}  // namespace grext

#include "grext/equiv.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

#include "grext/error.hpp"
#include "grext/selfinj.hpp"

namespace grext {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void require_over(const GradedModule& m, const AlgebraPtr& a, const char* what) {
  if (m.algebra() != a && m.algebra()->presentation() != a->presentation())
    throw Error(ErrorKind::AlgebraMismatch, std::string(what) + ": module is over the wrong algebra");
}

Matrix invert_or_throw(const Matrix& m, const char* what) {
  auto inv = invert(m);
  if (!inv) throw Error(ErrorKind::CheckFailed, std::string(what) + " is singular");
  return *inv;
}

// Same vector space, new action table; `source_of(e, n)` gives the element of
// the old algebra whose action replaces target basis element e on degree n.
template <class SourceOf>
Transported retabulate(const GradedModule& m, const AlgebraPtr& target, SourceOf source_of) {
  const std::size_t d = m.dim();
  std::vector<Matrix> actions(target->dim(), Matrix(d, d));
  const auto dims = m.graded_dims();
  for (const auto& [deg, _] : dims) {
    const auto idx = m.slice(deg);
    for (std::size_t e = 0; e < target->dim(); ++e) {
      const Matrix act = m.act(source_of(e, deg));
      for (auto j : idx)
        for (std::size_t r = 0; r < d; ++r) actions[e](r, j) = act(r, j);
    }
  }
  return {GradedModule(target, m.degrees(), std::move(actions)), Matrix::identity(d)};
}

// The σ-twist with τ in place of σ; τ = σ^{-1} undoes τ = σ.
Transported twist_by(const Matrix& tau, const GradedModule& m, const AlgebraPtr& target) {
  const std::size_t n = m.algebra()->dim();
  if (target->dim() != n) throw Error(ErrorKind::AlgebraMismatch, "twist target has a different dimension");
  const std::size_t nb = tau.rows();
  if (2 * nb != n) throw Error(ErrorKind::AlgebraMismatch, "twist needs an algebra laid out as B ⊕ D(B)");
  std::map<int, std::pair<Matrix, Matrix>> powers;
  for (const auto& [deg, _] : m.graded_dims()) powers.emplace(deg, std::pair{matrix_power(tau, deg), matrix_power(tau, -deg)});
  return retabulate(m, target, [&](std::size_t e, int deg) {
    const auto& [fwd, back] = powers.at(deg);
    Vec v(n);
    if (e < nb) {
      for (std::size_t l = 0; l < nb; ++l) v[l] = fwd(l, e);
    } else {
      // f ∘ τ^{-n} in dual coordinates is row e of τ^{-n}
      for (std::size_t l = 0; l < nb; ++l) v[nb + l] = back(e - nb, l);
    }
    return v;
  });
}

}  // namespace

GradedMorphism transport_morphism(const Transported& m, const Transported& n, const GradedMorphism& f) {
  return invert_or_throw(n.basis, "basis change") * f * m.basis;
}

Transported phi(const TData& t, const GradedModule& m) {
  require_over(m, t.a, "phi");
  const int c = t.layout.c();
  const std::size_t d = m.dim();
  std::vector<int> slice(d), comp(d);
  std::vector<std::size_t> perm(d);
  for (std::size_t j = 0; j < d; ++j) {
    slice[j] = floor_div(m.degree(j), c);
    comp[j] = c - 1 - (m.degree(j) - slice[j] * c);
    perm[j] = j;
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    return std::tie(slice[x], comp[x], x) < std::tie(slice[y], comp[y], y);
  });
  std::vector<std::size_t> inv(d);
  for (std::size_t q = 0; q < d; ++q) inv[perm[q]] = q;

  const std::size_t nb = t.b->dim();
  std::vector<Matrix> actions;
  actions.reserve(t.t->dim());
  for (std::size_t e = 0; e < t.t->dim(); ++e) {
    const BlockEntry& entry = e < nb ? t.layout.b_entries()[e] : t.layout.x_entries()[e - nb];
    const Matrix& ak = m.action(entry.element);
    Matrix act(d, d);
    // E_rs ⊗ a moves component s to component r; degrees line up on their own.
    for (std::size_t q = 0; q < d; ++q) {
      const std::size_t j = perm[q];
      if (comp[j] != entry.col) continue;
      for (std::size_t r = 0; r < d; ++r)
        if (ak(r, j)) act(inv[r], q) = ak(r, j);
    }
    actions.push_back(std::move(act));
  }
  std::vector<int> degrees(d);
  Matrix basis(d, d);
  for (std::size_t q = 0; q < d; ++q) {
    degrees[q] = slice[perm[q]];
    basis(perm[q], q) = Fp::one();
  }
  return {GradedModule(t.t, std::move(degrees), std::move(actions)), std::move(basis)};
}

Transported psi(const TData& t, const GradedModule& n) {
  require_over(n, t.t, "psi");
  const int c = t.layout.c();
  const std::size_t d = n.dim();
  std::vector<Vec> cols;
  std::vector<int> degrees;
  std::vector<int> comp;
  for (const auto& [i, _] : n.graded_dims()) {
    const auto idx = n.slice(i);
    for (int q = 0; q < c; ++q) {
      const int r = c - 1 - q;
      const Matrix e = n.act(t.diagonal_idempotent(r));
      std::vector<Vec> cand;
      for (auto j : idx) cand.push_back(e.column(j));
      for (auto k : independent_subset(cand, d)) {
        cols.push_back(std::move(cand[k]));
        degrees.push_back(i * c + q);
        comp.push_back(r);
      }
    }
  }
  if (cols.size() != d) throw Error(ErrorKind::CheckFailed, "diagonal idempotents do not split the module");
  Matrix basis = Matrix::from_columns(d, cols);
  const Matrix back = invert_or_throw(basis, "psi basis");

  const GradedAlgebra& a = *t.a;
  std::vector<Matrix> actions;
  actions.reserve(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const int delta = a.degree(k);
    Matrix act(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const int r = comp[j];
      const std::size_t te = r - delta >= 0 ? t.t_index_b(r - delta, r, k) : t.t_index_x(c + r - delta, r, k);
      act.set_column(j, back.apply(n.action(te).apply(cols[j])));
    }
    actions.push_back(std::move(act));
  }
  return {GradedModule(t.a, std::move(degrees), std::move(actions)), std::move(basis)};
}

Transported twist_transport(const AlgebraAutomorphism& sigma, const GradedModule& m, const AlgebraPtr& target) {
  return twist_by(sigma.matrix, m, target);
}

Transported untwist_transport(const AlgebraAutomorphism& sigma, const GradedModule& m, const AlgebraPtr& target) {
  return twist_by(inverse(sigma).matrix, m, target);
}

Transported iso_transport(const Matrix& theta, const GradedModule& m, const AlgebraPtr& target) {
  const std::size_t n = m.algebra()->dim();
  const std::size_t nx = theta.cols();
  if (target->dim() != n || theta.rows() != nx || nx > n)
    throw Error(ErrorKind::AlgebraMismatch, "isomorphism does not match the algebras");
  const std::size_t nb = n - nx;
  const Matrix back = invert_or_throw(theta, "theta");
  return retabulate(m, target, [&](std::size_t e, int) {
    Vec v(n);
    if (e < nb) {
      v[e] = Fp::one();
    } else {
      for (std::size_t x = 0; x < nx; ++x) v[nb + x] = back(x, e - nb);
    }
    return v;
  });
}

SigmaExtraction extract_sigma(const AlgebraPtr& b, const Bimodule& x, std::uint64_t seed, const AlgebraPtr& t) {
  if (!b->is_trivially_graded()) throw Error(ErrorKind::PreconditionFailed, "B must be trivially graded", "B");
  if (!is_basic(*b)) throw Error(ErrorKind::PreconditionFailed, "B is not basic", "B");
  const AlgebraPtr tt = t ? t : trivial_extension(b, x);
  for (const auto& wg : {is_left_well_graded(*tt), is_right_well_graded(*tt)})
    if (!wg.holds)
      throw Error(ErrorKind::PreconditionFailed, "B ⋉ X is not well-graded",
                  idempotent_label(*tt, *wg.failing_idempotent));
  if (const auto si = is_graded_selfinjective(tt); !si.holds)
    throw Error(ErrorKind::PreconditionFailed, "B ⋉ X is not self-injective", idempotent_label(*tt, *si.failing_index));

  const std::size_t nb = b->dim();
  const std::size_t nx = x.dim();
  if (nx != nb) throw Error(ErrorKind::GeneratorNotFound, "dim X differs from dim B; D(X) has no free generator");

  // D(X): (b φ)(y) = φ(y b), (φ b)(y) = φ(b y)
  std::vector<Matrix> left_d, right_d;
  for (std::size_t k = 0; k < nb; ++k) {
    left_d.push_back(x.right[k].transpose());
    right_d.push_back(x.left[k].transpose());
  }
  auto attempt = [&](const Vec& m) -> std::optional<Matrix> {
    Matrix l(nx, nb), r(nx, nb);
    for (std::size_t k = 0; k < nb; ++k) {
      l.set_column(k, left_d[k].apply(m));
      r.set_column(k, right_d[k].apply(m));
    }
    auto linv = invert(l);
    if (!linv || rank(r) != nb) return std::nullopt;
    return *linv * r;
  };

  SigmaExtraction out;
  std::optional<Matrix> sigma;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, prime() - 1);
  for (int trial = 0; trial < 128 && !sigma; ++trial) {
    Vec m(nx);
    for (auto& v : m) v = Fp::from(coeff(rng));
    out.trials = trial + 1;
    if ((sigma = attempt(m))) out.generator = std::move(m);
  }
  if (!sigma) {
    // Deterministic sweep over sums of at most three dual basis vectors.
    for (std::size_t i = 0; i < nx && !sigma; ++i)
      for (std::size_t j = i; j < nx && !sigma; ++j)
        for (std::size_t k = j; k < nx && !sigma; ++k) {
          Vec m(nx);
          m[i] = Fp::one();
          if (j != i) m[j] = Fp::one();
          if (k != j) m[k] = Fp::one();
          if ((sigma = attempt(m))) {
            out.generator = std::move(m);
            out.from_sweep = true;
          }
        }
  }
  if (!sigma) throw Error(ErrorKind::GeneratorNotFound, "no m in D(X) with m B = D(X) = B m");

  out.sigma = {b, *sigma};
  try {
    validate_automorphism(out.sigma);
  } catch (const Error& e) {
    throw Error(ErrorKind::CheckFailed, std::string("extracted sigma is not an automorphism: ") + e.what());
  }

  // θ(y)(b_j) = m(y b_j)
  Matrix theta(nb, nx);
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t y = 0; y < nx; ++y) {
      Fp s;
      for (std::size_t l = 0; l < nx; ++l)
        if (out.generator[l]) s += out.generator[l] * x.right[j](l, y);
      theta(j, y) = s;
    }
  if (!invert(theta)) throw Error(ErrorKind::CheckFailed, "theta is not bijective");
  const Bimodule target = twisted_dual_bimodule(b, out.sigma);
  for (std::size_t k = 0; k < nb; ++k) {
    if (theta * x.left[k] != target.left[k] * theta)
      throw Error(ErrorKind::CheckFailed, "theta does not commute with the left action of " + b->name(k));
    if (theta * x.right[k] != target.right[k] * theta)
      throw Error(ErrorKind::CheckFailed, "theta does not commute with the right action of " + b->name(k));
  }
  out.theta = std::move(theta);
  return out;
}

EquivalenceCertificate theorem_pipeline(const AlgebraPtr& a, std::uint64_t seed, int window) {
  const int c = a->top_degree();
  if (c < 1) throw Error(ErrorKind::PreconditionFailed, "A is trivially graded", "c=0");
  if (!is_basic(*degree_zero_part(*a))) throw Error(ErrorKind::PreconditionFailed, "A_0 is not basic", "A_0");
  for (const auto& wg : {is_left_well_graded(*a), is_right_well_graded(*a)})
    if (!wg.holds)
      throw Error(ErrorKind::PreconditionFailed, "A is not well-graded", idempotent_label(*a, *wg.failing_idempotent));
  if (const auto si = is_graded_selfinjective(a); !si.holds)
    throw Error(ErrorKind::PreconditionFailed, "A is not self-injective", idempotent_label(*a, *si.failing_index));
  if (window < 0) window = c;

  EquivalenceCertificate cert{.a = a, .t = build_t(a)};
  const TData& td = cert.t;
  cert.big_t = T_of(td.b);
  cert.sigma = extract_sigma(td.b, td.x, seed, td.t);
  cert.twisted_t = twisted_T_of(td.b, cert.sigma.sigma);
  const Matrix& theta = cert.sigma.theta;
  const AlgebraAutomorphism& sigma = cert.sigma.sigma;

  auto fail = [&](const std::string& what) {
    if (cert.first_failure.empty()) cert.first_failure = what;
  };

  // id ⊕ θ : t(A) -> T(b(A)^σ) is multiplicative.
  {
    const std::size_t n = td.t->dim();
    const std::size_t nb = td.b->dim();
    Matrix iota(n, n);
    for (std::size_t i = 0; i < nb; ++i) iota(i, i) = Fp::one();
    for (std::size_t i = 0; i < theta.rows(); ++i)
      for (std::size_t j = 0; j < theta.cols(); ++j) iota(nb + i, nb + j) = theta(i, j);
    cert.algebra_iso_ok = cert.twisted_t->dim() == n && iota.apply(td.t->unit()) == cert.twisted_t->unit();
    for (std::size_t i = 0; i < n && cert.algebra_iso_ok; ++i)
      for (std::size_t j = 0; j < n && cert.algebra_iso_ok; ++j)
        if (iota.apply(td.t->basis_product(i, j)) != cert.twisted_t->multiply(iota.column(i), iota.column(j))) {
          cert.algebra_iso_ok = false;
          fail("id+theta is not multiplicative on " + td.t->name(i) + "*" + td.t->name(j));
        }
    if (!cert.algebra_iso_ok) fail("id+theta is not an algebra isomorphism");
  }

  auto forward = [&](const GradedModule& m) {
    const Transported p = phi(td, m);
    const Transported q = iso_transport(theta, p.module, cert.twisted_t);
    Transported r = untwist_transport(sigma, q.module, cert.big_t);
    r.basis = p.basis * q.basis * r.basis;
    return r;
  };
  auto backward = [&](const GradedModule& n) {
    const Transported p = twist_transport(sigma, n, cert.twisted_t);
    const Transported q = iso_transport(invert_or_throw(theta, "theta"), p.module, td.t);
    Transported r = psi(td, q.module);
    r.basis = p.basis * q.basis * r.basis;
    return r;
  };

  enum class Kind { Proj, Simple, Inj };
  std::vector<GradedModule> before;
  std::vector<Transported> after;
  std::vector<Kind> kinds;
  for (std::size_t i = 0; i < a->idempotent_count(); ++i)
    for (int d = -window; d <= window; ++d)
      for (Kind k : {Kind::Proj, Kind::Simple, Kind::Inj}) {
        const char tag = k == Kind::Proj ? 'P' : k == Kind::Simple ? 'S' : 'I';
        GradedModule m = k == Kind::Proj ? proj(a, i, d) : k == Kind::Simple ? simple(a, i, d) : inj(a, i, d);
        SampleRecord rec;
        rec.label = std::string(1, tag) + std::to_string(i) + "(" + std::to_string(d) + ")";
        rec.dim = m.dim();
        Transported fm = forward(m);
        rec.round_trip = backward(fm.module).module.same_tables(m);
        if (!rec.round_trip) fail("round trip changed " + rec.label);
        if (k == Kind::Proj) rec.preserved = is_projective(fm.module);
        if (k == Kind::Inj) rec.preserved = is_injective(fm.module);
        if (!rec.preserved) fail("image of " + rec.label + " lost its projective/injective property");
        cert.samples.push_back(std::move(rec));
        before.push_back(std::move(m));
        after.push_back(std::move(fm));
        kinds.push_back(k);
      }

  cert.round_trip_ok = std::all_of(cert.samples.begin(), cert.samples.end(), [](const auto& s) { return s.round_trip; });
  cert.preservation_ok = std::all_of(cert.samples.begin(), cert.samples.end(), [](const auto& s) { return s.preserved; });

  const std::size_t count = before.size();
  std::vector<Matrix> back_basis;
  for (const auto& t : after) back_basis.push_back(invert_or_throw(t.basis, "basis change"));
  auto carry = [&](std::size_t s, std::size_t u, const GradedMorphism& f) { return back_basis[u] * f * after[s].basis; };
  std::vector<std::vector<std::vector<GradedMorphism>>> homs(count, std::vector<std::vector<GradedMorphism>>(count));
  cert.hom_dims_ok = true;
  cert.functoriality_ok = true;
  for (std::size_t s = 0; s < count; ++s) {
    // F(id) = id
    const Matrix id = Matrix::identity(before[s].dim());
    if (carry(s, s, id) != Matrix::identity(after[s].module.dim())) {
      cert.functoriality_ok = false;
      fail("identity of " + cert.samples[s].label + " is not preserved");
    }
    for (std::size_t u = 0; u < count; ++u) {
      PairRecord rec{.source = s, .target = u};
      homs[s][u] = hom_basis(before[s], before[u]);
      rec.hom_before = homs[s][u].size();
      rec.hom_after = hom_dim(after[s].module, after[u].module);
      for (const auto& f : homs[s][u])
        if (!is_morphism(after[s].module, after[u].module, carry(s, u, f)))
          rec.morphisms_ok = false;
      if (rec.hom_before != rec.hom_after) {
        cert.hom_dims_ok = false;
        fail("hom dimension differs for " + cert.samples[s].label + " -> " + cert.samples[u].label);
      }
      if (!rec.morphisms_ok) {
        cert.functoriality_ok = false;
        fail("a morphism " + cert.samples[s].label + " -> " + cert.samples[u].label + " is not carried to a morphism");
      }
      cert.pairs.push_back(rec);
    }
  }
  // F(g ∘ f) = F(g) ∘ F(f) on the first basis morphism of each hom space.
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t u = 0; u < count; ++u) {
      if (homs[s][u].empty()) continue;
      const auto& f = homs[s][u].front();
      const Matrix ff = carry(s, u, f);
      for (std::size_t v = 0; v < count; ++v) {
        if (homs[u][v].empty()) continue;
        const auto& g = homs[u][v].front();
        const Matrix lhs = carry(s, v, g * f);
        const Matrix rhs = carry(u, v, g) * ff;
        ++cert.compositions_checked;
        if (lhs != rhs) {
          cert.functoriality_ok = false;
          fail("composition through " + cert.samples[u].label + " is not preserved");
        }
      }
    }
  return cert;
}

}  // namespace grext

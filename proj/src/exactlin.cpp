#include "grext/exactlin.hpp"

#include <sstream>
#include <utility>

#include "grext/error.hpp"

namespace grext {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::UnitMismatch: return "UnitMismatch";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::IdempotentFault: return "IdempotentFault";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::PrimeTooSmall: return "PrimeTooSmall";
    case ErrorKind::TrivialGrading: return "TrivialGrading";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::ActionFault: return "ActionFault";
    case ErrorKind::ZeroBimodule: return "ZeroBimodule";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotBasic: return "NotBasic";
    case ErrorKind::NotSelfInjective: return "NotSelfInjective";
    case ErrorKind::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::GeneratorNotFound: return "GeneratorNotFound";
    case ErrorKind::CheckFailed: return "CheckFailed";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void set_prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw Error(ErrorKind::Unsupported, "field characteristic must be a prime below 2^31, got " + std::to_string(p));
  detail::g_prime = p;
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp acc = one();
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Unsupported, "inverse of zero in F_p");
  return pow(prime() - 2);
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Fp::one();
  return v;
}

bool is_zero(std::span<const Fp> v) {
  for (Fp x : v)
    if (x) return false;
  return true;
}

Vec add(std::span<const Fp> a, std::span<const Fp> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector lengths differ");
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(std::span<const Fp> a, std::span<const Fp> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "vector lengths differ");
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(std::span<const Fp> a, Fp s) {
  Vec r(a.begin(), a.end());
  for (Fp& x : r) x *= s;
  return r;
}

void axpy(Vec& a, Fp s, std::span<const Fp> b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i]) a[i] += s * b[i];
}

std::string to_string(std::span<const Fp> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].value();
  os << ')';
  return os.str();
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp::one();
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Fp::from(rows[r][c]);
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Fp> v) {
  if (v.size() != rows_) throw Error(ErrorKind::ShapeMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(std::span<const Fp> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r)
      if ((*this)(r, c)) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

bool Matrix::is_zero() const { return grext::is_zero(data_); }

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  const std::uint64_t p = prime();
  std::vector<std::uint64_t> acc(o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(r, k).value();
      if (!a) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        acc[c] += a * o(k, c).value();
        // keep headroom: products are < 2^62 since p < 2^31
        if (acc[c] >= (std::uint64_t(1) << 62)) acc[c] %= p;
      }
    }
    for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) = Fp::from(static_cast<std::int64_t>(acc[c] % p));
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(Fp s) const {
  Matrix r = *this;
  for (Fp& x : r.data_) x *= s;
  return r;
}

Matrix matrix_power(const Matrix& m, std::int64_t e) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "power of a non-square matrix");
  Matrix base = m;
  if (e < 0) {
    auto inv = invert(m);
    if (!inv) throw Error(ErrorKind::Unsupported, "negative power of a singular matrix");
    base = *inv;
    e = -e;
  }
  Matrix acc = Matrix::identity(m.rows());
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != lead)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pr, k), m(lead, k));
    const Fp inv = m(lead, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Fp f = m(r, c);
      if (f.is_zero()) continue;
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(lead, k)) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

RankKernel rank_kernel(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  RankKernel out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = Fp::one();
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix r = m;
  return rref(r).size();
}

std::optional<Vec> solve(const Matrix& m, std::span<const Fp> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::ShapeMismatch, "right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Fp::one();
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::pair<Vec, Vec> EchelonBasis::reduce(std::span<const Fp> v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::ShapeMismatch, "vector outside ambient space");
  Vec w(v.begin(), v.end());
  Vec combo(accepted_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Fp f = w[pivots_[k]];
    if (f.is_zero()) continue;
    axpy(w, -f, rows_[k]);
    const Vec& ck = combos_[k];
    for (std::size_t j = 0; j < ck.size(); ++j)
      if (ck[j]) combo[j] += f * ck[j];
  }
  return {std::move(w), std::move(combo)};
}

bool EchelonBasis::insert(std::span<const Fp> v) {
  auto [w, combo] = reduce(v);
  std::size_t piv = 0;
  while (piv < w.size() && w[piv].is_zero()) ++piv;
  if (piv == w.size()) return false;
  // w = v - sum combo_j accepted_j, and v becomes accepted_[m]
  const std::size_t m = accepted_.size();
  accepted_.emplace_back(v.begin(), v.end());
  Vec c(m + 1);
  for (std::size_t j = 0; j < m; ++j) c[j] = -combo[j];
  c[m] = Fp::one();
  const Fp inv = w[piv].inverse();
  for (Fp& x : w) x *= inv;
  for (Fp& x : c) x *= inv;
  rows_.push_back(std::move(w));
  combos_.push_back(std::move(c));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBasis::contains(std::span<const Fp> v) const { return grext::is_zero(reduce(v).first); }

std::optional<Vec> EchelonBasis::coordinates(std::span<const Fp> v) const {
  auto [w, combo] = reduce(v);
  if (!grext::is_zero(w)) return std::nullopt;
  return combo;
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, std::size_t ambient) {
  EchelonBasis basis(ambient);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (basis.insert(vectors[i])) picked.push_back(i);
  return picked;
}

}  // namespace grext

#pragma once

// Dense exact linear algebra over the prime field F_p.
//
// The prime is a process-wide setting (default 7919). It must be fixed before
// any algebra is built; values created under one prime are meaningless under
// another.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grext {

namespace detail {
inline std::uint32_t g_prime = 7919;
}

inline constexpr std::uint32_t kDefaultPrime = 7919;

bool is_prime(std::uint64_t n);

// Throws Error(Unsupported) unless p is a prime below 2^31.
void set_prime(std::uint32_t p);
inline std::uint32_t prime() { return detail::g_prime; }

// Restores the previous prime on scope exit.
class PrimeScope {
 public:
  explicit PrimeScope(std::uint32_t p) : saved_(prime()) { set_prime(p); }
  ~PrimeScope() { detail::g_prime = saved_; }
  PrimeScope(const PrimeScope&) = delete;
  PrimeScope& operator=(const PrimeScope&) = delete;

 private:
  std::uint32_t saved_;
};

class Fp {
 public:
  constexpr Fp() = default;
  // Reduces any integer into [0, p).
  static Fp from(std::int64_t n) {
    const auto p = static_cast<std::int64_t>(prime());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return Fp(static_cast<std::uint32_t>(r), Raw{});
  }
  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1u, Raw{}); }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  explicit operator bool() const { return v_ != 0; }

  Fp operator+(Fp o) const {
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    if (s >= prime()) s -= prime();
    return Fp(static_cast<std::uint32_t>(s), Raw{});
  }
  Fp operator-(Fp o) const { return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + prime() - o.v_, Raw{}); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : prime() - v_, Raw{}); }
  Fp operator*(Fp o) const { return Fp(static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % prime()), Raw{}); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp pow(std::uint64_t e) const;
  // Throws Error(Unsupported) on zero.
  Fp inverse() const;

  friend bool operator==(Fp a, Fp b) = default;

 private:
  struct Raw {};
  constexpr Fp(std::uint32_t v, Raw) : v_(v) {}
  std::uint32_t v_ = 0;
};

using Vec = std::vector<Fp>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Fp> v);
Vec add(std::span<const Fp> a, std::span<const Fp> b);
Vec sub(std::span<const Fp> a, std::span<const Fp> b);
Vec scale(std::span<const Fp> a, Fp s);
// a += s * b
void axpy(Vec& a, Fp s, std::span<const Fp> b);
std::string to_string(std::span<const Fp> v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
  // Convenience for tests and examples: integer entries reduced mod p.
  static Matrix from_ints(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Fp> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Fp> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Fp> v);

  Matrix transpose() const;
  Vec apply(std::span<const Fp> v) const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix& operator+=(const Matrix& o);
  Matrix scaled(Fp s) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

// Integer matrix power; negative exponents require an invertible matrix.
Matrix matrix_power(const Matrix& m, std::int64_t e);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vec> kernel;  // basis of {x : m x = 0}
};

RankKernel rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

// Some x with m x = b, or nullopt if b is outside the column space.
// Throws Error(ShapeMismatch) if b has the wrong length.
std::optional<Vec> solve(const Matrix& m, std::span<const Fp> b);

// nullopt when singular. Throws Error(ShapeMismatch) if not square.
std::optional<Matrix> invert(const Matrix& m);

// Incrementally built span of vectors in F_p^n. Tracks how each echelon row
// decomposes over the accepted inputs so membership queries return
// coordinates in terms of those inputs.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return accepted_.size(); }
  const std::vector<Vec>& accepted() const { return accepted_; }

  // Adds v if it is independent of the current span; returns whether it was.
  bool insert(std::span<const Fp> v);
  bool contains(std::span<const Fp> v) const;
  // Coordinates of v over accepted(), or nullopt if v is not in the span.
  std::optional<Vec> coordinates(std::span<const Fp> v) const;

 private:
  // Reduces v against the echelon rows; returns the residual and the
  // combination of accepted vectors that was subtracted.
  std::pair<Vec, Vec> reduce(std::span<const Fp> v) const;

  std::size_t ambient_;
  std::vector<Vec> accepted_;
  std::vector<Vec> rows_;    // pivot entry normalized to 1
  std::vector<Vec> combos_;  // rows_[k] = sum_j combos_[k][j] * accepted_[j]
  std::vector<std::size_t> pivots_;
};

// Indices of a maximal independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors, std::size_t ambient);

}  // namespace grext

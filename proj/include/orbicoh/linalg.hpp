#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbicoh {

using Scalar = std::uint32_t;

/// GF(p) for a prime p < 2^16.  Products of two residues fit in 32 bits,
/// which the elimination kernels rely on.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  Scalar reduce(long long v) const noexcept;
  Scalar add(Scalar a, Scalar b) const noexcept { return (a + b) % p_; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return (a + p_ - b) % p_; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % p_; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar inv(Scalar a) const;

  static bool is_prime(std::uint32_t n) noexcept;

 private:
  std::uint32_t p_;
};

/// Dense row-major matrix over GF(p).  Empty shapes (0 x n, n x 0) are legal
/// and behave as the unique linear maps between the corresponding spaces.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  static Matrix identity(std::size_t n, std::uint32_t p);
  static Matrix zero(std::size_t rows, std::size_t cols, std::uint32_t p) {
    return Matrix(rows, cols, p);
  }
  /// Entries are reduced mod p, negative values included.
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p);
  static Matrix column_vector(std::span<const Scalar> v, std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t prime() const noexcept { return p_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Scalar* row(std::size_t r) noexcept { return data_.data() + r * cols_; }
  const Scalar* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }
  std::span<const Scalar> data() const noexcept { return data_; }

  bool operator==(const Matrix& other) const = default;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  /// In-place `this[r0.., c0..] += scale * b`.
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b, Scalar scale = 1);
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix columns(std::span<const std::size_t> idx) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(Scalar s) const;

  static Matrix hstack(std::span<const Matrix> parts, std::size_t rows, std::uint32_t p);
  static Matrix vstack(std::span<const Matrix> parts, std::size_t cols, std::uint32_t p);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix kron(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(std::span<const Matrix> blocks, std::uint32_t p);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank() const noexcept { return pivots.size(); }
};

RrefResult rref(Matrix a);
std::size_t rank(const Matrix& a);

/// Columns form a basis of the null space, one per non-pivot column of the
/// RREF, with a 1 at that free column (the pivot-column basis).
Matrix kernel_basis(const Matrix& a);

/// Some X with A X = B, free variables set to zero (so B = 0 gives X = 0);
/// nullopt when inconsistent.  Throws DimensionMismatch if rows differ.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// The linearly independent columns of `a` selected by its RREF pivots.
Matrix column_space_basis(const Matrix& a);

/// Incrementally maintained span of vectors in GF(p)^n, stored as rows
/// in reduced echelon form.
class EchelonSpan {
 public:
  EchelonSpan(std::size_t n, std::uint32_t p);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  bool contains(std::span<const Scalar> v) const;
  /// Returns true when v was not yet in the span.
  bool insert(std::span<const Scalar> v);
  bool insert_column(const Matrix& m, std::size_t c);

 private:
  std::vector<Scalar> reduce(std::span<const Scalar> v) const;

  std::size_t n_;
  PrimeField field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace orbicoh

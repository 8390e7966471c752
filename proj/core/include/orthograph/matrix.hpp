#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orthograph/field.hpp"

namespace orthograph {

/// Dense row-major matrix over a FieldCtx. Square matrices are the
/// algebra elements; rectangular shapes appear as blocks and vectors
/// (k×1 columns, 1×k rows). Indices are 0-based.
class Mat {
 public:
  Mat(const FieldCtx& ctx, std::size_t rows, std::size_t cols);

  static Mat zero(const FieldCtx& ctx, std::size_t n) { return Mat(ctx, n, n); }
  static Mat identity(const FieldCtx& ctx, std::size_t n);
  /// E_{ij}: single 1 at (i, j).
  static Mat unit(const FieldCtx& ctx, std::size_t n, std::size_t i, std::size_t j);
  /// Nilpotent Jordan block J_n with ones on the superdiagonal.
  static Mat jordan(const FieldCtx& ctx, std::size_t n);
  /// Builds from row-major residues; prime fields only.
  static Mat from_residues(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                           std::span<const std::uint64_t> residues);
  static Mat from_scalars(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                          std::span<const Scalar> entries);
  static Mat column(const FieldCtx& ctx, std::span<const Scalar> entries);
  static Mat row(const FieldCtx& ctx, std::span<const Scalar> entries);

  /// Parses "r0c0,r0c1;r1c0,r1c1". Rows must have equal length.
  static Mat parse(const FieldCtx& ctx, std::string_view text);
  /// Inverse of parse; bit-exact with the text format.
  std::string to_string() const;

  const FieldCtx& ctx() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Dimension of a square matrix; throws DimensionMismatch otherwise.
  std::size_t n() const;

  Scalar at(std::size_t i, std::size_t j) const;
  bool is_zero_at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& value);

  bool is_zero() const;
  Mat transpose() const;
  Mat block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  /// Copies `src` into this matrix with its (0,0) entry at (row0, col0).
  void paste(std::size_t row0, std::size_t col0, const Mat& src);
  Mat scaled(const Scalar& factor) const;

  /// Row-major residues; prime fields only.
  const std::vector<std::uint64_t>& residues() const;

  friend bool operator==(const Mat& lhs, const Mat& rhs);
  /// Lexicographic order on row-major entries (same shape and field).
  friend bool operator<(const Mat& lhs, const Mat& rhs);

  friend Mat operator+(const Mat& lhs, const Mat& rhs);
  friend Mat operator-(const Mat& lhs, const Mat& rhs);

 private:
  using Storage = std::variant<std::vector<std::uint64_t>, std::vector<mpq_class>>;

  std::size_t index(std::size_t i, std::size_t j) const;
  void require_compatible(const Mat& other, const char* op) const;

  friend Mat mat_mul(const Mat& lhs, const Mat& rhs);
  friend bool product_is_zero(const Mat& lhs, const Mat& rhs);

  FieldCtx ctx_;
  std::size_t rows_;
  std::size_t cols_;
  Storage data_;
};

/// Exact product. Throws DimensionMismatch or FieldMismatch.
Mat mat_mul(const Mat& lhs, const Mat& rhs);
inline Mat operator*(const Mat& lhs, const Mat& rhs) { return mat_mul(lhs, rhs); }

/// lhs·rhs == 0 without materializing the product.
bool product_is_zero(const Mat& lhs, const Mat& rhs);

std::size_t rank(const Mat& a);
bool is_upper_triangular(const Mat& a);

/// Nonzero v with a·v = 0, returned as a column. Deterministic: reduced
/// row echelon form with pivots scanned left to right, the lowest free
/// variable set to 1 and the others to 0, then scaled so the first nonzero
/// coordinate is 1. Throws TrivialKernel when a has full column rank.
Mat right_kernel_vector(const Mat& a);
/// Nonzero row w with w·a = 0; right_kernel_vector of the transpose.
Mat left_kernel_vector(const Mat& a);

/// Exact inverse of an upper triangular matrix by back substitution.
/// Throws NotInvertible on a zero diagonal entry, NotTriangular if a is not upper triangular.
Mat triangular_inverse(const Mat& a);

}  // namespace orthograph

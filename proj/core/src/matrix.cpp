#include "orthograph/matrix.hpp"

#include <algorithm>
#include <utility>

namespace orthograph {

namespace {

std::string shape(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Reduced row echelon form, pivots chosen left to right.
struct Echelon {
  std::size_t rows;
  std::size_t cols;
  std::vector<Scalar> m;
  std::vector<std::size_t> pivots;

  Scalar& at(std::size_t i, std::size_t j) { return m[i * cols + j]; }
};

Echelon row_reduce(const Mat& a) {
  Echelon e{a.rows(), a.cols(), {}, {}};
  e.m.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) e.m.push_back(a.at(i, j));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < e.cols && r < e.rows; ++c) {
    std::size_t p = r;
    while (p < e.rows && e.at(p, c).is_zero()) ++p;
    if (p == e.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(e.at(p, j), e.at(r, j));
    }
    Scalar scale = e.at(r, c).inv();
    for (std::size_t j = c; j < e.cols; ++j) e.at(r, j) *= scale;
    for (std::size_t i = 0; i < e.rows; ++i) {
      if (i == r || e.at(i, c).is_zero()) continue;
      Scalar factor = e.at(i, c);
      for (std::size_t j = c; j < e.cols; ++j) e.at(i, j) -= factor * e.at(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

Mat::Mat(const FieldCtx& ctx, std::size_t rows, std::size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols) {
  if (ctx.is_finite()) {
    data_ = std::vector<std::uint64_t>(rows * cols, 0);
  } else {
    data_ = std::vector<mpq_class>(rows * cols);
  }
}

Mat Mat::identity(const FieldCtx& ctx, std::size_t n) {
  Mat m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(ctx));
  return m;
}

Mat Mat::unit(const FieldCtx& ctx, std::size_t n, std::size_t i, std::size_t j) {
  Mat m(ctx, n, n);
  m.set(i, j, Scalar::one(ctx));
  return m;
}

Mat Mat::jordan(const FieldCtx& ctx, std::size_t n) {
  Mat m(ctx, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, Scalar::one(ctx));
  return m;
}

Mat Mat::from_residues(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                       std::span<const std::uint64_t> residues) {
  if (!ctx.is_finite()) throw Error(Errc::FieldMismatch, "residues given for the rationals");
  if (residues.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(rows * cols) + " residues");
  }
  Mat m(ctx, rows, cols);
  auto& data = std::get<std::vector<std::uint64_t>>(m.data_);
  for (std::size_t k = 0; k < data.size(); ++k) data[k] = residues[k] % ctx.characteristic();
  return m;
}

Mat Mat::from_scalars(const FieldCtx& ctx, std::size_t rows, std::size_t cols,
                      std::span<const Scalar> entries) {
  if (entries.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(rows * cols) + " entries");
  }
  Mat m(ctx, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.set(k / cols, k % cols, entries[k]);
  return m;
}

Mat Mat::column(const FieldCtx& ctx, std::span<const Scalar> entries) {
  return from_scalars(ctx, entries.size(), 1, entries);
}

Mat Mat::row(const FieldCtx& ctx, std::span<const Scalar> entries) {
  return from_scalars(ctx, 1, entries.size(), entries);
}

Mat Mat::parse(const FieldCtx& ctx, std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  for (std::string_view row_text : split(trim(text), ';')) {
    std::vector<Scalar> row;
    for (std::string_view entry : split(row_text, ',')) {
      entry = trim(entry);
      if (entry.empty()) throw Error(Errc::ParseError, "empty entry in '" + std::string(text) + "'");
      row.push_back(Scalar::parse(ctx, entry));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(Errc::ParseError, "ragged rows in '" + std::string(text) + "'");
    }
    rows.push_back(std::move(row));
  }
  Mat m(ctx, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::string Mat::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ',';
      out += at(i, j).to_string();
    }
  }
  return out;
}

std::size_t Mat::n() const {
  if (!is_square()) throw Error(Errc::DimensionMismatch, "expected a square matrix, got " + shape(rows_, cols_));
  return rows_;
}

std::size_t Mat::index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw Error(Errc::DimensionMismatch, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") outside " + shape(rows_, cols_));
  }
  return i * cols_ + j;
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
  std::size_t k = index(i, j);
  if (auto r = std::get_if<std::vector<std::uint64_t>>(&data_)) return Scalar::from_residue(ctx_, (*r)[k]);
  return Scalar(ctx_, std::get<std::vector<mpq_class>>(data_)[k]);
}

bool Mat::is_zero_at(std::size_t i, std::size_t j) const {
  std::size_t k = index(i, j);
  if (auto r = std::get_if<std::vector<std::uint64_t>>(&data_)) return (*r)[k] == 0;
  return sgn(std::get<std::vector<mpq_class>>(data_)[k]) == 0;
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& value) {
  if (!(value.ctx() == ctx_)) {
    throw Error(Errc::FieldMismatch, "entry from " + value.ctx().name() + " in a matrix over " + ctx_.name());
  }
  std::size_t k = index(i, j);
  if (auto r = std::get_if<std::vector<std::uint64_t>>(&data_)) {
    (*r)[k] = value.residue();
  } else {
    std::get<std::vector<mpq_class>>(data_)[k] = value.rational();
  }
}

bool Mat::is_zero() const {
  if (auto r = std::get_if<std::vector<std::uint64_t>>(&data_)) {
    return std::all_of(r->begin(), r->end(), [](std::uint64_t x) { return x == 0; });
  }
  const auto& q = std::get<std::vector<mpq_class>>(data_);
  return std::all_of(q.begin(), q.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

Mat Mat::transpose() const {
  Mat t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  }
  return t;
}

Mat Mat::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw Error(Errc::DimensionMismatch, "block " + shape(rows, cols) + " at (" + std::to_string(row0) + "," +
                                             std::to_string(col0) + ") exceeds " + shape(rows_, cols_));
  }
  Mat b(ctx_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b.set(i, j, at(row0 + i, col0 + j));
  }
  return b;
}

void Mat::paste(std::size_t row0, std::size_t col0, const Mat& src) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) set(row0 + i, col0 + j, src.at(i, j));
  }
}

Mat Mat::scaled(const Scalar& factor) const {
  Mat out(ctx_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j) * factor);
  }
  return out;
}

const std::vector<std::uint64_t>& Mat::residues() const {
  if (auto r = std::get_if<std::vector<std::uint64_t>>(&data_)) return *r;
  throw Error(Errc::FieldMismatch, "residues requested for a rational matrix");
}

void Mat::require_compatible(const Mat& other, const char* op) const {
  if (!(ctx_ == other.ctx_)) {
    throw Error(Errc::FieldMismatch, std::string(op) + " of matrices over " + ctx_.name() + " and " +
                                         other.ctx_.name());
  }
}

bool operator==(const Mat& lhs, const Mat& rhs) {
  lhs.require_compatible(rhs, "comparison");
  return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
}

bool operator<(const Mat& lhs, const Mat& rhs) {
  lhs.require_compatible(rhs, "comparison");
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    return std::pair(lhs.rows_, lhs.cols_) < std::pair(rhs.rows_, rhs.cols_);
  }
  if (auto r = std::get_if<std::vector<std::uint64_t>>(&lhs.data_)) {
    return *r < std::get<std::vector<std::uint64_t>>(rhs.data_);
  }
  const auto& a = std::get<std::vector<mpq_class>>(lhs.data_);
  const auto& b = std::get<std::vector<mpq_class>>(rhs.data_);
  for (std::size_t k = 0; k < a.size(); ++k) {
    int c = cmp(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

Mat operator+(const Mat& lhs, const Mat& rhs) {
  lhs.require_compatible(rhs, "sum");
  if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) {
    throw Error(Errc::DimensionMismatch, "sum of " + shape(lhs.rows_, lhs.cols_) + " and " +
                                             shape(rhs.rows_, rhs.cols_));
  }
  Mat out(lhs.ctx_, lhs.rows_, lhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t j = 0; j < lhs.cols_; ++j) out.set(i, j, lhs.at(i, j) + rhs.at(i, j));
  }
  return out;
}

Mat operator-(const Mat& lhs, const Mat& rhs) {
  return lhs + rhs.scaled(-Scalar::one(rhs.ctx()));
}

Mat mat_mul(const Mat& lhs, const Mat& rhs) {
  lhs.require_compatible(rhs, "product");
  if (lhs.cols_ != rhs.rows_) {
    throw Error(Errc::DimensionMismatch, "product of " + shape(lhs.rows_, lhs.cols_) + " and " +
                                             shape(rhs.rows_, rhs.cols_));
  }
  Mat out(lhs.ctx_, lhs.rows_, rhs.cols_);
  const std::size_t inner = lhs.cols_;
  if (auto a = std::get_if<std::vector<std::uint64_t>>(&lhs.data_)) {
    const auto& b = std::get<std::vector<std::uint64_t>>(rhs.data_);
    auto& c = std::get<std::vector<std::uint64_t>>(out.data_);
    const std::uint64_t p = lhs.ctx_.characteristic();
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < inner; ++k) acc = (acc + (*a)[i * inner + k] * b[k * rhs.cols_ + j]) % p;
        c[i * rhs.cols_ + j] = acc;
      }
    }
    return out;
  }
  const auto& a = std::get<std::vector<mpq_class>>(lhs.data_);
  const auto& b = std::get<std::vector<mpq_class>>(rhs.data_);
  auto& c = std::get<std::vector<mpq_class>>(out.data_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      mpq_class acc;
      for (std::size_t k = 0; k < inner; ++k) acc += a[i * inner + k] * b[k * rhs.cols_ + j];
      c[i * rhs.cols_ + j] = acc;
    }
  }
  return out;
}

bool product_is_zero(const Mat& lhs, const Mat& rhs) {
  lhs.require_compatible(rhs, "product");
  if (lhs.cols_ != rhs.rows_) {
    throw Error(Errc::DimensionMismatch, "product of " + shape(lhs.rows_, lhs.cols_) + " and " +
                                             shape(rhs.rows_, rhs.cols_));
  }
  const std::size_t inner = lhs.cols_;
  if (auto a = std::get_if<std::vector<std::uint64_t>>(&lhs.data_)) {
    const auto& b = std::get<std::vector<std::uint64_t>>(rhs.data_);
    const std::uint64_t p = lhs.ctx_.characteristic();
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < inner; ++k) acc = (acc + (*a)[i * inner + k] * b[k * rhs.cols_ + j]) % p;
        if (acc != 0) return false;
      }
    }
    return true;
  }
  return mat_mul(lhs, rhs).is_zero();
}

std::size_t rank(const Mat& a) { return row_reduce(a).pivots.size(); }

bool is_upper_triangular(const Mat& a) {
  std::size_t n = a.n();
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!a.is_zero_at(i, j)) return false;
    }
  }
  return true;
}

Mat right_kernel_vector(const Mat& a) {
  Echelon e = row_reduce(a);
  if (e.pivots.size() == e.cols) {
    throw Error(Errc::TrivialKernel, "matrix " + a.to_string() + " has trivial right kernel");
  }
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < e.pivots.size() && e.pivots[k] == free_col; ++k) ++free_col;

  const FieldCtx& ctx = a.ctx();
  std::vector<Scalar> x(e.cols, Scalar::zero(ctx));
  x[free_col] = Scalar::one(ctx);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.at(r, free_col);

  auto lead = std::find_if(x.begin(), x.end(), [](const Scalar& s) { return !s.is_zero(); });
  Scalar scale = lead->inv();
  for (Scalar& s : x) s *= scale;
  return Mat::column(ctx, x);
}

Mat left_kernel_vector(const Mat& a) {
  try {
    return right_kernel_vector(a.transpose()).transpose();
  } catch (const Error& err) {
    if (err.code() != Errc::TrivialKernel) throw;
    throw Error(Errc::TrivialKernel, "matrix " + a.to_string() + " has trivial left kernel");
  }
}

Mat triangular_inverse(const Mat& a) {
  const std::size_t n = a.n();
  if (!is_upper_triangular(a)) throw Error(Errc::NotTriangular, a.to_string() + " is not upper triangular");
  for (std::size_t i = 0; i < n; ++i) {
    if (a.is_zero_at(i, i)) {
      throw Error(Errc::NotInvertible, "zero diagonal entry at position " + std::to_string(i + 1) + " of " +
                                           a.to_string());
    }
  }
  const FieldCtx& ctx = a.ctx();
  Mat inv(ctx, n, n);
  // Column j of the inverse solves a·x = e_j; back substitution from the bottom row.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j + 1; ii-- > 0;) {
      Scalar acc = ii == j ? Scalar::one(ctx) : Scalar::zero(ctx);
      for (std::size_t k = ii + 1; k <= j; ++k) acc -= a.at(ii, k) * inv.at(k, j);
      inv.set(ii, j, acc / a.at(ii, ii));
    }
  }
  return inv;
}

}  // namespace orthograph

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "orthograph/error.hpp"

namespace orthograph {

/// The coefficient field: a prime field GF(p) with p < 2^31, or the rationals.
class FieldCtx {
 public:
  /// Throws Errc::InvalidField unless p is a prime below 2^31.
  static FieldCtx prime(std::uint64_t p);
  static FieldCtx rationals() noexcept { return FieldCtx{}; }

  bool is_finite() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }
  /// p for GF(p), 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  /// "GF(p)" or "Q".
  std::string name() const;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  FieldCtx() = default;
  explicit FieldCtx(std::uint64_t p) : p_(p) {}

  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t p) noexcept;

/// Exact field element. Residues are kept in [0, p); rationals in lowest
/// terms with positive denominator.
class Scalar {
 public:
  Scalar(const FieldCtx& ctx, long value);
  /// Embeds num/den; in GF(p) this is num * den^{-1}. Throws ZeroInverse on a zero denominator.
  Scalar(const FieldCtx& ctx, const mpq_class& value);

  static Scalar zero(const FieldCtx& ctx) { return Scalar(ctx, 0L); }
  static Scalar one(const FieldCtx& ctx) { return Scalar(ctx, 1L); }
  static Scalar from_residue(const FieldCtx& ctx, std::uint64_t residue);
  /// Parses the entry syntax "[+-]digits" or "[+-]digits/digits".
  static Scalar parse(const FieldCtx& ctx, std::string_view text);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residue in [0, p). Prime fields only.
  std::uint64_t residue() const;
  /// Prime-field residues are lifted to integers.
  mpq_class rational() const;

  Scalar inv() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  /// Total order: residues by value, rationals numerically.
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  /// Matrix text format entry syntax.
  std::string to_string() const;

 private:
  Scalar(const FieldCtx& ctx, std::uint64_t residue, std::in_place_t);
  void require_same_field(const Scalar& other) const;

  FieldCtx ctx_;
  std::variant<std::uint64_t, mpq_class> value_;
};

/// Multiplicative inverse; throws Errc::ZeroInverse for zero.
Scalar scalar_inv(const Scalar& x);

/// Inverse of a nonzero residue modulo prime p.
std::uint64_t inverse_mod(std::uint64_t residue, std::uint64_t p);

}  // namespace orthograph

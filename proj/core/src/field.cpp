#include "orthograph/field.hpp"

#include <cctype>
#include <string>

namespace orthograph {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

bool valid_integer(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldCtx FieldCtx::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw Error(Errc::InvalidField, "field characteristic " + std::to_string(p) +
                                        " is not a prime below 2^31");
  }
  return FieldCtx(p);
}

std::string FieldCtx::name() const {
  return is_finite() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

std::uint64_t inverse_mod(std::uint64_t residue, std::uint64_t p) {
  if (residue % p == 0) throw Error(Errc::ZeroInverse, "inverse of zero in GF(" + std::to_string(p) + ")");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(residue % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar::Scalar(const FieldCtx& ctx, std::uint64_t residue, std::in_place_t)
    : ctx_(ctx), value_(residue) {}

Scalar::Scalar(const FieldCtx& ctx, long value) : ctx_(ctx) {
  if (ctx.is_finite()) {
    value_ = reduce(mpz_class(value), ctx.characteristic());
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(const FieldCtx& ctx, const mpq_class& value) : ctx_(ctx) {
  if (ctx.is_finite()) {
    std::uint64_t p = ctx.characteristic();
    std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0) throw Error(Errc::ZeroInverse, "denominator vanishes in " + ctx.name());
    std::uint64_t num = reduce(value.get_num(), p);
    value_ = num * inverse_mod(den, p) % p;
  } else {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
  }
}

Scalar Scalar::from_residue(const FieldCtx& ctx, std::uint64_t residue) {
  if (!ctx.is_finite()) return Scalar(ctx, mpq_class(mpz_class(std::to_string(residue))));
  return Scalar(ctx, residue % ctx.characteristic(), std::in_place);
}

Scalar Scalar::parse(const FieldCtx& ctx, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!valid_integer(num_text) || !valid_integer(den_text)) {
    throw Error(Errc::ParseError, "invalid matrix entry '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw Error(Errc::ParseError, "zero denominator in entry '" + std::string(text) + "'");
  if (negative) num = -num;
  try {
    return Scalar(ctx, mpq_class(num, den));
  } catch (const Error&) {
    throw Error(Errc::ParseError,
                "denominator of '" + std::string(text) + "' vanishes in " + ctx.name());
  }
}

bool Scalar::is_zero() const noexcept {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
  throw Error(Errc::FieldMismatch, "residue requested for a rational scalar");
}

mpq_class Scalar::rational() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return mpq_class(mpz_class(std::to_string(*r)));
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(ctx_ == other.ctx_)) {
    throw Error(Errc::FieldMismatch, "scalars from " + ctx_.name() + " and " + other.ctx_.name());
  }
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::ZeroInverse, "inverse of zero in " + ctx_.name());
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(ctx_, inverse_mod(*r, ctx_.characteristic()), std::in_place);
  }
  Scalar out = *this;
  mpq_class& q = std::get<mpq_class>(out.value_);
  q = 1 / q;
  return out;
}

Scalar Scalar::operator-() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    return Scalar(ctx_, *r == 0 ? 0 : ctx_.characteristic() - *r, std::in_place);
  }
  Scalar out = *this;
  mpq_class& q = std::get<mpq_class>(out.value_);
  q = -q;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    *r = (*r + std::get<std::uint64_t>(rhs.value_)) % ctx_.characteristic();
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    std::uint64_t p = ctx_.characteristic();
    *r = (*r + p - std::get<std::uint64_t>(rhs.value_)) % p;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto r = std::get_if<std::uint64_t>(&value_)) {
    *r = *r * std::get<std::uint64_t>(rhs.value_) % ctx_.characteristic();
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inv();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  lhs.require_same_field(rhs);
  if (auto r = std::get_if<std::uint64_t>(&lhs.value_)) {
    return *r <=> std::get<std::uint64_t>(rhs.value_);
  }
  int c = cmp(std::get<mpq_class>(lhs.value_), std::get<mpq_class>(rhs.value_));
  return c <=> 0;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

Scalar scalar_inv(const Scalar& x) { return x.inv(); }

}  // namespace orthograph

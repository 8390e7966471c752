#include "orthograph/classify.hpp"

namespace orthograph {

namespace {

void require_dim(const Mat& a, std::size_t n, const char* what) {
  if (a.n() != n) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " expects a " + std::to_string(n) + "x" +
                                             std::to_string(n) + " matrix");
  }
}

}  // namespace

bool is_vertex(const Mat& a, Algebra algebra) {
  const std::size_t n = a.n();
  if (algebra == Algebra::Tn) {
    if (!is_upper_triangular(a)) throw Error(Errc::NotTriangular, a.to_string() + " is not upper triangular");
    if (a.is_zero()) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (a.is_zero_at(i, i)) return true;
    }
    return false;
  }
  return !a.is_zero() && rank(a) < n;
}

std::string_view tag_name(VertexTag tag) {
  switch (tag) {
    case VertexTag::NotVertex: return "not-vertex";
    case VertexTag::Bad1: return "bad1";
    case VertexTag::Bad2: return "bad2";
    case VertexTag::SGood: return "s-good";
    case VertexTag::NsGood: return "ns-good";
  }
  return "unknown";
}

VertexClass classify_tn(const Mat& a) {
  const std::size_t n = a.n();
  if (n < 3) {
    throw Error(Errc::DimensionTooSmall, "bad/good taxonomy needs n >= 3, got n = " + std::to_string(n));
  }
  VertexClass out{VertexTag::NotVertex, {}};
  if (!is_vertex(a, Algebra::Tn)) return out;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.is_zero_at(i, i)) out.zero_diag.push_back(i);
  }
  const auto& z = out.zero_diag;
  if (z.size() == 1 && z.front() == 0) {
    out.tag = VertexTag::Bad1;
  } else if (z.size() == 1 && z.front() == n - 1) {
    out.tag = VertexTag::Bad2;
  } else if (z.front() == 0 && z.back() == n - 1) {
    out.tag = VertexTag::SGood;
  } else {
    out.tag = VertexTag::NsGood;
  }
  return out;
}

std::optional<std::size_t> first_middle_zero(const Mat& a) {
  const std::size_t n = a.n();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (a.is_zero_at(i, i)) return i;
  }
  return std::nullopt;
}

Bad1Blocks bad1_blocks(const Mat& a) {
  const std::size_t n = a.n();
  if (classify_tn(a).tag != VertexTag::Bad1) throw Error(Errc::WrongClass, a.to_string() + " is not bad-1");
  return {a.block(0, 1, 1, n - 1), a.block(1, 1, n - 1, n - 1)};
}

Bad2Blocks bad2_blocks(const Mat& b) {
  const std::size_t n = b.n();
  if (classify_tn(b).tag != VertexTag::Bad2) throw Error(Errc::WrongClass, b.to_string() + " is not bad-2");
  return {b.block(0, 0, n - 1, n - 1), b.block(0, n - 1, n - 1, 1)};
}

std::string_view family_name(ComponentFamily family) {
  switch (family) {
    case ComponentFamily::V1: return "V1";
    case ComponentFamily::V2: return "V2";
    case ComponentFamily::V3: return "V3";
    case ComponentFamily::V4: return "V4";
    case ComponentFamily::V5: return "V5";
    case ComponentFamily::V6: return "V6";
  }
  return "V?";
}

ComponentLabel::ComponentLabel(ComponentFamily family, std::optional<Scalar> alpha, std::optional<Scalar> beta)
    : family_(family), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  const bool wants_alpha = family == ComponentFamily::V4 || family == ComponentFamily::V5 ||
                           family == ComponentFamily::V6;
  const bool wants_beta = family == ComponentFamily::V6;
  if (wants_alpha != alpha_.has_value() || wants_beta != beta_.has_value()) {
    throw Error(Errc::Unclassifiable, "parameters do not match component family " +
                                          std::string(family_name(family)));
  }
  if ((alpha_ && alpha_->is_zero()) || (beta_ && beta_->is_zero())) {
    throw Error(Errc::Unclassifiable, "component parameters must be nonzero");
  }
}

ComponentLabel ComponentLabel::plain(ComponentFamily family) { return {family, std::nullopt, std::nullopt}; }

ComponentLabel ComponentLabel::with_alpha(ComponentFamily family, const Scalar& alpha) {
  return {family, alpha, std::nullopt};
}

ComponentLabel ComponentLabel::v6(const Scalar& alpha, const Scalar& beta) {
  if (beta < alpha) return {ComponentFamily::V6, beta, alpha};
  return {ComponentFamily::V6, alpha, beta};
}

std::string ComponentLabel::to_string() const {
  std::string out(family_name(family_));
  if (alpha_) {
    out += "(" + alpha_->to_string();
    if (beta_) out += "," + beta_->to_string();
    out += ")";
  }
  return out;
}

std::strong_ordering operator<=>(const ComponentLabel& lhs, const ComponentLabel& rhs) {
  if (auto c = lhs.family_ <=> rhs.family_; c != 0) return c;
  if (auto c = lhs.alpha_ <=> rhs.alpha_; c != 0) return c;
  return lhs.beta_ <=> rhs.beta_;
}

ComponentLabel classify_component_m2(const Mat& m) {
  require_dim(m, 2, "classify_component_m2");
  if (!is_vertex(m, Algebra::Mn)) throw Error(Errc::NotAVertex, m.to_string() + " is not a vertex of O(M_2)");
  const Scalar a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
  const unsigned pattern = (a.is_zero() ? 0u : 8u) | (b.is_zero() ? 0u : 4u) | (c.is_zero() ? 0u : 2u) |
                           (d.is_zero() ? 0u : 1u);
  switch (pattern) {
    case 0b1000:
    case 0b0001: return ComponentLabel::plain(ComponentFamily::V1);
    case 0b0010: return ComponentLabel::plain(ComponentFamily::V2);
    case 0b0100: return ComponentLabel::plain(ComponentFamily::V3);
    case 0b1100: return ComponentLabel::with_alpha(ComponentFamily::V4, b / a);    // (c, c·α; 0, 0)
    case 0b0101: return ComponentLabel::with_alpha(ComponentFamily::V4, -b / d);   // (0, d; 0, -d/α)
    case 0b0011: return ComponentLabel::with_alpha(ComponentFamily::V5, d / c);    // (0, 0; c, c·α)
    case 0b1010: return ComponentLabel::with_alpha(ComponentFamily::V5, -a / c);   // (d, 0; -d/α, 0)
    case 0b1111: return ComponentLabel::v6(-a / b, d / b);                         // (-αa, a; -αβa, βa)
    default: break;
  }
  throw Error(Errc::Unclassifiable, m.to_string() + " matches no component of O(M_2)");
}

ComponentLabel classify_component_t2(const Mat& m) {
  require_dim(m, 2, "classify_component_t2");
  if (!is_vertex(m, Algebra::Tn)) throw Error(Errc::NotAVertex, m.to_string() + " is not a vertex of O(T_2)");
  ComponentLabel label = classify_component_m2(m);
  switch (label.family()) {
    case ComponentFamily::V1:
    case ComponentFamily::V3:
    case ComponentFamily::V4: return label;
    default: break;
  }
  throw Error(Errc::Unclassifiable, m.to_string() + " matches no component of O(T_2)");
}

}  // namespace orthograph

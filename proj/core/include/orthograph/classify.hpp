#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthograph/algebra.hpp"
#include "orthograph/matrix.hpp"

namespace orthograph {

/// True iff a is a nonzero two-sided zero divisor of the algebra, i.e. a
/// nonzero singular matrix. Throws NotTriangular for a non-triangular
/// matrix in T_n.
bool is_vertex(const Mat& a, Algebra algebra);

enum class VertexTag { NotVertex, Bad1, Bad2, SGood, NsGood };

/// "not-vertex", "bad1", "bad2", "s-good", "ns-good".
std::string_view tag_name(VertexTag tag);

/// Taxonomy of a matrix in T_n, n >= 3.
///
/// Bad1: the only zero diagonal entry is the first one; Bad2: the only zero
/// is the last one. Good vertices are SGood when both the first and the last
/// diagonal entries vanish and NsGood otherwise; an NsGood vertex always has
/// a zero strictly inside the diagonal.
struct VertexClass {
  VertexTag tag;
  /// 0-based diagonal positions holding zero, ascending.
  std::vector<std::size_t> zero_diag;
};

/// Throws DimensionTooSmall for n < 3 and NotTriangular for non-triangular input.
VertexClass classify_tn(const Mat& a);

/// Smallest index i with 0 < i < n-1 and a zero (i,i) entry.
std::optional<std::size_t> first_middle_zero(const Mat& a);

/// Block views of a bad-1 matrix (0, a_bar; 0, a1).
struct Bad1Blocks {
  Mat a_bar;  ///< 1 x (n-1)
  Mat a1;     ///< (n-1) x (n-1), invertible upper triangular
};
/// Block views of a bad-2 matrix (b1, b_bar; 0, 0).
struct Bad2Blocks {
  Mat b1;     ///< (n-1) x (n-1), invertible upper triangular
  Mat b_bar;  ///< (n-1) x 1
};
Bad1Blocks bad1_blocks(const Mat& a);
Bad2Blocks bad2_blocks(const Mat& b);

enum class ComponentFamily { V1, V2, V3, V4, V5, V6 };
std::string_view family_name(ComponentFamily family);

/// Connected-component identifier for O(M_2) and O(T_2). V4 and V5 carry
/// alpha; V6 carries (alpha, beta) stored with alpha <= beta.
class ComponentLabel {
 public:
  static ComponentLabel plain(ComponentFamily family);
  static ComponentLabel with_alpha(ComponentFamily family, const Scalar& alpha);
  static ComponentLabel v6(const Scalar& alpha, const Scalar& beta);

  ComponentFamily family() const noexcept { return family_; }
  const std::optional<Scalar>& alpha() const noexcept { return alpha_; }
  const std::optional<Scalar>& beta() const noexcept { return beta_; }

  /// "V1", "V4(2)", "V6(1,2)".
  std::string to_string() const;

  friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
  friend std::strong_ordering operator<=>(const ComponentLabel& lhs, const ComponentLabel& rhs);

 private:
  ComponentLabel(ComponentFamily family, std::optional<Scalar> alpha, std::optional<Scalar> beta);

  ComponentFamily family_;
  std::optional<Scalar> alpha_;
  std::optional<Scalar> beta_;
};

/// Component of a vertex of O(M_2). Throws NotAVertex for non-vertices.
ComponentLabel classify_component_m2(const Mat& a);
/// Component of a vertex of O(T_2); one of V1, V3, V4(alpha).
ComponentLabel classify_component_t2(const Mat& a);

}  // namespace orthograph

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "orthograph/algebra.hpp"
#include "orthograph/matrix.hpp"

namespace orthograph {

/// a·b = b·a = 0. Throws DimensionMismatch / FieldMismatch.
bool are_orthogonal(const Mat& a, const Mat& b);

/// Every nonzero C of the algebra orthogonal to a, in lexicographic order
/// of row-major residues. Finite fields only; the result does not depend on `jobs`.
std::vector<Mat> complement_bruteforce(const Mat& a, Algebra algebra,
                                       std::uint64_t max_size = kDefaultMaxEnumeration, unsigned jobs = 1);

enum class ComplementForm { Bad1Form, Bad2Form };
/// "bad1" / "bad2".
std::string_view form_name(ComplementForm form);

/// The orthogonal complement of a bad matrix in T_n is the line
/// {c0 · generator}; the generator has c0 = 1.
struct ComplementRay {
  Mat generator;
  ComplementForm form;

  /// True iff m = c0 · generator for some nonzero c0.
  bool contains(const Mat& m) const;
  /// All nonzero multiples of the generator, sorted. Finite fields only.
  std::vector<Mat> members() const;
};

/// For bad-1 A = (0, a_bar; 0, A1): generator (1, -a_bar·A1^{-1}; 0, 0).
/// Throws WrongClass otherwise.
ComplementRay complement_bad1(const Mat& a);
/// For bad-2 B = (B1, b_bar; 0, 0): generator (0, -B1^{-1}·b_bar; 0, 1).
/// Throws WrongClass otherwise.
ComplementRay complement_bad2(const Mat& b);

/// Rank-one upper triangular R = x·f^t orthogonal to a, attached to the
/// zero diagonal entry at 0-based position i. x = x_hat ⊕ 0 with x_hat a
/// kernel vector of the leading (i+1)×(i+1) block, f = 0 ⊕ f_hat with f_hat
/// a left kernel vector of the trailing block starting at (i, i). Both use
/// the deterministic kernel rule. The first column of R vanishes for i > 0,
/// the last row for i < n-1.
///
/// Throws BadIndex if i is out of range or the (i,i) entry is nonzero.
Mat annihilator_rank1(const Mat& a, std::size_t i);

}  // namespace orthograph

#include "orthograph/ortho.hpp"

#include <algorithm>

#include "orthograph/classify.hpp"

namespace orthograph {

bool are_orthogonal(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "orthogonality needs square matrices of equal size");
  }
  return product_is_zero(a, b) && product_is_zero(b, a);
}

std::vector<Mat> complement_bruteforce(const Mat& a, Algebra algebra, std::uint64_t max_size, unsigned jobs) {
  const std::size_t n = a.n();
  if (algebra == Algebra::Tn && !is_upper_triangular(a)) {
    throw Error(Errc::NotTriangular, a.to_string() + " is not upper triangular");
  }
  const FieldCtx& ctx = a.ctx();
  require_enumerable(algebra, n, ctx, max_size);
  const std::uint64_t size = enumeration_size(algebra, n, ctx);

  const unsigned workers = std::max(1u, jobs);
  std::vector<std::vector<Mat>> found(workers);
  const std::uint64_t chunk = (size + workers - 1) / workers;
  parallel_chunks(workers, workers, [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t w = first; w < last; ++w) {
      const std::uint64_t end = std::min(size, (w + 1) * chunk);
      // Index 0 is the zero matrix.
      for (std::uint64_t index = std::max<std::uint64_t>(1, w * chunk); index < end; ++index) {
        Mat c = matrix_at(algebra, n, ctx, index);
        if (are_orthogonal(a, c)) found[w].push_back(std::move(c));
      }
    }
  });
  std::vector<Mat> out;
  for (auto& part : found) {
    for (auto& m : part) out.push_back(std::move(m));
  }
  return out;
}

std::string_view form_name(ComplementForm form) { return form == ComplementForm::Bad1Form ? "bad1" : "bad2"; }

bool ComplementRay::contains(const Mat& m) const {
  if (m.rows() != generator.rows() || m.is_zero()) return false;
  // The generator has a 1 in its (1,1) or (n,n) position; that entry of m is c0.
  const std::size_t k = form == ComplementForm::Bad1Form ? 0 : generator.rows() - 1;
  return generator.scaled(m.at(k, k)) == m;
}

std::vector<Mat> ComplementRay::members() const {
  const FieldCtx& ctx = generator.ctx();
  if (!ctx.is_finite()) throw Error(Errc::InfiniteField, "a ray over " + ctx.name() + " is infinite");
  std::vector<Mat> out;
  for (std::uint64_t c0 = 1; c0 < ctx.characteristic(); ++c0) {
    out.push_back(generator.scaled(Scalar::from_residue(ctx, c0)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ComplementRay complement_bad1(const Mat& a) {
  const std::size_t n = a.n();
  if (n < 3 || classify_tn(a).tag != VertexTag::Bad1) {
    throw Error(Errc::WrongClass, a.to_string() + " is not a bad-1 matrix");
  }
  const Bad1Blocks blocks = bad1_blocks(a);
  const Mat tail = mat_mul(blocks.a_bar, triangular_inverse(blocks.a1)).scaled(-Scalar::one(a.ctx()));
  Mat gen = Mat::zero(a.ctx(), n);
  gen.set(0, 0, Scalar::one(a.ctx()));
  gen.paste(0, 1, tail);
  return {std::move(gen), ComplementForm::Bad1Form};
}

ComplementRay complement_bad2(const Mat& b) {
  const std::size_t n = b.n();
  if (n < 3 || classify_tn(b).tag != VertexTag::Bad2) {
    throw Error(Errc::WrongClass, b.to_string() + " is not a bad-2 matrix");
  }
  const Bad2Blocks blocks = bad2_blocks(b);
  const Mat head = mat_mul(triangular_inverse(blocks.b1), blocks.b_bar).scaled(-Scalar::one(b.ctx()));
  Mat gen = Mat::zero(b.ctx(), n);
  gen.set(n - 1, n - 1, Scalar::one(b.ctx()));
  gen.paste(0, n - 1, head);
  return {std::move(gen), ComplementForm::Bad2Form};
}

Mat annihilator_rank1(const Mat& a, std::size_t i) {
  const std::size_t n = a.n();
  if (!is_upper_triangular(a)) throw Error(Errc::NotTriangular, a.to_string() + " is not upper triangular");
  if (i >= n || !a.is_zero_at(i, i)) {
    throw Error(Errc::BadIndex, "diagonal entry " + std::to_string(i + 1) + " of " + a.to_string() +
                                    " is not a zero");
  }
  const FieldCtx& ctx = a.ctx();
  Mat x = Mat(ctx, n, 1);
  x.paste(0, 0, right_kernel_vector(a.block(0, 0, i + 1, i + 1)));
  Mat f = Mat(ctx, 1, n);
  f.paste(0, i, left_kernel_vector(a.block(i, i, n - i, n - i)));
  return mat_mul(x, f);
}

}  // namespace orthograph

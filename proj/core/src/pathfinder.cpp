#include "orthograph/pathfinder.hpp"

#include <algorithm>
#include <utility>

#include "orthograph/classify.hpp"
#include "orthograph/ortho.hpp"

namespace orthograph {

namespace {

[[noreturn]] void construction_failed(const std::string& tag, const std::string& step) {
  throw Error(Errc::ConstructionFailed, "case " + tag + ", " + step);
}

bool is_good(VertexTag t) { return t == VertexTag::SGood || t == VertexTag::NsGood; }

// The constructions are written for: good before bad, s-good before
// ns-good, bad-1 before bad-2. Other orders are handled by swapping.
bool is_canonical_order(VertexTag a, VertexTag b) {
  if (is_good(a) != is_good(b)) return is_good(a);
  if (is_good(a)) return !(a == VertexTag::NsGood && b == VertexTag::SGood);
  return !(a == VertexTag::Bad2 && b == VertexTag::Bad1);
}

class Construction {
 public:
  Construction(const Mat& a, const Mat& b) : ctx_(a.ctx()), n_(a.n()), a_(a), b_(b) {}

  OrthoPath run(VertexTag ta, VertexTag tb) {
    using T = VertexTag;
    if (ta == T::SGood && tb == T::SGood) return finish("1.1", {a_, e1n(), b_});
    if (ta == T::NsGood && tb == T::NsGood) return finish("1.2", {a_, middle_annihilator(a_, "1.2"), e1n(),
                                                                  middle_annihilator(b_, "1.2"), b_});
    if (ta == T::SGood && tb == T::NsGood) return finish("1.3", {a_, e1n(), middle_annihilator(b_, "1.3"), b_});
    if (ta == T::Bad1 && tb == T::Bad1) return both_bad1();
    if (ta == T::Bad2 && tb == T::Bad2) return both_bad2();
    if (ta == T::Bad1 && tb == T::Bad2) return bad1_bad2();
    const bool s_good = ta == T::SGood;
    if (tb == T::Bad1) {
      const char* tag = s_good ? "3.2" : "3.1";
      const Mat g = s_good ? e1n() : middle_annihilator(a_, tag);
      const Mat b1 = complement_bad1(b_).generator;
      return finish(tag, {a_, g, column_bridge(g, b1, tag), b1, b_});
    }
    const char* tag = s_good ? "3.4" : "3.3";
    const Mat g = s_good ? e1n() : middle_annihilator(a_, tag);
    const Mat b2 = complement_bad2(b_).generator;
    return finish(tag, {a_, g, row_bridge(g, b2, tag), b2, b_});
  }

 private:
  Mat e1n() const { return Mat::unit(ctx_, n_, 0, n_ - 1); }

  Mat middle_annihilator(const Mat& m, const std::string& tag) const {
    auto i = first_middle_zero(m);
    if (!i) construction_failed(tag, "ns-good matrix " + m.to_string() + " has no middle zero");
    return annihilator_rank1(m, *i);
  }

  // Both bad-1: a vector d with A1·d = B1·d = 0 placed as the last column.
  OrthoPath both_bad1() {
    const Mat a1 = complement_bad1(a_).generator;
    const Mat b1 = complement_bad1(b_).generator;
    Mat stacked(ctx_, 2, n_);
    stacked.paste(0, 0, a1.block(0, 0, 1, n_));
    stacked.paste(1, 0, b1.block(0, 0, 1, n_));
    Mat d = Mat::zero(ctx_, n_);
    d.paste(0, n_ - 1, kernel(stacked, "2.1"));
    return finish("2.1", {a_, a1, d, b1, b_});
  }

  // Both bad-2: a row d' with d'·A2 = d'·B2 = 0 placed as the first row.
  OrthoPath both_bad2() {
    const Mat a2 = complement_bad2(a_).generator;
    const Mat b2 = complement_bad2(b_).generator;
    Mat stacked(ctx_, n_, 2);
    stacked.paste(0, 0, a2.block(0, n_ - 1, n_, 1));
    stacked.paste(0, 1, b2.block(0, n_ - 1, n_, 1));
    Mat d = Mat::zero(ctx_, n_);
    d.paste(0, 0, left_kernel(stacked, "2.2"));
    return finish("2.2", {a_, a2, d, b2, b_});
  }

  // Bad-1 then bad-2: a rank-one 2×2 block L' in the top-right corner with
  // (a1_0, a1_1)·L' = 0 and L'·(B2[n-2][n-1], B2[n-1][n-1])^t = 0. Those are
  // the rows of B2 that meet the corner's columns.
  OrthoPath bad1_bad2() {
    const Mat a1 = complement_bad1(a_).generator;
    const Mat b2 = complement_bad2(b_).generator;
    const Mat u = kernel(a1.block(0, 0, 1, 2), "2.3");
    const Mat w = left_kernel(b2.block(n_ - 2, n_ - 1, 2, 1), "2.3");
    Mat l = Mat::zero(ctx_, n_);
    l.paste(0, n_ - 2, mat_mul(u, w));
    return finish("2.3", {a_, a1, l, b2, b_});
  }

  // g has zero first column and zero last row; its top-right block g' is
  // singular. With g'·c = 0 the matrix whose last column is (c0; c),
  // c0 = -(b1_bar·c)/b1_0, is orthogonal to g and to B1.
  Mat column_bridge(const Mat& g, const Mat& b1, const std::string& tag) const {
    const Mat c = kernel(g.block(0, 1, n_ - 1, n_ - 1), tag);
    const Scalar lead = b1.at(0, 0);
    if (lead.is_zero()) construction_failed(tag, "b1_0 vanishes");
    const Scalar c0 = -mat_mul(b1.block(0, 1, 1, n_ - 1), c).at(0, 0) / lead;
    Mat out = Mat::zero(ctx_, n_);
    out.set(0, n_ - 1, c0);
    out.paste(1, n_ - 1, c);
    return out;
  }

  // Mirror of column_bridge: c1·g' = 0 and the first row is (c1, c1_0),
  // c1_0 = -(c1·b2_bar)/b2_0.
  Mat row_bridge(const Mat& g, const Mat& b2, const std::string& tag) const {
    const Mat c1 = left_kernel(g.block(0, 1, n_ - 1, n_ - 1), tag);
    const Scalar lead = b2.at(n_ - 1, n_ - 1);
    if (lead.is_zero()) construction_failed(tag, "b2_0 vanishes");
    const Scalar c10 = -mat_mul(c1, b2.block(0, n_ - 1, n_ - 1, 1)).at(0, 0) / lead;
    Mat out = Mat::zero(ctx_, n_);
    out.paste(0, 0, c1);
    out.set(0, n_ - 1, c10);
    return out;
  }

  static Mat kernel(const Mat& m, const std::string& tag) {
    try {
      return right_kernel_vector(m);
    } catch (const Error& e) {
      construction_failed(tag, e.what());
    }
  }

  static Mat left_kernel(const Mat& m, const std::string& tag) {
    try {
      return left_kernel_vector(m);
    } catch (const Error& e) {
      construction_failed(tag, e.what());
    }
  }

  OrthoPath finish(const std::string& tag, std::vector<Mat> walk) const {
    OrthoPath path{{}, tag};
    for (auto& m : walk) {
      if (path.vertices.empty() || !(path.vertices.back() == m)) path.vertices.push_back(std::move(m));
    }
    for (std::size_t k = 0; k < path.vertices.size(); ++k) {
      if (!is_vertex(path.vertices[k], Algebra::Tn)) {
        construction_failed(tag, "step " + std::to_string(k) + " " + path.vertices[k].to_string() +
                                     " is not a vertex");
      }
      if (k > 0 && !are_orthogonal(path.vertices[k - 1], path.vertices[k])) {
        construction_failed(tag, "steps " + std::to_string(k - 1) + " and " + std::to_string(k) +
                                     " are not orthogonal");
      }
    }
    if (path.length() > 4) construction_failed(tag, "walk longer than 4");
    return path;
  }

  FieldCtx ctx_;
  std::size_t n_;
  const Mat& a_;
  const Mat& b_;
};

void require_pair(const Mat& a, const Mat& b) {
  if (!(a.ctx() == b.ctx())) {
    throw Error(Errc::FieldMismatch, "endpoints over " + a.ctx().name() + " and " + b.ctx().name());
  }
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "endpoints must be square matrices of one size");
  }
}

void require_vertex(const Mat& m) {
  if (!is_upper_triangular(m) || !is_vertex(m, Algebra::Tn)) {
    throw Error(Errc::NotAVertex, m.to_string() + " is not a vertex of O(T_" + std::to_string(m.n()) + ")");
  }
}

}  // namespace

OrthoPath find_path(const Mat& a, const Mat& b) {
  require_pair(a, b);
  const std::size_t n = a.n();
  if (n < 3) {
    throw Error(Errc::DimensionTooSmall, n == 2 ? "O(T_2) is disconnected; use find_path_t2"
                                                : "O(T_1) has no vertices");
  }
  require_vertex(a);
  require_vertex(b);
  if (a == b) return {{a}, "trivial"};
  if (are_orthogonal(a, b)) return {{a, b}, "direct"};

  const VertexTag ta = classify_tn(a).tag;
  const VertexTag tb = classify_tn(b).tag;
  if (is_canonical_order(ta, tb)) return Construction(a, b).run(ta, tb);
  OrthoPath path = Construction(b, a).run(tb, ta);
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

OrthoPath find_path_t2(const Mat& a, const Mat& b) {
  require_pair(a, b);
  if (a.n() != 2) throw Error(Errc::DimensionMismatch, "find_path_t2 expects 2x2 matrices");
  require_vertex(a);
  require_vertex(b);
  const ComponentLabel la = classify_component_t2(a);
  const ComponentLabel lb = classify_component_t2(b);
  if (!(la == lb)) {
    throw Error(Errc::Disconnected, a.to_string() + " lies in " + la.to_string() + ", " + b.to_string() +
                                        " in " + lb.to_string());
  }
  if (a == b) return {{a}, "trivial"};
  if (are_orthogonal(a, b)) return {{a, b}, "direct"};

  const FieldCtx& ctx = a.ctx();
  const std::string tag(family_name(la.family()));
  Mat mid = Mat::zero(ctx, 2);
  switch (la.family()) {
    case ComponentFamily::V1:
      // a·E11 and b·E22 are the two halves; cross halves are adjacent.
      mid = a.is_zero_at(0, 0) ? Mat::unit(ctx, 2, 0, 0) : Mat::unit(ctx, 2, 1, 1);
      break;
    case ComponentFamily::V4: {
      const Scalar& alpha = *la.alpha();
      if (a.is_zero_at(0, 0)) {
        mid.set(0, 0, Scalar::one(ctx));
        mid.set(0, 1, alpha);
      } else {
        mid.set(0, 1, Scalar::one(ctx));
        mid.set(1, 1, -alpha.inv());
      }
      break;
    }
    default:
      construction_failed(tag, "distinct non-orthogonal vertices in " + la.to_string());
  }
  OrthoPath path{{a, mid, b}, tag};
  if (!verify_path(path)) construction_failed(tag, "route through " + mid.to_string() + " failed");
  return path;
}

PathReport verify_path(const OrthoPath& path) {
  PathReport report;
  auto fail = [&](std::string problem) {
    report.ok = false;
    report.problems.push_back(std::move(problem));
  };
  const auto& v = path.vertices;
  if (v.empty()) {
    fail("empty path");
    return report;
  }
  const Mat& first = v.front();
  if (!first.is_square()) {
    fail("vertex 0 is not square");
    return report;
  }
  const std::size_t n = first.rows();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!(v[k].ctx() == first.ctx()) || v[k].rows() != n || v[k].cols() != n) {
      fail("vertex " + std::to_string(k) + " has a different shape or field");
      return report;
    }
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!is_upper_triangular(v[k])) {
      fail("vertex " + std::to_string(k) + " is not upper triangular");
    } else if (!is_vertex(v[k], Algebra::Tn)) {
      fail("vertex " + std::to_string(k) + " is not a nonzero zero divisor");
    }
    if (k == 0) continue;
    if (v[k - 1] == v[k]) {
      fail("vertices " + std::to_string(k - 1) + " and " + std::to_string(k) + " coincide");
    } else if (!are_orthogonal(v[k - 1], v[k])) {
      fail("vertices " + std::to_string(k - 1) + " and " + std::to_string(k) + " are not orthogonal");
    }
  }
  const std::size_t bound = n >= 3 ? 4 : 2;
  if (path.length() > bound) fail("length " + std::to_string(path.length()) + " exceeds " + std::to_string(bound));
  return report;
}

}  // namespace orthograph

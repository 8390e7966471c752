#include <map>
#include <set>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "orthograph/classify.hpp"
#include "orthograph/graph.hpp"
#include "orthograph/serialize.hpp"

using namespace orthograph;

namespace {

const FieldCtx kQ = FieldCtx::rationals();

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::Unclassifiable;
}

}  // namespace

TEST(IsVertex, Examples) {
  const auto gf2 = FieldCtx::prime(2);
  EXPECT_TRUE(is_vertex(Mat::jordan(kQ, 3), Algebra::Tn));
  EXPECT_FALSE(is_vertex(Mat::identity(kQ, 3), Algebra::Tn));
  EXPECT_FALSE(is_vertex(Mat::zero(kQ, 3), Algebra::Tn));
  EXPECT_TRUE(is_vertex(Mat::parse(gf2, "1,1;1,1"), Algebra::Mn));
  EXPECT_FALSE(is_vertex(Mat::parse(gf2, "0,1;1,0"), Algebra::Mn));
  EXPECT_EQ(code_of([&] { is_vertex(Mat::parse(gf2, "0,0;1,0"), Algebra::Tn); }), Errc::NotTriangular);
}

TEST(IsVertex, MatchesTwoSidedZeroDivisorsByBruteForce) {
  struct Case { std::size_t n; std::uint64_t p; bool tri; };
  for (const Case c : {Case{2, 2, true}, Case{2, 3, true}, Case{3, 2, true}, Case{2, 2, false}, Case{2, 3, false}}) {
    const auto ctx = FieldCtx::prime(c.p);
    std::set<oracle::Entries> expected;
    for (auto& v : oracle::vertices(c.n, c.p, c.tri)) expected.insert(v);
    const Algebra alg = c.tri ? Algebra::Tn : Algebra::Mn;
    std::set<oracle::Entries> got;
    for_each_matrix(alg, c.n, ctx, kDefaultMaxEnumeration, [&](const Mat& m) {
      if (is_vertex(m, alg)) got.insert(m.residues());
    });
    EXPECT_EQ(got, expected) << "n=" << c.n << " p=" << c.p;
  }
}

TEST(ClassifyTn, Examples) {
  EXPECT_EQ(classify_tn(Mat::parse(kQ, "0,1,0;0,1,0;0,0,1")).tag, VertexTag::Bad1);
  EXPECT_EQ(classify_tn(Mat::parse(kQ, "1,0,0;0,1,0;0,0,0")).tag, VertexTag::Bad2);
  EXPECT_EQ(classify_tn(Mat::jordan(kQ, 3)).tag, VertexTag::SGood);
  EXPECT_EQ(classify_tn(Mat::unit(kQ, 3, 1, 1)).tag, VertexTag::SGood);
  EXPECT_EQ(classify_tn(Mat::parse(kQ, "1,0,0;0,0,0;0,0,1")).tag, VertexTag::NsGood);
  const VertexClass cls = classify_tn(Mat::parse(kQ, "0,0,0;0,0,0;0,0,1"));
  EXPECT_EQ(cls.tag, VertexTag::NsGood);
  EXPECT_EQ(cls.zero_diag, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(classify_tn(Mat::identity(kQ, 4)).tag, VertexTag::NotVertex);
  EXPECT_EQ(classify_tn(Mat::zero(kQ, 4)).tag, VertexTag::NotVertex);
  EXPECT_EQ(code_of([] { classify_tn(Mat::unit(kQ, 2, 0, 0)); }), Errc::DimensionTooSmall);
  EXPECT_EQ(code_of([] { classify_tn(Mat::parse(kQ, "0,0,0;1,0,0;0,0,0")); }), Errc::NotTriangular);
}

TEST(ClassifyTn, SignatureInvariantsExhaustive) {
  struct Case { std::size_t n; std::uint64_t p; };
  for (const Case c : {Case{3, 2}, Case{4, 2}, Case{3, 3}}) {
    const auto ctx = FieldCtx::prime(c.p);
    std::map<VertexTag, std::size_t> tally;
    for_each_matrix(Algebra::Tn, c.n, ctx, kDefaultMaxEnumeration, [&](const Mat& m) {
      const VertexClass cls = classify_tn(m);
      ASSERT_EQ(cls.tag == VertexTag::NotVertex, !is_vertex(m, Algebra::Tn));
      ++tally[cls.tag];
      if (cls.tag == VertexTag::NotVertex) return;
      const auto& z = cls.zero_diag;
      ASSERT_FALSE(z.empty());
      const bool first = z.front() == 0, last = z.back() == c.n - 1;
      switch (cls.tag) {
        case VertexTag::Bad1: EXPECT_EQ(z, std::vector<std::size_t>{0}); break;
        case VertexTag::Bad2: EXPECT_EQ(z, std::vector<std::size_t>{c.n - 1}); break;
        case VertexTag::SGood: EXPECT_TRUE(first && last); break;
        case VertexTag::NsGood:
          EXPECT_FALSE(first && last);
          EXPECT_TRUE(first_middle_zero(m).has_value());
          break;
        default: FAIL();
      }
      if (cls.tag == VertexTag::Bad1) EXPECT_NO_THROW(bad1_blocks(m));
      if (cls.tag == VertexTag::Bad2) EXPECT_NO_THROW(bad2_blocks(m));
    });
    // Bad-1 count: (q-1)^(n-1) invertible diagonal tail times q^(free off-diagonal).
    const std::uint64_t q = c.p, off = c.n * (c.n - 1) / 2;
    EXPECT_EQ(tally[VertexTag::Bad1], oracle::ipow(q - 1, c.n - 1) * oracle::ipow(q, off));
    EXPECT_EQ(tally[VertexTag::Bad2], tally[VertexTag::Bad1]);
  }
}

TEST(ClassifyTn, Blocks) {
  const Mat a = Mat::parse(kQ, "0,2,3;0,1,4;0,0,5");
  const Bad1Blocks b1 = bad1_blocks(a);
  EXPECT_EQ(b1.a_bar, Mat::parse(kQ, "2,3"));
  EXPECT_EQ(b1.a1, Mat::parse(kQ, "1,4;0,5"));
  const Bad2Blocks b2 = bad2_blocks(Mat::parse(kQ, "1,2,3;0,4,5;0,0,0"));
  EXPECT_EQ(b2.b1, Mat::parse(kQ, "1,2;0,4"));
  EXPECT_EQ(b2.b_bar, Mat::parse(kQ, "3;5"));
  EXPECT_EQ(code_of([&] { bad2_blocks(a); }), Errc::WrongClass);
  EXPECT_EQ(code_of([] { bad1_blocks(Mat::jordan(kQ, 3)); }), Errc::WrongClass);
}

TEST(ComponentLabel, CanonicalV6AndRendering) {
  const auto gf3 = FieldCtx::prime(3);
  const Scalar one = Scalar::one(gf3), two = Scalar(gf3, 2L);
  EXPECT_EQ(ComponentLabel::v6(two, one), ComponentLabel::v6(one, two));
  EXPECT_EQ(ComponentLabel::v6(two, one).to_string(), "V6(1,2)");
  EXPECT_EQ(ComponentLabel::with_alpha(ComponentFamily::V4, two).to_string(), "V4(2)");
  EXPECT_EQ(ComponentLabel::plain(ComponentFamily::V3).to_string(), "V3");
  EXPECT_EQ(code_of([&] { ComponentLabel::with_alpha(ComponentFamily::V4, Scalar::zero(gf3)); }),
            Errc::Unclassifiable);
  EXPECT_EQ(code_of([&] { ComponentLabel::with_alpha(ComponentFamily::V1, one); }), Errc::Unclassifiable);
  EXPECT_EQ(to_json(ComponentLabel::with_alpha(ComponentFamily::V4, two)).dump(),
            R"({"component":"V4","alpha":"2"})");
  EXPECT_EQ(to_json(classify_tn(Mat::parse(kQ, "0,1,0;0,1,0;0,0,1"))).dump(),
            R"({"class":"bad1","zero_diag":[1]})");
}

TEST(ClassifyComponentM2, Examples) {
  const auto gf3 = FieldCtx::prime(3);
  EXPECT_EQ(classify_component_m2(Mat::unit(gf3, 2, 0, 0)).to_string(), "V1");
  EXPECT_EQ(classify_component_m2(Mat::unit(gf3, 2, 1, 1)).to_string(), "V1");
  EXPECT_EQ(classify_component_m2(Mat::unit(gf3, 2, 1, 0)).to_string(), "V2");
  EXPECT_EQ(classify_component_m2(Mat::unit(gf3, 2, 0, 1)).to_string(), "V3");
  EXPECT_EQ(classify_component_m2(Mat::parse(gf3, "1,2;0,0")).to_string(), "V4(2)");
  // (0, d; 0, -d/α) with d = 1, α = 2: -1/2 = 1 in GF(3).
  EXPECT_EQ(classify_component_m2(Mat::parse(gf3, "0,1;0,1")).to_string(), "V4(2)");
  EXPECT_EQ(classify_component_m2(Mat::parse(gf3, "0,0;1,1")).to_string(), "V5(1)");
  EXPECT_EQ(classify_component_m2(Mat::parse(gf3, "1,1;1,1")).to_string(), "V6(1,2)");
  EXPECT_EQ(code_of([&] { classify_component_m2(Mat::identity(gf3, 2)); }), Errc::NotAVertex);
  EXPECT_EQ(code_of([&] { classify_component_t2(Mat::unit(gf3, 2, 1, 0)); }), Errc::NotTriangular);
}

// Label classes must coincide with connected components found by an
// independent Floyd–Warshall over brute-force vertices.
TEST(ClassifyComponent, PartitionMatchesOracleComponents) {
  struct Case { std::uint64_t p; bool tri; std::size_t expected_components; };
  for (const Case c : {Case{2, false, 6}, Case{3, false, 0}, Case{2, true, 3}, Case{3, true, 0}, Case{5, true, 0}}) {
    const auto ctx = FieldCtx::prime(c.p);
    const auto vs = oracle::vertices(2, c.p, c.tri);
    const auto d = oracle::distances(vs, 2, c.p);
    std::vector<ComponentLabel> labels;
    for (const auto& v : vs) {
      const Mat m = Mat::from_residues(ctx, 2, 2, v);
      labels.push_back(c.tri ? classify_component_t2(m) : classify_component_m2(m));
    }
    std::set<std::string> distinct;
    for (std::size_t u = 0; u < vs.size(); ++u) {
      distinct.insert(labels[u].to_string());
      for (std::size_t v = 0; v < vs.size(); ++v) {
        EXPECT_EQ(labels[u] == labels[v], d[u][v] != oracle::kInf)
            << labels[u].to_string() << " vs " << labels[v].to_string();
      }
    }
    if (c.expected_components != 0) EXPECT_EQ(distinct.size(), c.expected_components);
  }
}

TEST(ClassifyComponentT2, FamiliesPerField) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto ctx = FieldCtx::prime(p);
    const OrthoGraph g = build_graph(Algebra::Tn, 2, ctx);
    std::set<std::string> names;
    for (const Mat& m : g.vertices()) names.insert(classify_component_t2(m).to_string());
    // V1, V3 and one V4(α) per nonzero α.
    EXPECT_EQ(names.size(), 2 + (p - 1)) << p;
  }
}

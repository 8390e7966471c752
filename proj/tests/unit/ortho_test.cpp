#include <random>
#include <set>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "orthograph/classify.hpp"
#include "orthograph/ortho.hpp"
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

// Complement computed from the oracle's plain integer arithmetic.
std::vector<oracle::Entries> oracle_complement(const oracle::Entries& a, std::size_t n, std::uint64_t p) {
  std::vector<oracle::Entries> out;
  const std::uint64_t total = oracle::ipow(p, n * (n + 1) / 2);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    auto c = oracle::decode(idx, n, p, true);
    if (oracle::orthogonal(a, c, n, p)) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST(AreOrthogonal, Examples) {
  const auto gf2 = FieldCtx::prime(2);
  EXPECT_TRUE(are_orthogonal(Mat::unit(gf2, 3, 0, 0), Mat::unit(gf2, 3, 1, 1)));
  EXPECT_FALSE(are_orthogonal(Mat::unit(gf2, 3, 0, 0), Mat::unit(gf2, 3, 0, 1)));
  EXPECT_TRUE(are_orthogonal(Mat::unit(gf2, 3, 0, 2), Mat::unit(gf2, 3, 0, 2)));
  EXPECT_EQ(code_of([&] { are_orthogonal(Mat::zero(gf2, 2), Mat::zero(gf2, 3)); }), Errc::DimensionMismatch);
  EXPECT_EQ(code_of([&] { are_orthogonal(Mat::zero(gf2, 2), Mat::zero(kQ, 2)); }), Errc::FieldMismatch);
}

TEST(AreOrthogonal, SymmetricOverAllPairsT2Gf3) {
  const auto gf3 = FieldCtx::prime(3);
  std::vector<Mat> all;
  for_each_matrix(Algebra::Tn, 2, gf3, 1000, [&](const Mat& m) { all.push_back(m); });
  for (const Mat& a : all)
    for (const Mat& b : all) {
      EXPECT_EQ(are_orthogonal(a, b), are_orthogonal(b, a));
      EXPECT_EQ(are_orthogonal(a, b), oracle::orthogonal(a.residues(), b.residues(), 2, 3));
    }
}

TEST(ComplementBruteforce, WitnessRays) {
  for (std::uint64_t p : {2u, 3u}) {
    const auto ctx = FieldCtx::prime(p);
    const Mat a_hat = Mat::identity(ctx, 3) - Mat::unit(ctx, 3, 0, 0);
    const auto ca = complement_bruteforce(a_hat, Algebra::Tn);
    ASSERT_EQ(ca.size(), p - 1);
    for (std::uint64_t k = 1; k < p; ++k) EXPECT_EQ(ca[k - 1], Mat::unit(ctx, 3, 0, 0).scaled(Scalar(ctx, long(k))));
    const auto cb = complement_bruteforce(Mat::jordan(ctx, 3), Algebra::Tn);
    ASSERT_EQ(cb.size(), p - 1);
    for (std::uint64_t k = 1; k < p; ++k) EXPECT_EQ(cb[k - 1], Mat::unit(ctx, 3, 0, 2).scaled(Scalar(ctx, long(k))));
  }
}

TEST(ComplementBruteforce, MatchesOracleAndIgnoresJobs) {
  const auto gf3 = FieldCtx::prime(3);
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> pick(1, oracle::ipow(3, 6) - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const Mat a = matrix_at(Algebra::Tn, 3, gf3, pick(rng));
    const auto one = complement_bruteforce(a, Algebra::Tn, kDefaultMaxEnumeration, 1);
    const auto many = complement_bruteforce(a, Algebra::Tn, kDefaultMaxEnumeration, 4);
    EXPECT_EQ(one, many);
    std::vector<oracle::Entries> got;
    for (const Mat& c : one) got.push_back(c.residues());
    auto expected = oracle_complement(a.residues(), 3, 3);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected) << a.to_string();
    const bool self = product_is_zero(a, a);
    EXPECT_EQ(std::find(one.begin(), one.end(), a) != one.end(), self);
  }
  EXPECT_EQ(code_of([] { complement_bruteforce(Mat::jordan(kQ, 3), Algebra::Tn); }), Errc::InfiniteField);
  EXPECT_EQ(code_of([&] { complement_bruteforce(Mat::jordan(gf3, 3), Algebra::Tn, 10); }), Errc::TooLarge);
}

TEST(ClosedForm, Examples) {
  const auto gf3 = FieldCtx::prime(3);
  const ComplementRay r2 = complement_bad2(Mat::parse(gf3, "1,1,0;0,1,1;0,0,0"));
  EXPECT_EQ(r2.generator.to_string(), "0,0,1;0,0,2;0,0,1");
  EXPECT_EQ(r2.form, ComplementForm::Bad2Form);
  EXPECT_EQ(complement_bad1(Mat::parse(kQ, "0,0,1;0,1,1;0,0,1")).generator.to_string(), "1,0,-1;0,0,0;0,0,0");
  EXPECT_EQ(complement_bad1(Mat::parse(kQ, "0,1,0;0,1,0;0,0,1")).generator.to_string(), "1,-1,0;0,0,0;0,0,0");
  EXPECT_EQ(complement_bad2(Mat::parse(kQ, "1,0,1;0,1,0;0,0,0")).generator.to_string(), "0,0,-1;0,0,0;0,0,1");
  EXPECT_EQ(code_of([] { complement_bad1(Mat::jordan(kQ, 3)); }), Errc::WrongClass);
  EXPECT_EQ(code_of([] { complement_bad2(Mat::parse(kQ, "0,1,0;0,1,0;0,0,1")); }), Errc::WrongClass);
  EXPECT_EQ(to_json(r2).dump(), R"({"generator":"0,0,1;0,0,2;0,0,1","form":"bad2"})");
}

TEST(ClosedForm, RayContainsAndMembers) {
  const auto gf5 = FieldCtx::prime(5);
  const ComplementRay r = complement_bad1(Mat::parse(gf5, "0,1,2;0,3,4;0,0,1"));
  EXPECT_TRUE(r.contains(r.generator.scaled(Scalar(gf5, 3L))));
  EXPECT_FALSE(r.contains(Mat::zero(gf5, 3)));
  EXPECT_FALSE(r.contains(Mat::unit(gf5, 3, 1, 1)));
  const auto members = r.members();
  EXPECT_EQ(members.size(), 4u);
  EXPECT_TRUE(std::is_sorted(members.begin(), members.end()));
}

TEST(ClosedForm, EqualsBruteForceForEveryBadVertex) {
  struct Case { std::size_t n; std::uint64_t p; };
  for (const Case c : {Case{3, 2}, Case{3, 3}, Case{4, 2}}) {
    const auto ctx = FieldCtx::prime(c.p);
    std::size_t checked = 0;
    for_each_matrix(Algebra::Tn, c.n, ctx, kDefaultMaxEnumeration, [&](const Mat& m) {
      const VertexTag tag = classify_tn(m).tag;
      if (tag != VertexTag::Bad1 && tag != VertexTag::Bad2) return;
      const ComplementRay ray = tag == VertexTag::Bad1 ? complement_bad1(m) : complement_bad2(m);
      EXPECT_TRUE(is_upper_triangular(ray.generator));
      EXPECT_TRUE(is_vertex(ray.generator, Algebra::Tn));
      std::vector<oracle::Entries> expected = oracle_complement(m.residues(), c.n, c.p), got;
      std::sort(expected.begin(), expected.end());
      for (const Mat& x : ray.members()) got.push_back(x.residues());
      EXPECT_EQ(got, expected) << m.to_string();
      ++checked;
    });
    EXPECT_GT(checked, 0u);
  }
}

TEST(ClosedForm, RationalOrthogonality) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 3;
    Mat a(kQ, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a.set(i, j, Scalar(kQ, mpq_class(num(rng), den(rng))));
    for (std::size_t i = 1; i < n; ++i)
      if (a.is_zero_at(i, i)) a.set(i, i, Scalar::one(kQ));
    Mat b = a;
    a.set(0, 0, Scalar::zero(kQ));
    const ComplementRay ra = complement_bad1(a);
    EXPECT_TRUE(are_orthogonal(a, ra.generator));
    EXPECT_TRUE(ra.generator.at(0, 0).is_one());
    // Shift the diagonal so only the last entry vanishes.
    for (std::size_t i = 0; i + 1 < n; ++i) b.set(i, i, b.at(i + 1, i + 1));
    b.set(n - 1, n - 1, Scalar::zero(kQ));
    for (std::size_t j = 0; j < n; ++j) b.set(n - 1, j, Scalar::zero(kQ));
    const ComplementRay rb = complement_bad2(b);
    EXPECT_TRUE(are_orthogonal(b, rb.generator));
    EXPECT_TRUE(rb.generator.at(n - 1, n - 1).is_one());
  }
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(annihilator_rank1(Mat::parse(kQ, "1,0,0;0,0,1;0,0,1"), 1).to_string(), "0,0,0;0,1,-1;0,0,0");
  EXPECT_EQ(annihilator_rank1(Mat::jordan(kQ, 3), 0), Mat::unit(kQ, 3, 0, 2));
  EXPECT_EQ(annihilator_rank1(Mat::zero(kQ, 3), 0), Mat::unit(kQ, 3, 0, 0));
  EXPECT_EQ(code_of([] { annihilator_rank1(Mat::jordan(kQ, 3), 3); }), Errc::BadIndex);
  EXPECT_EQ(code_of([] { annihilator_rank1(Mat::identity(kQ, 3), 1); }), Errc::BadIndex);
}

TEST(Annihilator, PropertiesOverEveryVertex) {
  struct Case { std::size_t n; std::uint64_t p; };
  for (const Case c : {Case{3, 2}, Case{4, 2}, Case{3, 3}}) {
    const auto ctx = FieldCtx::prime(c.p);
    for_each_matrix(Algebra::Tn, c.n, ctx, kDefaultMaxEnumeration, [&](const Mat& a) {
      if (!is_vertex(a, Algebra::Tn)) return;
      for (std::size_t i : classify_tn(a).zero_diag) {
        const Mat r = annihilator_rank1(a, i);
        ASSERT_TRUE(are_orthogonal(a, r)) << a.to_string() << " i=" << i;
        EXPECT_EQ(rank(r), 1u);
        EXPECT_TRUE(is_upper_triangular(r));
        if (i > 0)
          for (std::size_t k = 0; k < c.n; ++k) EXPECT_TRUE(r.is_zero_at(k, 0));
        if (i + 1 < c.n)
          for (std::size_t k = 0; k < c.n; ++k) EXPECT_TRUE(r.is_zero_at(c.n - 1, k));
      }
    });
  }
}

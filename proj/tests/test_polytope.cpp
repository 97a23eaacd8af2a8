#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twinned/errors.hpp"
#include "twinned/lp.hpp"
#include "twinned/polytope.hpp"

using namespace twinned;

TEST(Rho, Indicator) {
  EXPECT_EQ(rho(0, 3), (IntVector{0, 0, 0}));
  EXPECT_EQ(rho(0b01010, 5), (IntVector{0, 1, 0, 1, 0}));
}

TEST(Omega, SingletonPair) {
  const auto cfg = build_omega(Poset::chain(1), Poset::chain(1));
  EXPECT_EQ(cfg.points, (std::vector<IntVector>{{1}, {-1}, {0}}));
  EXPECT_EQ(cfg.origin_index, 2u);
}

TEST(Omega, ChainChainD2) {
  const auto cfg = build_omega(Poset::chain(2), Poset::chain(2));
  EXPECT_EQ(cfg.points, (std::vector<IntVector>{{1, 0}, {1, 1}, {-1, 0}, {-1, -1}, {0, 0}}));
}

TEST(Omega, ChainAntichainD2) {
  const auto cfg = build_omega(Poset::chain(2), Poset::antichain(2));
  EXPECT_EQ(cfg.points.size(), 6u);
  EXPECT_EQ(cfg.points[2], (IntVector{-1, 0}));
  EXPECT_EQ(cfg.points[3], (IntVector{0, -1}));
  EXPECT_EQ(cfg.points[4], (IntVector{-1, -1}));
}

TEST(Omega, SizeMismatch) {
  EXPECT_THROW(build_omega(Poset::chain(2), Poset::chain(3)), InputError);
}

TEST(Lp, SmallProblem) {
  // max x1 + x2 with x1 + 2 x2 + s = 4, 3 x1 + x2 + u = 6.
  LinearProgram lp;
  lp.rows = {{1, 2, 1, 0}, {3, 1, 0, 1}};
  lp.rhs = {4, 6};
  lp.objective = {1, 1, 0, 0};
  const auto r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, Rational(14, 5));
}

TEST(Lp, InfeasibleAndUnbounded) {
  LinearProgram bad;
  bad.rows = {{1, 1}};
  bad.rhs = {-1};
  bad.objective = {1, 0};
  EXPECT_EQ(solve_lp(bad).status, LpStatus::kInfeasible);
  LinearProgram open;
  open.rows = {{1, -1}};
  open.rhs = {0};
  open.objective = {1, 1};
  EXPECT_EQ(solve_lp(open).status, LpStatus::kUnbounded);
}

TEST(Interior, SegmentCertificate) {
  const auto cfg = build_omega(Poset::chain(1), Poset::chain(1));
  const auto cert = origin_in_interior(cfg);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->weights, (RationalVector{Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE(verify_certificate(cfg, *cert));
}

TEST(Interior, CounterexampleNotInterior) {
  const auto cfg = build_omega(parse_poset("5; 1<3 2<3 2<4 3<5 4<5"), parse_poset("5; 4<3 3<2 2<1 4<5"));
  EXPECT_FALSE(origin_in_interior(cfg));
}

TEST(Interior, TamperedCertificateRejected) {
  const auto cfg = build_omega(Poset::chain(2), Poset::antichain(2));
  auto cert = origin_in_interior(cfg);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(verify_certificate(cfg, *cert));
  cert->weights[0] += Rational(1, 7);
  cert->weights[1] -= Rational(1, 7);
  EXPECT_FALSE(verify_certificate(cfg, *cert));
}

TEST(Interior, ExtensionPointsLieInOmega) {
  // For a common extension i_1, ..., i_d, every partial sum e_{i_1} + ... +
  // e_{i_k} is rho of an ideal of both posets, so its negative is in Omega too.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto [p, q] = random_compatible_pair(5, 1, 3, seed);
    const auto ext = common_linear_extension(p, q);
    ASSERT_TRUE(ext);
    const auto cfg = build_omega(p, q);
    IntVector partial(5, 0);
    for (int i : *ext) {
      partial[i] = 1;
      IntVector neg = partial;
      for (auto& x : neg) x = -x;
      EXPECT_NE(std::find(cfg.points.begin(), cfg.points.end(), partial), cfg.points.end());
      EXPECT_NE(std::find(cfg.points.begin(), cfg.points.end(), neg), cfg.points.end());
    }
  }
}

TEST(Hull, Segment) {
  const std::vector<IntVector> v{{1}, {-1}};
  EXPECT_EQ(hull_halfspaces(v, 1), (std::vector<HalfSpace>{{{-1}, 1}, {{1}, 1}}));
}

TEST(Hull, UnitSquare) {
  const std::vector<IntVector> v{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const std::vector<HalfSpace> expected{{{-1, 0}, 0}, {{0, -1}, 0}, {{0, 1}, 1}, {{1, 0}, 1}};
  EXPECT_EQ(hull_halfspaces(v, 2), expected);
}

TEST(Hull, ChainChainD2) {
  const Polytope poly(build_omega(Poset::chain(2), Poset::chain(2)));
  const auto& h = poly.halfspaces();
  EXPECT_EQ(h, oracle::brute_hull(poly.vertices(), 2));
  EXPECT_EQ(h.size(), 4u);
  for (const auto& f : h) {
    int tight = 0;
    for (const auto& v : poly.vertices()) {
      std::int64_t s = 0;
      for (int k = 0; k < 2; ++k) s += f.normal[k] * v[k];
      EXPECT_LE(s, f.offset);
      if (s == f.offset) ++tight;
    }
    EXPECT_GE(tight, 2);
  }
}

TEST(Hull, MatchesBruteForceForAllSmallPairs) {
  for (int d = 2; d <= 3; ++d) {
    const auto all = oracle::all_posets(d);
    for (const auto& p : all)
      for (const auto& q : all) {
        const Polytope poly(build_omega(p, q));
        ASSERT_EQ(poly.halfspaces(), oracle::brute_hull(poly.vertices(), d))
            << serialize_poset(p) << " / " << serialize_poset(q);
      }
  }
}

TEST(Hull, RejectsFlatInput) {
  const std::vector<IntVector> v{{0, 0}, {1, 1}, {-1, -1}};
  EXPECT_THROW(hull_halfspaces(v, 2), InternalError);
}

TEST(Contains, Basics) {
  const Polytope seg(build_omega(Poset::chain(1), Poset::chain(1)));
  const std::vector<std::int64_t> origin{0}, two{2};
  EXPECT_TRUE(contains(seg.halfspaces(), std::span<const std::int64_t>(origin)));
  EXPECT_FALSE(contains(seg.halfspaces(), std::span<const std::int64_t>(two)));
  const std::vector<Rational> half{Rational(1, 2)};
  EXPECT_TRUE(contains(seg.halfspaces(), std::span<const Rational>(half)));
  const Polytope poly(build_omega(parse_poset("4; 1<2 3<4"), parse_poset("4; 2<3")));
  for (const auto& pt : poly.configuration().points)
    EXPECT_TRUE(contains(poly.halfspaces(), std::span<const std::int64_t>(pt)));
}

TEST(Polytope, JsonShape) {
  const Polytope seg(build_omega(Poset::chain(1), Poset::chain(1)));
  const auto j = seg.to_json();
  EXPECT_EQ(j["d"], 1);
  EXPECT_EQ(j["vertices"], nlohmann::json({{1}, {-1}}));
  EXPECT_EQ(j["facets"].size(), 2u);
  EXPECT_EQ(j["facets"][0]["offset"], 1);
}

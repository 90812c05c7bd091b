#include "ecp/gamma_complex.hpp"
#include "ecp/lattice_geometry.hpp"
#include "ecp/poset_io.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>

using namespace ecp;

namespace {

using DP = DecoratedPermutation;

DP dp(std::string_view text) { return DP::parse(text); }

Poset from_text(const std::string& text) { return parse_poset(text).poset; }

}  // namespace

TEST(Decorated, ParseAndPrint) {
  const DP d = dp("3|^2 24|^1 157|^0 689");
  EXPECT_EQ(d.perm, (Permutation{3, 2, 4, 1, 5, 7, 6, 8, 9}));
  ASSERT_EQ(d.bar_count(), 3);
  EXPECT_EQ(d.bars[1].position, 3);
  EXPECT_EQ(d.bars[1].color, 1);
  EXPECT_EQ(d.to_string(), "3|^2 24|^1 157|^0 689");
  EXPECT_EQ(d.blocks(), (std::vector<std::vector<int>>{{3}, {2, 4}, {1, 5, 7}, {6, 8, 9}}));
  EXPECT_TRUE(is_decorated_permutation(d));
  EXPECT_THROW(dp("3|2"), Error);
}

TEST(Decorated, Validity) {
  EXPECT_TRUE(is_permutation(std::vector<int>{2, 1, 3}));
  EXPECT_FALSE(is_permutation(std::vector<int>{2, 1, 2}));
  EXPECT_FALSE(is_permutation(std::vector<int>{0, 1}));
  EXPECT_FALSE(is_decorated_permutation(dp("21")));      // left peak without a bar
  EXPECT_FALSE(is_decorated_permutation(dp("1|^0 2")));  // bar off a peak
  EXPECT_TRUE(is_decorated_permutation(dp("12")));
}

TEST(Decorate, Counts) {
  const auto d21 = decorate({2, 1});
  ASSERT_EQ(d21.size(), 4u);
  for (int c = 0; c < 4; ++c) EXPECT_EQ(d21[c], dp("2|^" + std::to_string(c) + " 1"));
  EXPECT_EQ(decorate({1, 2}).size(), 1u);
  const auto big = decorate({3, 2, 4, 1, 5, 7, 6, 8, 9});
  EXPECT_EQ(big.size(), 64u);
  EXPECT_NE(std::find(big.begin(), big.end(), dp("3|^2 24|^1 157|^0 689")), big.end());
  for (const auto& d : big) {
    ASSERT_EQ(d.bar_count(), 3);
    EXPECT_EQ(d.bars[0].position, 1);
    EXPECT_EQ(d.bars[1].position, 3);
    EXPECT_EQ(d.bars[2].position, 6);
  }
}

TEST(Decorate, SizeIsFourToTheLeftPeaks) {
  Permutation w(6);
  std::iota(w.begin(), w.end(), 1);
  do {
    EXPECT_EQ(decorate(w).size(), std::size_t{1} << (2 * left_peak_positions(w).size()));
    for (const auto& d : decorate(w)) EXPECT_TRUE(is_decorated_permutation(d));
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST(Blocks, GraveAcuteSplit) {
  const Block b = split_block(std::vector<int>{5, 2, 1, 4, 7}, false);
  EXPECT_EQ(b.grave, (std::vector<int>{5, 2, 1}));
  EXPECT_EQ(b.acute, (std::vector<int>{4, 7}));
  EXPECT_TRUE(split_block(std::vector<int>{3}, true).grave.empty());
  try {
    split_block(std::vector<int>{3, 1, 4, 2}, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedResult);
  }
}

TEST(CoverReduce, Examples) {
  EXPECT_EQ(cover_reduce(dp("3|^2 24|^1 157|^0 689"), 2), dp("3|^2 21457|^0 689"));
  EXPECT_EQ(cover_reduce(dp("13|^3 2"), 1), dp("123"));
  EXPECT_EQ(cover_reduce(dp("2|^1 1"), 1), dp("12"));
  EXPECT_EQ(cover_reduce(dp("2|^0 14|^2 3"), 2), dp("2|^0 134"));
  EXPECT_THROW(cover_reduce(dp("12"), 1), std::out_of_range);
}

TEST(Adjacency, Examples) {
  EXPECT_TRUE(vertex_adjacent(dp("2|^0 134"), dp("124|^3 3")));
  EXPECT_TRUE(vertex_adjacent(dp("124|^3 3"), dp("2|^0 134")));
  EXPECT_FALSE(vertex_adjacent(dp("2|^1 13"), dp("13|^2 2")));
  EXPECT_FALSE(vertex_adjacent(dp("2|^0 1"), dp("2|^1 1")));
  EXPECT_THROW(vertex_adjacent(dp("12"), dp("2|^0 1")), std::invalid_argument);
}

TEST(PhiFaceMap, Examples) {
  EXPECT_EQ(phi_face_map(dp("2|^1 14|^2 3")), (std::vector<DP>{dp("2|^1 134"), dp("124|^2 3")}));
  EXPECT_TRUE(phi_face_map(dp("1234")).empty());
  EXPECT_EQ(phi_face_map(dp("2|^3 1")), (std::vector<DP>{dp("2|^3 1")}));
}

TEST(Complex, Examples) {
  const auto a2 = build_complex(antichain_poset(2));
  EXPECT_EQ(a2.vertices.size(), 4u);
  EXPECT_EQ(a2.f_vector(), (std::vector<BigInt>{1, 4}));
  EXPECT_EQ(build_complex(antichain_poset(4)).f_vector(), (std::vector<BigInt>{1, 72, 80}));
  EXPECT_EQ(build_complex(from_text("3\n1 < 3\n2 < 3\n")).f_vector(), (std::vector<BigInt>{1, 4}));
  EXPECT_EQ(build_complex(chain_poset(3)).f_vector(), (std::vector<BigInt>{1}));
}

TEST(Complex, FaceCountsAgreeWithGammaVector) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const auto c = build_complex(p);
      auto gamma = hstar_and_gamma(p).gamma;
      while (gamma.size() > 1 && gamma.back() == 0) gamma.pop_back();
      EXPECT_EQ(c.f_vector(), gamma) << p.to_text();
    }
}

TEST(Complex, FlagAndGradedUpToFive) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const auto c = build_complex(p);
      std::map<int, BigInt> by_bars;
      for (const auto& d : decorated_extensions(p)) by_bars[d.bar_count()] += 1;
      for (const auto& [k, count] : by_bars) EXPECT_EQ(c.f_polynomial.coeff(k), count);
      for (const auto& face : c.faces)
        for (std::size_t i = 0; i < face.size(); ++i)
          for (std::size_t j = i + 1; j < face.size(); ++j) EXPECT_TRUE(c.adjacency[face[i]][face[j]]);
    }
}

TEST(Complex, Guards) {
  Guards g;
  g.max_complex_n = 3;
  try {
    build_complex(antichain_poset(4), g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
  try {
    build_complex(parse_poset("2\n2 < 1\n").poset);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNaturallyLabeled);
  }
}

TEST(IsoCheck, HoldsUpToFour) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : naturally_labeled_posets(n)) {
      const auto r = iso_check(p);
      EXPECT_TRUE(r.bijective) << p.to_text();
      EXPECT_TRUE(r.graded);
      EXPECT_TRUE(r.order_preserving);
      EXPECT_TRUE(r.lower_ideal);
    }
}

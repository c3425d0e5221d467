#include <gtest/gtest.h>

#include "bioclass/reference_family.hpp"

using namespace bioclass;

namespace {

void expect_family_invariants(const ReferenceFamily& f) {
  const std::size_t w = f.width();
  const std::size_t h = w / 2;
  const std::size_t g = w / 3;
  const std::string& s0 = f[0].str();
  for (const auto& s : f.seqs) ASSERT_EQ(s.size(), w);

  // single central mutation
  EXPECT_EQ(hamming_distance(f[0], f[1]), 1U);
  EXPECT_NE(f[0][h], f[1][h]);

  // unit left shift
  for (std::size_t i = 0; i + 1 < w; ++i) ASSERT_EQ(f[2][i], s0[i + 1]) << "i=" << i;

  // shift then central mutation
  EXPECT_EQ(hamming_distance(f[2], f[3]), 1U);
  EXPECT_NE(f[2][h], f[3][h]);

  // halves exchanged
  EXPECT_EQ(f[4].str(), s0.substr(h) + s0.substr(0, h));

  // seq5 begins with seq0's second half
  EXPECT_EQ(f[5].str().substr(0, w - h), s0.substr(h));

  // shared gene at distinct offsets
  EXPECT_EQ(f[6].str().substr(0, g), f[7].str().substr(w - g, g));
  EXPECT_NE(0U, w - g);
}

}  // namespace

TEST(ReferenceFamily, InvariantsAcrossWidthsAndSeeds) {
  for (std::size_t w : {6, 7, 8, 11, 30, 31, 150, 200}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      RandomStream rng(derive_seed(seed, w));
      SCOPED_TRACE("W=" + std::to_string(w) + " seed=" + std::to_string(seed));
      expect_family_invariants(reference_family(w, rng));
    }
  }
}

TEST(ReferenceFamily, MutationSitesAreExactlyAtMidpoint) {
  RandomStream rng(5);
  const auto f = reference_family(40, rng);
  for (std::size_t i = 0; i < 40; ++i) {
    if (i != 20) {
      EXPECT_EQ(f[0][i], f[1][i]);
    }
  }
}

TEST(ReferenceFamily, Deterministic) {
  RandomStream a(8), b(8);
  EXPECT_EQ(reference_family(50, a).seqs, reference_family(50, b).seqs);
}

TEST(ReferenceFamily, RejectsShortWidth) {
  RandomStream rng(1);
  EXPECT_THROW(reference_family(5, rng), DomainError);
  EXPECT_THROW(reference_family(0, rng), DomainError);
}

TEST(ReferenceFamily, SamplesViewHasEightRows) {
  RandomStream rng(1);
  const auto set = reference_family(12, rng).samples();
  EXPECT_EQ(set.count(), 8U);
  EXPECT_EQ(set.length(), 12U);
}

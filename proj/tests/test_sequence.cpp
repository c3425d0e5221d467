#include <gtest/gtest.h>

#include <array>
#include <sstream>

#include "bioclass/sequence.hpp"

using namespace bioclass;

TEST(Sequence, RejectsInvalidInput) {
  EXPECT_THROW(Sequence(""), DomainError);
  EXPECT_THROW(Sequence("ACGN"), DomainError);
  EXPECT_THROW(Sequence("acgt"), DomainError);
  EXPECT_NO_THROW(Sequence("ACGT"));
}

TEST(Complement, WatsonCrickPairing) {
  EXPECT_EQ(complement(Sequence("ATGC")).str(), "TACG");
  EXPECT_EQ(complement(Sequence("AAAA")).str(), "TTTT");
}

TEST(Complement, IsAnInvolution) {
  RandomStream rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_sequence(1 + rng.below(50), rng);
    EXPECT_EQ(complement(complement(s)), s);
  }
}

TEST(RandomSequence, DeterministicPerStream) {
  RandomStream a(1234), b(1234);
  EXPECT_EQ(random_sequence(500, a), random_sequence(500, b));
}

TEST(RandomSequence, SymbolFrequencies) {
  RandomStream rng(555);
  const auto s = random_sequence(100000, rng);
  std::array<int, 4> counts{};
  for (char c : s) ++counts[base_code(c)];
  for (int c : counts) EXPECT_NEAR(c / 100000.0, 0.25, 0.01);
}

TEST(RandomSequence, LengthOneAndZero) {
  RandomStream rng(9);
  const auto s = random_sequence(1, rng);
  ASSERT_EQ(s.size(), 1U);
  EXPECT_LE(base_code(s[0]), 3);
  EXPECT_THROW(random_sequence(0, rng), DomainError);
}

TEST(SequenceSet, EnforcesUniformLength) {
  EXPECT_THROW(SequenceSet({Sequence("ACG"), Sequence("ACGT")}), DimensionError);
  EXPECT_THROW(SequenceSet(std::vector<Sequence>{}), ConfigError);
  RandomStream rng(1);
  const auto set = SequenceSet::random(7, 12, rng);
  EXPECT_EQ(set.count(), 7U);
  EXPECT_EQ(set.length(), 12U);
}

TEST(Fasta, RoundTrip) {
  RandomStream rng(77);
  std::vector<FastaRecord> recs;
  for (int i = 0; i < 5; ++i) recs.push_back({"seq" + std::to_string(i), random_sequence(1 + rng.below(200), rng)});
  std::stringstream ss;
  write_fasta(ss, recs);
  const auto back = read_fasta(ss);
  ASSERT_EQ(back.size(), recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    EXPECT_EQ(back[i].id, recs[i].id);
    EXPECT_EQ(back[i].seq, recs[i].seq);
  }
}

TEST(Fasta, WrapsAndParsesMultiLineRecords) {
  std::stringstream ss;
  write_fasta(ss, {{"x", Sequence(std::string(130, 'G'))}}, 60);
  EXPECT_EQ(ss.str(), ">x\n" + std::string(60, 'G') + "\n" + std::string(60, 'G') + "\n" + std::string(10, 'G') + "\n");
  std::istringstream in(">a description\r\nAC\nGT\n\n>b\nTT\n");
  const auto recs = read_fasta(in);
  ASSERT_EQ(recs.size(), 2U);
  EXPECT_EQ(recs[0].id, "a");
  EXPECT_EQ(recs[0].seq.str(), "ACGT");
  EXPECT_EQ(recs[1].seq.str(), "TT");
}

TEST(Fasta, RejectsMalformedInput) {
  std::istringstream orphan("ACGT\n>a\nAC\n");
  EXPECT_THROW(read_fasta(orphan), DomainError);
  std::istringstream lower(">a\nacgt\n");
  EXPECT_THROW(read_fasta(lower), DomainError);
}
